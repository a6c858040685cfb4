#pragma once

#include <stdexcept>
#include <vector>

#include "permutation.hpp"

namespace pavings {

// Oriented 2D combinatorial map <D; alpha, sigma>. alpha must be an
// involution; fixed points of alpha are allowed at this level (underlying
// maps of pavings always arrive with fixed-point-free alpha).
struct Map2D {
    int n = 0;
    Permutation alpha;
    Permutation sigma;

    Map2D() = default;
    Map2D(Permutation a, Permutation s) : n(a.size()), alpha(std::move(a)), sigma(std::move(s)) {
        if (alpha.size() != sigma.size())
            throw std::invalid_argument("Map2D: alpha/sigma size mismatch");
        if (!is_involution(alpha))
            throw std::invalid_argument("Map2D: alpha is not an involution");
    }
};

struct MapStats {
    long long vertices = 0;
    long long edges = 0;
    long long faces = 0;
    long long components = 0;
    long long euler_characteristic = 0; // faces - edges + vertices
    std::vector<long long> genus_per_component;

    friend bool operator==(const MapStats&, const MapStats&) = default;
};

inline bool is_connected(const Map2D& m) {
    return is_transitive({m.alpha, m.sigma}, m.n);
}

// vertices = cycles of sigma, edges = cycles of alpha, faces = cycles of
// sigma^-1 alpha, components = orbits of <alpha, sigma>; chi = F - E + V.
// Genus is reported per component: chi_c = 2 - 2g on each closed oriented
// component.
inline MapStats map_stats(const Map2D& m) {
    MapStats st;
    if (m.n == 0) return st;
    const Permutation face_perm = compose(inverse(m.sigma), m.alpha);

    auto count_cycles = [](const Permutation& p) {
        long long c = 0;
        for (const auto& cnt : cycle_type(p).counts) c += cnt;
        return c;
    };
    st.vertices = count_cycles(m.sigma);
    st.edges = count_cycles(m.alpha);
    st.faces = count_cycles(face_perm);
    st.euler_characteristic = st.faces - st.edges + st.vertices;

    // component decomposition
    detail::Dsu dsu(m.n);
    for (int i = 0; i < m.n; ++i) {
        dsu.unite(i, m.alpha(i));
        dsu.unite(i, m.sigma(i));
    }
    st.components = dsu.components();

    // per-component chi via cycle counting restricted to the component
    std::vector<int> root_of(static_cast<size_t>(m.n));
    for (int i = 0; i < m.n; ++i) root_of[static_cast<size_t>(i)] = dsu.find(i);

    std::vector<int> roots;
    for (int i = 0; i < m.n; ++i)
        if (root_of[static_cast<size_t>(i)] == i) roots.push_back(i);

    auto component_cycles = [&](const Permutation& p, int root) {
        std::vector<char> seen(static_cast<size_t>(m.n), 0);
        long long c = 0;
        for (int i = 0; i < m.n; ++i) {
            if (root_of[static_cast<size_t>(i)] != root || seen[static_cast<size_t>(i)]) continue;
            for (int j = i; !seen[static_cast<size_t>(j)]; j = p(j)) seen[static_cast<size_t>(j)] = 1;
            ++c;
        }
        return c;
    };
    // genus list stays empty unless every component has even chi <= 2
    // (always true when alpha is fixed-point-free)
    std::vector<long long> genus;
    bool defined = true;
    for (int r : roots) {
        const long long chi = component_cycles(face_perm, r) - component_cycles(m.alpha, r) +
                              component_cycles(m.sigma, r);
        if (chi % 2 != 0 || chi > 2) {
            defined = false;
            break;
        }
        genus.push_back((2 - chi) / 2);
    }
    if (defined) st.genus_per_component = std::move(genus);
    return st;
}

} // namespace pavings
