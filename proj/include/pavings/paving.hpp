#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "map2d.hpp"
#include "permutation.hpp"

namespace pavings {

// Raised on any paving-axiom violation; message names the failed axiom.
class paving_error : public std::runtime_error {
public:
    explicit paving_error(const std::string& what) : std::runtime_error(what) {}
};

// 3D combinatorial map on an even number of darts. Canonical storage is the
// involution triple (alpha, beta, gamma); sigma = gamma∘alpha∘beta and
// phi = alpha∘beta are derived once at construction. phi itself may have
// fixed points (P1 has phi = id); the axioms constrain only the products.
struct Paving {
    int n = 0;
    Permutation alpha, beta, gamma; // fixed-point-free involutions
    Permutation sigma, phi;         // cached derived permutations

    friend bool operator==(const Paving&, const Paving&) = default;
};

struct PavingStats {
    long long f0 = 0, f1 = 0, f2 = 0, f3 = 0; // vertices, edges, 2-faces, 3-pieces
    long long complexity = 0;                 // f3 - f2 + f1 - f0
    long long euler_characteristic = 0;       // -complexity
    bool connected = false;

    friend bool operator==(const PavingStats&, const PavingStats&) = default;
};

// Schreier coset graph of Stab(dart 0) inside Z2*Z2*Z2: one fixed-point-free
// involution per generator letter, acting on the n cosets; root = coset of
// the subgroup itself.
struct CosetGraph {
    int n = 0;
    Permutation a, b, c;
    int root = 0;
};

inline Paving paving_from_involutions(const Permutation& alpha, const Permutation& beta,
                                      const Permutation& gamma) {
    if (alpha.size() != beta.size() || beta.size() != gamma.size())
        throw paving_error("paving: involution size mismatch");
    if (!is_fpf_involution(alpha))
        throw paving_error("paving: alpha is not a fixed-point-free involution");
    if (!is_fpf_involution(beta))
        throw paving_error("paving: beta is not a fixed-point-free involution");
    if (!is_fpf_involution(gamma))
        throw paving_error("paving: gamma is not a fixed-point-free involution");
    Paving p;
    p.n = alpha.size();
    p.phi = compose(alpha, beta);
    p.sigma = compose(gamma, p.phi);
    p.alpha = alpha;
    p.beta = beta;
    p.gamma = gamma;
    return p;
}

// Quadruple form <D; alpha, sigma, phi>. Checks, each reported distinctly:
//   alpha is a fixed-point-free involution (edges pair darts),
//   I-1: alpha∘phi is an involution,   FP: ... without fixed points,
//   I-2: phi∘sigma^-1 is an involution, FP: ... without fixed points.
// Returns the triple form with beta = alpha∘phi, gamma = sigma∘phi^-1.
inline Paving paving_from_quadruple(const Permutation& alpha, const Permutation& sigma,
                                    const Permutation& phi) {
    if (alpha.size() != sigma.size() || sigma.size() != phi.size())
        throw paving_error("paving: permutation size mismatch");
    if (!is_fpf_involution(alpha))
        throw paving_error("paving: alpha is not a fixed-point-free involution");
    const Permutation alphaPhi = compose(alpha, phi);
    if (!is_involution(alphaPhi))
        throw paving_error("paving: axiom I-1 violated (alpha*phi is not an involution)");
    for (int i = 0; i < alphaPhi.size(); ++i)
        if (alphaPhi(i) == i)
            throw paving_error("paving: axiom FP violated (alpha*phi has a fixed point)");
    const Permutation phiSigmaInv = compose(phi, inverse(sigma));
    if (!is_involution(phiSigmaInv))
        throw paving_error("paving: axiom I-2 violated (phi*sigma^-1 is not an involution)");
    for (int i = 0; i < phiSigmaInv.size(); ++i)
        if (phiSigmaInv(i) == i)
            throw paving_error("paving: axiom FP violated (phi*sigma^-1 has a fixed point)");

    Paving p;
    p.n = alpha.size();
    p.alpha = alpha;
    p.sigma = sigma;
    p.phi = phi;
    p.beta = alphaPhi;                        // beta = alpha∘phi
    p.gamma = compose(sigma, inverse(phi));   // gamma = sigma∘phi^-1 = (phi∘sigma^-1)^-1
    return p;
}

inline Map2D underlying_map(const Paving& p) { return Map2D(p.alpha, p.sigma); }

// f3 = zeta(alpha, sigma), f2 = zeta(sigma^-1 alpha, phi^-1 sigma),
// f1 = zeta(alpha, phi), f0 = zeta(sigma, phi).
inline PavingStats paving_stats(const Paving& p) {
    PavingStats st;
    if (p.n == 0) return st;
    st.f3 = orbit_count({p.alpha, p.sigma}, p.n);
    st.f2 = orbit_count({compose(inverse(p.sigma), p.alpha), compose(inverse(p.phi), p.sigma)}, p.n);
    st.f1 = orbit_count({p.alpha, p.phi}, p.n);
    st.f0 = orbit_count({p.sigma, p.phi}, p.n);
    st.complexity = st.f3 - st.f2 + st.f1 - st.f0;
    st.euler_characteristic = -st.complexity;
    st.connected = is_transitive({p.alpha, p.beta, p.gamma}, p.n);
    return st;
}

inline bool is_connected(const Paving& p) {
    return is_transitive({p.alpha, p.beta, p.gamma}, p.n);
}

namespace detail {

// Relabel darts by first-visit order of a BFS from `start` that expands each
// dart through alpha, beta, gamma in that priority. Returns the relabeled
// triple as one flat vector (alpha images, then beta, then gamma), or an
// empty vector if the traversal does not reach every dart.
inline std::vector<int> traversal_form(const Paving& p, int start) {
    const int n = p.n;
    std::vector<int> label(static_cast<size_t>(n), -1);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    label[static_cast<size_t>(start)] = 0;
    order.push_back(start);
    const Permutation* gens[3] = {&p.alpha, &p.beta, &p.gamma};
    for (size_t head = 0; head < order.size(); ++head) {
        const int x = order[head];
        for (const Permutation* g : gens) {
            const int y = (*g)(x);
            if (label[static_cast<size_t>(y)] < 0) {
                label[static_cast<size_t>(y)] = static_cast<int>(order.size());
                order.push_back(y);
            }
        }
    }
    if (static_cast<int>(order.size()) != n) return {};
    std::vector<int> form;
    form.reserve(static_cast<size_t>(3 * n));
    for (const Permutation* g : gens)
        for (int k = 0; k < n; ++k)
            form.push_back(label[static_cast<size_t>((*g)(order[static_cast<size_t>(k)]))]);
    return form;
}

} // namespace detail

// Canonical representative of the conjugation orbit of a connected paving:
// lexicographically least traversal relabeling over all start darts. Two
// connected pavings are isomorphic iff their canonical forms are equal.
inline Paving canonical_form(const Paving& p) {
    if (!is_connected(p)) throw paving_error("canonical_form: paving is disconnected");
    std::vector<int> best;
    for (int s = 0; s < p.n; ++s) {
        std::vector<int> form = detail::traversal_form(p, s);
        if (best.empty() || form < best) best = std::move(form);
    }
    const size_t n = static_cast<size_t>(p.n);
    return paving_from_involutions(
        Permutation(std::vector<int>(best.begin(), best.begin() + n)),
        Permutation(std::vector<int>(best.begin() + n, best.begin() + 2 * n)),
        Permutation(std::vector<int>(best.begin() + 2 * n, best.end())));
}

// |Aut| = number of start darts whose traversal relabeling reproduces the
// canonical form; the centralizer of a transitive triple acts freely, so
// this count divides n.
inline long long automorphism_count(const Paving& p) {
    if (!is_connected(p)) throw paving_error("automorphism_count: paving is disconnected");
    std::vector<std::vector<int>> forms;
    forms.reserve(static_cast<size_t>(p.n));
    for (int s = 0; s < p.n; ++s) forms.push_back(detail::traversal_form(p, s));
    const auto& best = *std::min_element(forms.begin(), forms.end());
    long long count = 0;
    for (const auto& f : forms)
        if (f == best) ++count;
    return count;
}

// The Schreier coset graph is the paving itself read as a coset action:
// darts = cosets of Stab(dart 0), letters act as (alpha, beta, gamma).
inline CosetGraph coset_graph(const Paving& p) {
    if (!is_connected(p)) throw paving_error("coset_graph: paving is disconnected");
    return CosetGraph{p.n, p.alpha, p.beta, p.gamma, 0};
}

// Rank of the (free) subgroup via spanning-tree Schreier generators: each
// letter is a fixed-point-free involution contributing n/2 geometric edges;
// the non-tree edges survive reduction, so rank = 3n/2 - (n-1) = 1 + n/2.
// Computed from the actual tree, not the closed formula.
inline long long schreier_rank(const CosetGraph& g) {
    const int n = g.n;
    if (n == 0) return 0;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{g.root};
    seen[static_cast<size_t>(g.root)] = 1;
    long long tree_edges = 0;
    const Permutation* letters[3] = {&g.a, &g.b, &g.c};
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (const Permutation* l : letters) {
            const int y = (*l)(x);
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                ++tree_edges;
                stack.push_back(y);
            }
        }
    }
    const long long geometric_edges = 3LL * (n / 2); // n/2 per letter
    return geometric_edges - tree_edges;
}

// Mirror-double of a connected map with fixed-point-free alpha: darts
// n..2n-1 carry the mirror copy (i+n plays the role of -i) with
// alpha'(i+n) = alpha(i)+n and sigma'(i+n) = sigma^-1(i)+n, glued by the
// involution phi(i) = i+n (mod 2n). Result: f3 = 2 and complexity = 2g.
inline Paving mirror_double(const Map2D& m) {
    if (!is_fpf_involution(m.alpha))
        throw paving_error("mirror_double: alpha has fixed points");
    if (!is_connected(m))
        throw paving_error("mirror_double: map is disconnected");
    const int n = m.n;
    const int N = 2 * n;
    std::vector<int> a(static_cast<size_t>(N)), s(static_cast<size_t>(N)), f(static_cast<size_t>(N));
    const Permutation sigmaInv = inverse(m.sigma);
    for (int i = 0; i < n; ++i) {
        a[static_cast<size_t>(i)] = m.alpha(i);
        a[static_cast<size_t>(n + i)] = n + m.alpha(i);
        s[static_cast<size_t>(i)] = m.sigma(i);
        s[static_cast<size_t>(n + i)] = n + sigmaInv(i);
        f[static_cast<size_t>(i)] = n + i;
        f[static_cast<size_t>(n + i)] = i;
    }
    return paving_from_quadruple(Permutation(std::move(a)), Permutation(std::move(s)),
                                 Permutation(std::move(f)));
}

} // namespace pavings
