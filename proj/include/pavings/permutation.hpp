#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pavings {

// A permutation of {0,...,n-1}, stored as its image table.
// images[i] is where dart i goes. n = 0 (empty permutation) is valid.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        check_bijection();
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    // Build from 0-based cycles; unmentioned darts are fixed.
    static Permutation from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles) {
        std::vector<int> v(static_cast<size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        for (const auto& c : cycles) {
            const int len = static_cast<int>(c.size());
            if (len < 2) continue;
            auto it = c.begin();
            int first = *it;
            int prev = first;
            ++it;
            for (; it != c.end(); ++it) {
                v.at(static_cast<size_t>(prev)) = *it;
                prev = *it;
            }
            v.at(static_cast<size_t>(prev)) = first;
        }
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.img_ <=> b.img_;
    }

private:
    std::vector<int> img_;

    void check_bijection() const {
        const int n = size();
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int v : img_) {
            if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
                throw std::invalid_argument("Permutation: image table is not a bijection");
            seen[static_cast<size_t>(v)] = 1;
        }
    }
};

// Cycle type: counts[k] = number of cycles of length k+1.
struct CycleType {
    std::vector<long long> counts;
    friend bool operator==(const CycleType&, const CycleType&) = default;
};

namespace detail {

inline void require_same_size(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("permutation size mismatch");
}

// Union-find over {0,...,n-1}.
class Dsu {
public:
    explicit Dsu(int n) : parent_(static_cast<size_t>(n)), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[static_cast<size_t>(a)] = b;
            --components_;
        }
    }
    int components() const { return components_; }

private:
    std::vector<int> parent_;
    int components_;
};

} // namespace detail

// (p∘q)(i) = p(q(i)): the right factor acts first. This order is fixed
// repo-wide; phi = alpha∘beta and sigma = gamma∘alpha∘beta depend on it.
inline Permutation compose(const Permutation& p, const Permutation& q) {
    detail::require_same_size(p, q);
    std::vector<int> r(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) r[static_cast<size_t>(i)] = p(q(i));
    return Permutation(std::move(r));
}

inline Permutation inverse(const Permutation& p) {
    std::vector<int> r(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) r[static_cast<size_t>(p(i))] = i;
    return Permutation(std::move(r));
}

inline bool is_involution(const Permutation& p) {
    for (int i = 0; i < p.size(); ++i)
        if (p(p(i)) != i) return false;
    return true;
}

inline bool is_fpf_involution(const Permutation& p) {
    for (int i = 0; i < p.size(); ++i)
        if (p(i) == i || p(p(i)) != i) return false;
    return true;
}

// by^-1 ∘ p ∘ by
inline Permutation conjugate(const Permutation& p, const Permutation& by) {
    detail::require_same_size(p, by);
    const Permutation byInv = inverse(by);
    return compose(byInv, compose(p, by));
}

inline CycleType cycle_type(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    CycleType ct;
    ct.counts.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = p(j)) {
            seen[static_cast<size_t>(j)] = 1;
            ++len;
        }
        ++ct.counts[static_cast<size_t>(len - 1)];
    }
    return ct;
}

// Number of orbits of <gens> on {0,...,n-1}; union-find over generator
// edges, no group elements materialized.
inline int orbit_count(const std::vector<Permutation>& gens, int n) {
    detail::Dsu dsu(n);
    for (const auto& g : gens) {
        if (g.size() != n) throw std::invalid_argument("orbit_count: generator size mismatch");
        for (int i = 0; i < n; ++i) dsu.unite(i, g(i));
    }
    return dsu.components();
}

// Transitive = exactly one orbit. The empty dart set is not transitive by
// convention (the connected series has zero constant term); note that a
// 1-dart set with no generators has one orbit and so counts as transitive.
inline bool is_transitive(const std::vector<Permutation>& gens, int n) {
    if (n == 0) return false;
    return orbit_count(gens, n) == 1;
}

// All fixed-point-free involutions on {0,...,n-1}, in the canonical matching
// order: pair the smallest unmatched dart with each larger unmatched dart in
// increasing order, recurse. Count is (n-1)!! for even n, 0 for odd n > 0,
// and exactly the empty permutation for n = 0.
inline std::vector<Permutation> fpf_involutions(int n) {
    std::vector<Permutation> out;
    if (n < 0) throw std::invalid_argument("fpf_involutions: n < 0");
    if (n % 2 != 0) return out;
    std::vector<int> img(static_cast<size_t>(n));
    std::vector<int> unmatched(static_cast<size_t>(n));
    std::iota(unmatched.begin(), unmatched.end(), 0);

    // explicit stack of (remaining unmatched darts) frames
    struct Frame {
        std::vector<int> rest;
        size_t next; // next partner index in rest to try (>=1)
    };
    if (n == 0) {
        out.emplace_back(Permutation::identity(0));
        return out;
    }
    std::vector<Frame> stack;
    stack.push_back({unmatched, 1});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.rest.empty()) {
            out.emplace_back(Permutation(img));
            stack.pop_back();
            continue;
        }
        if (f.next >= f.rest.size()) {
            stack.pop_back();
            continue;
        }
        const int a = f.rest[0];
        const int b = f.rest[f.next];
        img[static_cast<size_t>(a)] = b;
        img[static_cast<size_t>(b)] = a;
        std::vector<int> rest;
        rest.reserve(f.rest.size() - 2);
        for (size_t k = 1; k < f.rest.size(); ++k)
            if (k != f.next) rest.push_back(f.rest[k]);
        ++f.next;
        stack.push_back({std::move(rest), 1});
    }
    return out;
}

} // namespace pavings
