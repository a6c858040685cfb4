#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "numeric.hpp"
#include "paving.hpp"
#include "permutation.hpp"

namespace pavings {

struct ClassRepresentative {
    Paving paving;
    PavingStats stats;
};

struct EnumerationReport {
    int n = 0;
    BigInt total_triples = 0;      // ((n-1)!!)^3
    BigInt transitive_triples = 0; // = rooted_count * (n-1)!
    BigInt rooted_count = 0;
    BigInt iso_classes = 0;
    std::vector<ClassRepresentative> class_representatives; // filled when classifying
};

namespace detail {

// Union alpha/beta orbits once per pair; every gamma then only replays its
// own n/2 unions on a copy. Components are tracked by count so transitivity
// is a single comparison.
struct PairBase {
    std::vector<int> parent;
    int components = 0;
};

inline PairBase pair_base(const Permutation& alpha, const Permutation& beta) {
    const int n = alpha.size();
    Dsu d(n);
    for (int i = 0; i < n; ++i) {
        d.unite(i, alpha(i));
        d.unite(i, beta(i));
    }
    PairBase b;
    b.parent.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) b.parent[static_cast<size_t>(i)] = d.find(i);
    b.components = d.components();
    return b;
}

inline bool transitive_with(const PairBase& base, const Permutation& gamma) {
    const int n = gamma.size();
    if (base.components == 1) return true;
    std::vector<int> parent = base.parent;
    int comps = base.components;
    auto find = [&parent](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (int i = 0; i < n && comps > 1; ++i) {
        const int a = find(i), b = find(gamma(i));
        if (a != b) {
            parent[static_cast<size_t>(a)] = b;
            --comps;
        }
    }
    return comps == 1;
}

} // namespace detail

// Exhaustive scan of all fixed-point-free involution triples on n darts.
// Counts are exact; with classify the canonical form of every transitive
// triple is collected and distinct representatives are returned in
// canonical (lexicographic) order. The limit guards against accidental
// huge runs; workers = 0 picks hardware concurrency.
inline EnumerationReport enumerate_pavings(int n, bool classify, int limit = 10,
                                           int workers = 0) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("enumerate_pavings: n must be even");
    if (n > limit) throw std::invalid_argument("enumerate_pavings: n exceeds the configured limit");

    EnumerationReport rep;
    rep.n = n;
    if (n == 0) {
        rep.total_triples = 1; // the empty triple
        return rep;           // empty action is not transitive: all other counts 0
    }

    const std::vector<Permutation> invs = fpf_involutions(n);
    const BigInt m = static_cast<BigInt>(invs.size());
    rep.total_triples = m * m * m;

    if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min<int>(workers, static_cast<int>(invs.size()));

    std::atomic<size_t> next_alpha{0};
    std::mutex merge_mutex;
    unsigned long long transitive_total = 0;
    std::set<std::vector<int>> canon_forms;

    auto work = [&]() {
        unsigned long long local_transitive = 0;
        std::set<std::vector<int>> local_forms;
        for (;;) {
            const size_t ai = next_alpha.fetch_add(1);
            if (ai >= invs.size()) break;
            const Permutation& alpha = invs[ai];
            for (const Permutation& beta : invs) {
                const detail::PairBase base = detail::pair_base(alpha, beta);
                if (!classify && base.components == 1) {
                    local_transitive += invs.size();
                    continue;
                }
                for (const Permutation& gamma : invs) {
                    if (!detail::transitive_with(base, gamma)) continue;
                    ++local_transitive;
                    if (classify) {
                        const Paving p = paving_from_involutions(alpha, beta, gamma);
                        std::vector<int> best;
                        for (int s = 0; s < n; ++s) {
                            std::vector<int> form = detail::traversal_form(p, s);
                            if (best.empty() || form < best) best = std::move(form);
                        }
                        local_forms.insert(std::move(best));
                    }
                }
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        transitive_total += local_transitive;
        canon_forms.merge(local_forms);
    };

    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    rep.transitive_triples = transitive_total;
    const BigInt root_choices = factorial(n - 1);
    if (rep.transitive_triples % root_choices != 0)
        throw std::logic_error("enumerate_pavings: transitive count not divisible by (n-1)!");
    rep.rooted_count = rep.transitive_triples / root_choices;

    if (classify) {
        rep.iso_classes = static_cast<BigInt>(canon_forms.size());
        const size_t sz = static_cast<size_t>(n);
        for (const std::vector<int>& f : canon_forms) {
            ClassRepresentative cr;
            cr.paving = paving_from_involutions(
                Permutation(std::vector<int>(f.begin(), f.begin() + sz)),
                Permutation(std::vector<int>(f.begin() + sz, f.begin() + 2 * sz)),
                Permutation(std::vector<int>(f.begin() + 2 * sz, f.end())));
            cr.stats = paving_stats(cr.paving);
            rep.class_representatives.push_back(std::move(cr));
        }
    }
    return rep;
}

// Free subgroups of index n in Z2*Z2*Z2 = rooted pavings on n darts
// (coset action realized by the paving itself). Odd index: none.
inline BigInt count_free_subgroups(int n, int limit = 10, int workers = 0) {
    if (n < 0) throw std::invalid_argument("count_free_subgroups: negative n");
    if (n % 2 != 0) return 0;
    return enumerate_pavings(n, false, limit, workers).rooted_count;
}

// Conjugacy classes of free index-n subgroups = isomorphism classes.
inline BigInt count_conjugacy_classes(int n, int limit = 10, int workers = 0) {
    if (n < 0) throw std::invalid_argument("count_conjugacy_classes: negative n");
    if (n % 2 != 0) return 0;
    return enumerate_pavings(n, true, limit, workers).iso_classes;
}

// Burnside count of isomorphism classes: average over all of S_n of the
// number of transitive triples fixed by simultaneous conjugation. Only
// sensible for small n (n! blowup) — a cross-check, not a workhorse.
inline BigInt burnside_iso_count(int n, int limit = 6) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("burnside_iso_count: n must be even");
    if (n > limit) throw std::invalid_argument("burnside_iso_count: n exceeds the configured limit");
    if (n == 0) return 0;

    const std::vector<Permutation> invs = fpf_involutions(n);
    std::vector<std::array<const Permutation*, 3>> transitive;
    for (const Permutation& alpha : invs)
        for (const Permutation& beta : invs) {
            const detail::PairBase base = detail::pair_base(alpha, beta);
            for (const Permutation& gamma : invs)
                if (detail::transitive_with(base, gamma))
                    transitive.push_back({&alpha, &beta, &gamma});
        }

    // iterate S_n via permutation images in lexicographic order
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
    BigInt fixed_sum = 0;
    do {
        const Permutation pi{std::vector<int>(img)};
        for (const auto& t : transitive) {
            if (conjugate(*t[0], pi) != *t[0]) continue;
            if (conjugate(*t[1], pi) != *t[1]) continue;
            if (conjugate(*t[2], pi) == *t[2]) ++fixed_sum;
        }
    } while (std::next_permutation(img.begin(), img.end()));

    const BigInt group_order = factorial(n);
    if (fixed_sum % group_order != 0)
        throw std::logic_error("burnside_iso_count: sum not divisible by n!");
    return fixed_sum / group_order;
}

// Uniformly random fixed-point-free involution: shuffle, pair consecutive.
template <class Rng>
Permutation random_fpf_involution(int n, Rng& rng) {
    if (n < 0 || n % 2 != 0)
        throw std::invalid_argument("random_fpf_involution: n must be even");
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; i += 2) {
        img[static_cast<size_t>(order[static_cast<size_t>(i)])] = order[static_cast<size_t>(i + 1)];
        img[static_cast<size_t>(order[static_cast<size_t>(i + 1)])] = order[static_cast<size_t>(i)];
    }
    return Permutation(std::move(img));
}

template <class Rng>
Paving random_paving(int n, Rng& rng) {
    return paving_from_involutions(random_fpf_involution(n, rng), random_fpf_involution(n, rng),
                                   random_fpf_involution(n, rng));
}

} // namespace pavings
