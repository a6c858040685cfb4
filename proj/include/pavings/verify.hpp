#pragma once

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "enumerate.hpp"
#include "fixtures.hpp"
#include "numeric.hpp"
#include "paving.hpp"
#include "series.hpp"

// Cross-method verification: every count is produced by at least two
// independent routes (recurrence vs. log-pipeline vs. brute force, stats vs.
// vendored sequences) and the identities tying them together are checked
// coefficient by coefficient.

namespace pavings {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace verify_detail {

inline void push_check(std::vector<CheckResult>& out, const std::string& name, bool pass,
                       const std::string& detail) {
    out.push_back(CheckResult{name, pass, detail});
}

inline bool residual_is_zero(const Series& s, int& first_bad) {
    for (int k = 0; k <= s.order; ++k)
        if (s[k] != 0) {
            first_bad = k;
            return false;
        }
    return true;
}

// (vertices, edges, faces) of every connected component, sorted.
inline std::vector<std::tuple<long long, long long, long long>> component_vef(const Map2D& m) {
    const int n = m.n;
    detail::Dsu d(n);
    for (int i = 0; i < n; ++i) {
        d.unite(i, m.alpha(i));
        d.unite(i, m.sigma(i));
    }
    std::map<int, std::array<long long, 3>> per; // root -> {v, e, f}
    auto count_orbits = [&](const Permutation& g, int slot) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            for (int j = i; !seen[static_cast<size_t>(j)]; j = g(j)) seen[static_cast<size_t>(j)] = 1;
            ++per[d.find(i)][static_cast<size_t>(slot)];
        }
    };
    count_orbits(m.sigma, 0);
    count_orbits(m.alpha, 1);
    count_orbits(compose(inverse(m.sigma), m.alpha), 2);
    std::vector<std::tuple<long long, long long, long long>> out;
    for (const auto& [root, vef] : per) out.emplace_back(vef[0], vef[1], vef[2]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace verify_detail

inline std::vector<CheckResult> run_verify_suite(int max_darts = 8, int workers = 0,
                                                 bool inject_fault = false) {
    using verify_detail::push_check;
    std::vector<CheckResult> out;

    // rooted counts: recurrence vs. theta-log of the triple Hadamard power
    {
        const int K = 30;
        const std::vector<BigInt> rec = rooted_by_recurrence(K);
        const Series rooted = series_p_rooted(2 * K);
        bool ok = true;
        std::string note = "recurrence == log-pipeline at z^2..z^60, odd coefficients 0";
        for (int k = 0; k <= K && ok; ++k)
            if (integer_coeff(rooted, 2 * k) != rec[static_cast<size_t>(k)]) {
                ok = false;
                note = "mismatch at 2k = " + std::to_string(2 * k);
            }
        for (int j = 1; j <= rooted.order && ok; j += 2)
            if (rooted[j] != 0) {
                ok = false;
                note = "nonzero odd coefficient at " + std::to_string(j);
            }
        push_check(out, "rooted-recurrence-vs-series", ok, note);
    }

    // rooted counts vs. vendored A005411 prefix
    {
        const auto& ref = fixtures::a005411();
        const std::vector<BigInt> rec = rooted_by_recurrence(static_cast<int>(ref.size()));
        bool ok = true;
        std::string note = "all " + std::to_string(ref.size()) + " vendored terms match";
        for (size_t i = 0; i < ref.size() && ok; ++i)
            if (rec[i + 1] != BigInt(ref[i])) {
                ok = false;
                note = "mismatch at term " + std::to_string(i + 1);
            }
        push_check(out, "rooted-vs-a005411", ok, note);
    }

    // unlabeled counts vs. vendored A002831 prefix
    {
        const auto& ref = fixtures::a002831();
        const Series pt = series_p_tilde(22);
        bool ok = true;
        std::string note = "all " + std::to_string(ref.size()) + " vendored terms match";
        for (size_t i = 0; i < ref.size() && ok; ++i)
            if (integer_coeff(pt, static_cast<int>(2 * (i + 1))) != BigInt(ref[i])) {
                ok = false;
                note = "mismatch at term " + std::to_string(i + 1);
            }
        for (int j = 1; j <= pt.order && ok; j += 2)
            if (pt[j] != 0) {
                ok = false;
                note = "nonzero odd coefficient at " + std::to_string(j);
            }
        push_check(out, "unlabeled-vs-a002831", ok, note);
    }

    // differential identities
    {
        int bad = -1;
        const bool ok = verify_detail::residual_is_zero(riccati_residual(40), bad);
        push_check(out, "riccati-residual-zero", ok,
                   ok ? "identically zero through order 40"
                      : "nonzero at order " + std::to_string(bad));
    }
    {
        int bad = -1;
        const bool ok = verify_detail::residual_is_zero(ode_2f0_residual(40), bad);
        push_check(out, "2f0-ode-residual-zero", ok,
                   ok ? "identically zero through order 40"
                      : "nonzero at order " + std::to_string(bad));
    }
    {
        const bool ok = series_w(24) == series_w_from_2f0(24);
        push_check(out, "w-from-counts-vs-w-from-2f0", ok,
                   ok ? "both constructions agree through order 24" : "coefficient mismatch");
    }

    // P* coefficient times (2k)! counts all involution triples: ((2k-1)!!)^3
    {
        const Series ps = series_p_star(30);
        bool ok = true;
        std::string note = "matches ((2k-1)!!)^3 for k <= 15";
        for (int k = 0; k <= 15 && ok; ++k) {
            const Rational lhs = ps[2 * k] * Rational(factorial(2 * k));
            const BigInt df = double_factorial(2 * k - 1);
            if (lhs != Rational(df * df * df)) {
                ok = false;
                note = "mismatch at k = " + std::to_string(k);
            }
        }
        push_check(out, "pstar-counts-all-triples", ok, note);
    }

    // reference pavings
    {
        struct Expect {
            const char* name;
            Paving p;
            long long f0, f1, f2, f3, aut;
        };
        const Expect expected[] = {
            {"P1", fixtures::p1(), 1, 1, 1, 1, 2}, {"P2", fixtures::p2(), 2, 2, 1, 1, 4},
            {"P3", fixtures::p3(), 1, 1, 1, 1, 4}, {"P4", fixtures::p4(), 1, 1, 2, 2, 4},
            {"P5", fixtures::p5(), 2, 1, 1, 2, 4},
        };
        bool ok = true;
        std::string note = "P1..P5: f-vectors, chi = 0, connectivity, |Aut|";
        for (const Expect& e : expected) {
            const PavingStats st = paving_stats(e.p);
            if (st.f0 != e.f0 || st.f1 != e.f1 || st.f2 != e.f2 || st.f3 != e.f3 ||
                st.euler_characteristic != 0 || !st.connected ||
                automorphism_count(e.p) != e.aut) {
                ok = false;
                note = std::string("unexpected stats for ") + e.name;
                break;
            }
        }
        push_check(out, "small-paving-fixtures", ok, note);
    }
    {
        const Paving t = fixtures::thurston();
        const PavingStats st = paving_stats(t);
        const Map2D um = underlying_map(t);
        const MapStats ms = map_stats(um);
        const auto vef = verify_detail::component_vef(um);
        const bool ok = st.f0 == 1 && st.f1 == 2 && st.f2 == 4 && st.f3 == 2 &&
                        st.complexity == -1 && st.euler_characteristic == 1 && st.connected &&
                        automorphism_count(t) == 4 && ms.components == 2 &&
                        ms.genus_per_component == std::vector<long long>({0, 0}) &&
                        vef == decltype(vef){{4, 6, 4}, {4, 6, 4}};
        push_check(out, "thurston-fixture", ok,
                   ok ? "f = (1,2,4,2), chi = +1, two genus-0 components of 4v/6e/4f, |Aut| = 4"
                      : "unexpected stats");
    }

    // brute-force oracle against both series methods
    {
        const int cap = std::max(2, max_darts - max_darts % 2);
        const std::vector<BigInt> rec = rooted_by_recurrence(cap / 2);
        const Series pt = series_p_tilde(std::min(cap, 8));
        bool ok = true;
        std::ostringstream note;
        for (int n = 2; n <= cap && ok; n += 2) {
            const bool classify = n <= 8;
            const EnumerationReport r = enumerate_pavings(n, classify, std::max(10, cap), workers);
            const BigInt dfac = double_factorial(n - 1);
            if (r.total_triples != dfac * dfac * dfac) {
                ok = false;
                note << "total mismatch at n = " << n;
                break;
            }
            if (r.rooted_count != rec[static_cast<size_t>(n / 2)] ||
                r.transitive_triples != r.rooted_count * factorial(n - 1)) {
                ok = false;
                note << "rooted/transitive mismatch at n = " << n;
                break;
            }
            if (classify && r.iso_classes != integer_coeff(pt, n)) {
                ok = false;
                note << "iso mismatch at n = " << n;
                break;
            }
            note << "n=" << n << ": rooted " << r.rooted_count << ", iso "
                 << (classify ? r.iso_classes.str() : std::string("(skipped)")) << "; ";
        }
        push_check(out, "oracle-vs-series", ok, note.str());
    }

    // Burnside average, orbit-stabilizer and Schreier rank on the small range
    {
        bool ok = true;
        std::string note = "Burnside average == class count at n <= 6";
        for (int n = 2; n <= std::min(max_darts, 6) && ok; n += 2) {
            const EnumerationReport r = enumerate_pavings(n, true, 10, workers);
            if (burnside_iso_count(n) != r.iso_classes) {
                ok = false;
                note = "Burnside mismatch at n = " + std::to_string(n);
            }
        }
        push_check(out, "burnside-cross-check", ok, note);
    }
    {
        bool ok = true;
        std::string note = "sum of n/|Aut| over classes == rooted count at n <= 6";
        for (int n = 2; n <= std::min(max_darts, 6) && ok; n += 2) {
            const EnumerationReport r = enumerate_pavings(n, true, 10, workers);
            Rational sum(0);
            for (const ClassRepresentative& cr : r.class_representatives)
                sum += Rational(n, automorphism_count(cr.paving));
            if (sum != Rational(r.rooted_count)) {
                ok = false;
                note = "orbit-stabilizer mismatch at n = " + std::to_string(n);
            }
        }
        push_check(out, "orbit-stabilizer", ok, note);
    }
    {
        bool ok = true;
        std::string note = "spanning-tree Schreier rank == 1 + n/2 on all classes, n <= 6";
        for (int n = 2; n <= std::min(max_darts, 6) && ok; n += 2) {
            const EnumerationReport r = enumerate_pavings(n, true, 10, workers);
            for (const ClassRepresentative& cr : r.class_representatives)
                if (schreier_rank(coset_graph(cr.paving)) != 1 + n / 2) {
                    ok = false;
                    note = "rank mismatch at n = " + std::to_string(n);
                    break;
                }
        }
        push_check(out, "schreier-rank", ok, note);
    }

    // mirror doubling
    {
        const Paving d1 = mirror_double(fixtures::map_single_edge());
        const Paving d2 = mirror_double(fixtures::map_torus());
        const PavingStats s1 = paving_stats(d1);
        const PavingStats s2 = paving_stats(d2);
        const bool ok = s1.complexity == 0 && s1.connected &&
                        canonical_form(d1) == canonical_form(fixtures::p4()) &&
                        s2.complexity == 2 && s2.connected && s2.f3 == 2 &&
                        map_stats(underlying_map(d2)).components == 2;
        push_check(out, "mirror-double", ok,
                   ok ? "single edge -> P4 (complexity 0); torus -> complexity 2"
                      : "unexpected mirror-double result");
    }

    // asymptotic window
    {
        bool ok = true;
        std::string note = "ratio(10) in [0.9, 1.1]; |ratio-1| non-increasing on k = 10..20";
        double prev_gap = -1;
        for (long long k = 10; k <= 20 && ok; ++k) {
            const AsymptoticReport a = asymptotic_rooted(k);
            if (k == 10 && (a.ratio < 0.9 || a.ratio > 1.1)) {
                ok = false;
                note = "ratio(10) out of window";
            }
            const double gap = std::abs(a.ratio - 1.0);
            if (prev_gap >= 0 && gap > prev_gap + 1e-3) {
                ok = false;
                note = "|ratio-1| increased at k = " + std::to_string(k);
            }
            prev_gap = gap;
        }
        push_check(out, "asymptotic-window", ok, note);
    }

    // deterministic random-paving properties (fixed seed)
    {
        std::mt19937_64 rng(0xC0FFEEULL);
        bool ok = true;
        std::string note = "64 random pavings per n in {4, 6, 8}: identities + conjugation invariance";
        for (int n = 4; n <= 8 && ok; n += 2) {
            for (int trial = 0; trial < 64 && ok; ++trial) {
                const Paving p = random_paving(n, rng);
                if (compose(p.alpha, p.phi) != p.beta ||
                    compose(p.phi, inverse(p.sigma)) != p.gamma) {
                    ok = false;
                    note = "derived-permutation identity failed";
                    break;
                }
                const Permutation pi = random_fpf_involution(n, rng); // any conjugator works
                const Paving q = paving_from_involutions(conjugate(p.alpha, pi),
                                                         conjugate(p.beta, pi),
                                                         conjugate(p.gamma, pi));
                if (paving_stats(q) != paving_stats(p)) {
                    ok = false;
                    note = "stats changed under conjugation";
                    break;
                }
                if (is_connected(p) && canonical_form(q) != canonical_form(p)) {
                    ok = false;
                    note = "canonical form changed under conjugation";
                    break;
                }
            }
        }
        push_check(out, "random-paving-properties", ok, note);
    }

    if (inject_fault)
        push_check(out, "fault-injection", false, "deliberately failing check (test hook)");

    return out;
}

inline bool all_passed(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

} // namespace pavings
