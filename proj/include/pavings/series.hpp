#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "numeric.hpp"

namespace pavings {

// Dense truncated formal power series over exact rationals. c[k] is the
// plain coefficient of z^k; nothing beyond `order` is stored or defined.
// No floating point enters this type: the underlying generating functions
// diverge everywhere, so only coefficients carry meaning.
struct Series {
    int order = 0;
    std::vector<Rational> c;

    explicit Series(int order_ = 40) : order(order_) {
        if (order_ < 0) throw std::invalid_argument("Series: negative order");
        c.assign(static_cast<size_t>(order_) + 1, Rational(0));
    }

    const Rational& operator[](int k) const { return c.at(static_cast<size_t>(k)); }
    Rational& operator[](int k) { return c.at(static_cast<size_t>(k)); }

    friend bool operator==(const Series&, const Series&) = default;
};

inline Series series_add(const Series& a, const Series& b) {
    Series r(std::min(a.order, b.order));
    for (int k = 0; k <= r.order; ++k) r[k] = a[k] + b[k];
    return r;
}

inline Series series_sub(const Series& a, const Series& b) {
    Series r(std::min(a.order, b.order));
    for (int k = 0; k <= r.order; ++k) r[k] = a[k] - b[k];
    return r;
}

inline Series series_scale(const Series& a, const Rational& s) {
    Series r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

// Truncated Cauchy product.
inline Series series_mul(const Series& a, const Series& b) {
    Series r(std::min(a.order, b.order));
    for (int i = 0; i <= r.order; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= r.order && j <= b.order; ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

// z·d/dz — keeps the order.
inline Series series_theta(const Series& a) {
    Series r(a.order);
    for (int k = 0; k <= a.order; ++k) r[k] = Rational(k) * a[k];
    return r;
}

// formal exp of a series with zero constant term:
// e_k = (1/k)·Σ_{j=1..k} j·q_j·e_{k−j}.
inline Series series_exp(const Series& q) {
    if (q.order >= 0 && q[0] != 0)
        throw std::invalid_argument("series_exp: nonzero constant term");
    Series e(q.order);
    e[0] = 1;
    for (int k = 1; k <= q.order; ++k) {
        Rational s(0);
        for (int j = 1; j <= k; ++j)
            if (q[j] != 0) s += Rational(j) * q[j] * e[k - j];
        e[k] = s / k;
    }
    return e;
}

// formal log of a series with constant term 1:
// l_k = p_k − (1/k)·Σ_{j=1..k−1} j·l_j·p_{k−j}.
inline Series series_log(const Series& p) {
    if (p.order < 0 || p[0] != 1)
        throw std::invalid_argument("series_log: constant term is not 1");
    Series l(p.order);
    for (int k = 1; k <= p.order; ++k) {
        Rational s(0);
        for (int j = 1; j < k; ++j)
            if (l[j] != 0 && p[k - j] != 0) s += Rational(j) * l[j] * p[k - j];
        l[k] = p[k] - s / k;
    }
    return l;
}

// S2(z) = Σ z^{2k}/(2^k k!): EGF for fixed-point-free involutions.
inline Series series_s2(int N) {
    Series r(N);
    BigInt denom = 1; // 2^k k!
    for (int k = 0; 2 * k <= N; ++k) {
        if (k > 0) denom *= 2 * k;
        r[2 * k] = Rational(BigInt(1), denom);
    }
    return r;
}

// EGF-weighted Hadamard product: plain coefficient c_n = a_n·b_n·n!.
inline Series hadamard(const Series& a, const Series& b) {
    if (a.order != b.order) throw std::invalid_argument("hadamard: order mismatch");
    Series r(a.order);
    BigInt fact = 1;
    for (int k = 0; k <= a.order; ++k) {
        if (k > 0) fact *= k;
        r[k] = a[k] * b[k] * Rational(fact);
    }
    return r;
}

// P*(z) = S2 ⊙ S2 ⊙ S2: rooted pavings with a marked dart on every orbit,
// i.e. plain coefficient ((2k)!)²/(2^{3k}(k!)³) at z^{2k}.
inline Series series_p_star(int N) {
    const Series s2 = series_s2(N);
    return hadamard(hadamard(s2, s2), s2);
}

// P(z) = log P*(z): connected structures.
inline Series series_p(int N) { return series_log(series_p_star(N)); }

namespace detail {

inline void require_integer_coeffs(const Series& s, const char* what) {
    for (int k = 0; k <= s.order; ++k)
        if (denominator(s[k]) != 1)
            throw std::logic_error(std::string(what) + ": non-integral coefficient at index " +
                                   std::to_string(k));
}

} // namespace detail

// Extract an integer coefficient; throws if the rational is not integral.
inline BigInt integer_coeff(const Series& s, int k) {
    const Rational& q = s[k];
    if (denominator(q) != 1)
        throw std::logic_error("integer_coeff: coefficient at " + std::to_string(k) +
                               " is not an integer");
    return numerator(q);
}

// P°(z) = z·(d/dz) log P*(z): coefficient of z^n is pav_r(n), the number of
// rooted pavings on n darts. Integrality is asserted — a failure here is a
// bug, not data.
inline Series series_p_rooted(int N) {
    Series r = series_theta(series_p(N));
    detail::require_integer_coeffs(r, "series_p_rooted");
    return r;
}

// a_k = pav_r(2k) by the bare recurrence:
// a_0 = 0, a_1 = 1, a_{k+1} = 2(k+1)·a_k + Σ_{i=1..k−1} a_i·a_{k−i}.
inline std::vector<BigInt> rooted_by_recurrence(int K) {
    if (K < 0) throw std::invalid_argument("rooted_by_recurrence: negative K");
    std::vector<BigInt> a;
    a.reserve(static_cast<size_t>(K) + 1);
    a.push_back(0);
    if (K >= 1) a.push_back(1);
    for (int k = 1; k < K; ++k) {
        BigInt s = 0;
        for (int i = 1; i <= k - 1; ++i) s += a[static_cast<size_t>(i)] * a[static_cast<size_t>(k - i)];
        a.push_back(2 * (k + 1) * a[static_cast<size_t>(k)] + s);
    }
    return a;
}

// EGF coefficients f_k of f(x) = 2F0(1/2, 1/2; x) = Σ f_k x^k/k!,
// f_k = ((1/2)_k)², via the ratio f_{k+1}/f_k = (k + 1/2)².
inline std::vector<Rational> hypergeom_2F0_coeffs(int K) {
    if (K < 0) throw std::invalid_argument("hypergeom_2F0_coeffs: negative K");
    std::vector<Rational> f;
    f.reserve(static_cast<size_t>(K) + 1);
    f.emplace_back(1);
    for (int k = 0; k < K; ++k) {
        const Rational half_shift(2 * k + 1, 2); // k + 1/2
        f.push_back(f.back() * half_shift * half_shift);
    }
    return f;
}

// w(x) = Σ_{k≥1} pav_r(2k)/2^{k+1} x^k — the substitution that turns P°
// into a Riccati solution.
inline Series series_w(int N) {
    Series w(N);
    const std::vector<BigInt> a = rooted_by_recurrence(N);
    BigInt pow2 = 2; // 2^{k+1}
    for (int k = 1; k <= N; ++k) {
        pow2 *= 2;
        w[k] = Rational(a[static_cast<size_t>(k)], pow2);
    }
    return w;
}

// w built the other way round: θ log f for the 2F0 plain series f_k/k!.
// Equals series_w coefficient-by-coefficient.
inline Series series_w_from_2f0(int N) {
    const std::vector<Rational> f = hypergeom_2F0_coeffs(N);
    Series plain(N);
    BigInt fact = 1;
    for (int k = 0; k <= N; ++k) {
        if (k > 0) fact *= k;
        plain[k] = f[static_cast<size_t>(k)] / Rational(fact);
    }
    return series_theta(series_log(plain));
}

// x²·w′ − (1−x)·w + x·w² + x/4, truncated at N. Identically zero when w is
// built from the true rooted counts; perturbing any count breaks it.
inline Series riccati_residual(int N) {
    if (N < 2) throw std::invalid_argument("riccati_residual: order must be >= 2");
    const Series w = series_w(N);
    const Series w2 = series_mul(w, w);
    Series r(N);
    for (int k = 0; k <= N; ++k) {
        Rational v(0);
        if (k >= 1) v += Rational(k - 1) * w[k - 1]; // x²·w′
        v -= w[k];                                   // −w
        if (k >= 1) v += w[k - 1];                   // +x·w
        if (k >= 1) v += w2[k - 1];                  // +x·w²
        if (k == 1) v += Rational(1, 4);             // +x/4
        r[k] = v;
    }
    return r;
}

// Residual of the hypergeometric ODE θf = x(θ + 1/2)²f on the plain series
// Σ f_k x^k/k!: coefficient k is k·c_k − (k − 1/2)²·c_{k−1}.
inline Series ode_2f0_residual(int N) {
    if (N < 0) throw std::invalid_argument("ode_2f0_residual: negative order");
    const std::vector<Rational> f = hypergeom_2F0_coeffs(N);
    std::vector<Rational> c(f.size());
    BigInt fact = 1;
    for (int k = 0; k <= N; ++k) {
        if (k > 0) fact *= k;
        c[static_cast<size_t>(k)] = f[static_cast<size_t>(k)] / Rational(fact);
    }
    Series r(N);
    for (int k = 1; k <= N; ++k) {
        const Rational half_shift(2 * k - 1, 2); // k − 1/2
        r[k] = Rational(k) * c[static_cast<size_t>(k)] -
               half_shift * half_shift * c[static_cast<size_t>(k - 1)];
    }
    return r;
}

// T_m in its single variable: exp(z²/2m + z/m) for even m, exp(z²/2m) for
// odd m — the cycle-index atom for fixed-point-free involutions acting on
// m-cycles.
inline Series cycle_index_T(int m, int N) {
    if (m < 1) throw std::invalid_argument("cycle_index_T: m must be >= 1");
    Series arg(N);
    if (N >= 2) arg[2] = Rational(1, 2 * m);
    if (m % 2 == 0 && N >= 1) arg[1] = Rational(1, m);
    return series_exp(arg);
}

// Single-variable specialization of the λ!-weighted triple Hadamard power:
// coefficient at z^j becomes t_j³·(j!)²·m^{2j}.
inline Series triple_hadamard_weighted(const Series& t, int m) {
    if (m < 1) throw std::invalid_argument("triple_hadamard_weighted: m must be >= 1");
    Series r(t.order);
    Rational weight(1); // (j!)²·m^{2j}
    for (int j = 0; j <= t.order; ++j) {
        if (j > 0) weight *= Rational(BigInt(j) * j * m * m);
        r[j] = t[j] * t[j] * t[j] * weight;
    }
    return r;
}

// P̃(z): unlabeled (isomorphism-class) counting series,
//   P̃ = Σ_{m≥1} Σ_{k≥1, mk≤N} (μ(k)/k) · log((T_m ⊙ T_m ⊙ T_m))(z ↦ z^{mk}),
// truncated at N. Coefficient of z^n is pav(n); integrality asserted.
inline Series series_p_tilde(int N) {
    if (N < 0) throw std::invalid_argument("series_p_tilde: negative order");
    Series acc(N);
    for (int m = 1; m <= N; ++m) {
        const int inner = N / m; // largest power of the inner variable ever needed
        const Series lw = series_log(triple_hadamard_weighted(cycle_index_T(m, inner), m));
        for (int k = 1; m * k <= N; ++k) {
            const int mu = moebius(k);
            if (mu == 0) continue;
            const Rational coef(mu, k);
            for (int j = 1; j <= lw.order && j * m * k <= N; ++j)
                if (lw[j] != 0) acc[j * m * k] += coef * lw[j];
        }
    }
    detail::require_integer_coeffs(acc, "series_p_tilde");
    return acc;
}

struct AsymptoticReport {
    long long k = 0;
    BigInt exact;       // pav_r(2k) or pav(2k)
    BigFloat asymptote; // closed-form estimate
    double ratio = 0;   // exact / asymptote
};

namespace detail {

// exp(base_log + k(ln2 − 1) + e·ln k) with e = k ± 1/2; log-space to dodge
// overflow at large k.
inline BigFloat growth_term(long long k, const BigFloat& base_log, const Rational& exponent) {
    const BigFloat ln2 = log(BigFloat(2));
    const BigFloat lnk = log(BigFloat(k));
    return exp(base_log + BigFloat(k) * (ln2 - 1) + static_cast<BigFloat>(exponent) * lnk);
}

inline double ratio_of(const BigInt& exact, const BigFloat& asymptote) {
    return static_cast<double>(static_cast<BigFloat>(exact) / asymptote);
}

} // namespace detail

// pav_r(2k) ~ 2·sqrt(2/π)·(2/e)^k·k^{k+1/2}.
inline AsymptoticReport asymptotic_rooted(long long k) {
    if (k < 1) throw std::invalid_argument("asymptotic_rooted: k must be >= 1");
    AsymptoticReport rep;
    rep.k = k;
    rep.exact = rooted_by_recurrence(static_cast<int>(k)).back();
    const BigFloat ln2 = log(BigFloat(2));
    const BigFloat lnpi = log(boost::math::constants::pi<BigFloat>());
    const BigFloat base_log = ln2 + (ln2 - lnpi) / 2; // log 2·sqrt(2/π)
    rep.asymptote = detail::growth_term(k, base_log, Rational(2 * k + 1, 2));
    rep.ratio = detail::ratio_of(rep.exact, rep.asymptote);
    return rep;
}

// pav(2k) ~ sqrt(2/π)·(2/e)^k·k^{k−1/2} — the rooted asymptote divided by 2k.
// The exact value is read from a precomputed P̃ of order ≥ 2k.
inline AsymptoticReport asymptotic_unlabeled(long long k, const Series& p_tilde) {
    if (k < 1) throw std::invalid_argument("asymptotic_unlabeled: k must be >= 1");
    if (p_tilde.order < 2 * k)
        throw std::invalid_argument("asymptotic_unlabeled: series order too small");
    AsymptoticReport rep;
    rep.k = k;
    rep.exact = integer_coeff(p_tilde, static_cast<int>(2 * k));
    const BigFloat ln2 = log(BigFloat(2));
    const BigFloat lnpi = log(boost::math::constants::pi<BigFloat>());
    const BigFloat base_log = (ln2 - lnpi) / 2; // log sqrt(2/π)
    rep.asymptote = detail::growth_term(k, base_log, Rational(2 * k - 1, 2));
    rep.ratio = detail::ratio_of(rep.exact, rep.asymptote);
    return rep;
}

inline AsymptoticReport asymptotic_unlabeled(long long k) {
    return asymptotic_unlabeled(k, series_p_tilde(static_cast<int>(2 * k)));
}

} // namespace pavings
