#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "easalg/polynomial.hpp"
#include "easalg/rational.hpp"

namespace easalg {

// dim As^2_Omega(n) for n = 1..N over a parameter set of size omega.
struct DimensionTable {
    int omega = 1;
    std::vector<BigInt> values;  // values[k] = p_{k+1}

    const BigInt& p(int n) const { return values.at(n - 1); }
};

// p_n = w(w-1) sum p_k p_{n-k} + w p_{n-1}, p_1 = 1.
inline DimensionTable p_recursive(int omega, int N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    DimensionTable t;
    t.omega = omega;
    std::vector<BigInt> p(N + 1);
    p[1] = 1;
    BigInt w = omega;
    for (int n = 2; n <= N; ++n) {
        BigInt acc = 0;
        for (int k = 1; k < n; ++k) acc += p[k] * p[n - k];
        p[n] = w * (w - 1) * acc + w * p[n - 1];
    }
    t.values.assign(p.begin() + 1, p.end());
    return t;
}

// Closed form via Narayana numbers:
// p_n = (w^n/(n-1)) sum_k C(n-1,k) C(n-1,k-1) w^{n-1-k} (w-1)^{k-1}.
// The prefactor division is exact and asserted.
inline BigInt p_narayana(int omega, int n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    BigInt w = omega;
    BigInt acc = 0;
    for (int k = 1; k <= n - 1; ++k)
        acc += binomial(n - 1, k) * binomial(n - 1, k - 1) * ipow(w, n - 1 - k) * ipow(w - 1, k - 1);
    BigInt numerator = ipow(w, n) * acc;
    if (numerator % (n - 1) != 0) throw std::logic_error("narayana prefactor division not exact");
    return numerator / (n - 1);
}

// p_n as a polynomial in w, by running the recursion over integer polynomials.
inline IntPolynomial p_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    IntPolynomial w = IntPolynomial::monomial(1);
    IntPolynomial w_times_w_minus_1 = w * (w + IntPolynomial::constant(-1));
    std::vector<IntPolynomial> p(n + 1);
    p[1] = IntPolynomial::constant(1);
    for (int m = 2; m <= n; ++m) {
        IntPolynomial acc;
        for (int k = 1; k < m; ++k) acc = acc + p[k] * p[m - k];
        p[m] = w_times_w_minus_1 * acc + w * p[m - 1];
    }
    return p[n];
}

inline std::vector<BigInt> catalan_numbers(int N) {
    std::vector<BigInt> cat(N + 1);
    cat[1] = 1;
    for (int n = 2; n <= N; ++n)
        for (int k = 1; k < n; ++k) cat[n] += cat[k] * cat[n - k];
    return cat;
}

// Large Schroder numbers by their own second-order recurrence,
// n s_n = 3(2n-3) s_{n-1} - (n-3) s_{n-2}.
inline std::vector<BigInt> schroder_numbers(int N) {
    std::vector<BigInt> s(N + 1);
    if (N >= 1) s[1] = 1;
    if (N >= 2) s[2] = 2;
    for (int n = 3; n <= N; ++n) {
        BigInt v = 3 * (2 * n - 3) * s[n - 1] - (n - 3) * s[n - 2];
        if (v % n != 0) throw std::logic_error("schroder recurrence division not exact");
        s[n] = v / n;
    }
    return s;
}

struct PolynomialPropertyReport {
    bool ok = false;
    bool degree_ok = false;        // deg p_n = 2n-2
    bool leading_is_catalan = false;
    bool divisible_by_wn = false;  // w^n | p_n with q_n(0) = (-1)^n
    bool half_root_ok = true;      // p_n(1/2) = 0 for odd n >= 3
};

inline PolynomialPropertyReport check_polynomial_properties(int n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    PolynomialPropertyReport rep;
    IntPolynomial p = p_polynomial(n);
    rep.degree_ok = p.degree() == 2 * n - 2;
    rep.leading_is_catalan = p.leading() == catalan_numbers(n)[n];
    bool divisible = true;
    for (int i = 0; i < n; ++i)
        if (p.coeff(i) != 0) divisible = false;
    rep.divisible_by_wn = divisible && p.coeff(n) == ((n % 2 == 0) ? BigInt(1) : BigInt(-1));
    if (n % 2 == 1 && n >= 3) rep.half_root_ok = is_zero(p.eval(Rational(1, 2)));
    rep.ok = rep.degree_ok && rep.leading_is_catalan && rep.divisible_by_wn && rep.half_root_ok;
    return rep;
}

inline TruncatedSeries p_series(int omega, std::size_t order) {
    TruncatedSeries s(order);
    auto table = p_recursive(omega, static_cast<int>(order));
    for (std::size_t n = 1; n <= order; ++n) s.coeff(n) = Rational(table.p(static_cast<int>(n)));
    return s;
}

// P = w(w-1) P^2 + w X P + X, exact at the given truncation order.
inline bool verify_functional_equation(int omega, std::size_t order) {
    TruncatedSeries P = p_series(omega, order);
    Rational w = omega;
    TruncatedSeries X = TruncatedSeries::x(order);
    TruncatedSeries rhs = (P * P).scaled(w * (w - 1)) + (X * P).scaled(w) + X;
    return P == rhs;
}

// Q(X) = X + sum_{n>=2} w^n X^n, the Poincare-Hilbert series of the dual.
inline TruncatedSeries koszul_dual_series(int omega, std::size_t order) {
    if (order < 2) throw std::invalid_argument("order must be >= 2");
    TruncatedSeries q(order);
    q.coeff(1) = 1;
    BigInt w = omega;
    for (std::size_t n = 2; n <= order; ++n) q.coeff(n) = Rational(ipow(w, static_cast<unsigned>(n)));
    return q;
}

// Q is the compositional inverse of -P(-X).
inline bool verify_koszul_inversion(int omega, std::size_t order) {
    TruncatedSeries q = koszul_dual_series(omega, order);
    TruncatedSeries minus_p_minus_x = p_series(omega, order).negate_argument().scaled(-1);
    TruncatedSeries comp = series_compose(q, minus_p_minus_x);
    return comp == TruncatedSeries::x(order);
}

struct SchroderReport {
    bool ok = false;
    std::vector<BigInt> schroder;
};

// p_n(2) = 2^{n-1} schr_n, with the Schroder numbers from their own recurrence.
inline SchroderReport schroder_check(int N) {
    if (N > 10) throw std::invalid_argument("N must be <= 10");
    SchroderReport rep;
    auto s = schroder_numbers(N);
    rep.schroder.assign(s.begin() + 1, s.end());
    auto table = p_recursive(2, N);
    rep.ok = true;
    for (int n = 1; n <= N; ++n)
        if (table.p(n) != ipow(2, n - 1) * s[n]) rep.ok = false;
    return rep;
}

}  // namespace easalg
