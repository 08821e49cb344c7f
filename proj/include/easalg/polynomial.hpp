#pragma once

#include <stdexcept>
#include <vector>

#include "easalg/rational.hpp"

namespace easalg {

// Integer polynomial in one variable (we use it for p_n(w) and q_n(w)).
// Coefficients are stored by ascending degree and trimmed, so the trailing
// coefficient is nonzero unless the polynomial is zero (empty vector).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial constant(BigInt v) { return IntPolynomial({std::move(v)}); }
    static IntPolynomial monomial(std::size_t deg, BigInt v = 1) {
        std::vector<BigInt> c(deg + 1);
        c[deg] = std::move(v);
        return IntPolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial reported as -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(std::size_t deg) const { return deg < c_.size() ? c_[deg] : BigInt(0); }
    BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPolynomial(std::move(out));
    }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    BigInt eval(const BigInt& x) const {
        BigInt r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rational(*it);
        return r;
    }

    // Quotient by w^k; requires the k lowest coefficients to vanish.
    IntPolynomial divide_by_monomial(std::size_t k) const {
        for (std::size_t i = 0; i < k && i < c_.size(); ++i)
            if (c_[i] != 0) throw std::domain_error("not divisible by w^k");
        if (c_.size() <= k) return {};
        return IntPolynomial(std::vector<BigInt>(c_.begin() + k, c_.end()));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

// Power series in X truncated at a fixed order; coefficient of X^k at index k.
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1) {}
    explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}
    TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        c_.resize(order + 1);
    }

    std::size_t order() const { return c_.size() - 1; }
    const Rational& coeff(std::size_t k) const { return c_[k]; }
    Rational& coeff(std::size_t k) { return c_[k]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    static TruncatedSeries x(std::size_t order) {
        TruncatedSeries s(order);
        if (order >= 1) s.c_[1] = 1;
        return s;
    }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= out.order(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j <= out.order(); ++j)
                if (!is_zero(b.c_[j])) out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }

    TruncatedSeries scaled(const Rational& f) const {
        TruncatedSeries out = *this;
        for (auto& v : out.c_) v *= f;
        return out;
    }

    // X -> -X
    TruncatedSeries negate_argument() const {
        TruncatedSeries out = *this;
        for (std::size_t i = 1; i < out.c_.size(); i += 2) out.c_[i] = -out.c_[i];
        return out;
    }

private:
    std::vector<Rational> c_;
};

// F(G(X)) up to the common truncation order; G must have zero constant term.
inline TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (!is_zero(g.coeff(0)))
        throw std::domain_error("series_compose: inner series has nonzero constant term");
    const std::size_t order = std::min(f.order(), g.order());
    TruncatedSeries res(order);
    // Horner from the top coefficient down: res = res*G + f_k
    for (std::size_t k = f.order() + 1; k-- > 0;) {
        TruncatedSeries next(order);
        for (std::size_t i = 0; i <= order; ++i) {
            if (is_zero(res.coeff(i))) continue;
            for (std::size_t j = 0; i + j <= order; ++j)
                if (!is_zero(g.coeff(j))) next.coeff(i + j) += res.coeff(i) * g.coeff(j);
        }
        next.coeff(0) += f.coeff(k);
        res = next;
        if (k == 0) break;
    }
    return res;
}

}  // namespace easalg
