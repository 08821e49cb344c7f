#pragma once

#include <map>

#include "easalg/rational.hpp"

namespace easalg {

// Rational linear combination of basis objects of type K. Zero coefficients
// are never stored, so equality of sums is equality of maps.
template <typename K>
class FormalSum {
public:
    FormalSum() = default;
    explicit FormalSum(K k) { terms_[std::move(k)] = 1; }
    FormalSum(K k, Rational c) {
        if (!is_zero(c)) terms_[std::move(k)] = std::move(c);
    }

    static FormalSum zero() { return FormalSum(); }

    void add(const K& k, const Rational& c) {
        if (is_zero(c)) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }

    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum& b) { a += b; return a; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { a -= b; return a; }

    FormalSum scaled(const Rational& f) const {
        FormalSum out;
        if (is_zero(f)) return out;
        for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * f);
        return out;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<K, Rational>& terms() const { return terms_; }

    bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }
    bool operator!=(const FormalSum& o) const { return !(*this == o); }

private:
    std::map<K, Rational> terms_;
};

}  // namespace easalg
