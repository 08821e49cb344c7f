#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "easalg/eas.hpp"
#include "easalg/matrix.hpp"

namespace easalg {

// Linear extended associative semigroup: a d-dimensional space A with a map
// Phi on A(x)A, stored as a d^2 x d^2 matrix. Column (i*d+j) is the image of
// e_i(x)e_j; the Sweedler legs of Phi(a(x)b) are written
// sum (a'->b') (x) (a''|>b''), first leg "arrow", second leg "triangle".
struct LinearEAS {
    std::size_t dim = 0;
    RationalMatrix phi;
    std::string name;

    LinearEAS() = default;
    LinearEAS(std::size_t d, RationalMatrix m, std::string n = "")
        : dim(d), phi(std::move(m)), name(std::move(n)) {
        if (phi.rows() != d * d || phi.cols() != d * d)
            throw std::invalid_argument("LinearEAS: phi must be d^2 x d^2");
    }
};

struct LeasReport {
    bool ok = false;
    // first differing entry of the two sides, as (row, col) multi-indices over
    // the cube basis e_i(x)e_j(x)e_k
    std::optional<std::array<std::size_t, 3>> row_index;
    std::optional<std::array<std::size_t, 3>> col_index;
};

// Sparse column view of a structure map: cols[c] lists the nonzero
// (row, value) entries of column c. The hot loops (free-algebra stars, operad
// composition, rewriting, the braid check) all read Phi through this.
struct PhiView {
    std::size_t d = 0;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;

    PhiView() = default;
    explicit PhiView(const LinearEAS& l) : d(l.dim), cols(l.dim * l.dim) {
        for (std::size_t c = 0; c < d * d; ++c)
            for (std::size_t r = 0; r < d * d; ++r)
                if (!is_zero(l.phi(r, c))) cols[c].push_back({r, l.phi(r, c)});
    }
};

namespace detail {

using SparseVec = std::map<std::size_t, Rational>;

// (Id_d (x) M) on A (x) (A(x)A): flat index i*d^2 + r
inline SparseVec apply_id_phi(const PhiView& v, const SparseVec& x) {
    SparseVec out;
    const std::size_t dd = v.d * v.d;
    for (const auto& [idx, c] : x) {
        std::size_t i = idx / dd, r = idx % dd;
        for (const auto& [rr, m] : v.cols[r]) {
            Rational& slot = out[i * dd + rr];
            slot += m * c;
            if (is_zero(slot)) out.erase(i * dd + rr);
        }
    }
    return out;
}

// (M (x) Id_d) on (A(x)A) (x) A: flat index q*d + k
inline SparseVec apply_phi_id(const PhiView& v, const SparseVec& x) {
    SparseVec out;
    for (const auto& [idx, c] : x) {
        std::size_t q = idx / v.d, k = idx % v.d;
        for (const auto& [qq, m] : v.cols[q]) {
            Rational& slot = out[qq * v.d + k];
            slot += m * c;
            if (is_zero(slot)) out.erase(qq * v.d + k);
        }
    }
    return out;
}

// Id (x) tau on the cube: i,j,k -> i,k,j
inline SparseVec apply_id_tau(std::size_t d, const SparseVec& x) {
    SparseVec out;
    for (const auto& [idx, c] : x) {
        std::size_t i = idx / (d * d), j = (idx / d) % d, k = idx % d;
        out[i * d * d + k * d + j] = c;
    }
    return out;
}

}  // namespace detail

// The braid-like identity: (Id(x)Phi)(Phi(x)Id)(Id(x)Phi) =
// (Phi(x)Id)(Id(x)tau)(Phi(x)Id), compared exactly, column by column over the
// cube basis (the d^3 x d^3 products are never materialized).
inline LeasReport check_leas(const LinearEAS& l) {
    const std::size_t d = l.dim;
    PhiView v(l);
    LeasReport rep;
    auto unflatten = [d](std::size_t x) {
        std::array<std::size_t, 3> out;
        out[2] = x % d; x /= d;
        out[1] = x % d; x /= d;
        out[0] = x;
        return out;
    };
    for (std::size_t col = 0; col < d * d * d; ++col) {
        detail::SparseVec e{{col, Rational(1)}};
        detail::SparseVec lhs = detail::apply_id_phi(v, detail::apply_phi_id(v, detail::apply_id_phi(v, e)));
        detail::SparseVec rhs = detail::apply_phi_id(v, detail::apply_id_tau(d, detail::apply_phi_id(v, e)));
        if (lhs == rhs) continue;
        // locate the lowest differing row of this column
        for (std::size_t row = 0; row < d * d * d; ++row) {
            auto lit = lhs.find(row);
            auto rit = rhs.find(row);
            Rational lv = lit == lhs.end() ? Rational(0) : lit->second;
            Rational rv = rit == rhs.end() ? Rational(0) : rit->second;
            if (lv != rv) {
                rep.row_index = unflatten(row);
                rep.col_index = unflatten(col);
                return rep;
            }
        }
    }
    rep.ok = true;
    return rep;
}

// Permutation-like 0/1 matrix of the map alpha(x)beta -> (alpha->beta)(x)(alpha|>beta).
inline LinearEAS linearize(const FiniteEAS& s) {
    auto rep = check_eas(s);
    if (!rep.is_eas) throw std::invalid_argument("linearize: input is not an EAS");
    const std::size_t n = s.elements.size();
    RationalMatrix m(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(s.arrow[i][j] * n + s.triangle[i][j], i * n + j) = 1;
    std::string nm = "lin";
    return LinearEAS(n, std::move(m), nm);
}

// Koszul-dual structure map: plain transpose in the shared basis convention.
inline LinearEAS dualize(const LinearEAS& l) {
    return LinearEAS(l.dim, l.phi.transpose(), l.name.empty() ? "" : l.name + "*");
}

// Phi^{-1} for nondegenerate inputs; the inverse is itself verified against
// the braid identity rather than assumed.
inline std::variant<LinearEAS, NotInvertible> invert_leas(const LinearEAS& l) {
    auto inv = invert(l.phi);
    if (std::holds_alternative<NotInvertible>(inv)) return std::get<NotInvertible>(inv);
    LinearEAS out(l.dim, std::get<RationalMatrix>(std::move(inv)),
                  l.name.empty() ? "" : l.name + "^-1");
    if (!check_leas(out).ok)
        throw std::logic_error("invert_leas: inverse violates the braid identity");
    return out;
}

inline bool nondegenerate(const LinearEAS& l) {
    return rank(l.phi) == l.dim * l.dim;
}

}  // namespace easalg
