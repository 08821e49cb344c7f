#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "easalg/formal_sum.hpp"
#include "easalg/leas.hpp"

namespace easalg {

// Basis element a_1...a_{n-1} x_1...x_n of the free Phi-associative algebra
// T_A(V): n-1 A-decorations and n V-letters. Decorations are stored in
// application order: the word equals (..(x_1 *_{a_1} x_2) *_{a_2} ..) *_{a_{n-1}} x_n,
// and the append map w . a z adds decoration a and letter z at the back.
struct TypedWord {
    std::vector<int> dec;
    std::vector<int> let;

    std::size_t length() const { return let.size(); }

    auto operator<=>(const TypedWord&) const = default;

    TypedWord appended(int a, int z) const {
        TypedWord w = *this;
        w.dec.push_back(a);
        w.let.push_back(z);
        return w;
    }
};

inline std::string to_string(const TypedWord& w) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < w.dec.size(); ++i) os << (i ? "," : "") << w.dec[i];
    os << ";";
    for (std::size_t i = 0; i < w.let.size(); ++i) os << (i ? "," : "") << w.let[i];
    os << "]";
    return os.str();
}

using FreeElement = FormalSum<TypedWord>;

// The defining recursion: w *_a z = w.az on letters, and
// u *_a (v.bz) = sum (u *_{a''|>b''} v).(a'->b')z over Phi(a(x)b).
// star_basis computes u *_{e_a} v for basis words; star extends bilinearly
// and linearly in the A-argument.
inline FreeElement star_basis(const PhiView& phi, int a, const TypedWord& u, const TypedWord& v) {
    const std::size_t d = phi.d;
    if (a < 0 || static_cast<std::size_t>(a) >= d)
        throw std::invalid_argument("star: decoration index out of range");
    FreeElement out;
    if (v.length() == 1) {
        out.add(u.appended(a, v.let[0]), 1);
        return out;
    }
    const int b = v.dec.back();
    const int z = v.let.back();
    TypedWord v2 = v;
    v2.dec.pop_back();
    v2.let.pop_back();
    for (const auto& [r, c] : phi.cols[static_cast<std::size_t>(a) * d + b]) {
        const int leg_arrow = static_cast<int>(r / d);
        const int leg_triangle = static_cast<int>(r % d);
        FreeElement inner = star_basis(phi, leg_triangle, u, v2);
        for (const auto& [w, cw] : inner.terms()) out.add(w.appended(leg_arrow, z), c * cw);
    }
    return out;
}

inline FreeElement star(const PhiView& phi, int a, const FreeElement& u, const FreeElement& v) {
    FreeElement out;
    for (const auto& [uw, cu] : u.terms())
        for (const auto& [vw, cv] : v.terms()) {
            FreeElement t = star_basis(phi, a, uw, vw);
            for (const auto& [w, c] : t.terms()) out.add(w, c * cu * cv);
        }
    return out;
}

inline FreeElement star(const LinearEAS& l, int a, const FreeElement& u, const FreeElement& v) {
    return star(PhiView(l), a, u, v);
}

// a given as coordinates in the A-basis
inline FreeElement star(const LinearEAS& l, const std::vector<Rational>& a, const FreeElement& u,
                        const FreeElement& v) {
    PhiView phi(l);
    FreeElement out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a[i])) out += star(phi, static_cast<int>(i), u, v).scaled(a[i]);
    return out;
}

inline FreeElement generator(int i) { return FreeElement(TypedWord{{}, {i}}); }

struct FreeCheckReport {
    bool ok = true;
    std::string witness;  // human-readable description of the first counterexample
};

namespace detail {

// All basis typed words over `gens` generators with the given length.
inline std::vector<TypedWord> basis_words(std::size_t d, int gens, int length) {
    std::vector<TypedWord> out;
    std::vector<int> dec(length - 1, 0), let(length, 0);
    while (true) {
        out.push_back(TypedWord{dec, let});
        int i = length - 1;
        while (i >= 0 && let[i] == gens - 1) let[i--] = 0;
        if (i >= 0) {
            ++let[i];
            continue;
        }
        int k = length - 2;
        while (k >= 0 && dec[k] == static_cast<int>(d) - 1) dec[k--] = 0;
        if (k < 0) break;
        ++dec[k];
    }
    return out;
}

}  // namespace detail

// Exhaustive check of x *_a (y *_b z) = sum (x *_{a''|>b''} y) *_{a'->b'} z on
// the free algebra over three generators, for all basis words of total
// length <= max_len. The identity is vacuous below total length 4, so
// max_len >= 4 is required to detect a non-lEAS map.
inline FreeCheckReport check_phi_associativity(const LinearEAS& l, int max_len) {
    if (max_len < 3) throw std::invalid_argument("max_len must be >= 3");
    const std::size_t d = l.dim;
    const PhiView phi(l);
    const int gens = 3;
    FreeCheckReport rep;
    for (int lx = 1; lx <= max_len - 2; ++lx)
        for (int ly = 1; ly <= max_len - lx - 1; ++ly)
            for (int lz = 1; lz <= max_len - lx - ly; ++lz) {
                auto xs = detail::basis_words(d, gens, lx);
                auto ys = detail::basis_words(d, gens, ly);
                auto zs = detail::basis_words(d, gens, lz);
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = 0; b < d; ++b)
                        for (const auto& xw : xs)
                            for (const auto& yw : ys)
                                for (const auto& zw : zs) {
                                    FreeElement x(xw), y(yw), z(zw);
                                    FreeElement lhs =
                                        star(phi, static_cast<int>(a), x, star(phi, static_cast<int>(b), y, z));
                                    FreeElement rhs;
                                    for (const auto& [r, c] : phi.cols[a * d + b])
                                        rhs += star(phi, static_cast<int>(r / d),
                                                    star(phi, static_cast<int>(r % d), x, y), z)
                                                   .scaled(c);
                                    if (lhs != rhs) {
                                        rep.ok = false;
                                        std::ostringstream os;
                                        os << "a=" << a << " b=" << b << " x=" << to_string(xw)
                                           << " y=" << to_string(yw) << " z=" << to_string(zw);
                                        rep.witness = os.str();
                                        return rep;
                                    }
                                }
            }
    return rep;
}

enum class OppositeMode {
    kOppositeOfStar,  // check x *op on the free Phi-associative algebra of l
    kStarOfInverse,   // check the opposite identity for Phi on the free Phi^{-1}-algebra
};

// Opposite identity: sum x *_{a'->b'} (y *_{a''|>b''} z) = (x *_b y) *_a z.
// With mode kOppositeOfStar the products are x *op_a y = y *_a x over star(l);
// with kStarOfInverse they are the star products of invert_leas(l), realizing
// the equivalence of opposite Phi-associative and Phi^{-1}-associative algebras.
inline FreeCheckReport check_opposite_phi_associativity(const LinearEAS& l, int max_len,
                                                        OppositeMode mode = OppositeMode::kOppositeOfStar) {
    if (max_len < 3) throw std::invalid_argument("max_len must be >= 3");
    const std::size_t d = l.dim;
    const LinearEAS* alg = &l;
    LinearEAS inv_holder;
    if (mode == OppositeMode::kStarOfInverse) {
        auto inv = invert_leas(l);
        if (std::holds_alternative<NotInvertible>(inv))
            throw std::invalid_argument("kStarOfInverse requires a nondegenerate lEAS");
        inv_holder = std::get<LinearEAS>(std::move(inv));
        alg = &inv_holder;
    }
    const PhiView phi_l(l);
    const PhiView phi_alg(*alg);
    auto prod = [&](int a, const FreeElement& u, const FreeElement& v) {
        if (mode == OppositeMode::kOppositeOfStar) return star(phi_alg, a, v, u);
        return star(phi_alg, a, u, v);
    };
    const int gens = 3;
    FreeCheckReport rep;
    for (int lx = 1; lx <= max_len - 2; ++lx)
        for (int ly = 1; ly <= max_len - lx - 1; ++ly)
            for (int lz = 1; lz <= max_len - lx - ly; ++lz) {
                auto xs = detail::basis_words(d, gens, lx);
                auto ys = detail::basis_words(d, gens, ly);
                auto zs = detail::basis_words(d, gens, lz);
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = 0; b < d; ++b)
                        for (const auto& xw : xs)
                            for (const auto& yw : ys)
                                for (const auto& zw : zs) {
                                    FreeElement x(xw), y(yw), z(zw);
                                    FreeElement lhs;
                                    for (const auto& [r, c] : phi_l.cols[a * d + b])
                                        lhs += prod(static_cast<int>(r / d), x,
                                                    prod(static_cast<int>(r % d), y, z))
                                                   .scaled(c);
                                    FreeElement rhs =
                                        prod(static_cast<int>(a), prod(static_cast<int>(b), x, y), z);
                                    if (lhs != rhs) {
                                        rep.ok = false;
                                        std::ostringstream os;
                                        os << "a=" << a << " b=" << b << " x=" << to_string(xw)
                                           << " y=" << to_string(yw) << " z=" << to_string(zw);
                                        rep.witness = os.str();
                                        return rep;
                                    }
                                }
            }
    return rep;
}

// ---- the associative envelope T_A(V)(x)A with xa * yb = sum (x *_{a''|>b''} y)(a'->b') ----

using EnvelopeWord = std::pair<TypedWord, int>;  // typed word tensor A-basis index
using EnvelopeElement = FormalSum<EnvelopeWord>;

inline EnvelopeElement envelope_product(const PhiView& phi, const EnvelopeElement& u,
                                        const EnvelopeElement& v) {
    const std::size_t d = phi.d;
    EnvelopeElement out;
    for (const auto& [uw, cu] : u.terms())
        for (const auto& [vw, cv] : v.terms()) {
            for (const auto& [r, c] : phi.cols[static_cast<std::size_t>(uw.second) * d + vw.second]) {
                FreeElement inner = star_basis(phi, static_cast<int>(r % d), uw.first, vw.first);
                for (const auto& [w, cw] : inner.terms())
                    out.add({w, static_cast<int>(r / d)}, c * cw * cu * cv);
            }
        }
    return out;
}

inline EnvelopeElement envelope_product(const LinearEAS& l, const EnvelopeElement& u,
                                        const EnvelopeElement& v) {
    return envelope_product(PhiView(l), u, v);
}

// Associativity of the envelope product on all basis triples with typed-word
// length <= max_len over `gens` generators. On generator triples this is
// exactly the braid identity.
inline FreeCheckReport check_envelope_associativity(const LinearEAS& l, int max_len = 2, int gens = 3) {
    const std::size_t d = l.dim;
    const PhiView phi(l);
    std::vector<EnvelopeWord> basis;
    for (int len = 1; len <= max_len; ++len)
        for (const auto& w : detail::basis_words(d, gens, len))
            for (std::size_t a = 0; a < d; ++a) basis.push_back({w, static_cast<int>(a)});
    // pairwise products are shared across the triple loop
    std::vector<std::vector<EnvelopeElement>> pair_products(basis.size(),
                                                            std::vector<EnvelopeElement>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            pair_products[i][j] = envelope_product(phi, EnvelopeElement(basis[i]), EnvelopeElement(basis[j]));
    FreeCheckReport rep;
    for (std::size_t xi = 0; xi < basis.size(); ++xi)
        for (std::size_t yi = 0; yi < basis.size(); ++yi)
            for (std::size_t zi = 0; zi < basis.size(); ++zi) {
                EnvelopeElement lhs = envelope_product(phi, pair_products[xi][yi], EnvelopeElement(basis[zi]));
                EnvelopeElement rhs = envelope_product(phi, EnvelopeElement(basis[xi]), pair_products[yi][zi]);
                if (lhs != rhs) {
                    rep.ok = false;
                    std::ostringstream os;
                    os << "x=" << to_string(basis[xi].first) << "#" << basis[xi].second
                       << " y=" << to_string(basis[yi].first) << "#" << basis[yi].second
                       << " z=" << to_string(basis[zi].first) << "#" << basis[zi].second;
                    rep.witness = os.str();
                    return rep;
                }
            }
    return rep;
}

struct GenerationFreenessReport {
    bool generated = false;  // Phi surjective
    bool free = false;       // Phi injective
    std::size_t rank = 0;
};

inline GenerationFreenessReport generation_freeness_report(const LinearEAS& l) {
    GenerationFreenessReport rep;
    rep.rank = rank(l.phi);
    rep.generated = rep.rank == l.dim * l.dim;
    rep.free = rep.rank == l.dim * l.dim;  // square matrix: injective iff surjective
    return rep;
}

// ---- two-parameter algebras over a semigroup (Omega,->) ----

// A finite-dimensional algebra with one bilinear product per pair (alpha,beta),
// given by structure constants: mult[alpha][beta][i][j] is the coordinate
// vector of e_i *_{alpha,beta} e_j.
struct TwoParamAlgebra {
    OpTable arrow;  // the semigroup table on Omega
    std::size_t dim = 0;
    // mult[a][b][i][j] -> vector of length dim
    std::vector<std::vector<std::vector<std::vector<std::vector<Rational>>>>> mult;

    std::size_t omega() const { return arrow.size(); }
};

// Element of V(x)KOmega written on the basis (e_i, alpha).
using GradedWord = std::pair<int, int>;  // (V index, Omega index)
using GradedElement = FormalSum<GradedWord>;

// x alpha * y beta = (x *_{alpha,beta} y)(alpha->beta)
inline GradedElement two_param_star(const TwoParamAlgebra& alg, const GradedElement& u,
                                    const GradedElement& v) {
    GradedElement out;
    for (const auto& [uw, cu] : u.terms())
        for (const auto& [vw, cv] : v.terms()) {
            const auto& coords = alg.mult[uw.second][vw.second][uw.first][vw.first];
            int grade = alg.arrow[uw.second][vw.second];
            for (std::size_t k = 0; k < coords.size(); ++k)
                if (!is_zero(coords[k])) out.add({static_cast<int>(k), grade}, coords[k] * cu * cv);
        }
    return out;
}

// (x *_{a,b} y) *_{a->b,c} z = x *_{a,b->c} (y *_{b,c} z), checked on all bases.
inline bool two_param_axiom_holds(const TwoParamAlgebra& alg) {
    const std::size_t w = alg.omega(), d = alg.dim;
    auto apply = [&](int a, int b, int i, int j) { return alg.mult[a][b][i][j]; };
    for (std::size_t a = 0; a < w; ++a)
        for (std::size_t b = 0; b < w; ++b)
            for (std::size_t c = 0; c < w; ++c)
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        for (std::size_t k = 0; k < d; ++k) {
                            std::vector<Rational> lhs(d), rhs(d);
                            auto xy = apply(a, b, i, j);
                            for (std::size_t m = 0; m < d; ++m) {
                                if (is_zero(xy[m])) continue;
                                auto t = apply(alg.arrow[a][b], c, static_cast<int>(m), static_cast<int>(k));
                                for (std::size_t q = 0; q < d; ++q) lhs[q] += xy[m] * t[q];
                            }
                            auto yz = apply(b, c, static_cast<int>(j), static_cast<int>(k));
                            for (std::size_t m = 0; m < d; ++m) {
                                if (is_zero(yz[m])) continue;
                                auto t = apply(a, alg.arrow[b][c], static_cast<int>(i), static_cast<int>(m));
                                for (std::size_t q = 0; q < d; ++q) rhs[q] += yz[m] * t[q];
                            }
                            if (lhs != rhs) return false;
                        }
    return true;
}

// Associativity of the graded product on V(x)KOmega, checked on all bases.
inline bool two_param_graded_associative(const TwoParamAlgebra& alg) {
    const std::size_t w = alg.omega(), d = alg.dim;
    for (std::size_t a = 0; a < w; ++a)
        for (std::size_t b = 0; b < w; ++b)
            for (std::size_t c = 0; c < w; ++c)
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        for (std::size_t k = 0; k < d; ++k) {
                            GradedElement x({static_cast<int>(i), static_cast<int>(a)});
                            GradedElement y({static_cast<int>(j), static_cast<int>(b)});
                            GradedElement z({static_cast<int>(k), static_cast<int>(c)});
                            if (two_param_star(alg, two_param_star(alg, x, y), z) !=
                                two_param_star(alg, x, two_param_star(alg, y, z)))
                                return false;
                        }
    return true;
}

// ---- free algebra over the Koszul dual of the two-parameter operad ----

// Either a bare generator u, or an alternating word alpha_1 u_1 ... alpha_k u_k.
struct TwoParamWord {
    bool bare = false;
    int bare_letter = 0;
    std::vector<std::pair<int, int>> pairs;  // (omega index, letter)

    static TwoParamWord letter(int u) { return TwoParamWord{true, u, {}}; }
    static TwoParamWord word(std::vector<std::pair<int, int>> p) { return TwoParamWord{false, 0, std::move(p)}; }

    auto operator<=>(const TwoParamWord&) const = default;
};

// Product of the free dual algebra: concatenation gated by Kronecker deltas on
// the arrow-products of the decoration sequences, with bare generators picking
// up the outer decoration.
inline std::optional<TwoParamWord> dual_free_product(const OpTable& arrow, int alpha, int beta,
                                                     const TwoParamWord& u, const TwoParamWord& v) {
    auto reduce = [&](const std::vector<std::pair<int, int>>& pairs) {
        int r = pairs[0].first;
        for (std::size_t i = 1; i < pairs.size(); ++i) r = arrow[r][pairs[i].first];
        return r;
    };
    std::vector<std::pair<int, int>> left, right;
    if (u.bare) {
        left = {{alpha, u.bare_letter}};
    } else {
        if (reduce(u.pairs) != alpha) return std::nullopt;
        left = u.pairs;
    }
    if (v.bare) {
        right = {{beta, v.bare_letter}};
    } else {
        if (reduce(v.pairs) != beta) return std::nullopt;
        right = v.pairs;
    }
    left.insert(left.end(), right.begin(), right.end());
    return TwoParamWord::word(std::move(left));
}

}  // namespace easalg
