#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "easalg/leas.hpp"
#include "easalg/operad.hpp"

namespace easalg {

// A candidate associative product in Sym As_Phi(2): m = *_a or m = *_a^op for
// a vector a in A with the stated coefficients; for discrete EAS the
// coefficients are the family lambda_alpha.
struct ProductCandidate {
    enum class Side { kDirect, kOpposite };
    Side side = Side::kDirect;
    std::vector<Rational> coeffs;
};

// m is associative iff Phi(a(x)a) = a(x)a; the condition does not depend on
// the side.
inline bool check_associative(const LinearEAS& l, const ProductCandidate& c) {
    const std::size_t d = l.dim;
    if (c.coeffs.size() != d) throw std::invalid_argument("candidate dimension mismatch");
    std::vector<Rational> v(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) v[i * d + j] = c.coeffs[i] * c.coeffs[j];
    return l.phi.apply(v) == v;
}

// m o_2 m = 0 iff Phi(a(x)a) = 0; the statement covers only the direct side.
inline bool check_square_zero(const LinearEAS& l, const ProductCandidate& c) {
    if (c.side != ProductCandidate::Side::kDirect)
        throw std::invalid_argument("square-zero condition applies to the direct side only");
    const std::size_t d = l.dim;
    if (c.coeffs.size() != d) throw std::invalid_argument("candidate dimension mismatch");
    std::vector<Rational> v(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) v[i * d + j] = c.coeffs[i] * c.coeffs[j];
    auto img = l.phi.apply(v);
    return std::all_of(img.begin(), img.end(), [](const Rational& x) { return is_zero(x); });
}

// One solution pattern of the lambda system: lambda = scalar * (1_S - 1_T)
// with T possibly empty. Solutions come in +/- pairs; the canonical pattern
// has its first nonzero coefficient positive.
struct IndicatorPattern {
    std::vector<int> plus;   // subset S
    std::vector<int> minus;  // subset T, disjoint from S
    bool associative = false;
    bool square_zero = false;

    auto operator<=>(const IndicatorPattern&) const = default;
};

struct IndicatorScanReport {
    std::vector<IndicatorPattern> patterns;  // every passing pattern
    // The search space is scalar multiples of (signed) subset indicators: a
    // sound but not exhaustive search over the quadratic lambda system.
    std::string scope = "signed-indicator patterns, one scalar";
};

namespace detail {

// lambda_alpha lambda_beta = sum over phi-preimages of (alpha,beta) of
// lambda_gamma lambda_delta: the condition for sum lambda_alpha *_alpha to be
// associative.
inline bool lambda_system_associative(const FiniteEAS& s, const std::vector<int>& lambda) {
    const int n = s.size();
    auto phi = phi_map(s);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            long rhs = 0;
            for (int g = 0; g < n; ++g)
                for (int dd = 0; dd < n; ++dd)
                    if (phi[g * n + dd] == a * n + b) rhs += lambda[g] * lambda[dd];
            if (static_cast<long>(lambda[a]) * lambda[b] != rhs) return false;
        }
    return true;
}

// every phi-preimage sum vanishes: the condition for m o_2 m = 0.
inline bool lambda_system_square_zero(const FiniteEAS& s, const std::vector<int>& lambda) {
    const int n = s.size();
    auto phi = phi_map(s);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            long rhs = 0;
            for (int g = 0; g < n; ++g)
                for (int dd = 0; dd < n; ++dd)
                    if (phi[g * n + dd] == a * n + b) rhs += lambda[g] * lambda[dd];
            if (rhs != 0) return false;
        }
    return true;
}

}  // namespace detail

// Searches lambda = 1_S and lambda = 1_S - 1_T (S,T disjoint nonempty) against
// the quadratic lambda systems for associativity and for square zero. Both
// systems are homogeneous of degree 2, so the scalar drops out.
inline IndicatorScanReport find_indicator_solutions(const FiniteEAS& s) {
    const int n = s.size();
    if (n > 6) throw SizeLimitExceeded{n};
    IndicatorScanReport rep;
    const int full = 1 << n;
    auto bits_to_set = [&](int mask) {
        std::vector<int> out;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) out.push_back(i);
        return out;
    };
    for (int sp = 1; sp < full; ++sp)
        for (int sm = 0; sm < full; ++sm) {
            if (sp & sm) continue;
            // canonical representative of the +/- pair: lowest set bit is positive
            if (sm && ((sp | sm) & -(sp | sm)) & sm) continue;
            std::vector<int> lambda(n, 0);
            for (int i = 0; i < n; ++i) {
                if (sp & (1 << i)) lambda[i] = 1;
                if (sm & (1 << i)) lambda[i] = -1;
            }
            IndicatorPattern pat;
            pat.plus = bits_to_set(sp);
            pat.minus = bits_to_set(sm);
            pat.associative = detail::lambda_system_associative(s, lambda);
            pat.square_zero = detail::lambda_system_square_zero(s, lambda);
            if (pat.associative || pat.square_zero) rep.patterns.push_back(std::move(pat));
        }
    std::sort(rep.patterns.begin(), rep.patterns.end());
    return rep;
}

struct NotAGroup {
    std::string reason;
};

struct SubgroupCorollaryReport {
    bool ok = false;
    std::vector<std::vector<int>> subgroups;               // all subgroups, by closure
    std::vector<std::vector<int>> passing_family;          // associative subsets in EAS(O,*)
    std::vector<std::vector<int>> passing_prime;           // associative subsets in EAS'(O,*)
};

namespace detail {

inline int group_identity(const OpTable& t) {
    const int n = static_cast<int>(t.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (t[e][x] != x || t[x][e] != x) ok = false;
        if (ok) return e;
    }
    return -1;
}

}  // namespace detail

// The nonzero associative products for a group EAS are exactly the scalar
// multiples of subgroup indicators; verified exhaustively over all subsets,
// for both the family and the prime structure.
inline SubgroupCorollaryReport verify_subgroup_corollary(const std::vector<std::string>& labels,
                                                         const OpTable& star) {
    const int n = static_cast<int>(star.size());
    if (n > 8) throw SizeLimitExceeded{n};
    if (associativity_witness(star)) throw NotAGroup{"operation is not associative"};
    int e = detail::group_identity(star);
    if (e < 0) throw NotAGroup{"no two-sided identity"};
    for (int x = 0; x < n; ++x) {
        bool has_inv = false;
        for (int y = 0; y < n; ++y)
            if (star[x][y] == e && star[y][x] == e) has_inv = true;
        if (!has_inv) throw NotAGroup{"element without inverse"};
    }

    SubgroupCorollaryReport rep;
    auto is_subgroup = [&](int mask) {
        if (!(mask & (1 << e))) return false;
        for (int x = 0; x < n; ++x) {
            if (!(mask & (1 << x))) continue;
            for (int y = 0; y < n; ++y)
                if (mask & (1 << y)) {
                    if (!(mask & (1 << star[x][y]))) return false;
                }
        }
        return true;  // finite + closed + contains identity => subgroup
    };
    FiniteEAS fam = make_from_semigroup(labels, star);
    FiniteEAS pri = make_prime(labels, star);
    auto bits_to_set = [&](int mask) {
        std::vector<int> out;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) out.push_back(i);
        return out;
    };
    rep.ok = true;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> lambda(n, 0);
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) lambda[i] = 1;
        bool sub = is_subgroup(mask);
        bool pass_fam = detail::lambda_system_associative(fam, lambda);
        bool pass_pri = detail::lambda_system_associative(pri, lambda);
        if (sub) rep.subgroups.push_back(bits_to_set(mask));
        if (pass_fam) rep.passing_family.push_back(bits_to_set(mask));
        if (pass_pri) rep.passing_prime.push_back(bits_to_set(mask));
        if (pass_fam != sub || pass_pri != sub) rep.ok = false;
    }
    return rep;
}

struct ThetaReport {
    bool ok = false;
    bool arrow_associative = false;
    bool relations_preserved = false;  // the images of the As^2 relations hold in As_Phi(3)
    std::optional<std::array<int, 3>> witness;
};

// The operad morphism *_{alpha,beta} -> *_{alpha |> beta} from the
// two-parameter operad: its defining relations, pushed through compose_asphi
// on the linearization, are exactly the second and third EAS identities; the
// domain operad additionally needs (Omega,->) associative.
inline ThetaReport theta_check(const FiniteEAS& s) {
    ThetaReport rep;
    rep.arrow_associative = !associativity_witness(s.arrow).has_value();
    const int n = s.size();
    RationalMatrix m(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(s.arrow[i][j] * n + s.triangle[i][j], i * n + j) = 1;
    LinearEAS lin(n, std::move(m));  // formal linearization; validity not assumed
    rep.relations_preserved = true;
    for (int a = 0; a < n && rep.relations_preserved; ++a)
        for (int b = 0; b < n && rep.relations_preserved; ++b)
            for (int c = 0; c < n; ++c) {
                // Theta(*_{a->b,c} o_1 *_{a,b}) vs Theta(*_{a,b->c} o_2 *_{b,c})
                auto lhs = compose_asphi(lin, OperadElement::basis(2, {s.triangle[s.arrow[a][b]][c]}), 1,
                                         OperadElement::basis(2, {s.triangle[a][b]}));
                auto rhs = compose_asphi(lin, OperadElement::basis(2, {s.triangle[a][s.arrow[b][c]]}), 2,
                                         OperadElement::basis(2, {s.triangle[b][c]}));
                if (lhs.vec != rhs.vec) {
                    rep.relations_preserved = false;
                    rep.witness = {a, b, c};
                    break;
                }
            }
    rep.ok = rep.arrow_associative && rep.relations_preserved;
    return rep;
}

struct ThetaPrimeReport {
    bool ok = false;
    bool relations_preserved = false;
    BigInt dim_two_param_3;  // dim As^2_Omega(3) = (2w-1)w^3
    BigInt dim_asphi_3;      // dim As_{Phi'}(3) = w^4
    std::optional<std::array<int, 3>> witness;
};

// Theta': *_{alpha,beta} -> *_{(alpha,beta)} into the product EAS
// EAS(Omega,->) x EAS'(Omega,->); requires bijective right translations.
inline ThetaPrimeReport theta_prime_check(const std::vector<std::string>& labels, const OpTable& star) {
    const int n = static_cast<int>(star.size());
    FiniteEAS fam = make_from_semigroup(labels, star);
    FiniteEAS pri = make_prime(labels, star);  // throws NoRightInverses when ill-posed
    FiniteEAS prod = direct_product(fam, pri);
    LinearEAS lin = linearize(prod);

    ThetaPrimeReport rep;
    BigInt w = n;
    rep.dim_two_param_3 = (2 * w - 1) * ipow(w, 3);
    rep.dim_asphi_3 = ipow(w, 4);
    rep.relations_preserved = true;
    auto pair_index = [n](int a, int b) { return a * n + b; };
    for (int a = 0; a < n && rep.relations_preserved; ++a)
        for (int b = 0; b < n && rep.relations_preserved; ++b)
            for (int c = 0; c < n; ++c) {
                auto lhs = compose_asphi(lin, OperadElement::basis(2, {pair_index(star[a][b], c)}), 1,
                                         OperadElement::basis(2, {pair_index(a, b)}));
                auto rhs = compose_asphi(lin, OperadElement::basis(2, {pair_index(a, star[b][c])}), 2,
                                         OperadElement::basis(2, {pair_index(b, c)}));
                if (lhs.vec != rhs.vec) {
                    rep.relations_preserved = false;
                    rep.witness = {a, b, c};
                    break;
                }
            }
    rep.ok = rep.relations_preserved;
    return rep;
}

}  // namespace easalg
