#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace easalg {

using OpTable = std::vector<std::vector<int>>;  // table[i][j] = index of elements[i] op elements[j]

// A finite extended associative semigroup candidate: a set with two binary
// operations -> ("arrow") and |> ("triangle"). check_eas decides whether the
// three defining identities hold.
struct FiniteEAS {
    std::vector<std::string> elements;
    OpTable arrow;     // arrow[i][j] = elements[i] -> elements[j]
    OpTable triangle;  // triangle[i][j] = elements[i] |> elements[j]

    int size() const { return static_cast<int>(elements.size()); }

    bool operator==(const FiniteEAS& o) const {
        return elements == o.elements && arrow == o.arrow && triangle == o.triangle;
    }
};

struct AxiomFailure {
    int axiom;  // 5, 6 or 7, numbered as the defining identities
    std::array<int, 3> triple;
};

struct EasReport {
    bool is_eas = false;
    std::vector<AxiomFailure> failures;
    bool nondegenerate = false;
};

inline void validate_tables(const FiniteEAS& s) {
    const int n = s.size();
    if (n < 1) throw std::invalid_argument("EAS needs at least one element");
    auto check = [&](const OpTable& t, const char* name) {
        if (static_cast<int>(t.size()) != n) throw std::invalid_argument(std::string(name) + ": bad row count");
        for (const auto& row : t) {
            if (static_cast<int>(row.size()) != n) throw std::invalid_argument(std::string(name) + ": bad col count");
            for (int v : row)
                if (v < 0 || v >= n) throw std::invalid_argument(std::string(name) + ": entry out of range");
        }
    };
    check(s.arrow, "arrow");
    check(s.triangle, "triangle");
}

// The map phi(a,b) = (a->b, a|>b) on pairs, with pairs flattened as i*n+j.
inline std::vector<int> phi_map(const FiniteEAS& s) {
    const int n = s.size();
    std::vector<int> phi(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) phi[i * n + j] = s.arrow[i][j] * n + s.triangle[i][j];
    return phi;
}

inline bool phi_bijective(const FiniteEAS& s) {
    auto phi = phi_map(s);
    std::vector<char> hit(phi.size(), 0);
    for (int v : phi) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

inline EasReport check_eas(const FiniteEAS& s) {
    validate_tables(s);
    const int n = s.size();
    const auto& ar = s.arrow;
    const auto& tr = s.triangle;
    EasReport rep;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (ar[a][ar[b][c]] != ar[ar[a][b]][c])
                    rep.failures.push_back({5, {a, b, c}});
                if (ar[tr[a][ar[b][c]]][tr[b][c]] != tr[ar[a][b]][c])
                    rep.failures.push_back({6, {a, b, c}});
                if (tr[tr[a][ar[b][c]]][tr[b][c]] != tr[a][b])
                    rep.failures.push_back({7, {a, b, c}});
            }
    rep.is_eas = rep.failures.empty();
    rep.nondegenerate = rep.is_eas && phi_bijective(s);
    return rep;
}

struct NotAssociative {
    std::array<int, 3> witness;
};
struct NoRightInverses {
    std::array<int, 2> witness;  // (target, right factor) with no/ambiguous solution
};

inline std::optional<std::array<int, 3>> associativity_witness(const OpTable& t) {
    const int n = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[a][t[b][c]] != t[t[a][b]][c]) return std::array<int, 3>{a, b, c};
    return std::nullopt;
}

// alpha -> beta = beta, alpha |> beta = alpha.
inline FiniteEAS make_trivial(std::vector<std::string> labels) {
    const int n = static_cast<int>(labels.size());
    FiniteEAS s{std::move(labels), OpTable(n, std::vector<int>(n)), OpTable(n, std::vector<int>(n))};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            s.arrow[i][j] = j;
            s.triangle[i][j] = i;
        }
    return s;
}

// Semigroup (Omega,*): arrow = *, alpha |> beta = alpha.
inline FiniteEAS make_from_semigroup(std::vector<std::string> labels, OpTable star) {
    if (auto w = associativity_witness(star)) throw NotAssociative{*w};
    const int n = static_cast<int>(labels.size());
    FiniteEAS s{std::move(labels), std::move(star), OpTable(n, std::vector<int>(n))};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.triangle[i][j] = i;
    return s;
}

// Semigroup with bijective right translations: arrow(a,b) = b and
// a |> b = the unique c with c*b = a.
inline FiniteEAS make_prime(std::vector<std::string> labels, OpTable star) {
    if (auto w = associativity_witness(star)) throw NotAssociative{*w};
    const int n = static_cast<int>(labels.size());
    FiniteEAS s{std::move(labels), OpTable(n, std::vector<int>(n)), OpTable(n, std::vector<int>(n))};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            s.arrow[a][b] = b;
            int solution = -1;
            for (int c = 0; c < n; ++c)
                if (star[c][b] == a) {
                    if (solution >= 0) throw NoRightInverses{{a, b}};
                    solution = c;
                }
            if (solution < 0) throw NoRightInverses{{a, b}};
            s.triangle[a][b] = solution;
        }
    return s;
}

// Semigroup arrow plus the constant triangle pi_target; valid when the
// target is arrow-idempotent (checked through check_eas by callers/tests).
inline FiniteEAS make_semigroup_with_projection(std::vector<std::string> labels, OpTable star,
                                                int target) {
    if (auto w = associativity_witness(star)) throw NotAssociative{*w};
    const int n = static_cast<int>(labels.size());
    if (target < 0 || target >= n) throw std::invalid_argument("projection target out of range");
    FiniteEAS s{std::move(labels), std::move(star), OpTable(n, std::vector<int>(n, target))};
    return s;
}

// Componentwise product with (a,b)->(c,d) = (a->c, d) pattern realized by the
// two factor structures. Pair (i,j) is flattened as i*|T|+j.
inline FiniteEAS direct_product(const FiniteEAS& s, const FiniteEAS& t) {
    if (!check_eas(s).is_eas || !check_eas(t).is_eas)
        throw std::invalid_argument("direct_product: operands must be EAS");
    const int ns = s.size(), nt = t.size(), n = ns * nt;
    FiniteEAS p;
    p.elements.reserve(n);
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j) p.elements.push_back("(" + s.elements[i] + "," + t.elements[j] + ")");
    p.arrow.assign(n, std::vector<int>(n));
    p.triangle.assign(n, std::vector<int>(n));
    for (int i1 = 0; i1 < ns; ++i1)
        for (int j1 = 0; j1 < nt; ++j1)
            for (int i2 = 0; i2 < ns; ++i2)
                for (int j2 = 0; j2 < nt; ++j2) {
                    int a = i1 * nt + j1, b = i2 * nt + j2;
                    p.arrow[a][b] = s.arrow[i1][i2] * nt + t.arrow[j1][j2];
                    p.triangle[a][b] = s.triangle[i1][i2] * nt + t.triangle[j1][j2];
                }
    return p;
}

namespace detail {
inline bool next_permutation_vec(std::vector<int>& p) {
    return std::next_permutation(p.begin(), p.end());
}
inline std::pair<OpTable, OpTable> relabel(const FiniteEAS& s, const std::vector<int>& perm) {
    const int n = s.size();
    OpTable ar(n, std::vector<int>(n)), tr(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ar[perm[i]][perm[j]] = perm[s.arrow[i][j]];
            tr[perm[i]][perm[j]] = perm[s.triangle[i][j]];
        }
    return {ar, tr};
}
}  // namespace detail

// Brute force over all bijections of the element sets.
inline std::optional<std::vector<int>> isomorphism_witness(const FiniteEAS& s, const FiniteEAS& t) {
    if (s.size() != t.size()) return std::nullopt;
    const int n = s.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        auto [ar, tr] = detail::relabel(s, perm);
        if (ar == t.arrow && tr == t.triangle) return perm;
    } while (detail::next_permutation_vec(perm));
    return std::nullopt;
}

inline bool are_isomorphic(const FiniteEAS& s, const FiniteEAS& t) {
    return isomorphism_witness(s, t).has_value();
}

// Lexicographically least (arrow, triangle) pair over all relabelings.
inline std::pair<OpTable, OpTable> canonical_tables(const FiniteEAS& s) {
    const int n = s.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<std::pair<OpTable, OpTable>> best;
    do {
        auto cand = detail::relabel(s, perm);
        if (!best || cand < *best) best = cand;
    } while (detail::next_permutation_vec(perm));
    return *best;
}

struct SizeLimitExceeded {
    int size;
};

struct ClassificationResult {
    long labeled_solutions = 0;           // raw count of (arrow, triangle) pairs passing check_eas
    std::vector<FiniteEAS> representatives;  // one canonical representative per iso class
};

// Exhaustive classification for n <= 3. Arrow tables are filtered by
// associativity first, which keeps n=3 at ~2e6 candidate pairs instead of 4e8.
inline ClassificationResult classify(int n, bool allow_size3 = false) {
    if (n < 1 || n > 3 || (n == 3 && !allow_size3)) throw SizeLimitExceeded{n};
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));

    const int cells = n * n;
    long total = 1;
    for (int i = 0; i < cells; ++i) total *= n;

    std::vector<OpTable> assoc_arrows;
    for (long code = 0; code < total; ++code) {
        OpTable t(n, std::vector<int>(n));
        long c = code;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                t[i][j] = static_cast<int>(c % n);
                c /= n;
            }
        if (!associativity_witness(t)) assoc_arrows.push_back(std::move(t));
    }

    ClassificationResult res;
    std::map<std::pair<OpTable, OpTable>, FiniteEAS> classes;  // canonical tables -> representative
    for (const auto& ar : assoc_arrows) {
        for (long code = 0; code < total; ++code) {
            OpTable tr(n, std::vector<int>(n));
            long c = code;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    tr[i][j] = static_cast<int>(c % n);
                    c /= n;
                }
            FiniteEAS s{labels, ar, tr};
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b)
                    for (int cc = 0; cc < n && ok; ++cc) {
                        if (ar[tr[a][ar[b][cc]]][tr[b][cc]] != tr[ar[a][b]][cc]) ok = false;
                        else if (tr[tr[a][ar[b][cc]]][tr[b][cc]] != tr[a][b]) ok = false;
                    }
            if (!ok) continue;
            ++res.labeled_solutions;
            auto canon = canonical_tables(s);
            if (!classes.count(canon)) classes.emplace(canon, FiniteEAS{labels, canon.first, canon.second});
        }
    }
    for (auto& [key, rep] : classes) res.representatives.push_back(rep);
    // deterministic order: degenerate classes first, then canonical table bytes
    std::stable_sort(res.representatives.begin(), res.representatives.end(),
                     [](const FiniteEAS& a, const FiniteEAS& b) {
                         bool na = phi_bijective(a), nb = phi_bijective(b);
                         if (na != nb) return !na && nb;
                         return std::make_pair(a.arrow, a.triangle) < std::make_pair(b.arrow, b.triangle);
                     });
    return res;
}

}  // namespace easalg
