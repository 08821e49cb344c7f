#pragma once

#include <optional>
#include <vector>

#include "easalg/formal_sum.hpp"
#include "easalg/leas.hpp"

namespace easalg {

// Planar binary trees with decorated internal vertices, encoded in preorder:
// an internal vertex is [dec, left..., right...], a leaf is [-1]. The
// encoding is a total order, so trees can key formal sums directly.
using Tree = std::vector<int>;

inline Tree tree_leaf() { return {-1}; }

inline Tree tree_node(int dec, const Tree& left, const Tree& right) {
    Tree t;
    t.reserve(1 + left.size() + right.size());
    t.push_back(dec);
    t.insert(t.end(), left.begin(), left.end());
    t.insert(t.end(), right.begin(), right.end());
    return t;
}

namespace detail {

// span of the subtree starting at pos: [pos, end)
inline std::size_t subtree_end(const Tree& t, std::size_t pos) {
    if (t[pos] == -1) return pos + 1;
    std::size_t mid = subtree_end(t, pos + 1);
    return subtree_end(t, mid);
}

struct TreeParts {
    int dec;
    std::size_t left_begin, left_end, right_begin, right_end;
};

inline TreeParts split(const Tree& t, std::size_t pos) {
    TreeParts p;
    p.dec = t[pos];
    p.left_begin = pos + 1;
    p.left_end = subtree_end(t, p.left_begin);
    p.right_begin = p.left_end;
    p.right_end = subtree_end(t, p.right_begin);
    return p;
}

inline Tree slice(const Tree& t, std::size_t b, std::size_t e) { return Tree(t.begin() + b, t.begin() + e); }

}  // namespace detail

inline int tree_leaves(const Tree& t) {
    int n = 0;
    for (int v : t)
        if (v == -1) ++n;
    return n;
}

using TreeSum = FormalSum<Tree>;

// A rewriting rule set: locates the redex at a given vertex and produces the
// replacement sum for the local pattern.
class RewriteRules {
public:
    virtual ~RewriteRules() = default;
    // If the subtree rooted at pos is a redex at its root, return the rewritten
    // sum for that entire subtree.
    virtual std::optional<TreeSum> rewrite_root(const Tree& t, std::size_t pos) const = 0;
};

// x *_a (y *_b z) -> sum (x *_{a''|>b''} y) *_{a'->b'} z: every vertex whose
// right child is internal is a redex; normal forms are left combs.
class AsPhiRules : public RewriteRules {
public:
    explicit AsPhiRules(LinearEAS l) : l_(std::move(l)), phi_(l_) {}

    std::optional<TreeSum> rewrite_root(const Tree& t, std::size_t pos) const override {
        auto p = detail::split(t, pos);
        const std::size_t d = phi_.d;
        if (p.dec < 0 || static_cast<std::size_t>(p.dec) >= d)
            throw std::invalid_argument("tree decoration out of range for the structure map");
        if (t[p.right_begin] == -1) return std::nullopt;
        auto q = detail::split(t, p.right_begin);
        if (q.dec < 0 || static_cast<std::size_t>(q.dec) >= d)
            throw std::invalid_argument("tree decoration out of range for the structure map");
        Tree L = detail::slice(t, p.left_begin, p.left_end);
        Tree M = detail::slice(t, q.left_begin, q.left_end);
        Tree R = detail::slice(t, q.right_begin, q.right_end);
        TreeSum out;
        for (const auto& [r, c] : phi_.cols[static_cast<std::size_t>(p.dec) * d + q.dec])
            out.add(tree_node(static_cast<int>(r / d), tree_node(static_cast<int>(r % d), L, M), R), c);
        return out;
    }

    const LinearEAS& leas() const { return l_; }

private:
    LinearEAS l_;
    PhiView phi_;
};

// Two-parameter rules over a semigroup: decorations are pairs (alpha,beta)
// flattened as alpha*omega+beta, and
// (x *_{(a,b)} y) *_{(a->b, c)} z -> x *_{(a, b->c)} (y *_{(b,c)} z).
// Normal forms avoid the left-comb pattern with matching arrow product.
class TwoParamRules : public RewriteRules {
public:
    explicit TwoParamRules(OpTable arrow) : arrow_(std::move(arrow)) {
        if (associativity_witness(arrow_))
            throw std::invalid_argument("two-parameter rules need an associative semigroup");
    }

    std::optional<TreeSum> rewrite_root(const Tree& t, std::size_t pos) const override {
        auto p = detail::split(t, pos);
        const int w = static_cast<int>(arrow_.size());
        if (p.dec < 0 || p.dec >= w * w)
            throw std::invalid_argument("tree decoration out of range for the pair alphabet");
        if (t[p.left_begin] == -1) return std::nullopt;
        auto q = detail::split(t, p.left_begin);
        if (q.dec < 0 || q.dec >= w * w)
            throw std::invalid_argument("tree decoration out of range for the pair alphabet");
        const int alpha = q.dec / w, beta = q.dec % w;
        const int sigma = p.dec / w, gamma = p.dec % w;
        if (sigma != arrow_[alpha][beta]) return std::nullopt;
        Tree L = detail::slice(t, q.left_begin, q.left_end);
        Tree M = detail::slice(t, q.right_begin, q.right_end);
        Tree R = detail::slice(t, p.right_begin, p.right_end);
        TreeSum out;
        out.add(tree_node(alpha * w + arrow_[beta][gamma], L,
                          tree_node(beta * w + gamma, M, R)),
                1);
        return out;
    }

    int omega() const { return static_cast<int>(arrow_.size()); }

private:
    OpTable arrow_;
};

// Leftmost-innermost redex position within the subtree at pos, if any.
inline std::optional<std::size_t> find_redex(const RewriteRules& rules, const Tree& t, std::size_t pos = 0) {
    if (t[pos] == -1) return std::nullopt;
    auto p = detail::split(t, pos);
    if (auto r = find_redex(rules, t, p.left_begin)) return r;
    if (auto r = find_redex(rules, t, p.right_begin)) return r;
    if (rules.rewrite_root(t, pos)) return pos;
    return std::nullopt;
}

// One rewriting step at the given position.
inline TreeSum rewrite_step(const RewriteRules& rules, const Tree& t, std::size_t pos) {
    auto local = rules.rewrite_root(t, pos);
    if (!local) throw std::logic_error("rewrite_step: no redex at position");
    std::size_t end = detail::subtree_end(t, pos);
    TreeSum out;
    for (const auto& [sub, c] : local->terms()) {
        Tree full;
        full.reserve(t.size() - (end - pos) + sub.size());
        full.insert(full.end(), t.begin(), t.begin() + pos);
        full.insert(full.end(), sub.begin(), sub.end());
        full.insert(full.end(), t.begin() + end, t.end());
        out.add(full, c);
    }
    return out;
}

// Applies rules at the leftmost-innermost redex until no term has one. Each
// step strictly decreases the right-comb (resp. left-comb) weight, so the
// loop terminates for both rule sets.
inline TreeSum rewrite_normal_form(const RewriteRules& rules, const TreeSum& input) {
    TreeSum cur = input;
    while (true) {
        std::optional<std::pair<Tree, Rational>> pending;
        std::optional<std::size_t> redex;
        for (const auto& [t, c] : cur.terms()) {
            if (auto r = find_redex(rules, t)) {
                pending = {t, c};
                redex = r;
                break;
            }
        }
        if (!pending) return cur;
        cur.add(pending->first, -pending->second);
        cur += rewrite_step(rules, pending->first, *redex).scaled(pending->second);
    }
}

inline bool is_normal_form(const RewriteRules& rules, const Tree& t) {
    return !find_redex(rules, t).has_value();
}

// All decorated planar binary trees with n leaves over `decs` decorations.
inline std::vector<Tree> enumerate_decorated_trees(int n, int decs) {
    if (n == 1) return {tree_leaf()};
    std::vector<Tree> out;
    for (int k = 1; k < n; ++k) {
        auto lefts = enumerate_decorated_trees(k, decs);
        auto rights = enumerate_decorated_trees(n - k, decs);
        for (const auto& l : lefts)
            for (const auto& r : rights)
                for (int d = 0; d < decs; ++d) out.push_back(tree_node(d, l, r));
    }
    return out;
}

struct ConfluenceReport {
    bool confluent = true;
    std::string witness;
};

// Confluence of the As_Phi rules on the single critical family
// x *_a (y *_b (z *_c w)): both reduction orders of the overlapping redexes
// must meet in the same normal form. Equivalent to the braid identity.
inline ConfluenceReport confluence_check_asphi(const LinearEAS& l) {
    AsPhiRules rules(l);
    const std::size_t d = l.dim;
    ConfluenceReport rep;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c) {
                Tree t = tree_node(static_cast<int>(a), tree_leaf(),
                                   tree_node(static_cast<int>(b), tree_leaf(),
                                             tree_node(static_cast<int>(c), tree_leaf(), tree_leaf())));
                // outer overlap: rewrite at the root first
                TreeSum via_root = rewrite_normal_form(rules, rewrite_step(rules, t, 0));
                // inner overlap: rewrite at the right child first
                auto p = detail::split(t, 0);
                TreeSum via_inner = rewrite_normal_form(rules, rewrite_step(rules, t, p.right_begin));
                if (via_root != via_inner) {
                    rep.confluent = false;
                    rep.witness = "triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + ")";
                    return rep;
                }
            }
    return rep;
}

// Confluence of the two-parameter rules on the critical monomials
// ((x *_{(a,b)} y) *_{(a->b,c)} z) *_{((a->b)->c,d)} w.
inline ConfluenceReport confluence_check_two_param(const OpTable& arrow) {
    TwoParamRules rules(arrow);
    const int w = static_cast<int>(arrow.size());
    ConfluenceReport rep;
    for (int a = 0; a < w; ++a)
        for (int b = 0; b < w; ++b)
            for (int c = 0; c < w; ++c)
                for (int d0 = 0; d0 < w; ++d0) {
                    int ab = arrow[a][b];
                    int abc = arrow[ab][c];
                    Tree bot = tree_node(a * w + b, tree_leaf(), tree_leaf());
                    Tree mid = tree_node(ab * w + c, bot, tree_leaf());
                    Tree top = tree_node(abc * w + d0, mid, tree_leaf());
                    TreeSum via_top = rewrite_normal_form(rules, rewrite_step(rules, top, 0));
                    auto p = detail::split(top, 0);
                    TreeSum via_mid = rewrite_normal_form(rules, rewrite_step(rules, top, p.left_begin));
                    if (via_top != via_mid) {
                        rep.confluent = false;
                        rep.witness = "quadruple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + "," + std::to_string(d0) + ")";
                        return rep;
                    }
                }
    return rep;
}

// dim As^2_Omega(n) by the product formula over planar binary trees:
// p_T = p_{T_l} p_{T_r} w (w if T_l is a leaf, w-1 otherwise).
inline BigInt count_normal_forms_two_param(int omega, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<BigInt> f(n + 1);
    f[1] = 1;
    BigInt w = omega;
    for (int m = 2; m <= n; ++m) {
        f[m] = w * w * f[m - 1];
        for (int k = 2; k < m; ++k) f[m] += w * (w - 1) * f[k] * f[m - k];
    }
    return f[n];
}

}  // namespace easalg
