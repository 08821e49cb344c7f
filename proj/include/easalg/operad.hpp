#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "easalg/formal_sum.hpp"
#include "easalg/leas.hpp"

namespace easalg {

// Arity-graded element of a nonsymmetric operad whose arity-n component has a
// basis indexed by integer tuples. For As_Phi(n) the tuple is the decoration
// sequence of length n-1, stored bottom-to-root: (a_1,...,a_{n-1}) is the
// left comb (..(x_1 *_{a_1} x_2) *_{a_2} ..) *_{a_{n-1}} x_n.
struct OperadElement {
    int arity = 1;
    FormalSum<std::vector<int>> vec;

    static OperadElement basis(int arity, std::vector<int> key) {
        return OperadElement{arity, FormalSum<std::vector<int>>(std::move(key))};
    }
};

// Partial composition of As_Phi. Slot 1 is plain concatenation (g's comb sits
// under f's); for i >= 2 the decoration left of the slot descends through g's
// decorations, getting Phi'd against each from the top down.
inline OperadElement compose_asphi(const PhiView& phi, const OperadElement& f, int i,
                                   const OperadElement& g) {
    if (i < 1 || i > f.arity) throw std::out_of_range("compose_asphi: slot out of range");
    const std::size_t d = phi.d;
    OperadElement out;
    out.arity = f.arity + g.arity - 1;
    for (const auto& [ft, fc] : f.vec.terms())
        for (const auto& [gt, gc] : g.vec.terms()) {
            const Rational coef = fc * gc;
            if (i == 1) {
                std::vector<int> w = gt;
                w.insert(w.end(), ft.begin(), ft.end());
                out.vec.add(w, coef);
                continue;
            }
            // carrier = decoration a_{i-1}; tail accumulates the staircase output
            FormalSum<std::pair<int, std::vector<int>>> states;
            states.add({ft[i - 2], {}}, coef);
            for (std::size_t pos = gt.size(); pos-- > 0;) {
                FormalSum<std::pair<int, std::vector<int>>> next;
                for (const auto& [state, c] : states.terms()) {
                    const auto& [carrier, tail] = state;
                    for (const auto& [r, m] : phi.cols[static_cast<std::size_t>(carrier) * d + gt[pos]]) {
                        std::vector<int> t;
                        t.reserve(tail.size() + 1);
                        t.push_back(static_cast<int>(r / d));  // arrow leg stays at this level
                        t.insert(t.end(), tail.begin(), tail.end());
                        next.add({static_cast<int>(r % d), std::move(t)}, c * m);
                    }
                }
                states = std::move(next);
            }
            for (const auto& [state, c] : states.terms()) {
                const auto& [carrier, tail] = state;
                std::vector<int> w(ft.begin(), ft.begin() + (i - 2));
                w.push_back(carrier);
                w.insert(w.end(), tail.begin(), tail.end());
                w.insert(w.end(), ft.begin() + (i - 1), ft.end());
                out.vec.add(w, c);
            }
        }
    return out;
}

inline OperadElement compose_asphi(const LinearEAS& l, const OperadElement& f, int i,
                                   const OperadElement& g) {
    return compose_asphi(PhiView(l), f, i, g);
}

// Composition provider: a nonsymmetric operad presented through its basis,
// its partial compositions, and its unit, so the axiom checker and the
// recognition procedure can run against any implementation.
class CompositionProvider {
public:
    virtual ~CompositionProvider() = default;
    virtual std::vector<std::vector<int>> basis(int arity) const = 0;
    virtual OperadElement compose(const OperadElement& f, int i, const OperadElement& g) const = 0;
    virtual OperadElement unit() const = 0;
};

class AsPhiProvider : public CompositionProvider {
public:
    explicit AsPhiProvider(LinearEAS l) : l_(std::move(l)), phi_(l_) {}

    std::vector<std::vector<int>> basis(int arity) const override {
        std::vector<std::vector<int>> out;
        std::vector<int> key(arity - 1, 0);
        const int d = static_cast<int>(l_.dim);
        while (true) {
            out.push_back(key);
            int i = arity - 2;
            while (i >= 0 && key[i] == d - 1) key[i--] = 0;
            if (i < 0) break;
            ++key[i];
        }
        return out;
    }

    OperadElement compose(const OperadElement& f, int i, const OperadElement& g) const override {
        return compose_asphi(phi_, f, i, g);
    }

    OperadElement unit() const override { return OperadElement::basis(1, {}); }

    const LinearEAS& leas() const { return l_; }

private:
    LinearEAS l_;
    PhiView phi_;
};

// Full composition of the word operad: w o (w_1,..,w_n) with
// delta_{w,|w_1|..|w_n|}, where |w| is the arrow-product of the letters.
inline FormalSum<std::vector<int>> word_compose(const OpTable& arrow, const std::vector<int>& w,
                                                const std::vector<std::vector<int>>& args) {
    if (w.size() != args.size()) throw std::invalid_argument("word_compose: arity mismatch");
    FormalSum<std::vector<int>> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].empty()) throw std::invalid_argument("word_compose: empty argument word");
        int red = args[i][0];
        for (std::size_t k = 1; k < args[i].size(); ++k) red = arrow[red][args[i][k]];
        if (red != w[i]) return out;  // a delta fails: the composition is zero
    }
    std::vector<int> flat;
    for (const auto& a : args) flat.insert(flat.end(), a.begin(), a.end());
    out.add(flat, 1);
    return out;
}

// The word operad P over a finite semigroup: P(n) spanned by words
// alpha_1..alpha_n, with the composition above. Unit I = sum_alpha alpha.
// P_0 restricts arity 1 to the line spanned by I.
class WordOperadProvider : public CompositionProvider {
public:
    explicit WordOperadProvider(OpTable arrow) : arrow_(std::move(arrow)) {
        if (associativity_witness(arrow_))
            throw std::invalid_argument("word operad needs an associative semigroup");
    }

    std::vector<std::vector<int>> basis(int arity) const override {
        if (arity == 1) return {{-1}};  // sentinel key for the unit line K.I
        std::vector<std::vector<int>> out;
        std::vector<int> key(arity, 0);
        const int w = static_cast<int>(arrow_.size());
        while (true) {
            out.push_back(key);
            int i = arity - 1;
            while (i >= 0 && key[i] == w - 1) key[i--] = 0;
            if (i < 0) break;
            ++key[i];
        }
        return out;
    }

    OperadElement unit() const override { return OperadElement::basis(1, {-1}); }

    OperadElement compose(const OperadElement& f, int i, const OperadElement& g) const override {
        if (i < 1 || i > f.arity) throw std::out_of_range("word operad: slot out of range");
        OperadElement out;
        out.arity = f.arity + g.arity - 1;
        for (const auto& [ft, fc] : f.vec.terms())
            for (const auto& [gt, gc] : g.vec.terms()) {
                // expand unit keys into the actual sum of letters
                auto expand = [&](const std::vector<int>& key) {
                    std::vector<std::vector<int>> words;
                    if (key.size() == 1 && key[0] == -1) {
                        for (std::size_t a = 0; a < arrow_.size(); ++a)
                            words.push_back({static_cast<int>(a)});
                    } else {
                        words.push_back(key);
                    }
                    return words;
                };
                for (const auto& fw : expand(ft))
                    for (const auto& gw : expand(gt)) {
                        int red = gw[0];
                        for (std::size_t k = 1; k < gw.size(); ++k) red = arrow_[red][gw[k]];
                        if (red != fw[i - 1]) continue;
                        std::vector<int> w(fw.begin(), fw.begin() + (i - 1));
                        w.insert(w.end(), gw.begin(), gw.end());
                        w.insert(w.end(), fw.begin() + i, fw.end());
                        out.vec.add(w, fc * gc);
                    }
            }
        // project arity-1 results back onto the unit line
        if (out.arity == 1 && !out.vec.empty()) {
            // a scalar multiple of I reaches here only via unit o_1 unit
            FormalSum<std::vector<int>> proj;
            Rational c = out.vec.terms().begin()->second;
            proj.add({-1}, c);
            out.vec = proj;
        }
        return out;
    }

    std::size_t omega() const { return arrow_.size(); }

private:
    OpTable arrow_;
};

struct OperadAxiomReport {
    bool ok = true;
    std::string witness;
};

// Sequential and parallel associativity plus unit laws, exhaustively over all
// basis triples whose composite arity stays within max_arity (composites of
// larger arity are outside the checked window).
inline OperadAxiomReport operad_axiom_check(const CompositionProvider& p, int max_arity) {
    if (max_arity < 3) throw std::invalid_argument("max_arity must be >= 3");
    OperadAxiomReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.witness = msg;
    };
    // unit laws
    for (int n = 1; n <= max_arity; ++n)
        for (const auto& key : p.basis(n)) {
            OperadElement f = OperadElement::basis(n, key);
            OperadElement u = p.unit();
            OperadElement left = p.compose(u, 1, f);
            if (left.vec != f.vec) {
                fail("unit o_1 f != f at arity " + std::to_string(n));
                return rep;
            }
            for (int i = 1; i <= n; ++i) {
                OperadElement right = p.compose(f, i, u);
                if (right.vec != f.vec) {
                    fail("f o_i unit != f at arity " + std::to_string(n));
                    return rep;
                }
            }
        }
    // associativity over triples with composite arity <= max_arity
    for (int n = 2; n <= max_arity; ++n)
        for (int m = 2; m <= max_arity; ++m)
            for (int q = 2; q <= max_arity; ++q) {
                if (n + m + q - 2 > max_arity) continue;
                for (const auto& fk : p.basis(n))
                    for (const auto& gk : p.basis(m))
                        for (const auto& hk : p.basis(q)) {
                            OperadElement f = OperadElement::basis(n, fk);
                            OperadElement g = OperadElement::basis(m, gk);
                            OperadElement h = OperadElement::basis(q, hk);
                            for (int i = 1; i <= n; ++i) {
                                // nested: (f o_i g) o_{i-1+j} h = f o_i (g o_j h)
                                for (int j = 1; j <= m; ++j) {
                                    OperadElement lhs = p.compose(p.compose(f, i, g), i - 1 + j, h);
                                    OperadElement rhs = p.compose(f, i, p.compose(g, j, h));
                                    if (lhs.vec != rhs.vec) {
                                        std::ostringstream os;
                                        os << "nested failure arities (" << n << "," << m << "," << q
                                           << ") slots i=" << i << " j=" << j;
                                        fail(os.str());
                                        return rep;
                                    }
                                }
                                // disjoint slots: (f o_i g) o_{j+m-1} h = (f o_j h) o_i g, i<j
                                for (int j = i + 1; j <= n; ++j) {
                                    OperadElement lhs = p.compose(p.compose(f, i, g), j + m - 1, h);
                                    OperadElement rhs = p.compose(p.compose(f, j, h), i, g);
                                    if (lhs.vec != rhs.vec) {
                                        std::ostringstream os;
                                        os << "parallel failure arities (" << n << "," << m << "," << q
                                           << ") slots i=" << i << " j=" << j;
                                        fail(os.str());
                                        return rep;
                                    }
                                }
                            }
                        }
            }
    return rep;
}

struct NotRecognizable {
    std::string reason;
};

// Recognition of an lEAS from composition data: if iota_3(p(x)q) = p o_1 q is
// invertible on the arity-3 component, Phi is the unique solution of
// a o_2 b = sum (a'->b') o_1 (a''|>b''), then verified against the braid
// identity.
inline std::variant<LinearEAS, NotRecognizable> extract_leas(const CompositionProvider& p) {
    const auto b2 = p.basis(2);
    const std::size_t d = b2.size();
    const auto b3 = p.basis(3);
    if (b3.size() != d * d)
        return NotRecognizable{"arity-3 dimension " + std::to_string(b3.size()) +
                               " != dim(2)^2 = " + std::to_string(d * d) + ", iota_3 cannot be bijective"};
    std::map<std::vector<int>, std::size_t> index3;
    for (std::size_t i = 0; i < b3.size(); ++i) index3[b3[i]] = i;

    auto to_vec = [&](const OperadElement& e) {
        std::vector<Rational> v(d * d);
        for (const auto& [k, c] : e.vec.terms()) {
            auto it = index3.find(k);
            if (it == index3.end()) throw std::logic_error("composition left the declared basis");
            v[it->second] = c;
        }
        return v;
    };

    RationalMatrix iota(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto v = to_vec(p.compose(OperadElement::basis(2, b2[i]), 1, OperadElement::basis(2, b2[j])));
            for (std::size_t r = 0; r < d * d; ++r) iota(r, i * d + j) = v[r];
        }
    auto inv = invert(iota);
    if (std::holds_alternative<NotInvertible>(inv))
        return NotRecognizable{"iota_3 singular, rank " + std::to_string(std::get<NotInvertible>(inv).rank)};
    const RationalMatrix& iota_inv = std::get<RationalMatrix>(inv);

    RationalMatrix phi(d * d, d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            auto v = to_vec(p.compose(OperadElement::basis(2, b2[a]), 2, OperadElement::basis(2, b2[b])));
            auto coords = iota_inv.apply(v);
            for (std::size_t r = 0; r < d * d; ++r) phi(r, a * d + b) = coords[r];
        }
    LinearEAS out(d, std::move(phi), "extracted");
    auto rep = check_leas(out);
    if (!rep.ok) return NotRecognizable{"extracted map violates the braid identity"};
    return out;
}

struct KoszulOrthogonalityReport {
    bool ok = false;
    std::size_t dim_relations = 0;       // dim I
    std::size_t dim_dual_relations = 0;  // dim I'
    bool orthogonal = false;
};

namespace detail {

// Relation space of As_Phi(3) (direct) or As'_Phi(3) (opposite) inside the
// free weight-2 space. Coordinates: LC(u,v) = (x*_v y)*_u z at u*d+v, and
// RC(u,v) = x*_u(y*_v z) at d^2 + u*d+v.
inline RationalMatrix phi_relation_rows(const LinearEAS& l, bool opposite) {
    const std::size_t d = l.dim;
    RationalMatrix rows(d * d, 2 * d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            std::size_t r = a * d + b;
            if (!opposite) {
                rows(r, d * d + a * d + b) = 1;  // RC(a,b)
                for (std::size_t q = 0; q < d * d; ++q)
                    if (!is_zero(l.phi(q, a * d + b))) rows(r, q) -= l.phi(q, a * d + b);  // -LC(Phi(ab))
            } else {
                rows(r, a * d + b) = 1;  // LC(a,b)
                for (std::size_t q = 0; q < d * d; ++q)
                    if (!is_zero(l.phi(q, a * d + b))) rows(r, d * d + q) -= l.phi(q, a * d + b);
            }
        }
    return rows;
}

}  // namespace detail

// Relation spaces I of As_Phi(3) and I' of As'_{Phi*}(3) are orthogonal
// complements under the signed pairing <o_1,o_1>=1, <o_2,o_2>=-1.
inline KoszulOrthogonalityReport koszul_orthogonality_check(const LinearEAS& l) {
    const std::size_t d = l.dim;
    KoszulOrthogonalityReport rep;
    RationalMatrix I = detail::phi_relation_rows(l, false);
    RationalMatrix Ip = detail::phi_relation_rows(dualize(l), true);
    rep.dim_relations = rank(I);
    rep.dim_dual_relations = rank(Ip);
    rep.orthogonal = true;
    for (std::size_t i = 0; i < d * d && rep.orthogonal; ++i)
        for (std::size_t j = 0; j < d * d; ++j) {
            Rational s = 0;
            for (std::size_t q = 0; q < d * d; ++q) s += Ip(i, q) * I(j, q);
            for (std::size_t q = d * d; q < 2 * d * d; ++q) s -= Ip(i, q) * I(j, q);
            if (!is_zero(s)) {
                rep.orthogonal = false;
                break;
            }
        }
    rep.ok = rep.orthogonal && rep.dim_relations == d * d && rep.dim_dual_relations == d * d;
    return rep;
}

}  // namespace easalg
