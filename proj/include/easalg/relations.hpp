#pragma once

#include <map>
#include <string>
#include <vector>

#include "easalg/freealg.hpp"
#include "easalg/leas.hpp"
#include "easalg/matrix.hpp"
#include "easalg/operad.hpp"

namespace easalg {

// A quadratic axiom over g binary products, written as a linear combination of
// the weight-2 monomials LC(u,v) = (x *_v y) *_u z and RC(u,v) = x *_u (y *_v z).
struct AxiomTerm {
    bool rc = false;
    int outer = 0, inner = 0;
    Rational coeff = 1;
};

struct Axiom {
    std::string id;
    std::vector<AxiomTerm> terms;
};

struct RelationSystem {
    std::string name;
    int products = 2;
    std::vector<Axiom> axioms;
    // True when the named algebras are the bigger theory: their axioms imply
    // the Phi-relations (diassociative, triassociative, dual duplicial,
    // ComTriAs). False when Phi-associativity implies the named axioms
    // (dendriform, tridendriform, duplicial).
    bool axioms_imply_phi = false;
};

namespace detail {

inline Axiom make_axiom(std::string id, std::vector<AxiomTerm> terms) {
    return Axiom{std::move(id), std::move(terms)};
}

}  // namespace detail

// The axiom catalogs of the linked algebra families. Product indices:
// dendriform/tridendriform: prec=0, succ=1, dot=2; diassociative/
// triassociative: dashv=0, vdash=1, perp=2; duplicial/dual duplicial:
// prec=0, succ=1; ComTriAs: star=0, dot=1.
inline const RelationSystem& relation_system(const std::string& name) {
    static const std::map<std::string, RelationSystem> systems = [] {
        using detail::make_axiom;
        std::map<std::string, RelationSystem> m;
        m["dendriform"] = {"dendriform", 2,
                           {
                               make_axiom("dend-1", {{false, 0, 0, 1}, {true, 0, 0, -1}, {true, 0, 1, -1}}),
                               make_axiom("dend-2", {{false, 0, 1, 1}, {true, 1, 0, -1}}),
                               make_axiom("dend-3", {{true, 1, 1, 1}, {false, 1, 0, -1}, {false, 1, 1, -1}}),
                           },
                           false};
        m["tridendriform"] = {"tridendriform", 3,
                              {
                                  make_axiom("tridend-1", {{false, 0, 0, 1}, {true, 0, 0, -1}, {true, 0, 1, -1}, {true, 0, 2, -1}}),
                                  make_axiom("tridend-2", {{false, 0, 1, 1}, {true, 1, 0, -1}}),
                                  make_axiom("tridend-3", {{true, 1, 1, 1}, {false, 1, 0, -1}, {false, 1, 1, -1}, {false, 1, 2, -1}}),
                                  make_axiom("tridend-4", {{false, 2, 1, 1}, {true, 1, 2, -1}}),
                                  make_axiom("tridend-5", {{false, 2, 0, 1}, {true, 2, 1, -1}}),
                                  make_axiom("tridend-6", {{false, 0, 2, 1}, {true, 2, 0, -1}}),
                                  make_axiom("tridend-7", {{false, 2, 2, 1}, {true, 2, 2, -1}}),
                              },
                              false};
        m["duplicial"] = {"duplicial", 2,
                          {
                              make_axiom("dup-1", {{false, 0, 0, 1}, {true, 0, 0, -1}}),
                              make_axiom("dup-2", {{false, 0, 1, 1}, {true, 1, 0, -1}}),
                              make_axiom("dup-3", {{true, 1, 1, 1}, {false, 1, 1, -1}}),
                          },
                          false};
        m["dual-duplicial"] = {"dual-duplicial", 2,
                               {
                                   make_axiom("ddup-1", {{false, 0, 0, 1}, {true, 0, 0, -1}}),
                                   make_axiom("ddup-2", {{false, 1, 0, 1}}),
                                   make_axiom("ddup-3", {{false, 0, 1, 1}, {true, 1, 0, -1}}),
                                   make_axiom("ddup-4", {{true, 0, 1, 1}}),
                                   make_axiom("ddup-5", {{false, 1, 1, 1}, {true, 1, 1, -1}}),
                               },
                               true};
        m["diassociative"] = {"diassociative", 2,
                              {
                                  make_axiom("dias-1", {{false, 0, 0, 1}, {true, 0, 0, -1}}),
                                  make_axiom("dias-1bis", {{false, 0, 0, 1}, {true, 0, 1, -1}}),
                                  make_axiom("dias-2", {{false, 0, 1, 1}, {true, 1, 0, -1}}),
                                  make_axiom("dias-3", {{false, 1, 0, 1}, {true, 1, 1, -1}}),
                                  make_axiom("dias-4", {{false, 1, 1, 1}, {true, 1, 1, -1}}),
                              },
                              true};
        m["triassociative"] = {"triassociative", 3,
                               {
                                   make_axiom("trias-1", {{false, 0, 0, 1}, {true, 0, 0, -1}}),
                                   make_axiom("trias-1bis", {{false, 0, 0, 1}, {true, 0, 1, -1}}),
                                   make_axiom("trias-1ter", {{false, 0, 0, 1}, {true, 0, 2, -1}}),
                                   make_axiom("trias-2", {{false, 0, 1, 1}, {true, 1, 0, -1}}),
                                   make_axiom("trias-3", {{false, 0, 2, 1}, {true, 2, 0, -1}}),
                                   make_axiom("trias-4", {{false, 2, 0, 1}, {true, 2, 1, -1}}),
                                   make_axiom("trias-5", {{false, 2, 1, 1}, {true, 1, 2, -1}}),
                                   make_axiom("trias-6", {{false, 1, 0, 1}, {true, 1, 1, -1}}),
                                   make_axiom("trias-6bis", {{false, 1, 2, 1}, {true, 1, 1, -1}}),
                                   make_axiom("trias-6ter", {{false, 1, 1, 1}, {true, 1, 1, -1}}),
                                   // perp-associativity: part of the standard trialgebra
                                   // axiom set, and required by the relation spaces
                                   make_axiom("trias-perp", {{false, 2, 2, 1}, {true, 2, 2, -1}}),
                               },
                               true};
        m["comtrias"] = {"comtrias", 2,
                         {
                             make_axiom("comtrias-1", {{false, 0, 0, 1}, {true, 0, 0, -1}}),
                             make_axiom("comtrias-2", {{false, 0, 0, 1}, {true, 0, 1, -1}}),
                             make_axiom("comtrias-3", {{false, 0, 1, 1}, {true, 1, 0, -1}}),
                             make_axiom("comtrias-4", {{false, 1, 1, 1}, {true, 1, 1, -1}}),
                             // the commutativity of the dot product is an arity-2 symmetric
                             // condition, outside the nonsymmetric weight-2 space
                         },
                         true};
        return m;
    }();
    auto it = systems.find(name);
    if (it == systems.end()) throw std::invalid_argument("unknown relation set: " + name);
    return it->second;
}

struct AxiomOutcome {
    std::string id;
    bool in_relation_span = false;       // axiom lies in the Phi-relation space at arity 3
    bool holds_in_free_algebra = false;  // evaluates to zero on generators of the free algebra
};

struct SubClaimReport {
    bool opposite = false;
    std::vector<int> product_map;  // named product k is realized as *_{product_map[k]}
    std::vector<AxiomOutcome> axioms;
    bool relations_in_axiom_span = false;  // R_Phi inside the span of all axioms
    bool all_axioms_hold = false;
};

struct RelationCatalogReport {
    std::string system;
    std::vector<SubClaimReport> claims;
};

namespace detail {

// Rows of the named axioms in the weight-2 coordinate system of relations.hpp,
// after renaming products through product_map.
inline RationalMatrix axiom_rows(const RelationSystem& sys, const std::vector<int>& product_map,
                                 std::size_t d) {
    RationalMatrix rows(sys.axioms.size(), 2 * d * d);
    for (std::size_t i = 0; i < sys.axioms.size(); ++i)
        for (const auto& t : sys.axioms[i].terms) {
            std::size_t u = product_map[t.outer], v = product_map[t.inner];
            std::size_t col = (t.rc ? d * d : 0) + u * d + v;
            rows(i, col) += t.coeff;
        }
    return rows;
}

inline bool rows_in_span(const RationalMatrix& span_rows, const RationalMatrix& test_rows) {
    RationalMatrix stacked(span_rows.rows() + test_rows.rows(), span_rows.cols());
    for (std::size_t i = 0; i < span_rows.rows(); ++i)
        for (std::size_t j = 0; j < span_rows.cols(); ++j) stacked(i, j) = span_rows(i, j);
    for (std::size_t i = 0; i < test_rows.rows(); ++i)
        for (std::size_t j = 0; j < span_rows.cols(); ++j)
            stacked(span_rows.rows() + i, j) = test_rows(i, j);
    return rank(stacked) == rank(span_rows);
}

inline bool row_in_span(const RationalMatrix& span_rows, const RationalMatrix& rows, std::size_t r) {
    RationalMatrix one(1, rows.cols());
    for (std::size_t j = 0; j < rows.cols(); ++j) one(0, j) = rows(r, j);
    return rows_in_span(span_rows, one);
}

// Evaluates one axiom on the generators of the free algebra: zero iff the
// axiom holds in every (opposite) Phi-associative algebra.
inline bool axiom_holds_on_free_generators(const LinearEAS& l, const Axiom& ax,
                                           const std::vector<int>& product_map, bool opposite) {
    FreeElement x = generator(0), y = generator(1), z = generator(2);
    auto prod = [&](int named, const FreeElement& u, const FreeElement& v) {
        int idx = product_map[named];
        return opposite ? star(l, idx, v, u) : star(l, idx, u, v);
    };
    FreeElement acc;
    for (const auto& t : ax.terms) {
        FreeElement m = t.rc ? prod(t.outer, x, prod(t.inner, y, z))
                             : prod(t.outer, prod(t.inner, x, y), z);
        acc += m.scaled(t.coeff);
    }
    return acc.empty();
}

inline std::vector<std::vector<int>> product_maps_for(const std::string& name, bool opposite) {
    // Which *_i realizes which named product, per the linked statements.
    if (name == "tridendriform" && opposite) return {{1, 0, 2}};  // prec=*_2, succ=*_1, dot=*_3
    if (name == "duplicial" && opposite) return {{1, 0}};         // prec=*_2, succ=*_1
    if (name == "dual-duplicial" && !opposite) return {{1, 0}};   // prec=*_2, succ=*_1
    int g = relation_system(name).products;
    std::vector<int> ident(g);
    for (int i = 0; i < g; ++i) ident[i] = i;
    return {ident};
}

}  // namespace detail

// Instantiates the named axiom system against As_Phi(3) / As'_Phi(3) for the
// given lEAS, in both directions, through two independent routes: exact span
// computations on the relation spaces, and evaluation in the free algebra on
// three generators.
inline RelationCatalogReport relation_catalog_check(const LinearEAS& l, const std::string& name) {
    const RelationSystem& sys = relation_system(name);
    if (static_cast<std::size_t>(sys.products) != l.dim)
        throw std::invalid_argument("relation set " + name + " needs dim " +
                                    std::to_string(sys.products));
    RelationCatalogReport rep;
    rep.system = name;
    const std::size_t d = l.dim;
    for (bool opposite : {false, true}) {
        RationalMatrix rel = detail::phi_relation_rows(l, opposite);
        for (const auto& pm : detail::product_maps_for(name, opposite)) {
            SubClaimReport sc;
            sc.opposite = opposite;
            sc.product_map = pm;
            RationalMatrix ax = detail::axiom_rows(sys, pm, d);
            sc.relations_in_axiom_span = detail::rows_in_span(ax, rel);
            sc.all_axioms_hold = true;
            for (std::size_t i = 0; i < sys.axioms.size(); ++i) {
                AxiomOutcome out;
                out.id = sys.axioms[i].id;
                out.in_relation_span = detail::row_in_span(rel, ax, i);
                out.holds_in_free_algebra =
                    detail::axiom_holds_on_free_generators(l, sys.axioms[i], pm, opposite);
                if (out.in_relation_span != out.holds_in_free_algebra)
                    throw std::logic_error("span check and free-algebra evaluation disagree");
                if (!out.holds_in_free_algebra) sc.all_axioms_hold = false;
                sc.axioms.push_back(std::move(out));
            }
            rep.claims.push_back(std::move(sc));
        }
    }
    return rep;
}

struct PostLieReport {
    bool ok = false;
    bool jacobi = false;
    bool product_bracket = false;  // x*{y,z} = (x*y)*z - x*(y*z) - (x*z)*y + x*(z*y)
    bool bracket_product = false;  // {x,y}*z = {x*z,y} + {x,y*z}
};

// The post-Lie structure on opposite Phi-associative algebras for the dual of
// C3: {u,v} = u o_2 v - v o_2 u and u*v = u o_1 v, with o the opposite
// products. Verified on the generators of the free algebra.
inline PostLieReport check_postlie(const LinearEAS& l) {
    auto prod = [&](int idx, const FreeElement& u, const FreeElement& v) { return star(l, idx, v, u); };
    auto bracket = [&](const FreeElement& u, const FreeElement& v) {
        return prod(1, u, v) - prod(1, v, u);
    };
    auto mul = [&](const FreeElement& u, const FreeElement& v) { return prod(0, u, v); };
    FreeElement x = generator(0), y = generator(1), z = generator(2);
    PostLieReport rep;
    rep.jacobi = (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).empty();
    rep.product_bracket =
        (mul(x, bracket(y, z)) - mul(mul(x, y), z) + mul(x, mul(y, z)) + mul(mul(x, z), y) -
         mul(x, mul(z, y)))
            .empty();
    rep.bracket_product =
        (mul(bracket(x, y), z) - bracket(mul(x, z), y) - bracket(x, mul(y, z))).empty();
    rep.ok = rep.jacobi && rep.product_bracket && rep.bracket_product;
    return rep;
}

}  // namespace easalg
