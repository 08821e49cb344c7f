#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "easalg/catalog.hpp"
#include "easalg/json_io.hpp"
#include "easalg/operad.hpp"
#include "easalg/rewriting.hpp"
#include "easalg/series.hpp"

using namespace easalg;

namespace {

OpTable cyclic(int n) {
    OpTable t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

OpTable times_mod2() { return {{0, 0}, {0, 1}}; }

}  // namespace

TEST_CASE("compose for the trivial EAS is block insertion") {
    // alpha_1..alpha_k o_i beta_1..beta_l = alpha_1..alpha_{i-1} beta.. alpha_i..alpha_k
    LinearEAS flip(2, flip_matrix(2), "flip");
    OperadElement f = OperadElement::basis(3, {0, 1});
    OperadElement g = OperadElement::basis(2, {1});
    CHECK(compose_asphi(flip, f, 1, g).vec == FormalSum<std::vector<int>>({1, 0, 1}));
    CHECK(compose_asphi(flip, f, 2, g).vec == FormalSum<std::vector<int>>({0, 1, 1}));
    CHECK(compose_asphi(flip, f, 3, g).vec == FormalSum<std::vector<int>>({0, 1, 1}));

    OperadElement g2 = OperadElement::basis(3, {1, 0});
    CHECK(compose_asphi(flip, f, 2, g2).vec == FormalSum<std::vector<int>>({0, 1, 0, 1}));
    CHECK_THROWS_AS(compose_asphi(flip, f, 4, g), std::out_of_range);
}

TEST_CASE("compose for a semigroup EAS left-translates the inserted block") {
    // family case: a_{i-1} *-multiplies every inserted decoration
    FiniteEAS fam = make_from_semigroup({"0", "1", "2"}, cyclic(3));
    LinearEAS l = linearize(fam);
    OperadElement f = OperadElement::basis(3, {1, 2});
    OperadElement g = OperadElement::basis(3, {0, 2});
    // slot 2: carrier is a_1 = 1; block becomes (1+0, 1+2) and carrier survives
    CHECK(compose_asphi(l, f, 2, g).vec == FormalSum<std::vector<int>>({1, 1, 0, 2}));
}

TEST_CASE("compose for the group EAS inserts the block with a correction term") {
    // EAS'(Z/2,+): alpha .. o_i beta_l.. = .. (alpha_{i-1} - beta_l - .. - beta_1) beta_1..beta_l ..
    FiniteEAS pri = make_prime({"0", "1"}, cyclic(2));
    LinearEAS l = linearize(pri);
    OperadElement f = OperadElement::basis(2, {1});
    OperadElement g = OperadElement::basis(3, {1, 0});
    // carrier 1 descends: [1] o_2 [1,0]: corrected head = 1-0-1 = 0, block (1,0) kept
    CHECK(compose_asphi(l, f, 2, g).vec == FormalSum<std::vector<int>>({0, 1, 0}));
}

TEST_CASE("operad axioms for As_Phi and the word operad") {
    AsPhiProvider c3(linearize(*Catalog::instance().find_eas("C3")));
    CHECK(operad_axiom_check(c3, 4).ok);

    AsPhiProvider ex17(*Catalog::instance().find_leas("ex2-17"));
    CHECK(operad_axiom_check(ex17, 4).ok);

    AsPhiProvider id(LinearEAS(2, RationalMatrix::identity(4)));
    auto rep = operad_axiom_check(id, 4);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.witness.empty());

    WordOperadProvider words(times_mod2());
    CHECK(operad_axiom_check(words, 4).ok);
    WordOperadProvider words3(cyclic(3));
    CHECK(operad_axiom_check(words3, 4).ok);
}

namespace {

// negative control: As_Phi composition with one sign flipped in slot 2
class CorruptedProvider : public CompositionProvider {
public:
    explicit CorruptedProvider(LinearEAS l) : inner_(std::move(l)) {}
    std::vector<std::vector<int>> basis(int arity) const override { return inner_.basis(arity); }
    OperadElement unit() const override { return inner_.unit(); }
    OperadElement compose(const OperadElement& f, int i, const OperadElement& g) const override {
        OperadElement out = inner_.compose(f, i, g);
        if (i == 2 && f.arity == 2 && g.arity == 2) out.vec = out.vec.scaled(-1);
        return out;
    }

private:
    AsPhiProvider inner_;
};

}  // namespace

TEST_CASE("a corrupted composition fails the axiom check") {
    CorruptedProvider bad(linearize(*Catalog::instance().find_eas("C3")));
    auto rep = operad_axiom_check(bad, 4);
    CHECK_FALSE(rep.ok);
}

TEST_CASE("full word composition with deltas") {
    OpTable t = times_mod2();
    // I o w = w, summing the unit over the alphabet
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> w = {bit(rng), bit(rng), bit(rng)};
        FormalSum<std::vector<int>> total;
        for (int a = 0; a < 2; ++a) total += word_compose(t, {a}, {w});
        CHECK(total == FormalSum<std::vector<int>>(w));
    }
    // (a->b) c o (ab, I) = abc, and zero when the head is wrong
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                FormalSum<std::vector<int>> total;
                for (int g = 0; g < 2; ++g) total += word_compose(t, {t[a][b], c}, {{a, b}, {g}});
                CHECK(total == FormalSum<std::vector<int>>({a, b, c}));
                int wrong = 1 - t[a][b];
                FormalSum<std::vector<int>> dead;
                for (int g = 0; g < 2; ++g) dead += word_compose(t, {wrong, c}, {{a, b}, {g}});
                CHECK(dead.empty());
            }
    CHECK_THROWS_AS(word_compose(t, {0, 1}, {{0}}), std::invalid_argument);
}

TEST_CASE("full word composition agrees with iterated partial compositions") {
    OpTable t = cyclic(3);
    WordOperadProvider p(t);
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> letter(0, 2);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<int> w = {letter(rng), letter(rng)};
        std::vector<int> a1 = {letter(rng), letter(rng)};
        std::vector<int> a2 = {letter(rng), letter(rng), letter(rng)};
        auto full = word_compose(t, w, {a1, a2});
        // substitute right slot first so the left index stays put
        OperadElement step = p.compose(OperadElement::basis(2, w), 2, OperadElement::basis(3, a2));
        OperadElement both = p.compose(step, 1, OperadElement::basis(2, a1));
        CHECK(both.vec == full);
    }
}

TEST_CASE("dual series coefficients are the word-operad dimensions") {
    for (int w : {2, 3}) {
        WordOperadProvider p(w == 2 ? times_mod2() : cyclic(3));
        TruncatedSeries q = koszul_dual_series(w, 6);
        for (int n = 2; n <= 6; ++n)
            CHECK(Rational(BigInt(p.basis(n).size())) == q.coeff(n));
    }
}

TEST_CASE("word operad composition rules") {
    WordOperadProvider p(times_mod2());
    // I o_1 w = w
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> key = {bit(rng), bit(rng), bit(rng)};
        OperadElement w = OperadElement::basis(3, key);
        CHECK(p.compose(p.unit(), 1, w).vec == w.vec);
    }
    // (a->b) c o (a b, I) = a b c, and zero when the head does not match
    OperadElement ab = OperadElement::basis(2, {1, 1});  // 1*1 = 1
    OperadElement head = OperadElement::basis(2, {1, 0});
    OperadElement out = p.compose(head, 1, ab);
    CHECK(out.vec == FormalSum<std::vector<int>>({1, 1, 0}));
    OperadElement wrong = OperadElement::basis(2, {0, 0});  // 0*0 = 0 != 1
    CHECK(p.compose(head, 1, wrong).vec.empty());

    // arity dimensions: dim P_0(n) = omega^n for n >= 2
    for (int n = 2; n <= 6; ++n) CHECK(p.basis(n).size() == (std::size_t{1} << n));
}

TEST_CASE("rewriting to left combs spans As_Phi(n)") {
    LinearEAS c3 = linearize(*Catalog::instance().find_eas("C3"));
    AsPhiRules rules(c3);
    for (int n = 2; n <= 4; ++n) {
        auto trees = enumerate_decorated_trees(n, 2);
        // left-comb coordinates: the decoration tuple read off the comb
        std::map<std::vector<int>, std::size_t> comb_index;
        RationalMatrix coords(trees.size(), std::size_t(1) << (n - 1));
        std::size_t next = 0;
        std::size_t row = 0;
        for (const auto& t : trees) {
            TreeSum nf = rewrite_normal_form(rules, TreeSum(t));
            for (const auto& [u, c] : nf.terms()) {
                // decode the left comb: decorations root-to-bottom
                std::vector<int> tuple;
                Tree cur = u;
                while (cur[0] != -1) {
                    auto parts = detail::split(cur, 0);
                    REQUIRE(cur[parts.right_begin] == -1);  // right child must be a leaf
                    tuple.push_back(parts.dec);
                    cur = detail::slice(cur, parts.left_begin, parts.left_end);
                }
                std::reverse(tuple.begin(), tuple.end());
                auto [it, inserted] = comb_index.try_emplace(tuple, next);
                if (inserted) ++next;
                coords(row, it->second) += c;
            }
            ++row;
        }
        CHECK(next == std::size_t(1) << (n - 1));
        CHECK(rank(coords) == std::size_t(1) << (n - 1));
    }
}

TEST_CASE("a normal form rewrites to itself") {
    LinearEAS c3 = linearize(*Catalog::instance().find_eas("C3"));
    AsPhiRules rules(c3);
    Tree comb = tree_node(1, tree_node(0, tree_leaf(), tree_leaf()), tree_leaf());
    CHECK(is_normal_form(rules, comb));
    CHECK(rewrite_normal_form(rules, TreeSum(comb)) == TreeSum(comb));
}

TEST_CASE("two-parameter normal forms at n=3 over Z/2 multiplication") {
    TwoParamRules rules(times_mod2());
    auto trees = enumerate_decorated_trees(3, 4);  // decorations are pairs, omega^2 = 4
    int normal = 0;
    for (const auto& t : trees)
        if (is_normal_form(rules, t)) ++normal;
    CHECK(normal == 24);
    // and rewriting always lands on normal forms
    for (const auto& t : trees) {
        TreeSum nf = rewrite_normal_form(rules, TreeSum(t));
        for (const auto& [u, c] : nf.terms()) CHECK(is_normal_form(rules, u));
    }
}

TEST_CASE("confluence matches the braid identity") {
    CHECK(confluence_check_asphi(linearize(*Catalog::instance().find_eas("C3"))).confluent);
    CHECK(confluence_check_asphi(*Catalog::instance().find_leas("ex2-12")).confluent);
    auto rep = confluence_check_asphi(LinearEAS(2, RationalMatrix::identity(4)));
    CHECK_FALSE(rep.confluent);
    CHECK_FALSE(rep.witness.empty());

    CHECK(confluence_check_two_param(times_mod2()).confluent);
    CHECK(confluence_check_two_param(cyclic(3)).confluent);
}

TEST_CASE("normal-form counts") {
    CHECK(count_normal_forms_two_param(2, 4) == 176);
    CHECK(count_normal_forms_two_param(3, 4) == 2511);
    for (int n = 1; n <= 8; ++n) CHECK(count_normal_forms_two_param(1, n) == 1);
    // cross-module: the count solves the dimension recursion
    for (int w = 1; w <= 9; ++w) {
        auto table = p_recursive(w, 7);
        for (int n = 1; n <= 7; ++n) CHECK(count_normal_forms_two_param(w, n) == table.p(n));
    }
    // explicit enumeration agrees for small sizes
    for (int w : {1, 2}) {
        OpTable t = (w == 1) ? OpTable{{0}} : times_mod2();
        TwoParamRules rules(t);
        for (int n = 2; n <= 4; ++n) {
            auto trees = enumerate_decorated_trees(n, w * w);
            int normal = 0;
            for (const auto& tr : trees)
                if (is_normal_form(rules, tr)) ++normal;
            CHECK(BigInt(normal) == count_normal_forms_two_param(w, n));
        }
    }
}

TEST_CASE("koszul orthogonality") {
    RationalMatrix one(1, 1);
    one(0, 0) = 1;
    auto d1 = koszul_orthogonality_check(LinearEAS(1, one));
    CHECK(d1.ok);
    CHECK(d1.dim_relations == 1);
    CHECK(d1.dim_dual_relations == 1);

    auto c3 = koszul_orthogonality_check(linearize(*Catalog::instance().find_eas("C3")));
    CHECK(c3.ok);
    CHECK(c3.dim_relations == 4);
    CHECK(c3.dim_dual_relations == 4);
}

TEST_CASE("recognition round trip and failure modes") {
    for (const char* name : {"C3", "F4"}) {
        LinearEAS l = linearize(*Catalog::instance().find_eas(name));
        AsPhiProvider p(l);
        auto r = extract_leas(p);
        REQUIRE(std::holds_alternative<LinearEAS>(r));
        CHECK(std::get<LinearEAS>(r).phi == l.phi);
    }
    LinearEAS ex17 = *Catalog::instance().find_leas("ex2-17");
    auto r17 = extract_leas(AsPhiProvider(ex17));
    REQUIRE(std::holds_alternative<LinearEAS>(r17));
    CHECK(std::get<LinearEAS>(r17).phi == ex17.phi);

    // the word operad P_0 has dim P_0(3) = w^3 != w^4: iota_3 cannot be bijective
    WordOperadProvider words(times_mod2());
    auto rw = extract_leas(words);
    REQUIRE(std::holds_alternative<NotRecognizable>(rw));
    CHECK(std::get<NotRecognizable>(rw).reason.find("iota_3") != std::string::npos);

    CorruptedProvider bad(linearize(*Catalog::instance().find_eas("C3")));
    auto rb = extract_leas(bad);
    CHECK(std::holds_alternative<NotRecognizable>(rb));
}

TEST_CASE("trees round-trip through nested JSON") {
    Tree t = tree_node(1, tree_leaf(), tree_node(0, tree_node(1, tree_leaf(), tree_leaf()), tree_leaf()));
    Json j = tree_to_json(t);
    CHECK(j[0] == "node");
    CHECK(j[2] == "leaf");
    CHECK(tree_from_json(j) == t);
    CHECK_THROWS_AS(tree_from_json(Json::parse("[\"branch\",1,\"leaf\",\"leaf\"]")), std::invalid_argument);

    LinearEAS c3 = linearize(*Catalog::instance().find_eas("C3"));
    AsPhiRules rules(c3);
    TreeSum nf = rewrite_normal_form(rules, TreeSum(t));
    Json sum = tree_sum_to_json(nf);
    CHECK(sum.size() == nf.size());
    for (const auto& [u, c] : nf.terms()) CHECK(is_normal_form(rules, u));

    // out-of-range decorations are rejected, not dereferenced
    Tree wild = tree_node(7, tree_leaf(), tree_node(0, tree_leaf(), tree_leaf()));
    CHECK_THROWS_AS(rewrite_normal_form(rules, TreeSum(wild)), std::invalid_argument);
    TwoParamRules tp(OpTable{{0, 0}, {0, 1}});
    CHECK_THROWS_AS(rewrite_normal_form(tp, TreeSum(wild)), std::invalid_argument);
}
