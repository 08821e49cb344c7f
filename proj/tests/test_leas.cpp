#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "easalg/catalog.hpp"
#include "easalg/leas.hpp"

using namespace easalg;

TEST_CASE("flip passes, identity fails") {
    LinearEAS flip(2, flip_matrix(2), "flip");
    CHECK(check_leas(flip).ok);

    LinearEAS id(2, RationalMatrix::identity(4), "id");
    auto rep = check_leas(id);
    CHECK_FALSE(rep.ok);
    CHECK(rep.row_index.has_value());
    CHECK(rep.col_index.has_value());
}

TEST_CASE("every two-dimensional example matrix satisfies the braid identity") {
    for (int i = 1; i <= 17; ++i) {
        auto l = Catalog::instance().find_leas("ex2-" + std::to_string(i));
        REQUIRE(l.has_value());
        CHECK(check_leas(*l).ok);
    }
    CHECK(check_leas(*Catalog::instance().find_leas("ex2-2-lam2")).ok);
    CHECK(check_leas(*Catalog::instance().find_leas("ex2-2-lam-1")).ok);
}

TEST_CASE("linearize") {
    CHECK(linearize(*Catalog::instance().find_eas("F3")).phi == flip_matrix(2));

    LinearEAS c3 = linearize(*Catalog::instance().find_eas("C3"));
    // columns e1e1 -> e1e1, e1e2 -> e1e1, e2e1 -> e1e2, e2e2 -> e2e2
    RationalMatrix expected(4, 4);
    expected(0, 0) = 1;
    expected(0, 1) = 1;
    expected(1, 2) = 1;
    expected(3, 3) = 1;
    CHECK(c3.phi == expected);
    CHECK(check_leas(c3).ok);

    CHECK(nondegenerate(linearize(*Catalog::instance().find_eas("H2"))));
    CHECK_FALSE(nondegenerate(linearize(*Catalog::instance().find_eas("A1"))));

    FiniteEAS bad = *Catalog::instance().find_eas("C3");
    bad.triangle[1][0] = 0;
    CHECK_THROWS_AS(linearize(bad), std::invalid_argument);
}

TEST_CASE("dualize") {
    LinearEAS flip(2, flip_matrix(2), "flip");
    CHECK(dualize(flip).phi == flip.phi);

    // the dual of C3 is the shipped post-Lie matrix
    LinearEAS c3dual = dualize(linearize(*Catalog::instance().find_eas("C3")));
    CHECK(c3dual.phi == Catalog::instance().find_leas("postlie-dual")->phi);

    for (const auto& name : Catalog::instance().leas_names()) {
        LinearEAS l = *Catalog::instance().find_leas(name);
        CHECK(dualize(dualize(l)).phi == l.phi);
        CHECK(check_leas(dualize(l)).ok);
    }
}

TEST_CASE("invert_leas") {
    LinearEAS flip(2, flip_matrix(2), "flip");
    auto inv = invert_leas(flip);
    REQUIRE(std::holds_alternative<LinearEAS>(inv));
    CHECK(std::get<LinearEAS>(inv).phi == flip.phi);

    // F4 = EAS'(Z/2,+): the inverse permutation is (a,b) -> (b*a, a)
    FiniteEAS f4 = *Catalog::instance().find_eas("F4");
    auto invf4 = invert_leas(linearize(f4));
    REQUIRE(std::holds_alternative<LinearEAS>(invf4));
    const RationalMatrix& m = std::get<LinearEAS>(invf4).phi;
    const int n = 2;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int target = ((b + a) % n) * n + a;
            for (int r = 0; r < n * n; ++r)
                CHECK(m(r, a * n + b) == (r == target ? Rational(1) : Rational(0)));
        }

    auto inva1 = invert_leas(linearize(*Catalog::instance().find_eas("A1")));
    REQUIRE(std::holds_alternative<NotInvertible>(inva1));
    CHECK(std::get<NotInvertible>(inva1).rank == 1);
}

TEST_CASE("braid identity of a table equals the EAS property, sampled") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> size(2, 3);
    int eas_seen = 0, non_eas_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = size(rng);
        std::uniform_int_distribution<int> cell(0, n - 1);
        FiniteEAS s;
        s.elements.resize(n);
        for (int i = 0; i < n; ++i) s.elements[i] = std::string(1, static_cast<char>('a' + i));
        s.arrow.assign(n, std::vector<int>(n));
        s.triangle.assign(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                s.arrow[i][j] = cell(rng);
                s.triangle[i][j] = cell(rng);
            }
        RationalMatrix m(n * n, n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(s.arrow[i][j] * n + s.triangle[i][j], i * n + j) = 1;
        LinearEAS l(n, std::move(m));
        bool is_eas = check_eas(s).is_eas;
        (is_eas ? eas_seen : non_eas_seen)++;
        CHECK(check_leas(l).ok == is_eas);
        if (is_eas) CHECK(nondegenerate(l) == phi_bijective(s));
    }
    CHECK(non_eas_seen > 0);
}

TEST_CASE("inverses of nondegenerate catalog maps satisfy the identity") {
    for (const auto& name : Catalog::instance().leas_names()) {
        LinearEAS l = *Catalog::instance().find_leas(name);
        if (!nondegenerate(l)) continue;
        auto inv = invert_leas(l);  // throws if the inverse failed its own check
        CHECK(std::holds_alternative<LinearEAS>(inv));
    }
}
