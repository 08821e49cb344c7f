#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "easalg/catalog.hpp"
#include "easalg/matrix.hpp"
#include "easalg/polynomial.hpp"
#include "easalg/series.hpp"

using namespace easalg;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rational strings and invariants") {
    Rational q = parse_rational("6/4");
    CHECK(num(q) == 3);
    CHECK(den(q) == 2);
    CHECK(to_string(q) == "3/2");
    CHECK(to_string(parse_rational("-8/2")) == "-4");
    CHECK(to_string(Rational(0)) == "0");
    Rational neg = parse_rational("3/-6");
    CHECK(den(neg) > 0);
    CHECK(to_string(neg) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 50);
    for (int i = 0; i < 200; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        CHECK((a + b) - b == a);
        if (!is_zero(b)) CHECK((a / b) * b == a);
    }
}

TEST_CASE("kron identities and flip") {
    CHECK(kron(RationalMatrix::identity(2), RationalMatrix::identity(2)) == RationalMatrix::identity(4));
    CHECK(flip_matrix(1) == RationalMatrix::identity(1));

    // flip on d=2 swaps the middle basis vectors
    RationalMatrix tau = flip_matrix(2);
    RationalMatrix expected(4, 4);
    expected(0, 0) = 1;
    expected(2, 1) = 1;
    expected(1, 2) = 1;
    expected(3, 3) = 1;
    CHECK(tau == expected);
    CHECK(tau * tau == RationalMatrix::identity(4));
    RationalMatrix tau3 = flip_matrix(3);
    CHECK(tau3 * tau3 == RationalMatrix::identity(9));

    // kron(tau, Id2) sends e2(x)e1(x)e1 to e1(x)e2(x)e1
    RationalMatrix m = kron(tau, RationalMatrix::identity(2));
    std::vector<Rational> v(8);
    v[4] = 1;  // e2(x)e1(x)e1 at flat index (1*2+0)*2+0
    auto img = m.apply(v);
    std::vector<Rational> want(8);
    want[2] = 1;  // e1(x)e2(x)e1 at flat index (0*2+1)*2+0
    CHECK(img == want);
}

TEST_CASE("kron matches the entrywise definition on the C3 linearization") {
    LinearEAS lin = linearize(*Catalog::instance().find_eas("C3"));
    RationalMatrix id2 = RationalMatrix::identity(2);
    RationalMatrix k = kron(lin.phi, id2);
    REQUIRE(k.rows() == 8);
    REQUIRE(k.cols() == 8);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b)
                    CHECK(k(i * 2 + a, j * 2 + b) == lin.phi(i, j) * id2(a, b));
}

TEST_CASE("kron is associative up to index flattening") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        RationalMatrix a = random_matrix(rng, 2, 3);
        RationalMatrix b = random_matrix(rng, 2, 2);
        RationalMatrix c = random_matrix(rng, 3, 2);
        CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    }
}

TEST_CASE("exact inverse and rank witnesses") {
    CHECK(std::get<RationalMatrix>(invert(RationalMatrix::identity(4))) == RationalMatrix::identity(4));

    // the flip is its own inverse
    RationalMatrix tau = flip_matrix(2);
    CHECK(std::get<RationalMatrix>(invert(tau)) == tau);

    // first catalog matrix: single 1, rank 1
    LinearEAS ex1 = *Catalog::instance().find_leas("ex2-1");
    auto r = invert(ex1.phi);
    REQUIRE(std::holds_alternative<NotInvertible>(r));
    CHECK(std::get<NotInvertible>(r).rank == 1);
}

TEST_CASE("invert round trip and singular determinant cross-check") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        RationalMatrix m = random_matrix(rng, 4, 4);
        auto r = invert(m);
        if (std::holds_alternative<RationalMatrix>(r)) {
            CHECK(std::get<RationalMatrix>(r) * m == RationalMatrix::identity(4));
            CHECK(!is_zero(determinant_cofactor(m)));
        } else {
            CHECK(is_zero(determinant_cofactor(m)));
            CHECK(std::get<NotInvertible>(r).rank < 4);
        }
    }
}

TEST_CASE("series composition basics") {
    const std::size_t order = 4;
    TruncatedSeries x = TruncatedSeries::x(order);
    TruncatedSeries g(order);
    g.coeff(1) = 1;
    g.coeff(3) = 1;  // G = X + X^3
    CHECK(series_compose(x, g) == g);

    TruncatedSeries f(order);
    f.coeff(1) = 1;
    f.coeff(2) = 1;  // F = X + X^2
    TruncatedSeries comp = series_compose(f, g);
    TruncatedSeries expected(order);
    expected.coeff(1) = 1;
    expected.coeff(2) = 1;
    expected.coeff(3) = 1;
    expected.coeff(4) = 2;
    CHECK(comp == expected);

    TruncatedSeries bad(order);
    bad.coeff(0) = 1;
    CHECK_THROWS_AS(series_compose(f, bad), std::domain_error);
}

TEST_CASE("dual series inverts -P(-X) at omega=2, order 7") {
    CHECK(verify_koszul_inversion(2, 7));
}

TEST_CASE("series composition is associative at fixed order") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coef(-2, 2);
    const std::size_t order = 6;
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries f(order), g(order), h(order);
        for (std::size_t k = 0; k <= order; ++k) f.coeff(k) = coef(rng);
        for (std::size_t k = 1; k <= order; ++k) {
            g.coeff(k) = coef(rng);
            h.coeff(k) = coef(rng);
        }
        CHECK(series_compose(f, series_compose(g, h)) == series_compose(series_compose(f, g), h));
    }
}

TEST_CASE("integer polynomials") {
    IntPolynomial w = IntPolynomial::monomial(1);
    IntPolynomial p = w * w + IntPolynomial::constant(-1);  // w^2 - 1
    CHECK(p.degree() == 2);
    CHECK(p.eval(BigInt(3)) == 8);
    CHECK(p.eval(Rational(1, 2)) == Rational(-3, 4));
    IntPolynomial z = p + (IntPolynomial::constant(-1) * p);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK((w * w * w).divide_by_monomial(2) == w);
    CHECK_THROWS_AS(p.divide_by_monomial(1), std::domain_error);
}
