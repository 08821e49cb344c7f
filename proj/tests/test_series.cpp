#include <catch2/catch_amalgamated.hpp>

#include "easalg/series.hpp"

using namespace easalg;

namespace {

// the reference 9x7 dimension table
const char* kTable[9][7] = {
    {"1", "1", "1", "1", "1", "1", "1"},
    {"1", "4", "24", "176", "1440", "12608", "115584"},
    {"1", "9", "135", "2511", "52245", "1164213", "27173475"},
    {"1", "16", "448", "15616", "609280", "25464832", "1114882048"},
    {"1", "25", "1125", "63125", "3965625", "266890625", "18816328125"},
    {"1", "36", "2376", "195696", "18048096", "1783238976", "184576081536"},
    {"1", "49", "4459", "506611", "64454845", "8785674373", "1254546699679"},
    {"1", "64", "7680", "1150976", "193167360", "34733293568", "6542642380800"},
    {"1", "81", "12393", "2368521", "506935665", "116245810017", "27925350157593"},
};

IntPolynomial poly(std::vector<long> coeffs) {
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("recursion reproduces the dimension table") {
    for (int w = 1; w <= 9; ++w) {
        auto t = p_recursive(w, 7);
        for (int n = 1; n <= 7; ++n) CHECK(t.p(n) == BigInt(kTable[w - 1][n - 1]));
    }
}

TEST_CASE("closed form agrees with the recursion") {
    CHECK(p_narayana(2, 3) == 24);
    CHECK(p_narayana(3, 4) == 2511);
    for (int w = 2; w <= 9; ++w) {
        auto t = p_recursive(w, 9);
        for (int n = 2; n <= 9; ++n) CHECK(p_narayana(w, n) == t.p(n));
    }
    CHECK(p_narayana(9, 7) == BigInt("27925350157593"));
}

TEST_CASE("p_n as polynomials match the factored factored forms") {
    CHECK(p_polynomial(2) == poly({0, 0, 1}));
    // p_5 = (2w-1)(7w^2-7w+1) w^5
    IntPolynomial p5 = poly({-1, 2}) * poly({1, -7, 7}) * IntPolynomial::monomial(5);
    CHECK(p_polynomial(5) == p5);
    // p_9 = (2w-1)(715w^6-2145w^5+2431w^4-1287w^3+319w^2-33w+1) w^9
    IntPolynomial p9 =
        poly({-1, 2}) * poly({1, -33, 319, -1287, 2431, -2145, 715}) * IntPolynomial::monomial(9);
    CHECK(p_polynomial(9) == p9);
    // evaluation at integers matches the recursion
    for (int n = 2; n <= 9; ++n) {
        IntPolynomial p = p_polynomial(n);
        for (int w = 1; w <= 9; ++w) CHECK(p.eval(BigInt(w)) == p_recursive(w, n).p(n));
    }
}

TEST_CASE("polynomial structure") {
    auto r4 = check_polynomial_properties(4);
    CHECK(r4.ok);
    CHECK(p_polynomial(4).degree() == 6);
    CHECK(p_polynomial(4).leading() == 5);

    auto r6 = check_polynomial_properties(6);
    CHECK(r6.ok);
    CHECK(p_polynomial(6).coeff(6) == 1);  // q_6(0) = 1

    auto r7 = check_polynomial_properties(7);
    CHECK(r7.ok);
    CHECK(is_zero(p_polynomial(7).eval(Rational(1, 2))));

    auto cat = catalan_numbers(10);
    std::vector<long> expected = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (int n = 1; n <= 10; ++n) CHECK(cat[n] == expected[n - 1]);
}

TEST_CASE("functional equation of the series") {
    CHECK(verify_functional_equation(2, 10));
    CHECK(verify_functional_equation(1, 10));
    for (int w = 3; w <= 5; ++w) CHECK(verify_functional_equation(w, 8));

    // corrupting p_4 must break the identity at degree 4
    TruncatedSeries P = p_series(2, 10);
    P.coeff(4) += 1;
    Rational w = 2;
    TruncatedSeries X = TruncatedSeries::x(10);
    TruncatedSeries rhs = (P * P).scaled(w * (w - 1)) + (X * P).scaled(w) + X;
    CHECK(P != rhs);
    bool low_degrees_fine = true;
    for (std::size_t k = 0; k < 4; ++k)
        if (P.coeff(k) != rhs.coeff(k)) low_degrees_fine = false;
    CHECK(low_degrees_fine);
    CHECK(P.coeff(4) != rhs.coeff(4));
}

TEST_CASE("koszul dual series") {
    TruncatedSeries q = koszul_dual_series(2, 5);
    CHECK(q.coeff(1) == 1);
    CHECK(q.coeff(2) == 4);
    CHECK(q.coeff(3) == 8);
    CHECK(q.coeff(4) == 16);
    for (int w : {2, 3, 4}) CHECK(verify_koszul_inversion(w, 8));
    // omega = 1: the classical self-dual series X + X^2 + ...
    TruncatedSeries q1 = koszul_dual_series(1, 6);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(q1.coeff(n) == 1);
    CHECK(verify_koszul_inversion(1, 8));
}

TEST_CASE("schroder identity") {
    auto rep = schroder_check(10);
    CHECK(rep.ok);
    std::vector<long> reference = {1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098};
    REQUIRE(rep.schroder.size() == 10);
    for (int n = 1; n <= 10; ++n) CHECK(rep.schroder[n - 1] == reference[n - 1]);
    CHECK(BigInt(8) * 22 == p_recursive(2, 4).p(4));
    CHECK(BigInt(64) * 1806 == p_recursive(2, 7).p(7));
}
