#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin/field.hpp"
#include "artin/monomial.hpp"
#include "artin/parse.hpp"
#include "artin/poly.hpp"

using namespace artin;

TEST_CASE("prime field construction accepts primes and rejects composites") {
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(101));
    CHECK_NOTHROW(PrimeField(2147483647)); // 2^31 - 1
    CHECK_THROWS_AS(PrimeField(1), input_error);
    CHECK_THROWS_AS(PrimeField(91), input_error); // 7 * 13
    CHECK_THROWS_AS(PrimeField(0), input_error);
}

TEST_CASE("field axioms: exhaustive inverses for p <= 17, sampled for large p") {
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u}) {
        PrimeField F(p);
        for (uint32_t a = 1; a < p; ++a) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            for (uint32_t b = 0; b < p; ++b) {
                CHECK(F.add(a, b) == (a + b) % p);
                CHECK(F.mul(a, b) == (a * b) % p);
                CHECK(F.add(F.sub(a, b), b) == a);
            }
        }
    }
    PrimeField F(2147483647);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        uint32_t a = static_cast<uint32_t>(rng() % (F.modulus() - 1)) + 1;
        CHECK(F.mul(a, F.inv(a)) == 1);
        uint32_t b = static_cast<uint32_t>(rng() % F.modulus());
        CHECK(F.sub(F.add(a, b), b) == a);
        CHECK(F.mul(a, b) == F.mul(b, a));
    }
}

TEST_CASE("monomial order is graded with x-first tie break") {
    auto deg2 = monomials_of_degree(3, 2);
    REQUIRE(deg2.size() == 6);
    std::vector<std::string> vars{"x", "y", "z"};
    std::vector<std::string> expect{"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"};
    for (size_t i = 0; i < deg2.size(); ++i) CHECK(deg2[i].str(vars) == expect[i]);
    for (size_t i = 0; i + 1 < deg2.size(); ++i) CHECK(deg2[i] < deg2[i + 1]);

    CHECK(monomials_of_degree(3, 0).size() == 1);
    CHECK(monomials_of_degree(3, 0)[0].is_one());
    CHECK(monomials_of_degree(4, 3).size() == 20);
}

TEST_CASE("monomial counts match C(e-1+d, e-1) for e <= 6, d <= 10") {
    for (int e = 1; e <= 6; ++e)
        for (int d = 0; d <= 10; ++d)
            CHECK(static_cast<long long>(monomials_of_degree(e, d).size()) ==
                  binomial(e - 1 + d, e - 1));
}

TEST_CASE("parse: x^2 - y*z over F_101") {
    PrimeField F(101);
    std::vector<std::string> vars{"x", "y", "z"};
    Poly p = parse_poly("x^2 - y*z", vars, F, 8);
    REQUIRE(p.terms().size() == 2);
    CHECK(p.coeff(Monomial({2, 0, 0})) == 1);
    CHECK(p.coeff(Monomial({0, 1, 1})) == 100);
}

TEST_CASE("parse: juxtaposed variables, yz^2+z^3 over F_5") {
    PrimeField F(5);
    std::vector<std::string> vars{"x", "y", "z"};
    Poly p = parse_poly("yz^2+z^3", vars, F, 8);
    REQUIRE(p.terms().size() == 2);
    CHECK(p.coeff(Monomial({0, 1, 2})) == 1);
    CHECK(p.coeff(Monomial({0, 0, 3})) == 1);
}

TEST_CASE("parse: truncation drops terms at or above the cap") {
    PrimeField F(101);
    std::vector<std::string> vars{"x", "y", "z"};
    Poly p = parse_poly("x*y*z^6", vars, F, 8);
    CHECK(p.is_zero());
}

TEST_CASE("parse: errors carry positions") {
    PrimeField F(101);
    std::vector<std::string> vars{"x", "y"};
    CHECK_THROWS_AS(parse_poly("x + w", vars, F, 4), input_error);
    CHECK_THROWS_AS(parse_poly("x + ", vars, F, 4), input_error);
    CHECK_THROWS_AS(parse_poly("(x + y", vars, F, 4), input_error);
    CHECK_THROWS_AS(parse_poly("x ^", vars, F, 4), input_error);
    CHECK_THROWS_AS(parse_poly("2 3", vars, F, 4), input_error);
    CHECK_THROWS_AS(parse_poly("x", vars, F, 0), input_error);
    CHECK_THROWS_AS(parse_poly("", vars, F, 4), input_error);
    // implicit multiplication INT VAR is rejected
    CHECK_THROWS_AS(parse_poly("2x", vars, F, 4), input_error);
}

TEST_CASE("parse: parenthesized expressions, leading minus, big literals") {
    PrimeField F(7);
    std::vector<std::string> vars{"x", "y"};
    Poly p = parse_poly("-(x - y)*(x + y)", vars, F, 5);
    Poly q = parse_poly("y^2 - x^2", vars, F, 5);
    CHECK(p == q);
    // 123456789012345678901234567890 is divisible by 7
    Poly r = parse_poly("123456789012345678901234567892", vars, F, 5);
    CHECK(r == parse_poly("2", vars, F, 5));
    CHECK(parse_poly("123456789012345678901234567890", vars, F, 5).is_zero());
}

TEST_CASE("poly_mul: (x+y)(x-y) over F_5") {
    PrimeField F(5);
    std::vector<std::string> vars{"x", "y"};
    Poly a = parse_poly("x+y", vars, F, 6);
    Poly b = parse_poly("x-y", vars, F, 6);
    CHECK(a * b == parse_poly("x^2-y^2", vars, F, 6));
}

TEST_CASE("poly_mul: truncation x*x = 0 at cap 2 over F_2") {
    PrimeField F(2);
    std::vector<std::string> vars{"x"};
    Poly x = parse_poly("x", vars, F, 2);
    CHECK((x * x).is_zero());
}

TEST_CASE("poly_mul: coefficient of xyz in (x+y+z)^3 is 6") {
    PrimeField F(101);
    std::vector<std::string> vars{"x", "y", "z"};
    Poly s = parse_poly("x+y+z", vars, F, 10);
    Poly cube = s * s * s;
    // Oracle: expand by explicit distribution over the 27 variable choices.
    int count = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                std::vector<int> e(3, 0);
                e[a]++;
                e[b]++;
                e[c]++;
                if (e == std::vector<int>{1, 1, 1}) ++count;
            }
    CHECK(count == 6);
    CHECK(cube.coeff(Monomial({1, 1, 1})) == 6);
}

TEST_CASE("poly arithmetic rejects mixed caps and fields") {
    PrimeField F5(5), F7(7);
    std::vector<std::string> vars{"x"};
    Poly a = parse_poly("x", vars, F5, 4);
    Poly b = parse_poly("x", vars, F5, 5);
    Poly c = parse_poly("x", vars, F7, 4);
    CHECK_THROWS_AS(a * b, input_error);
    CHECK_THROWS_AS(a + c, input_error);
}

TEST_CASE("print/parse round-trip on random polynomials") {
    std::mt19937_64 rng(42);
    std::vector<std::string> vars{"x", "y", "z"};
    for (int t = 0; t < 200; ++t) {
        uint32_t p = (t % 2 == 0) ? 101 : 5;
        PrimeField F(p);
        int cap = 3 + static_cast<int>(rng() % 5);
        Poly q(F, 3, cap);
        int nterms = static_cast<int>(rng() % 6);
        for (int k = 0; k < nterms; ++k) {
            std::vector<int> e(3);
            for (int v = 0; v < 3; ++v) e[v] = static_cast<int>(rng() % 3);
            q.add_term(Monomial(e), static_cast<uint32_t>(rng() % p));
        }
        Poly back = parse_poly(q.str(vars), vars, F, cap);
        CHECK(back == q);
    }
}
