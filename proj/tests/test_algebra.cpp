#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin/algebra.hpp"

using namespace artin;

namespace {

PresentedRing exa43(uint32_t p = 101) {
    return PresentedRing{PrimeField(p),
                         {"x", "y", "z"},
                         {"xz+yz", "xy+yz", "x^2-yz", "yz^2+z^3", "y^3-z^3"},
                         5};
}

PresentedRing exa54(uint32_t p = 101) {
    return PresentedRing{PrimeField(p),
                         {"w", "x", "y", "z"},
                         {"w^2+xy", "wx+xz", "wz", "y^2+xz", "yz", "z^2", "x^3+x^2z"},
                         5};
}

PresentedRing diag_ci(uint32_t p, std::vector<std::string> vars, int cap) {
    std::vector<std::string> gens;
    for (auto& v : vars) gens.push_back(v + "^2");
    return PresentedRing{PrimeField(p), std::move(vars), std::move(gens), cap};
}

PresentedRing family24(uint32_t p, int i) {
    return PresentedRing{PrimeField(p),
                         {"x", "y", "z"},
                         {"x^2", "y^2", "z^" + std::to_string(i), "x*z^" + std::to_string(i - 1),
                          "y*z^" + std::to_string(i - 1), "x*y*z^" + std::to_string(i - 2)},
                         i + 2};
}

/// k[vars]/n^N given by its degree-N monomial generators.
PresentedRing power_ring(uint32_t p, std::vector<std::string> vars, int N, int cap) {
    std::vector<std::string> gens;
    for (const Monomial& m : monomials_of_degree(static_cast<int>(vars.size()), N))
        gens.push_back(m.str(vars));
    return PresentedRing{PrimeField(p), std::move(vars), std::move(gens), cap};
}

Vec var_vec(const FiniteLocalAlgebra& A, int which) { return A.basis_vec(1 + which); }

} // namespace

TEST_CASE("compile Example 4.3: dim 8, printed graded basis, at p=101, 5, 3") {
    for (uint32_t p : {101u, 5u, 3u}) {
        auto A = compile(exa43(p));
        CHECK(A->dim() == 8);
        std::vector<std::string> expect{"1", "x", "y", "z", "y^2", "y*z", "z^2", "z^3"};
        CHECK(A->labels() == expect);
        CHECK(hilbert(*A) == std::vector<int>{1, 3, 3, 1});
        CHECK(A->socle_degree() == 3);
        CHECK(A->embdim() == 3);
        CHECK(A->is_graded());
    }
}

TEST_CASE("Example 4.3 degenerates over F_2: the ideal is not m-primary") {
    // Over F_2 the grevlex leading ideal is (y^3, y^2z, yz^2, x^2, xy, xz):
    // no power of z, so z^4, z^5, ... survive and no cap stabilizes.
    PresentedRing pr = exa43(2);
    CHECK_THROWS_WITH_AS(compile(pr), doctest::Contains("cap too small"), input_error);
    pr.cap = 0;
    CHECK_THROWS_AS(compile(pr), input_error);
}

TEST_CASE("compile Example 5.4: dim 10, printed basis") {
    auto A = compile(exa54());
    CHECK(A->dim() == 10);
    std::vector<std::string> expect{"1", "w", "x", "y", "z", "w*y", "x^2", "x*y", "x*z", "x^2*z"};
    CHECK(A->labels() == expect);
    CHECK(hilbert(*A) == std::vector<int>{1, 4, 4, 1});
    CHECK(A->socle_degree() == 3);
}

TEST_CASE("compile diagonal CI e=3: tensor cube of k[x]/(x^2)") {
    auto A = compile(diag_ci(101, {"x", "y", "z"}, 4));
    CHECK(A->dim() == 8);
    CHECK(hilbert(*A) == std::vector<int>{1, 3, 3, 1});
}

TEST_CASE("compile rejects non-minimal presentations and too-small caps") {
    PresentedRing bad{PrimeField(101), {"x", "y"}, {"x - y^2"}, 4};
    CHECK_THROWS_WITH_AS(compile(bad), doctest::Contains("non-minimal"), input_error);

    PresentedRing small{PrimeField(101), {"x"}, {"x^3"}, 2};
    CHECK_THROWS_WITH_AS(compile(small), doctest::Contains("cap too small"), input_error);

    // not m-primary: no cap in range can stabilize (x^2) in two variables
    PresentedRing notprim{PrimeField(101), {"x", "y"}, {"x^2"}, 0};
    CHECK_THROWS_AS(compile(notprim), input_error);
}

TEST_CASE("cap search finds the smallest stabilizing cap") {
    PresentedRing pr{PrimeField(101), {"x", "y"}, {"x^2", "y^2"}, 0};
    auto A = compile(pr);
    CHECK(A->dim() == 4);
    CHECK(A->origin()->cap == 3);
    CHECK(hilbert(*A) == std::vector<int>{1, 2, 1});
}

TEST_CASE("compiled algebras pass structural invariants") {
    for (auto pr : {exa43(), exa54(), diag_ci(5, {"x", "y"}, 4), family24(101, 3)}) {
        auto A = compile(pr);
        auto h = hilbert(*A);
        CHECK(h[0] == 1);
        CHECK(h[1] == A->embdim());
        int sum = 0;
        for (int v : h) sum += v;
        CHECK(sum == A->dim());
        // every m-basis element is nilpotent: valuation of powers grows to s+1
        for (int b = 1; b < A->dim(); ++b) {
            Vec v = A->basis_vec(b);
            Vec pw = v;
            for (int k = 0; k < A->socle_degree() + 1; ++k) pw = A->mult(pw, v);
            CHECK(!std::any_of(pw.begin(), pw.end(), [](uint32_t x) { return x != 0; }));
        }
    }
}

TEST_CASE("socle of Example 4.3 is spanned by z^3: Gorenstein of type 1") {
    auto A = compile(exa43());
    Subspace s = socle(*A);
    CHECK(s.dim() == 1);
    CHECK(type_of(*A) == 1);
    CHECK(is_gorenstein(*A));
    Vec z3 = A->basis_vec(7);
    CHECK(s.contains(z3, A->field()));
}

TEST_CASE("socle oracle: k[x,y,z]/(x^2,y^2,z^2,xy) has socle {xz, yz}, type 2") {
    PresentedRing pr{PrimeField(101), {"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y"}, 4};
    auto A = compile(pr);
    CHECK(hilbert(*A) == std::vector<int>{1, 3, 2});
    // Oracle: multiply every basis element by each variable and collect the
    // ones killed by all of x, y, z.
    Subspace oracle(A->dim());
    for (int b = 0; b < A->dim(); ++b) {
        bool killed = true;
        for (int v = 0; v < 3; ++v) {
            Vec prod = A->mult(var_vec(*A, v), A->basis_vec(b));
            if (std::any_of(prod.begin(), prod.end(), [](uint32_t x) { return x != 0; }))
                killed = false;
        }
        if (killed) oracle.add(A->basis_vec(b), A->field());
    }
    CHECK(oracle.dim() == 2);
    CHECK(socle(*A) == oracle);
    CHECK(type_of(*A) == 2);
    CHECK(!is_gorenstein(*A));
}

TEST_CASE("the field itself: socle = k, type 1, socle degree 0") {
    auto A = quotient_power(*compile(exa43()), 1);
    CHECK(A->dim() == 1);
    CHECK(A->socle_degree() == 0);
    CHECK(type_of(*A) == 1);
    CHECK(socle(*A).dim() == 1);
    CHECK(A->embdim() == 0);
}

TEST_CASE("is_compressed on the golden examples") {
    auto A = compile(exa43());
    auto c = is_compressed(*A);
    CHECK(c.value);
    CHECK(c.gorenstein_context);

    auto ci = compile(diag_ci(101, {"x", "y", "z"}, 5));
    CHECK(is_compressed(*ci).value); // Hilbert (1,3,3,1) with e=3, s=3

    PresentedRing x4{PrimeField(101), {"x"}, {"x^4"}, 5};
    CHECK(is_compressed(*compile(x4)).value); // e=1: h_Q(i)=1 throughout

    // non-Gorenstein input: the numerical comparison is still returned,
    // flagged by gorenstein_context = false
    PresentedRing ng{PrimeField(101), {"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y"}, 4};
    auto r = is_compressed(*compile(ng));
    CHECK(!r.gorenstein_context);
}

TEST_CASE("valuation in Example 4.3") {
    auto A = compile(exa43());
    CHECK(valuation(*A, A->basis_vec(1)) == 1);  // x
    CHECK(valuation(*A, A->basis_vec(7)) == 3);  // z^3
    CHECK(valuation(*A, Vec(A->dim(), 0)) == 4); // zero: s+1 by convention

    Subspace J = ideal_span(*A, {A->basis_vec(4), A->basis_vec(5)}); // (y^2, yz)
    CHECK(valuation(*A, J) == 2);
}

TEST_CASE("mu: embedding dimension, powers of n in e=2, Lemma 2.3 instance") {
    auto B = compile(exa54());
    CHECK(mu(*B, B->filtration()[1]) == 4);

    auto T = compile(power_ring(101, {"x", "y"}, 6, 6));
    CHECK(mu(*T, T->filtration()[3]) == 4); // mu(n^i) = i+1 at i=3

    // f = x^2 + y^3: mu((f) + n^3) = 3 > 2
    auto A = compile(power_ring(101, {"x", "y"}, 5, 5));
    Vec f(A->dim(), 0);
    {
        // coordinates of x^2 and y^3 in the monomial basis
        auto labels = A->labels();
        for (int i = 0; i < A->dim(); ++i)
            if (labels[i] == "x^2" || labels[i] == "y^3") f[i] = 1;
    }
    Subspace J = ideal_span(*A, {f});
    for (const Vec& v : A->filtration()[3].basis()) J.add(v, A->field());
    CHECK(mu(*A, J) == 3);

    // Independent oracle: row reduction of {m*f} + degree>=3 monomials
    // against {m*f : deg m >= 1} + degree>=4 monomials, inside k[x,y]/n^5.
    {
        PrimeField F(101);
        std::vector<std::string> vars{"x", "y"};
        auto mons = monomials_below(2, 5);
        std::map<std::string, int> col;
        for (size_t i = 0; i < mons.size(); ++i) col[mons[i].str(vars)] = static_cast<int>(i);
        Poly fp = parse_poly("x^2+y^3", vars, F, 5);
        auto vec_of = [&](const Poly& q) {
            Vec v(mons.size(), 0);
            for (auto& [m, c] : q.terms()) v[col.at(m.str(vars))] = c;
            return v;
        };
        Subspace Jbig(static_cast<int>(mons.size()));
        Subspace nJ(static_cast<int>(mons.size()));
        for (const Monomial& m : mons) {
            Poly prod = fp.shifted(m);
            if (prod.is_zero()) continue;
            Jbig.add(vec_of(prod), F);
            if (m.degree() >= 1) nJ.add(vec_of(prod), F);
        }
        for (const Monomial& m : mons) {
            if (m.degree() >= 3) Jbig.add(vec_of(Poly::constant(F, 2, 5, 1).shifted(m)), F);
            if (m.degree() >= 4) nJ.add(vec_of(Poly::constant(F, 2, 5, 1).shifted(m)), F);
        }
        CHECK(Jbig.dim() - nJ.dim() == 3);
    }

    // non-ideals are rejected
    auto C = compile(diag_ci(101, {"x", "y"}, 4));
    Subspace notideal(C->dim());
    notideal.add(C->basis_vec(1), C->field());
    CHECK_THROWS_AS(mu(*C, notideal), input_error);
}

TEST_CASE("Lemma 2.3 property: mu((f) + n^i) > 2 on 100 random samples") {
    auto A = compile(power_ring(5, {"x", "y"}, 6, 6));
    const PrimeField& F = A->field();
    std::mt19937_64 rng(2023);
    auto mons24 = monomials_below(2, 5);
    int trials = 0;
    while (trials < 100) {
        int i = 2 + static_cast<int>(rng() % 3); // i in {2,3,4}
        Vec f(A->dim(), 0);
        for (int b = 0; b < A->dim(); ++b) {
            int d = A->basis_degrees()[b];
            if (d >= 2 && d <= 4) f[b] = static_cast<uint32_t>(rng() % 5);
        }
        if (std::all_of(f.begin(), f.end(), [](uint32_t x) { return x == 0; })) continue;
        Subspace fid = ideal_span(*A, {f});
        if (fid.contains(A->filtration()[i], F)) continue; // need n^i not inside (f)
        Subspace J = fid;
        for (const Vec& v : A->filtration()[i].basis()) J.add(v, F);
        CHECK(mu(*A, J) > 2);
        ++trials;
    }
}

TEST_CASE("quotient_power: dimensions, identity cases, Example 2.4 match") {
    auto ci = compile(diag_ci(101, {"x", "y", "z"}, 5));
    auto q = quotient_power(*ci, 3);
    CHECK(q->dim() == 7);
    CHECK(hilbert(*q) == std::vector<int>{1, 3, 3});

    auto whole = quotient_power(*ci, ci->socle_degree() + 1);
    CHECK(whole->dim() == ci->dim());
    CHECK(whole->labels() == ci->labels());

    auto one = quotient_power(*ci, 1);
    CHECK(one->dim() == 1);

    // R/m^5 of Example 2.4's ambient ring, cut down to m^3, matches the
    // displayed presentation at i=3.
    auto big = compile(family24(101, 5));
    auto cut = quotient_power(*big, 3);
    auto direct = compile(family24(101, 3));
    CHECK(cut->dim() == direct->dim());
    CHECK(cut->labels() == direct->labels());
    CHECK(hilbert(*cut) == hilbert(*direct));
}

TEST_CASE("annihilator and exact zero divisors in k[x,y]/(x^2,y^2)") {
    auto A = compile(diag_ci(101, {"x", "y"}, 4));
    Vec x = var_vec(*A, 0);
    Subspace ann = annihilator(*A, x);
    Subspace xid = ideal_span(*A, {x});
    CHECK(ann == xid);
    CHECK(is_exact_zero_divisor(*A, x));

    CHECK(!is_exact_zero_divisor(*A, A->unit()));       // annihilator 0
    CHECK(!is_exact_zero_divisor(*A, Vec(A->dim(), 0))); // a = 0

    // spot checks in Example 4.3: linear forms are not exact zero divisors
    auto B = compile(exa43());
    for (int b = 1; b <= 3; ++b) CHECK(!is_exact_zero_divisor(*B, B->basis_vec(b)));
}

TEST_CASE("mu_lower_bound_compressed examples from the displayed formula") {
    CHECK(mu_lower_bound_compressed(4, 3) == 6);   // t=2, C(4,2)
    CHECK(mu_lower_bound_compressed(4, 4) == 16);  // t=3, C(5,2)+C(4,2)
    CHECK(mu_lower_bound_compressed(5, 3) == 10);  // C(5,3) > e
    CHECK_THROWS_AS(mu_lower_bound_compressed(1, 3), input_error);
}

TEST_CASE("gradedness detection") {
    CHECK(compile(exa43())->is_graded());
    CHECK(compile(family24(101, 3))->is_graded());
    PresentedRing ng{PrimeField(101), {"x", "y"}, {"x^2 + y^3", "y^4"}, 6};
    auto A = compile(ng);
    CHECK(!A->is_graded());
}

TEST_CASE("ring file parsing round-trip and errors") {
    std::string text = "# a toy ring\nchar = 101\nvars = [x, y]\nideal = [\"x^2\", \"y^2\"]\ncap = 4\n";
    PresentedRing pr = parse_ring_file(text);
    CHECK(pr.field.modulus() == 101);
    CHECK(pr.vars == std::vector<std::string>{"x", "y"});
    CHECK(pr.gen_texts.size() == 2);
    CHECK(pr.cap == 4);
    PresentedRing back = parse_ring_file(pr.ring_file_text());
    CHECK(back.vars == pr.vars);
    CHECK(back.gen_texts == pr.gen_texts);

    CHECK_THROWS_AS(parse_ring_file("vars = [x]\n"), input_error);           // no char
    CHECK_THROWS_AS(parse_ring_file("char = 7\n"), input_error);             // no vars
    CHECK_THROWS_AS(parse_ring_file("char = 7\nvars = [x, x]\n"), input_error);
    CHECK_THROWS_AS(parse_ring_file("char = 7\nvars = [x]\nbogus = 3\n"), input_error);
    PresentedRing o = parse_ring_file(text, 5);
    CHECK(o.field.modulus() == 5);
}
