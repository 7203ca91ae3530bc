#ifndef ARTIN_SERIES_HPP
#define ARTIN_SERIES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "artin/errors.hpp"

namespace artin {

using Int = boost::multiprecision::cpp_int;

/// Integer polynomial in z, dense coefficients, trailing zeros trimmed.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    IntPoly(std::initializer_list<long long> v);
    explicit IntPoly(std::vector<Int> v);

    static IntPoly one() { return IntPoly{1}; }
    static IntPoly z() { return IntPoly{0, 1}; }
    /// (1 + z)^n and general binomial powers.
    static IntPoly one_plus_z_pow(int n);

    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    Int coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Int(0); }
    bool is_zero() const { return c.empty(); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly pow(int n) const;
    /// p(-z): alternate signs.
    IntPoly at_minus_z() const;
    bool operator==(const IntPoly& o) const { return c == o.c; }

    std::string str() const;
    void trim();
};

/// Parses an integer polynomial in the variable z with the same grammar as
/// ring polynomials, plus '^' on parenthesized factors: "(1-z)^3".
IntPoly zpoly_parse(const std::string& text);

/// Truncated integer power series: coefficients c_0..c_D, exact arithmetic.
class IntSeries {
public:
    IntSeries(int D, std::vector<Int> coeffs);
    static IntSeries zero(int D) { return IntSeries(D, std::vector<Int>(D + 1, Int(0))); }
    static IntSeries from_poly(const IntPoly& p, int D);

    int cutoff() const { return D_; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int i) const { return i >= 0 && i <= D_ ? c_[i] : Int(0); }

    IntSeries operator+(const IntSeries& o) const;
    IntSeries operator-(const IntSeries& o) const;
    IntSeries operator*(const IntSeries& o) const;
    /// Multiplicative inverse; requires c_0 = 1 or -1 (integral expansion).
    IntSeries reciprocal() const;
    bool operator==(const IntSeries& o) const { return D_ == o.D_ && c_ == o.c_; }

    /// "c0 + c1*z + ... + O(z^(D+1))"; zero terms omitted.
    std::string str() const;
    /// "c0, c1, ..., cD"
    std::string coeff_list() const;

private:
    int D_;
    std::vector<Int> c_;
};

/// Integer rational function kept unreduced: the paper's arguments track
/// denominator degrees, so normalization is never applied implicitly.
struct RationalFn {
    IntPoly num;
    IntPoly den; // constant term must be 1 or -1

    RationalFn(IntPoly n, IntPoly d);
    IntSeries expand(int D) const;
    std::string str() const;
};

IntSeries expand_rational(const IntPoly& num, const IntPoly& den, int D);

/// Golod bound / equality series (1+z)^e / (1 - sum_j h_j z^(j+1)), with
/// h = (h_1 .. h_(e-d)) the positive-degree Koszul homology ranks.
IntSeries golod_series(int e, int d, const std::vector<long long>& h, int D);

/// Avramov-Levin quotient series P/(1 - z^2 P); requires P(0) = 1.
IntSeries la_quotient_series(const IntSeries& P, int D);

/// Gulliksen's complete-intersection case 1/((1-z)^e - z^2).
IntSeries gulliksen_ci_series(int e, int D);

/// Gulliksen's trivial-extension formula P_R / (1 - z P_E).
IntSeries gulliksen_trivext_series(const IntSeries& P_R, const IntSeries& P_E, int D);
/// Same composition on rational forms: n_R d_E / (d_R (d_E - z n_E)).
RationalFn gulliksen_trivext_rational(const RationalFn& P_R, const RationalFn& P_E);

/// Codepth-3 Gorenstein non-CI Poincare series (1+z)^2 / g(z) with
/// g(z) = 1 - z - (mu-1) z^2 - z^3 + z^4; requires mu >= 4.
RationalFn codepth3_gorenstein_rational(int mu);
IntSeries codepth3_gorenstein_series(int mu, int D);
/// Its Avramov-Levin quotient (1+z)^2 / (1 - z - mu z^2 - 3 z^3).
RationalFn codepth3_gorenstein_quotient_rational(int mu);
IntSeries codepth3_gorenstein_quotient_series(int mu, int D);

/// Poincare series of a socle-degree-3 Gorenstein ring with an exact zero
/// divisor: 1/(1 - ez + ez^2 - z^3).
IntSeries ezd_series(int e, int D);

/// Rossi-Sega criterion series (1+z)^e / (1 - z(PQR - 1) + z^(e+1)(z+1)).
IntSeries rossi_sega_criterion_series(int e, const IntPoly& PQR, int D);

/// Expanded GGO quotient denominator 1 - (h+1)z^2 - 2(h+1)z^3 - (h+6)z^4 - 4z^5.
IntPoly ggo_denominator(long long h);
/// Its displayed factored form (1+z)^2 (1 - 2z - (h-2)z^2 - 4z^3).
IntPoly ggo_denominator_factored(long long h);

/// Numerical Koszul test: P(z) * H(-z) = 1 up to D.
bool koszul_numerical_test(const IntSeries& P, const IntPoly& H, int D);

} // namespace artin

#endif
