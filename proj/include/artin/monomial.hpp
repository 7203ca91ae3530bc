#ifndef ARTIN_MONOMIAL_HPP
#define ARTIN_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace artin {

/// A monomial in a fixed number of variables, stored as its exponent vector.
///
/// The global monomial order used everywhere in the toolkit is graded:
/// lower total degree comes first, and within one degree the monomial whose
/// exponent vector is lexicographically larger comes first (so for variables
/// x, y, z the degree-2 monomials enumerate as x^2, xy, xz, y^2, yz, z^2).
/// Row reductions pivot in this order, which is what makes every subspace
/// and basis in the toolkit deterministic.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int nvars() const { return static_cast<int>(exps.size()); }
    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    bool is_one() const {
        for (int e : exps)
            if (e) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }

    bool operator<(const Monomial& o) const {
        int d = degree(), e = o.degree();
        if (d != e) return d < e;
        return exps > o.exps;
    }

    /// Graded reverse-lexicographic comparison (earlier variables largest):
    /// true when *this is grevlex-smaller than o. Used as the elimination
    /// order when compiling presentations, so that standard monomial bases
    /// match the usual computer-algebra convention.
    bool grevlex_less(const Monomial& o) const {
        int d = degree(), e = o.degree();
        if (d != e) return d < e;
        for (int i = static_cast<int>(exps.size()) - 1; i >= 0; --i)
            if (exps[i] != o.exps[i]) return exps[i] > o.exps[i];
        return false;
    }

    /// Renders like "x^2*y" given variable names; "1" for the unit monomial.
    std::string str(const std::vector<std::string>& vars) const {
        std::string s;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars[i];
            if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
        }
        return s.empty() ? "1" : s;
    }
};

/// All monomials of total degree d in e variables, listed in the global
/// monomial order. The count is C(e-1+d, e-1).
std::vector<Monomial> monomials_of_degree(int nvars, int d);

/// All monomials of degree < cap in the global order (degree by degree).
std::vector<Monomial> monomials_below(int nvars, int cap);

/// Exact binomial coefficient as int64; returns 0 for k < 0 or k > n.
long long binomial(long long n, long long k);

} // namespace artin

#endif
