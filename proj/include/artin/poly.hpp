#ifndef ARTIN_POLY_HPP
#define ARTIN_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "artin/field.hpp"
#include "artin/monomial.hpp"

namespace artin {

/// A multivariate polynomial over F_p, truncated below a degree cap:
/// every stored term has degree < cap and products drop the part of
/// degree >= cap. Terms with zero coefficient are never stored, so two
/// polynomials are equal iff their term maps are equal.
class Poly {
public:
    Poly(PrimeField field, int nvars, int cap);

    const PrimeField& field() const { return field_; }
    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    const std::map<Monomial, uint32_t>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Smallest term degree; cap for the zero polynomial.
    int valuation() const;
    /// Largest term degree; -1 for the zero polynomial.
    int degree() const;

    uint32_t coeff(const Monomial& m) const;
    /// Adds c*m (reduced mod p, truncated at the cap).
    void add_term(const Monomial& m, uint32_t c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(uint32_t c) const;
    /// Multiplication by a monomial, truncating at the cap.
    Poly shifted(const Monomial& m) const;

    bool operator==(const Poly& o) const;

    /// Canonical rendering in the polynomial grammar, terms in the global
    /// monomial order, coefficients as canonical residues.
    std::string str(const std::vector<std::string>& vars) const;

    static Poly zero(PrimeField field, int nvars, int cap) { return Poly(field, nvars, cap); }
    static Poly constant(PrimeField field, int nvars, int cap, uint32_t c);
    static Poly variable(PrimeField field, int nvars, int cap, int var);

private:
    void check_compatible(const Poly& o) const;

    PrimeField field_;
    int nvars_;
    int cap_;
    std::map<Monomial, uint32_t> terms_;
};

} // namespace artin

#endif
