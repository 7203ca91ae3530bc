#ifndef ARTIN_ALGEBRA_HPP
#define ARTIN_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "artin/linalg.hpp"
#include "artin/parse.hpp"
#include "artin/poly.hpp"

namespace artin {

/// A quotient presentation R = Q/I: Q = k[[x_1..x_e]] truncated at the cap,
/// I generated by polynomials of valuation >= 2. Since I must be m-primary,
/// k[[x]]/I and k[x]/(I + n^cap) agree and polynomial generators suffice.
struct PresentedRing {
    PrimeField field;
    std::vector<std::string> vars;
    std::vector<std::string> gen_texts;
    int cap = 0; // 0 = search upward from 3 to 12 at compile time

    std::vector<Poly> parsed_gens(int at_cap) const;
    std::string ring_file_text() const;
};

/// Parses the line-oriented ring file format:
///   char = 101
///   vars = [x, y, z]
///   ideal = ["xz+yz", "x^2-yz"]
///   cap = 5          (optional)
/// '#' starts a comment. override_char replaces the file's characteristic.
PresentedRing parse_ring_file(const std::string& text,
                              std::optional<uint32_t> override_char = std::nullopt);
PresentedRing load_ring_file(const std::string& path,
                             std::optional<uint32_t> override_char = std::nullopt);

class FiniteLocalAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteLocalAlgebra>;

/// An explicit finite-dimensional commutative local k-algebra: a basis with
/// basis[0] = 1, structure constants, and the m-adic filtration, where the
/// maximal ideal m is the span of basis[1..dim-1]. Immutable once built and
/// safe to share across threads.
class FiniteLocalAlgebra {
public:
    /// Validates and completes a structure-constant table: unit at index 0,
    /// commutativity, associativity (all triples when dim <= 20, sampled
    /// above), closure of span(basis[1..]) under products, and nilpotence of
    /// the maximal ideal (the filtration must reach zero).
    FiniteLocalAlgebra(PrimeField field, std::vector<std::string> labels,
                       std::vector<uint32_t> mult_table,
                       std::optional<PresentedRing> origin = std::nullopt);

    const PrimeField& field() const { return field_; }
    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::optional<PresentedRing>& origin() const { return origin_; }

    /// Coefficient of basis[k] in basis[i] * basis[j].
    uint32_t structure(int i, int j, int k) const {
        return mult_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
    }
    Vec mult_basis(int i, int j) const;
    Vec mult(const Vec& u, const Vec& v) const;
    /// Matrix of multiplication by u: column j is u * basis[j].
    DenseMat mult_operator(const Vec& u) const;

    /// m^i for i = 0 .. socle_degree + 1 (the last one is zero).
    const std::vector<Subspace>& filtration() const { return filtration_; }
    int socle_degree() const { return socle_degree_; }
    /// Embedding dimension, dim m/m^2.
    int embdim() const { return static_cast<int>(gen_idx_.size()); }
    /// Basis indices of a minimal generating set of m (lifts of a basis of
    /// m/m^2, always unit coordinate vectors).
    const std::vector<int>& m_generators() const { return gen_idx_; }

    /// Valuation of each basis element under the m-adic filtration.
    const std::vector<int>& basis_degrees() const { return degrees_; }
    /// True when the structure constants are homogeneous for basis_degrees()
    /// and the basis is adapted to the filtration; such algebras are standard
    /// graded and unlock the degreewise resolution path.
    bool is_graded() const { return graded_; }

    Vec unit() const;
    Vec basis_vec(int i) const;

private:
    PrimeField field_;
    int dim_;
    std::vector<std::string> labels_;
    std::vector<uint32_t> mult_;
    std::optional<PresentedRing> origin_;
    std::vector<Subspace> filtration_;
    int socle_degree_ = 0;
    std::vector<int> gen_idx_;
    std::vector<int> degrees_;
    bool graded_ = false;
};

/// Compiles a presentation into an explicit algebra. The basis is the set of
/// standard monomials of the reduction; compilation runs one degree above the
/// cap and rejects the input unless every degree-cap monomial reduces to zero
/// there ("cap too small or ideal not m-primary"). Generators of valuation
/// < 2 are rejected ("non-minimal presentation"). A cap of 0 searches 3..12.
AlgebraPtr compile(const PresentedRing& pr);

/// Hilbert function of the m-adic filtration, h(0..s).
std::vector<int> hilbert(const FiniteLocalAlgebra& A);

/// The socle (0 : m), its dimension, and the Gorenstein test (type == 1).
Subspace socle(const FiniteLocalAlgebra& A);
int type_of(const FiniteLocalAlgebra& A);
bool is_gorenstein(const FiniteLocalAlgebra& A);

struct CompressedCheck {
    bool value;              // the numerical comparison
    bool gorenstein_context; // false = comparison reported with a warning
};
/// Compressed test: h(i) = min{h_Q(i), h_Q(s-i)} for all i, h_Q from the
/// regular ring of the same embedding dimension.
CompressedCheck is_compressed(const FiniteLocalAlgebra& A);

/// Largest i with v in m^i; the zero vector returns s+1 by convention.
int valuation(const FiniteLocalAlgebra& A, const Vec& v);
int valuation(const FiniteLocalAlgebra& A, const Subspace& J);

/// Minimal number of generators dim J/mJ; J must be an ideal.
int mu(const FiniteLocalAlgebra& A, const Subspace& J);

/// The ideal generated by a list of elements, as a subspace.
Subspace ideal_span(const FiniteLocalAlgebra& A, const std::vector<Vec>& gens);

/// R/m^i; i past the socle degree returns A unchanged, i = 1 the field.
AlgebraPtr quotient_power(const FiniteLocalAlgebra& A, int i);
AlgebraPtr quotient_by_ideal(const FiniteLocalAlgebra& A, const Subspace& J);

Subspace annihilator(const FiniteLocalAlgebra& A, const Vec& a);
/// a != 0 whose annihilator is nonzero and principal.
bool is_exact_zero_divisor(const FiniteLocalAlgebra& A, const Vec& a);

/// Lower bound for mu(I) of a compressed Gorenstein ring of embedding
/// dimension e and socle degree s, with t = ceil((s+1)/2):
/// C(e-2+t, e-2) for odd s, C(e-2+t, e-2) + C(e-3+t, e-2) for even s.
long long mu_lower_bound_compressed(int e, int s);

} // namespace artin

#endif
