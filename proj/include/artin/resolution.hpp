#ifndef ARTIN_RESOLUTION_HPP
#define ARTIN_RESOLUTION_HPP

#include <string>
#include <vector>

#include "artin/algebra.hpp"
#include "artin/series.hpp"

namespace artin {

/// A finite free presentation over R: an a x b matrix of algebra elements.
/// Minimal presentations have every entry in m.
struct ModulePresentation {
    AlgebraPtr A;
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Vec>> entries; // entries[r][c]: element of R

    const Vec& at(int r, int c) const { return entries[r][c]; }
    bool entries_in_m() const;
};

/// [x_1 ... x_e]: the minimal presentation of the residue field.
ModulePresentation residue_field_presentation(AlgebraPtr A);

/// Product of presentations as matrices over R (for exactness spot checks).
std::vector<std::vector<Vec>> compose(const ModulePresentation& M, const ModulePresentation& N);

struct ResolutionOptions {
    size_t max_scalar_entries = 20'000'000; // resource guard on one syzygy step
    bool allow_deep = false;                // lift the D <= 8 Betti guard
};

/// One syzygy step: the kernel of M inside R^cols, returned as the matrix
/// whose columns lift a basis of ker/m ker. All returned entries lie in m;
/// the zero kernel yields a 0-column matrix. Works for any presentation via
/// sparse elimination of the (rows*n) x (cols*n) scalar matrix.
ModulePresentation syzygy(const ModulePresentation& M, const ResolutionOptions& opts = {});

struct BettiTable {
    std::string module_id;
    int D = 0;
    std::vector<long long> b; // b_0 .. b_D
};

/// Betti numbers of the residue field: b_0 = 1, b_1 = e, and iterated
/// syzygies beyond. Standard graded algebras run degree-by-degree (each
/// kernel splits into small homogeneous blocks); the general path iterates
/// sparse syzygy steps. D > 8 requires opts.allow_deep.
BettiTable betti_of_residue_field(const FiniteLocalAlgebra& A, int D,
                                  const ResolutionOptions& opts = {});

IntSeries poincare_truncation(const FiniteLocalAlgebra& A, int D,
                              const ResolutionOptions& opts = {});

} // namespace artin

#endif
