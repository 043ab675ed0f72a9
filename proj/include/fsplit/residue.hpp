#pragma once

#include <optional>
#include <vector>

#include "fsplit/polynomial.hpp"

namespace fsplit {

// Residue of f*sigma0 along the coordinate hyperplane x_var = 0:
// (f / x_var^{p-1}) with x_var set to zero. Throws NotDivisible when
// x_var^{p-1} does not divide f and VanishingResidue when the result is 0.
Polynomial residue_step(const Polynomial& f, std::size_t var);

struct ResidueStep {
    std::size_t variable;
    Polynomial result;
};

// Iterated coordinate residues ending in a nonzero constant.
struct ResidueChain {
    Polynomial initial;
    std::vector<ResidueStep> steps;
    Coefficient terminal;

    std::vector<std::size_t> order() const;
};

// Folds residue_step over `order` (distinct variable indices). Throws the
// step errors, or NonConstantTerminal if variables remain at the end.
ResidueChain certify_chain(const Polynomial& f, const std::vector<std::size_t>& order);

// Depth-first search over variables in index order, backtracking on failed
// steps. Only coordinate residues are tried, so a splitting may have no chain.
std::optional<ResidueChain> search_chain(const Polynomial& f);

// Coefficient of x_1^{p-1} ... x_n^{p-1} in f, the value of sigma(1) at the origin.
Coefficient origin_coefficient(const Polynomial& f);

// Ring F_p[x11, x12, ..., xnn] in row-major order (n <= 9).
RingPtr matrix_ring(unsigned n, std::uint64_t p);
// Determinant of the square submatrix on the given rows and columns,
// expanded along the first row.
Polynomial minor_determinant(const RingPtr& ring, unsigned n, const std::vector<unsigned>& rows,
                             const std::vector<unsigned>& cols);
// Leading principal minors of sizes 1..n followed by trailing principal
// minors of sizes n-1..1; 2n-1 factors.
std::vector<Polynomial> matrix_factors(unsigned n, const RingPtr& ring);
// (product of matrix_factors)^{p-1}.
Polynomial matrix_section(unsigned n, const RingPtr& ring);

}  // namespace fsplit
