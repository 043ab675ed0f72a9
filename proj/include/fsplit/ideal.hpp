#pragma once

#include <optional>

#include "fsplit/groebner.hpp"
#include "fsplit/splitting.hpp"

namespace fsplit {

// I^[p], generated by the p-th powers of the generators of I.
IdealPresentation frobenius_power_ideal(const IdealPresentation& ideal);

// I ∩ J via the tag-variable elimination t*I + (1-t)*J.
IdealPresentation intersect(const IdealPresentation& a, const IdealPresentation& b);

// (J : g) = { a | a*g in J }. Throws InvalidArgument on g = 0.
IdealPresentation colon_by_poly(const IdealPresentation& j, const Polynomial& g);

// (I^[p] : I): the coefficients f for which f*sigma0 maps I into I. The
// zero ideal gives the unit ideal. Generators are returned as a reduced
// grevlex basis.
IdealPresentation fedder_module(const IdealPresentation& ideal);

bool ideal_contains(const IdealPresentation& big, const IdealPresentation& small);
bool ideals_equal(const IdealPresentation& a, const IdealPresentation& b);

enum class CompatMethod { Fedder, Finite, Both };

// The finite method enumerates p^n monomial shifts per generator; rings with
// n*log2(p) > 12 are rejected with EnumerationTooLarge.
void check_enumeration_size(const RingContext& ring);

// Whether sigma(I) ⊆ I. Both runs the two methods and throws
// MethodDisagreement if they differ.
bool is_compatible(const TwistedEndo& sigma, const IdealPresentation& ideal, CompatMethod method);

// The nonzero values sigma0(f * x^a) for a in [0, p-1]^n. Every h in A is a
// sum of h_a^p x^a, so these generate sigma0 applied to the ideal (f).
std::vector<Polynomial> sigma0_shifts(const Polynomial& f);

struct ExistenceResult {
    bool exists;
    // Groebner basis of sigma0(fedder_module(I)); the unit ideal iff exists.
    GroebnerBasis obstruction;
};
ExistenceResult exists_compatible_splitting(const IdealPresentation& ideal);

// Smallest k in [2, bound] with g not in I and g^k in I.
std::optional<unsigned> nilpotent_witness(const Polynomial& g, const IdealPresentation& ideal, unsigned bound);

}  // namespace fsplit
