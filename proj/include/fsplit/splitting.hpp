#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsplit/polynomial.hpp"

namespace fsplit {

// The basis twisted endomorphism of F_p[x_1..x_n]: keeps the terms whose
// exponents are all congruent to p-1 mod p and takes their p-th root after
// shifting by (p-1, ..., p-1).
Polynomial sigma0(const Polynomial& f);

// The twisted endomorphism coeff * sigma0, i.e. g -> sigma0(coeff * g).
class TwistedEndo {
public:
    explicit TwistedEndo(Polynomial coeff) : coeff_(std::move(coeff)) {}

    const Polynomial& coeff() const noexcept { return coeff_; }
    const RingPtr& ring() const noexcept { return coeff_.ring(); }

    Polynomial operator()(const Polynomial& g) const;

private:
    Polynomial coeff_;
};

Polynomial endo_apply(const TwistedEndo& sigma, const Polynomial& g);

enum class VerdictKind { Splitting, SpansSplitting, NotSplitting };

struct SplitVerdict {
    VerdictKind kind;
    // The nonzero constant sigma(1) for Splitting / SpansSplitting.
    std::optional<Coefficient> constant;
    // sigma(1) when it is not a nonzero constant.
    std::optional<Polynomial> witness;

    std::string name() const;
};

SplitVerdict check_splitting(const TwistedEndo& sigma);
// For homogeneous coefficients: decides from the coefficient of
// x_1^{p-1}...x_n^{p-1} and the degree alone. Throws NotHomogeneous.
SplitVerdict homogeneous_fastpath(const TwistedEndo& sigma);

// Whether the splitting sigma is a D-splitting for D = div(h): h | coeff.
// Throws InvalidArgument on h = 0 and NotASplitting if sigma is not a splitting.
bool d_splitting_check(const TwistedEndo& sigma, const Polynomial& h);

struct Fraction {
    Polynomial numerator;
    Polynomial denominator;
};
// sigma_S(num/den) = sigma(num * den^{p-1}) / den, left unreduced.
Fraction localized_apply(const TwistedEndo& sigma, const Polynomial& num, const Polynomial& den);
bool same_fraction(const Fraction& a, const Fraction& b);

// sigma (x) tau on the ring with the concatenated variable list.
TwistedEndo tensor_endo(const TwistedEndo& a, const TwistedEndo& b);

struct P1Extension {
    bool extends = false;
    // Coefficient in the chart at infinity, in a one-variable ring.
    std::optional<Polynomial> other_chart;
    bool compatible_zero = false;
    bool compatible_infinity = false;
};
// Arity-1 sigma on A^1 = Spec F_p[x]; checks extension to P^1 via the chart
// y = 1/x where (dx)^{1-p} = (-1)^{1-p} y^{2(p-1)} (dy)^{1-p}.
P1Extension p1_extension_check(const TwistedEndo& sigma);
// The chart change applied to a coefficient of degree <= 2(p-1).
Polynomial p1_chart_transform(const Polynomial& coeff, const RingPtr& target);

class NumericalSemigroup {
public:
    // Throws InvalidArgument unless the generators are positive with gcd 1.
    explicit NumericalSemigroup(std::vector<std::uint64_t> generators);

    const std::vector<std::uint64_t>& generators() const noexcept { return generators_; }
    const std::vector<std::uint64_t>& gaps() const noexcept { return gaps_; }
    // Least c with [c, inf) inside the semigroup.
    std::uint64_t conductor() const noexcept { return conductor_; }
    bool contains(std::uint64_t m) const noexcept;

private:
    std::vector<std::uint64_t> generators_;
    std::vector<std::uint64_t> gaps_;
    std::uint64_t conductor_ = 0;
    std::vector<bool> member_;  // membership below the conductor
};

struct SemigroupVerdict {
    bool split = false;
    // Smallest gap m with p*m in the semigroup, when not split.
    std::optional<std::uint64_t> witness;
};
SemigroupVerdict semigroup_split_check(const NumericalSemigroup& s, const Prime& p);

}  // namespace fsplit
