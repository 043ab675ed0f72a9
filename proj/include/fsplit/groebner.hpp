#pragma once

#include <vector>

#include "fsplit/monomial.hpp"
#include "fsplit/polynomial.hpp"

namespace fsplit {

// A finitely generated ideal. Zero generators are dropped, so an empty
// generator list is the zero ideal.
class IdealPresentation {
public:
    IdealPresentation(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    bool is_zero() const noexcept { return generators_.empty(); }

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> generators_;
};

// Reduced Groebner basis: monic, interreduced, sorted by descending leading
// monomial under its order.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> basis)
        : ring_(std::move(ring)), order_(order), basis_(std::move(basis)) {}

    const RingPtr& ring() const noexcept { return ring_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Polynomial>& basis() const noexcept { return basis_; }

    bool is_zero_ideal() const noexcept { return basis_.empty(); }
    bool is_unit() const noexcept { return basis_.size() == 1 && basis_[0].is_constant(); }
    bool contains(const Polynomial& f) const;
    // Leading monomial of basis element i under order().
    Monomial leading_monomial(std::size_t i) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Polynomial> basis_;
};

GroebnerBasis buchberger(const IdealPresentation& ideal, MonomialOrder order = MonomialOrder::grevlex());

// Remainder of full multivariate division of f by the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

// Leading monomial of f under an arbitrary order. f must be nonzero.
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// Buchberger's criterion checked directly on every pair; used by tests to
// certify computed bases.
bool all_s_polynomials_reduce(const GroebnerBasis& g);
bool is_reduced(const GroebnerBasis& g);

}  // namespace fsplit
