#pragma once

#include <map>
#include <string>
#include <vector>

#include "fsplit/polynomial.hpp"

namespace fsplit {

// Polynomial differential k-form: sum of f_I dx_I over strictly increasing
// index tuples I of length k, with zero coefficients dropped.
class DifferentialForm {
public:
    using Indices = std::vector<std::size_t>;

    DifferentialForm(RingPtr ring, std::size_t degree);
    static DifferentialForm function(const Polynomial& f);
    // f dx_{i_1} ^ ... ^ dx_{i_k}; the indices may be unsorted, the sign of
    // the sorting permutation is applied and repeated indices give 0.
    static DifferentialForm basis(const Polynomial& f, Indices indices);
    // dx_1 ^ ... ^ dx_n.
    static DifferentialForm volume(const RingPtr& ring);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t degree() const noexcept { return degree_; }
    const std::map<Indices, Polynomial>& components() const noexcept { return components_; }
    bool is_zero() const noexcept { return components_.empty(); }
    Polynomial coefficient(const Indices& indices) const;

    DifferentialForm operator+(const DifferentialForm& o) const;
    DifferentialForm operator-(const DifferentialForm& o) const;
    DifferentialForm operator*(const Polynomial& f) const;

    friend bool operator==(const DifferentialForm& a, const DifferentialForm& b);

    // e.g. "y dx + x dy", "2*x^2 dx^dy"; 0-forms render as polynomials.
    std::string to_string() const;

private:
    void accumulate(const Indices& indices, const Polynomial& f);
    void require_compatible(const DifferentialForm& o) const;

    RingPtr ring_;
    std::size_t degree_;
    std::map<Indices, Polynomial> components_;
};

DifferentialForm exterior_d(const DifferentialForm& w);
DifferentialForm exterior_d(const Polynomial& f);
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

// ((X+Y)^p - X^p - Y^p)/p over the integers, reduced mod p, in F_p[X, Y].
Polynomial phi_poly(const Prime& p);
// f^{p-1} df.
DifferentialForm gamma(const Polynomial& f);
// Top-degree Cartier operator in the coordinates tau = dx_1 ^ ... ^ dx_n,
// returning the coefficient of C(g tau). Evaluated from the boundary and
// dlog rules, independently of sigma0, with which it must agree.
Polynomial cartier_top(const Polynomial& g);
DifferentialForm cartier_top(const DifferentialForm& top);
// An (n-1)-form eta with d(eta) = x^m dx_1^...^dx_n, built from the first
// index i with (m_i + 1) not divisible by p. Throws NoSuchIndex otherwise.
DifferentialForm exactness_witness(const RingPtr& ring, const Monomial& m);

}  // namespace fsplit
