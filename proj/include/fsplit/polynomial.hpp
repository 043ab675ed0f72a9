#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsplit/errors.hpp"
#include "fsplit/monomial.hpp"
#include "fsplit/prime.hpp"

namespace fsplit {

// The ring F_p[x_1, ..., x_n] with named variables.
class RingContext {
public:
    RingContext(Prime prime, std::vector<std::string> variables);

    const Prime& prime() const noexcept { return prime_; }
    std::uint32_t p() const noexcept { return prime_.value(); }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    std::size_t arity() const noexcept { return variables_.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const RingContext&, const RingContext&) = default;

private:
    Prime prime_;
    std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(std::uint64_t p, std::vector<std::string> variables);
bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

struct Term {
    Monomial monomial;
    std::uint32_t coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial over F_p. Terms are kept sorted in descending grevlex
// order with no zero coefficients, so equality and printing are canonical.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring);

    static Polynomial constant(RingPtr ring, std::int64_t value);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial variable(RingPtr ring, std::string_view name);
    static Polynomial monomial(RingPtr ring, Monomial m, std::uint32_t coeff = 1);
    // Sorts, merges duplicate monomials and drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const noexcept { return ring_; }
    const Prime& prime() const noexcept { return ring_->prime(); }
    std::size_t arity() const noexcept { return ring_->arity(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    // The constant value when the polynomial is constant (zero included).
    std::optional<Coefficient> constant_value() const;
    Coefficient coefficient_of(const Monomial& m) const;
    const Term& leading_term() const;
    std::uint64_t total_degree() const noexcept;
    // Largest exponent of variable i over all terms.
    Monomial::Exponent degree_in(std::size_t i) const noexcept;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(std::uint32_t c) const;
    Polynomial times_monomial(const Monomial& m, std::uint32_t c = 1) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    // Arbitrary but fixed total order, for use as a container key.
    friend bool operator<(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

private:
    Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
    void require_same_ring(const Polynomial& o) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

// Raised by exact_divide; carries the nonzero remainder of the division.
class NotDivisible : public Error {
public:
    NotDivisible(const std::string& what, Polynomial remainder)
        : Error(what), remainder_(std::move(remainder)) {}
    const char* kind() const noexcept override { return "NotDivisible"; }
    const Polynomial& remainder() const noexcept { return remainder_; }

private:
    Polynomial remainder_;
};

std::string render_monomial(const RingContext& ring, const Monomial& m);

// f^p computed by scaling every exponent by p.
Polynomial frobenius_power(const Polynomial& f);
// Square-and-multiply.
Polynomial pow(const Polynomial& f, std::uint64_t e);
// f^{p-1} as the exact quotient f^p / f. Throws InvalidArgument on zero.
Polynomial pow_p_minus_1(const Polynomial& f);
Polynomial pow_p_minus_1_by_squaring(const Polynomial& f);

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};
// Multivariate division by a single divisor under grevlex.
DivisionResult divide(const Polynomial& a, const Polynomial& b);
// Throws NotDivisible when b does not divide a, InvalidArgument when b = 0.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& b, const Polynomial& a);

Polynomial substitute_zero(const Polynomial& f, std::size_t var);

struct Homogeneity {
    std::uint64_t degree;
    bool zero;  // the zero polynomial; homogeneous of every degree
};
std::optional<Homogeneity> is_homogeneous(const Polynomial& f);

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

// Ring map sending variable i of f's ring to images[i].
Polynomial compose(const Polynomial& f, const std::vector<Polynomial>& images);
// Re-expresses f in target, sending variable i to variable index_map[i].
Polynomial embed(const Polynomial& f, const RingPtr& target, const std::vector<std::size_t>& index_map);

}  // namespace fsplit
