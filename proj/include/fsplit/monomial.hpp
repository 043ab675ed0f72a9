#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace fsplit {

// Exponent vector x_1^{e_1} ... x_n^{e_n}. Arity is fixed at construction.
class Monomial {
public:
    using Exponent = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
    explicit Monomial(std::vector<Exponent> exps);
    Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

    std::size_t arity() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }
    std::uint64_t degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    void set(std::size_t i, Exponent e);

    bool divides(const Monomial& other) const noexcept;
    bool coprime(const Monomial& other) const noexcept;

    // Throws ExponentOverflow when an exponent leaves 32 bits.
    Monomial operator*(const Monomial& other) const;
    Monomial scaled(std::uint64_t factor) const;
    // Precondition: other divides *this.
    Monomial operator/(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        return a.exps_ <=> b.exps_;
    }

    std::size_t hash() const noexcept;

private:
    std::vector<Exponent> exps_;
    std::uint64_t degree_ = 0;
};

enum class OrderKind { Lex, Grevlex, Elim };

// Total monomial orders compatible with multiplication. Elim(k) compares
// the first k variables by grevlex first and breaks ties by grevlex on the
// remaining ones, so it eliminates the first k variables.
class MonomialOrder {
public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::Grevlex, 0); }
    static MonomialOrder elim(std::size_t block) { return MonomialOrder(OrderKind::Elim, block); }

    OrderKind kind() const noexcept { return kind_; }
    std::size_t block() const noexcept { return block_; }

    // Positive when a > b, negative when a < b, zero when equal.
    int compare(const Monomial& a, const Monomial& b) const noexcept;
    bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(OrderKind kind, std::size_t block) : kind_(kind), block_(block) {}
    OrderKind kind_;
    std::size_t block_;
};

int grevlex_compare(std::span<const Monomial::Exponent> a, std::span<const Monomial::Exponent> b) noexcept;

}  // namespace fsplit

template <>
struct std::hash<fsplit::Monomial> {
    std::size_t operator()(const fsplit::Monomial& m) const noexcept { return m.hash(); }
};
