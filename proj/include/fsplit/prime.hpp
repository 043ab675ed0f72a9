#pragma once

#include <cstdint>
#include <string>

#include "fsplit/errors.hpp"

namespace fsplit {

// A prime p, verified by trial division. Residues mod p fit in 32 bits and
// products are formed in 64 bits.
class Prime {
public:
    static constexpr std::uint64_t kMax = (std::uint64_t{1} << 31) - 1;

    explicit Prime(std::uint64_t value);

    std::uint32_t value() const noexcept { return value_; }

    std::uint32_t reduce(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(value_);
        return static_cast<std::uint32_t>(r < 0 ? r + value_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= value_ ? s - value_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : a + value_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : value_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(std::uint64_t{a} * b % value_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
    // Throws InvalidArgument on zero.
    std::uint32_t inv(std::uint32_t a) const;

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    std::uint32_t value_;
};

// An element of F_p together with its prime.
class Coefficient {
public:
    Coefficient(std::uint32_t residue, Prime prime) : residue_(residue % prime.value()), prime_(prime) {}

    std::uint32_t residue() const noexcept { return residue_; }
    const Prime& prime() const noexcept { return prime_; }
    bool is_zero() const noexcept { return residue_ == 0; }
    bool is_one() const noexcept { return residue_ == 1; }

    Coefficient operator+(const Coefficient& o) const { return {prime_.add(residue_, o.residue_), prime_}; }
    Coefficient operator-(const Coefficient& o) const { return {prime_.sub(residue_, o.residue_), prime_}; }
    Coefficient operator*(const Coefficient& o) const { return {prime_.mul(residue_, o.residue_), prime_}; }
    Coefficient operator-() const { return {prime_.neg(residue_), prime_}; }
    Coefficient inverse() const { return {prime_.inv(residue_), prime_}; }

    friend bool operator==(const Coefficient&, const Coefficient&) = default;

    std::string to_string() const { return std::to_string(residue_); }

private:
    std::uint32_t residue_;
    Prime prime_;
};

}  // namespace fsplit
