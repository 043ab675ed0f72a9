#include "fsplit/prime.hpp"

namespace fsplit {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

Prime::Prime(std::uint64_t value) {
    if (value > kMax) throw InvalidArgument("prime " + std::to_string(value) + " exceeds 2^31 - 1");
    if (!is_prime(value)) throw InvalidArgument(std::to_string(value) + " is not prime");
    value_ = static_cast<std::uint32_t>(value);
}

std::uint32_t Prime::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t result = 1 % value_;
    std::uint32_t base = a % value_;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t Prime::inv(std::uint32_t a) const {
    if (a % value_ == 0) throw InvalidArgument("zero has no inverse mod " + std::to_string(value_));
    return pow(a, value_ - 2);
}

}  // namespace fsplit
