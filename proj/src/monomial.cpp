#include "fsplit/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "fsplit/errors.hpp"

namespace fsplit {

namespace {

constexpr std::uint64_t kExpMax = std::numeric_limits<Monomial::Exponent>::max();

Monomial::Exponent checked(std::uint64_t e) {
    if (e > kExpMax) throw ExponentOverflow("exponent " + std::to_string(e) + " exceeds 32 bits");
    return static_cast<Monomial::Exponent>(e);
}

std::uint64_t sum(std::span<const Monomial::Exponent> e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)), degree_(sum(exps_)) {}

void Monomial::set(std::size_t i, Exponent e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked(std::uint64_t{exps_[i]} + other.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::scaled(std::uint64_t factor) const {
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (exps_[i] != 0 && factor > kExpMax / exps_[i]) {
            throw ExponentOverflow("exponent " + std::to_string(exps_[i]) + " times " + std::to_string(factor) +
                                   " exceeds 32 bits");
        }
        e[i] = static_cast<Exponent>(exps_[i] * factor);
    }
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - other.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

std::size_t Monomial::hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Exponent e : exps_) h = (h ^ e) * 0x100000001b3ull;
    return h;
}

int grevlex_compare(std::span<const Monomial::Exponent> a, std::span<const Monomial::Exponent> b) noexcept {
    std::uint64_t da = sum(a);
    std::uint64_t db = sum(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind_) {
        case OrderKind::Lex:
            for (std::size_t i = 0; i < a.arity(); ++i) {
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            }
            return 0;
        case OrderKind::Grevlex: {
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            for (std::size_t i = a.arity(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
            return 0;
        }
        case OrderKind::Elim: {
            auto ea = a.exponents();
            auto eb = b.exponents();
            if (int c = grevlex_compare(ea.first(block_), eb.first(block_)); c != 0) return c;
            return grevlex_compare(ea.subspan(block_), eb.subspan(block_));
        }
    }
    return 0;
}

}  // namespace fsplit
