#include "fsplit/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fsplit {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

bool term_greater(const Term& a, const Term& b) { return kGrevlex.greater(a.monomial, b.monomial); }

// Merge a + c*b for descending-sorted term lists.
std::vector<Term> merge_axpy(const Prime& prime, const std::vector<Term>& a, const std::vector<Term>& b,
                             std::uint32_t c) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        int cmp = i == a.size()   ? -1
                  : j == b.size() ? 1
                                  : kGrevlex.compare(a[i].monomial, b[j].monomial);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            std::uint32_t v = prime.mul(b[j].coeff, c);
            if (v != 0) out.push_back({b[j].monomial, v});
            ++j;
        } else {
            std::uint32_t v = prime.add(a[i].coeff, prime.mul(b[j].coeff, c));
            if (v != 0) out.push_back({a[i].monomial, v});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

RingContext::RingContext(Prime prime, std::vector<std::string> variables)
    : prime_(prime), variables_(std::move(variables)) {
    std::set<std::string> seen;
    for (const auto& v : variables_) {
        if (v.empty()) throw InvalidArgument("variable names must be nonempty");
        if (!seen.insert(v).second) throw InvalidArgument("duplicate variable name '" + v + "'");
    }
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i] == name) return i;
    }
    return std::nullopt;
}

RingPtr make_ring(std::uint64_t p, std::vector<std::string> variables) {
    return std::make_shared<const RingContext>(Prime(p), std::move(variables));
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept { return a == b || *a == *b; }

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t value) {
    std::uint32_t c = ring->prime().reduce(value);
    std::vector<Term> t;
    if (c != 0) t.push_back({Monomial(ring->arity()), c});
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->arity()) throw InvalidArgument("variable index " + std::to_string(index) + " out of range");
    Monomial m(ring->arity());
    m.set(index, 1);
    return monomial(std::move(ring), std::move(m));
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
    auto idx = ring->index_of(name);
    if (!idx) throw InvalidArgument("unknown variable '" + std::string(name) + "'");
    return variable(std::move(ring), *idx);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, std::uint32_t coeff) {
    if (m.arity() != ring->arity()) throw ContextMismatch("monomial arity does not match ring");
    coeff %= ring->p();
    std::vector<Term> t;
    if (coeff != 0) t.push_back({std::move(m), coeff});
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const Prime& prime = ring->prime();
    for (const auto& t : terms) {
        if (t.monomial.arity() != ring->arity()) throw ContextMismatch("monomial arity does not match ring");
    }
    std::sort(terms.begin(), terms.end(), term_greater);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        std::uint32_t c = t.coeff % prime.value();
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coeff = prime.add(out.back().coeff, c);
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back({std::move(t.monomial), c});
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

std::optional<Coefficient> Polynomial::constant_value() const {
    if (!is_constant()) return std::nullopt;
    return Coefficient(terms_.empty() ? 0 : terms_[0].coeff, prime());
}

Coefficient Polynomial::coefficient_of(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return kGrevlex.greater(t.monomial, x); });
    if (it != terms_.end() && it->monomial == m) return Coefficient(it->coeff, prime());
    return Coefficient(0, prime());
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const noexcept {
    // Descending grevlex puts the largest total degree first.
    return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

Monomial::Exponent Polynomial::degree_in(std::size_t i) const noexcept {
    Monomial::Exponent d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial[i]);
    return d;
}

void Polynomial::require_same_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw ContextMismatch("polynomials belong to different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(o);
    return Polynomial(ring_, merge_axpy(prime(), terms_, o.terms_, 1));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_ring(o);
    return Polynomial(ring_, merge_axpy(prime(), terms_, o.terms_, prime().neg(1)));
}

Polynomial Polynomial::operator-() const { return scaled(prime().neg(1)); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
    c %= prime().value();
    if (c == 0) return Polynomial(ring_);
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff = prime().mul(t.coeff, c);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_monomial(const Monomial& m, std::uint32_t c) const {
    c %= prime().value();
    if (c == 0) return Polynomial(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    // Multiplying by a monomial preserves any monomial order.
    for (const auto& t : terms_) out.push_back({t.monomial * m, prime().mul(t.coeff, c)});
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(o);
    if (is_zero() || o.is_zero()) return Polynomial(ring_);
    std::vector<Term> products;
    products.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) products.push_back({a.monomial * b.monomial, prime().mul(a.coeff, b.coeff)});
    }
    return from_terms(ring_, std::move(products));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                        [](const Term& x, const Term& y) {
                                            if (x.monomial != y.monomial) return x.monomial < y.monomial;
                                            return x.coeff < y.coeff;
                                        });
}

std::string render_monomial(const RingContext& ring, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.variables()[i];
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        if (t.monomial.is_one()) {
            out += std::to_string(t.coeff);
        } else if (t.coeff == 1) {
            out += render_monomial(*ring_, t.monomial);
        } else {
            out += std::to_string(t.coeff) + '*' + render_monomial(*ring_, t.monomial);
        }
    }
    return out;
}

Polynomial frobenius_power(const Polynomial& f) {
    std::vector<Term> out;
    out.reserve(f.size());
    // Scaling exponents by p is grevlex-monotone, so the order is preserved.
    for (const auto& t : f.terms()) out.push_back({t.monomial.scaled(f.ring()->p()), t.coeff});
    return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial pow(const Polynomial& f, std::uint64_t e) {
    Polynomial result = Polynomial::constant(f.ring(), 1);
    Polynomial base = f;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Polynomial pow_p_minus_1(const Polynomial& f) {
    if (f.is_zero()) throw InvalidArgument("pow_p_minus_1 of the zero polynomial");
    Polynomial q = exact_divide(frobenius_power(f), f);
#ifdef FSPLIT_CROSSCHECK
    if (q != pow_p_minus_1_by_squaring(f)) throw Error("pow_p_minus_1: quotient and square-and-multiply disagree");
#endif
    return q;
}

Polynomial pow_p_minus_1_by_squaring(const Polynomial& f) {
    if (f.is_zero()) throw InvalidArgument("pow_p_minus_1 of the zero polynomial");
    return pow(f, f.ring()->p() - 1);
}

DivisionResult divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
    if (!same_ring(a.ring(), b.ring())) throw ContextMismatch("polynomials belong to different rings");
    const Prime& prime = a.prime();
    const Term& lead = b.leading_term();
    std::uint32_t lead_inv = prime.inv(lead.coeff);

    std::vector<Term> quotient;
    std::vector<Term> remainder;
    std::vector<Term> r = a.terms();
    while (!r.empty()) {
        const Term& t = r.front();
        if (lead.monomial.divides(t.monomial)) {
            Monomial m = t.monomial / lead.monomial;
            std::uint32_t c = prime.mul(t.coeff, lead_inv);
            quotient.push_back({m, c});
            r = merge_axpy(prime, r, b.times_monomial(m, c).terms(), prime.neg(1));
        } else {
            remainder.push_back(t);
            r.erase(r.begin());
        }
    }
    return {Polynomial::from_terms(a.ring(), std::move(quotient)),
            Polynomial::from_terms(a.ring(), std::move(remainder))};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divide(a, b);
    if (!r.is_zero()) {
        throw NotDivisible("(" + b.to_string() + ") does not divide (" + a.to_string() + ")", std::move(r));
    }
    return q;
}

bool divides(const Polynomial& b, const Polynomial& a) { return divide(a, b).remainder.is_zero(); }

Polynomial substitute_zero(const Polynomial& f, std::size_t var) {
    if (var >= f.arity()) throw InvalidArgument("variable index " + std::to_string(var) + " out of range");
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (t.monomial[var] == 0) out.push_back(t);
    }
    return Polynomial::from_terms(f.ring(), std::move(out));
}

std::optional<Homogeneity> is_homogeneous(const Polynomial& f) {
    if (f.is_zero()) return Homogeneity{0, true};
    std::uint64_t d = f.terms().front().monomial.degree();
    for (const auto& t : f.terms()) {
        if (t.monomial.degree() != d) return std::nullopt;
    }
    return Homogeneity{d, false};
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
    if (var >= f.arity()) throw InvalidArgument("variable index " + std::to_string(var) + " out of range");
    const Prime& prime = f.prime();
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        Monomial::Exponent e = t.monomial[var];
        std::uint32_t c = prime.mul(t.coeff, prime.reduce(e));
        if (c == 0) continue;
        Monomial m = t.monomial;
        m.set(var, e - 1);
        out.push_back({std::move(m), c});
    }
    return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial compose(const Polynomial& f, const std::vector<Polynomial>& images) {
    if (images.size() != f.arity()) throw InvalidArgument("compose needs one image per variable");
    if (images.empty()) throw InvalidArgument("compose needs at least one image to fix the target ring");
    const RingPtr& target = images.front().ring();
    for (const auto& g : images) {
        if (!same_ring(g.ring(), target)) throw ContextMismatch("compose images belong to different rings");
    }
    if (target->p() != f.ring()->p()) throw ContextMismatch("compose across different primes");

    // Cache powers per variable.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t i, Monomial::Exponent e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    Polynomial result(target);
    for (const auto& t : f.terms()) {
        Polynomial term = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < f.arity(); ++i) {
            if (t.monomial[i] != 0) term *= power(i, t.monomial[i]);
        }
        result += term;
    }
    return result;
}

Polynomial embed(const Polynomial& f, const RingPtr& target, const std::vector<std::size_t>& index_map) {
    if (index_map.size() != f.arity()) throw InvalidArgument("embed needs one target index per variable");
    if (target->p() != f.ring()->p()) throw ContextMismatch("embed across different primes");
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m(target->arity());
        for (std::size_t i = 0; i < f.arity(); ++i) {
            if (index_map[i] >= target->arity()) throw InvalidArgument("embed target index out of range");
            m.set(index_map[i], m[index_map[i]] + t.monomial[i]);
        }
        out.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(out));
}

}  // namespace fsplit
