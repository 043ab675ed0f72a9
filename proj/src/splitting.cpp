#include "fsplit/splitting.hpp"

#include <algorithm>
#include <numeric>

namespace fsplit {

Polynomial sigma0(const Polynomial& f) {
    const std::uint32_t p = f.ring()->p();
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        bool survives = true;
        for (auto e : t.monomial.exponents()) {
            if ((std::uint64_t{e} + 1) % p != 0) {
                survives = false;
                break;
            }
        }
        if (!survives) continue;
        std::vector<Monomial::Exponent> root(t.monomial.arity());
        for (std::size_t i = 0; i < root.size(); ++i) root[i] = (t.monomial[i] - (p - 1)) / p;
        out.push_back({Monomial(std::move(root)), t.coeff});
    }
    return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial TwistedEndo::operator()(const Polynomial& g) const { return sigma0(coeff_ * g); }

Polynomial endo_apply(const TwistedEndo& sigma, const Polynomial& g) { return sigma(g); }

std::string SplitVerdict::name() const {
    switch (kind) {
        case VerdictKind::Splitting:
            return "splitting";
        case VerdictKind::SpansSplitting:
            return "spans";
        case VerdictKind::NotSplitting:
            return "not-splitting";
    }
    return "unknown";
}

namespace {

SplitVerdict verdict_from_image(Polynomial image) {
    if (auto c = image.constant_value(); c && !c->is_zero()) {
        return {c->is_one() ? VerdictKind::Splitting : VerdictKind::SpansSplitting, *c, std::nullopt};
    }
    return {VerdictKind::NotSplitting, std::nullopt, std::move(image)};
}

Monomial full_pattern(std::size_t arity, std::uint32_t p) {
    return Monomial(std::vector<Monomial::Exponent>(arity, p - 1));
}

}  // namespace

SplitVerdict check_splitting(const TwistedEndo& sigma) { return verdict_from_image(sigma0(sigma.coeff())); }

SplitVerdict homogeneous_fastpath(const TwistedEndo& sigma) {
    const Polynomial& f = sigma.coeff();
    auto h = is_homogeneous(f);
    if (!h) throw NotHomogeneous("coefficient " + f.to_string() + " is not homogeneous");
    const std::uint32_t p = f.ring()->p();
    const std::uint64_t pattern_degree = std::uint64_t{f.arity()} * (p - 1);
    if (h->zero || h->degree < pattern_degree) return {VerdictKind::NotSplitting, std::nullopt, Polynomial(f.ring())};
    if (h->degree == pattern_degree) {
        // sigma0(f) is then the constant coefficient of the (p-1)-pattern.
        Coefficient c = f.coefficient_of(full_pattern(f.arity(), p));
        if (c.is_zero()) return {VerdictKind::NotSplitting, std::nullopt, Polynomial(f.ring())};
        return {c.is_one() ? VerdictKind::Splitting : VerdictKind::SpansSplitting, c, std::nullopt};
    }
    // Higher degree: sigma0(f) is homogeneous of positive degree or zero.
    return {VerdictKind::NotSplitting, std::nullopt, sigma0(f)};
}

bool d_splitting_check(const TwistedEndo& sigma, const Polynomial& h) {
    if (h.is_zero()) throw InvalidArgument("divisor equation must be nonzero");
    if (check_splitting(sigma).kind != VerdictKind::Splitting) {
        throw NotASplitting(sigma.coeff().to_string() + " * sigma0 is not a splitting");
    }
    return divides(h, sigma.coeff());
}

Fraction localized_apply(const TwistedEndo& sigma, const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw InvalidArgument("zero denominator");
    Polynomial shifted = num * pow(den, sigma.ring()->p() - 1);
    return {sigma(shifted), den};
}

bool same_fraction(const Fraction& a, const Fraction& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
}

TwistedEndo tensor_endo(const TwistedEndo& a, const TwistedEndo& b) {
    const RingContext& ra = *a.ring();
    const RingContext& rb = *b.ring();
    if (!(ra.prime() == rb.prime())) throw ContextMismatch("tensor product across different primes");
    std::vector<std::string> vars = ra.variables();
    for (const auto& v : rb.variables()) {
        if (ra.index_of(v)) throw InvalidArgument("tensor factors share the variable '" + v + "'");
        vars.push_back(v);
    }
    RingPtr joint = std::make_shared<const RingContext>(ra.prime(), std::move(vars));
    std::vector<std::size_t> left(ra.arity());
    std::vector<std::size_t> right(rb.arity());
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), ra.arity());
    return TwistedEndo(embed(a.coeff(), joint, left) * embed(b.coeff(), joint, right));
}

Polynomial p1_chart_transform(const Polynomial& coeff, const RingPtr& target) {
    if (coeff.arity() != 1 || target->arity() != 1) throw InvalidArgument("P^1 charts need one variable");
    const Prime& prime = coeff.prime();
    const std::uint32_t p = prime.value();
    const std::uint64_t top = 2 * std::uint64_t{p - 1};
    if (coeff.total_degree() > top) throw InvalidArgument("degree exceeds 2(p-1); no extension to P^1");
    // (-1)^{p-1}
    const std::uint32_t sign = (p - 1) % 2 == 0 ? 1 : prime.neg(1);
    std::vector<Term> out;
    for (const auto& t : coeff.terms()) {
        out.push_back({Monomial{static_cast<Monomial::Exponent>(top - t.monomial[0])}, prime.mul(sign, t.coeff)});
    }
    return Polynomial::from_terms(target, std::move(out));
}

P1Extension p1_extension_check(const TwistedEndo& sigma) {
    const Polynomial& f = sigma.coeff();
    if (f.arity() != 1) throw InvalidArgument("P^1 extension needs a one-variable ring");
    const std::uint32_t p = f.ring()->p();
    P1Extension result;
    result.compatible_zero = !f.is_zero() && f.terms().back().monomial[0] >= p - 1;
    if (f.total_degree() > 2 * std::uint64_t{p - 1}) return result;
    result.extends = true;
    std::string other = f.ring()->variables()[0] == "y" ? "x" : "y";
    RingPtr chart = std::make_shared<const RingContext>(f.ring()->prime(), std::vector<std::string>{other});
    Polynomial g = p1_chart_transform(f, chart);
    result.compatible_infinity = !g.is_zero() && g.terms().back().monomial[0] >= p - 1;
    result.other_chart = std::move(g);
    return result;
}

NumericalSemigroup::NumericalSemigroup(std::vector<std::uint64_t> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw InvalidArgument("a numerical semigroup needs at least one generator");
    std::uint64_t g = 0;
    for (auto a : generators_) {
        if (a == 0) throw InvalidArgument("semigroup generators must be positive");
        g = std::gcd(g, a);
    }
    if (g != 1) throw InvalidArgument("semigroup generators must have gcd 1");
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());

    const std::uint64_t smallest = generators_.front();
    const std::uint64_t largest = generators_.back();
    // Schur: the Frobenius number is below (smallest - 1) * (largest - 1).
    const std::uint64_t limit = (smallest - 1) * (largest - 1) + smallest + 1;
    if (limit > (std::uint64_t{1} << 26)) throw InvalidArgument("semigroup generators too large");

    std::vector<bool> member(limit, false);
    member[0] = true;
    std::uint64_t run = 1;
    std::uint64_t m = 1;
    for (; m < limit && run < smallest; ++m) {
        for (auto a : generators_) {
            if (a <= m && member[m - a]) {
                member[m] = true;
                break;
            }
        }
        if (member[m]) {
            ++run;
        } else {
            run = 0;
            gaps_.push_back(m);
        }
    }
    conductor_ = gaps_.empty() ? 0 : gaps_.back() + 1;
    member.resize(conductor_);
    member_ = std::move(member);
}

bool NumericalSemigroup::contains(std::uint64_t m) const noexcept { return m >= conductor_ || member_[m]; }

SemigroupVerdict semigroup_split_check(const NumericalSemigroup& s, const Prime& p) {
    SemigroupVerdict v;
    if (s.gaps().empty()) {
        v.split = true;
        return v;
    }
    for (auto m : s.gaps()) {
        if (s.contains(p.value() * m)) {
            v.witness = m;
            return v;
        }
    }
    // Unreachable: the largest gap c-1 has p(c-1) >= c.
    throw Error("no semigroup witness found");
}

}  // namespace fsplit
