#include "fsplit/ideal.hpp"

#include <cmath>
#include <map>
#include <numeric>

namespace fsplit {

namespace {

std::string fresh_name(const RingContext& ring, std::string base) {
    while (ring.index_of(base)) base += '_';
    return base;
}

IdealPresentation unit_ideal(const RingPtr& ring) { return IdealPresentation(ring, {Polynomial::constant(ring, 1)}); }

IdealPresentation as_reduced_presentation(const IdealPresentation& ideal) {
    GroebnerBasis g = buchberger(ideal);
    return IdealPresentation(ideal.ring(), g.basis());
}

}  // namespace

IdealPresentation frobenius_power_ideal(const IdealPresentation& ideal) {
    std::vector<Polynomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(frobenius_power(g));
    return IdealPresentation(ideal.ring(), std::move(gens));
}

IdealPresentation intersect(const IdealPresentation& a, const IdealPresentation& b) {
    if (!same_ring(a.ring(), b.ring())) throw ContextMismatch("intersect: ideals belong to different rings");
    const RingPtr& ring = a.ring();
    if (a.is_zero() || b.is_zero()) return IdealPresentation(ring, {});

    std::vector<std::string> vars{fresh_name(*ring, "t")};
    for (const auto& v : ring->variables()) vars.push_back(v);
    RingPtr tagged = std::make_shared<const RingContext>(ring->prime(), std::move(vars));
    std::vector<std::size_t> shift(ring->arity());
    std::iota(shift.begin(), shift.end(), 1);

    Polynomial t = Polynomial::variable(tagged, 0);
    Polynomial one_minus_t = Polynomial::constant(tagged, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(t * embed(f, tagged, shift));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * embed(g, tagged, shift));

    GroebnerBasis basis = buchberger(IdealPresentation(tagged, std::move(gens)), MonomialOrder::elim(1));

    std::vector<Polynomial> out;
    for (const auto& g : basis.basis()) {
        if (g.degree_in(0) != 0) continue;
        std::vector<Term> terms;
        for (const auto& term : g.terms()) {
            auto e = term.monomial.exponents();
            terms.push_back({Monomial(std::vector<Monomial::Exponent>(e.begin() + 1, e.end())), term.coeff});
        }
        out.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    return IdealPresentation(ring, std::move(out));
}

IdealPresentation colon_by_poly(const IdealPresentation& j, const Polynomial& g) {
    if (g.is_zero()) throw InvalidArgument("colon by the zero polynomial");
    if (!same_ring(j.ring(), g.ring())) throw ContextMismatch("colon_by_poly: rings differ");
    IdealPresentation meet = intersect(j, IdealPresentation(j.ring(), {g}));
    std::vector<Polynomial> quotients;
    quotients.reserve(meet.generators().size());
    for (const auto& h : meet.generators()) quotients.push_back(exact_divide(h, g));
    return IdealPresentation(j.ring(), std::move(quotients));
}

IdealPresentation fedder_module(const IdealPresentation& ideal) {
    const RingPtr& ring = ideal.ring();
    if (ideal.is_zero()) return unit_ideal(ring);
    IdealPresentation frob = frobenius_power_ideal(ideal);
    std::optional<IdealPresentation> acc;
    for (const auto& g : ideal.generators()) {
        IdealPresentation c = colon_by_poly(frob, g);
        acc = acc ? intersect(*acc, c) : c;
    }
    return as_reduced_presentation(*acc);
}

bool ideal_contains(const IdealPresentation& big, const IdealPresentation& small) {
    GroebnerBasis g = buchberger(big);
    for (const auto& f : small.generators()) {
        if (!g.contains(f)) return false;
    }
    return true;
}

bool ideals_equal(const IdealPresentation& a, const IdealPresentation& b) {
    return ideal_contains(a, b) && ideal_contains(b, a);
}

void check_enumeration_size(const RingContext& ring) {
    double bits = static_cast<double>(ring.arity()) * std::log2(static_cast<double>(ring.p()));
    if (bits > 12.0 + 1e-9) {
        throw EnumerationTooLarge("p^n = " + std::to_string(ring.p()) + "^" + std::to_string(ring.arity()) +
                                  " monomial shifts exceed the 2^12 enumeration cap");
    }
}

std::vector<Polynomial> sigma0_shifts(const Polynomial& f) {
    // Term x^e of f contributes to the shift a with a_i = (p-1-e_i) mod p,
    // landing on x^{(e+a-(p-1))/p}.
    const std::uint32_t p = f.ring()->p();
    std::map<std::vector<Monomial::Exponent>, std::vector<Term>> classes;
    for (const auto& t : f.terms()) {
        std::vector<Monomial::Exponent> shift(f.arity());
        std::vector<Monomial::Exponent> root(f.arity());
        for (std::size_t i = 0; i < f.arity(); ++i) {
            std::uint64_t e = t.monomial[i];
            std::uint64_t a = (p - 1 + p - e % p) % p;
            shift[i] = static_cast<Monomial::Exponent>(a);
            root[i] = static_cast<Monomial::Exponent>((e + a - (p - 1)) / p);
        }
        classes[shift].push_back({Monomial(std::move(root)), t.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(classes.size());
    for (auto& [shift, terms] : classes) out.push_back(Polynomial::from_terms(f.ring(), std::move(terms)));
    return out;
}

namespace {

bool compatible_fedder(const TwistedEndo& sigma, const IdealPresentation& ideal) {
    if (ideal.is_zero()) return true;
    return buchberger(fedder_module(ideal)).contains(sigma.coeff());
}

bool compatible_finite(const TwistedEndo& sigma, const IdealPresentation& ideal) {
    check_enumeration_size(*ideal.ring());
    if (ideal.is_zero()) return true;
    GroebnerBasis basis = buchberger(ideal);
    for (const auto& g : ideal.generators()) {
        for (const auto& image : sigma0_shifts(sigma.coeff() * g)) {
            if (!basis.contains(image)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_compatible(const TwistedEndo& sigma, const IdealPresentation& ideal, CompatMethod method) {
    if (!same_ring(sigma.ring(), ideal.ring())) throw ContextMismatch("is_compatible: rings differ");
    switch (method) {
        case CompatMethod::Fedder:
            return compatible_fedder(sigma, ideal);
        case CompatMethod::Finite:
            return compatible_finite(sigma, ideal);
        case CompatMethod::Both: {
            bool fedder = compatible_fedder(sigma, ideal);
            bool finite = compatible_finite(sigma, ideal);
            if (fedder != finite) {
                throw MethodDisagreement("fedder says " + std::string(fedder ? "true" : "false") + ", finite says " +
                                         (finite ? "true" : "false") + " for " + sigma.coeff().to_string() +
                                         " and " + ideal.to_string());
            }
            return fedder;
        }
    }
    return false;
}

ExistenceResult exists_compatible_splitting(const IdealPresentation& ideal) {
    check_enumeration_size(*ideal.ring());
    IdealPresentation module = fedder_module(ideal);
    std::vector<Polynomial> images;
    for (const auto& c : module.generators()) {
        for (auto& image : sigma0_shifts(c)) images.push_back(std::move(image));
    }
    GroebnerBasis obstruction = buchberger(IdealPresentation(ideal.ring(), std::move(images)));
    bool exists = obstruction.is_unit();
    return {exists, std::move(obstruction)};
}

std::optional<unsigned> nilpotent_witness(const Polynomial& g, const IdealPresentation& ideal, unsigned bound) {
    if (bound < 2) throw InvalidArgument("nilpotent_witness bound must be at least 2");
    if (!same_ring(g.ring(), ideal.ring())) throw ContextMismatch("nilpotent_witness: rings differ");
    GroebnerBasis basis = buchberger(ideal);
    if (basis.contains(g)) return std::nullopt;
    Polynomial power = g;
    for (unsigned k = 2; k <= bound; ++k) {
        power *= g;
        if (basis.contains(power)) return k;
    }
    return std::nullopt;
}

}  // namespace fsplit
