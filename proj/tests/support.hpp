#pragma once

// Test helpers. The Dense model below is a deliberately naive polynomial
// representation (exponent vector -> integer) used as an oracle against the
// library's sparse arithmetic; it shares no code with it.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "fsplit/polynomial.hpp"

namespace fsplit::test {

using Exps = std::vector<std::uint32_t>;
using Dense = std::map<Exps, std::int64_t>;

inline std::int64_t mod(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

inline Dense normalize(const Dense& d, std::int64_t p) {
    Dense out;
    for (const auto& [e, c] : d) {
        std::int64_t r = mod(c, p);
        if (r != 0) out[e] = r;
    }
    return out;
}

inline Dense to_dense(const Polynomial& f) {
    Dense out;
    for (const auto& t : f.terms()) {
        Exps e(t.monomial.exponents().begin(), t.monomial.exponents().end());
        out[e] = t.coeff;
    }
    return out;
}

inline Polynomial from_dense(const RingPtr& ring, const Dense& d) {
    Polynomial out(ring);
    for (const auto& [e, c] : d) {
        out += Polynomial::monomial(ring, Monomial(e), static_cast<std::uint32_t>(mod(c, ring->p())));
    }
    return out;
}

inline Dense dense_mul(const Dense& a, const Dense& b, std::int64_t p) {
    Dense out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] = mod(out[e] + ca * cb, p);
        }
    }
    return normalize(out, p);
}

inline Dense dense_add(const Dense& a, const Dense& b, std::int64_t p) {
    Dense out = a;
    for (const auto& [e, c] : b) out[e] += c;
    return normalize(out, p);
}

inline Dense dense_pow(const Dense& a, unsigned k, std::size_t arity, std::int64_t p) {
    Dense out{{Exps(arity, 0), 1}};
    for (unsigned i = 0; i < k; ++i) out = dense_mul(out, a, p);
    return out;
}

// Term-by-term sigma0 straight from its definition.
inline Dense dense_sigma0(const Dense& a, std::uint32_t p) {
    Dense out;
    for (const auto& [e, c] : a) {
        bool keep = true;
        for (auto x : e) keep = keep && (x % p == p - 1);
        if (!keep) continue;
        Exps r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r[i] = (e[i] - (p - 1)) / p;
        out[r] = c;
    }
    return out;
}

inline std::vector<std::string> var_names(std::size_t n) {
    static const char* names[] = {"x", "y", "z", "w", "u", "v"};
    return {names, names + n};
}

// Random polynomial with up to max_terms terms of total degree <= max_deg.
inline Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng, unsigned max_terms, unsigned max_deg) {
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> coeff(1, ring->p() - 1);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::vector<Term> terms;
    unsigned count = nterms(rng);
    for (unsigned t = 0; t < count; ++t) {
        unsigned budget = deg(rng);
        std::vector<Monomial::Exponent> e(ring->arity(), 0);
        std::uniform_int_distribution<std::size_t> pick(0, ring->arity() - 1);
        for (unsigned k = 0; k < budget && ring->arity() > 0; ++k) ++e[pick(rng)];
        terms.push_back({Monomial(std::move(e)), coeff(rng)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

inline Polynomial random_nonzero(const RingPtr& ring, std::mt19937_64& rng, unsigned max_terms, unsigned max_deg) {
    for (;;) {
        Polynomial f = random_poly(ring, rng, max_terms, max_deg);
        if (!f.is_zero()) return f;
    }
}

// A coefficient whose sigma0 is exactly 1: (x_1...x_n)^{p-1} (1 - F(sigma0(r))) + r.
inline Polynomial random_splitting_coeff(const RingPtr& ring, std::mt19937_64& rng, unsigned max_terms,
                                         unsigned max_deg) {
    Monomial corner(std::vector<Monomial::Exponent>(ring->arity(), ring->p() - 1));
    Polynomial base = Polynomial::monomial(ring, corner);
    Polynomial r = random_poly(ring, rng, max_terms, max_deg);
    Dense s = dense_sigma0(to_dense(r), ring->p());
    Polynomial lift(ring);
    for (const auto& [e, c] : s) {
        Exps scaled(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) scaled[i] = e[i] * ring->p();
        lift += Polynomial::monomial(ring, Monomial(scaled), static_cast<std::uint32_t>(c));
    }
    return base - base * lift + r;
}

}  // namespace fsplit::test
