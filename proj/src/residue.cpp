#include "fsplit/residue.hpp"

#include <numeric>
#include <set>

namespace fsplit {

Polynomial residue_step(const Polynomial& f, std::size_t var) {
    if (var >= f.arity()) throw InvalidArgument("variable index " + std::to_string(var) + " out of range");
    const std::uint32_t p = f.ring()->p();
    const std::string& name = f.ring()->variables()[var];
    // x^{p-1} | f iff every term carries x^{p-1}; the quotient just shifts exponents.
    std::vector<Term> shifted;
    std::vector<Term> remainder;
    for (const auto& t : f.terms()) {
        if (t.monomial[var] >= p - 1) {
            Monomial m = t.monomial;
            m.set(var, t.monomial[var] - (p - 1));
            shifted.push_back({std::move(m), t.coeff});
        } else {
            remainder.push_back(t);
        }
    }
    if (f.is_zero() || !remainder.empty()) {
        throw NotDivisible(name + "^" + std::to_string(p - 1) + " does not divide " + f.to_string(),
                           Polynomial::from_terms(f.ring(), std::move(remainder)));
    }
    Polynomial result = substitute_zero(Polynomial::from_terms(f.ring(), std::move(shifted)), var);
    if (result.is_zero()) throw VanishingResidue("residue along " + name + " = 0 vanishes");
    return result;
}

std::vector<std::size_t> ResidueChain::order() const {
    std::vector<std::size_t> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.variable);
    return out;
}

ResidueChain certify_chain(const Polynomial& f, const std::vector<std::size_t>& order) {
    std::set<std::size_t> seen;
    for (auto v : order) {
        if (v >= f.arity()) throw InvalidArgument("variable index " + std::to_string(v) + " out of range");
        if (!seen.insert(v).second) throw InvalidArgument("variable listed twice in residue order");
    }
    std::vector<ResidueStep> steps;
    Polynomial current = f;
    for (auto v : order) {
        current = residue_step(current, v);
        steps.push_back({v, current});
    }
    auto c = current.constant_value();
    if (!c || c->is_zero()) throw NonConstantTerminal("chain ends in non-constant " + current.to_string());
    return {f, std::move(steps), *c};
}

namespace {

class ChainSearch {
public:
    explicit ChainSearch(const Polynomial& f) : n_(f.arity()), used_(f.arity(), false) {}

    bool run(const Polynomial& current, std::size_t depth) {
        if (depth == n_) {
            auto c = current.constant_value();
            return c && !c->is_zero();
        }
        if (failed_.count(current)) return false;
        for (std::size_t v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            std::optional<Polynomial> next;
            try {
                next = residue_step(current, v);
            } catch (const NotDivisible&) {
                continue;
            } catch (const VanishingResidue&) {
                continue;
            }
            used_[v] = true;
            steps_.push_back({v, *next});
            if (run(*next, depth + 1)) return true;
            steps_.pop_back();
            used_[v] = false;
        }
        // The set of used variables is determined by which variables are
        // absent, so the polynomial alone keys the failure.
        failed_.insert(current);
        return false;
    }

    std::vector<ResidueStep> steps_;

private:
    std::size_t n_;
    std::vector<bool> used_;
    std::set<Polynomial> failed_;
};

}  // namespace

std::optional<ResidueChain> search_chain(const Polynomial& f) {
    ChainSearch search(f);
    if (!search.run(f, 0)) return std::nullopt;
    Coefficient terminal = search.steps_.empty() ? *f.constant_value() : *search.steps_.back().result.constant_value();
    return ResidueChain{f, std::move(search.steps_), terminal};
}

Coefficient origin_coefficient(const Polynomial& f) {
    const std::uint32_t p = f.ring()->p();
    return f.coefficient_of(Monomial(std::vector<Monomial::Exponent>(f.arity(), p - 1)));
}

RingPtr matrix_ring(unsigned n, std::uint64_t p) {
    if (n < 1 || n > 9) throw InvalidArgument("matrix size must be in [1, 9]");
    std::vector<std::string> vars;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 1; j <= n; ++j) vars.push_back("x" + std::to_string(i) + std::to_string(j));
    }
    return make_ring(p, std::move(vars));
}

Polynomial minor_determinant(const RingPtr& ring, unsigned n, const std::vector<unsigned>& rows,
                             const std::vector<unsigned>& cols) {
    if (rows.size() != cols.size()) throw InvalidArgument("minor needs as many rows as columns");
    if (rows.empty()) return Polynomial::constant(ring, 1);
    Polynomial det(ring);
    std::vector<unsigned> rest_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<unsigned> rest_cols;
        for (std::size_t l = 0; l < cols.size(); ++l) {
            if (l != k) rest_cols.push_back(cols[l]);
        }
        Polynomial entry = Polynomial::variable(ring, rows[0] * n + cols[k]);
        Polynomial term = entry * minor_determinant(ring, n, rest_rows, rest_cols);
        det = k % 2 == 0 ? det + term : det - term;
    }
    return det;
}

std::vector<Polynomial> matrix_factors(unsigned n, const RingPtr& ring) {
    if (n < 1) throw InvalidArgument("matrix size must be at least 1");
    if (ring->arity() != std::size_t{n} * n) throw ContextMismatch("matrix ring needs n^2 variables");
    std::vector<Polynomial> out;
    for (unsigned k = 1; k <= n; ++k) {
        std::vector<unsigned> idx(k);
        std::iota(idx.begin(), idx.end(), 0u);
        out.push_back(minor_determinant(ring, n, idx, idx));
    }
    for (unsigned k = n - 1; k >= 1; --k) {
        std::vector<unsigned> idx(k);
        std::iota(idx.begin(), idx.end(), n - k);
        out.push_back(minor_determinant(ring, n, idx, idx));
    }
    return out;
}

Polynomial matrix_section(unsigned n, const RingPtr& ring) {
    Polynomial product = Polynomial::constant(ring, 1);
    for (const auto& f : matrix_factors(n, ring)) product *= f;
    return pow(product, ring->p() - 1);
}

}  // namespace fsplit
