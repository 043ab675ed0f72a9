#include "fsplit/groebner.hpp"

#include <algorithm>
#include <limits>

namespace fsplit {

namespace {

// Term list sorted descending by an arbitrary monomial order.
using Terms = std::vector<Term>;

Terms sorted_terms(const Polynomial& f, const MonomialOrder& order) {
    Terms t = f.terms();
    if (order.kind() != OrderKind::Grevlex) {
        std::sort(t.begin(), t.end(),
                  [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
    }
    return t;
}

// a + c * m * b, both sorted descending under `order`.
Terms axpy(const Prime& prime, const MonomialOrder& order, const Terms& a, const Terms& b, const Monomial& m,
           std::uint32_t c) {
    Terms out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    Monomial shifted;
    bool have_shifted = false;
    while (i < a.size() || j < b.size()) {
        if (j < b.size() && !have_shifted) {
            shifted = b[j].monomial * m;
            have_shifted = true;
        }
        int cmp = i == a.size() ? -1 : j == b.size() ? 1 : order.compare(a[i].monomial, shifted);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            std::uint32_t v = prime.mul(b[j].coeff, c);
            if (v != 0) out.push_back({std::move(shifted), v});
            ++j;
            have_shifted = false;
        } else {
            std::uint32_t v = prime.add(a[i].coeff, prime.mul(b[j].coeff, c));
            if (v != 0) out.push_back({a[i].monomial, v});
            ++i;
            ++j;
            have_shifted = false;
        }
    }
    return out;
}

void make_monic(const Prime& prime, Terms& f) {
    if (f.empty() || f.front().coeff == 1) return;
    std::uint32_t inv = prime.inv(f.front().coeff);
    for (auto& t : f) t.coeff = prime.mul(t.coeff, inv);
}

// Full reduction of f by monic divisors.
Terms reduce(const Prime& prime, const MonomialOrder& order, Terms f, const std::vector<const Terms*>& divisors) {
    Terms remainder;
    std::size_t head = 0;
    while (head < f.size()) {
        const Term& t = f[head];
        const Terms* hit = nullptr;
        for (const Terms* d : divisors) {
            if (d->front().monomial.divides(t.monomial)) {
                hit = d;
                break;
            }
        }
        if (hit == nullptr) {
            remainder.push_back(t);
            ++head;
            continue;
        }
        Monomial m = t.monomial / hit->front().monomial;
        std::uint32_t c = prime.neg(t.coeff);
        Terms rest(f.begin() + static_cast<std::ptrdiff_t>(head), f.end());
        f = axpy(prime, order, rest, *hit, m, c);
        head = 0;
    }
    return remainder;
}

Polynomial to_polynomial(const RingPtr& ring, Terms t) { return Polynomial::from_terms(ring, std::move(t)); }

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

class Buchberger {
public:
    Buchberger(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(order), prime_(ring_->prime()) {}

    GroebnerBasis run(const std::vector<Polynomial>& generators) {
        for (const auto& g : generators) {
            Terms t = reduce(prime_, order_, sorted_terms(g, order_), active_terms());
            if (t.empty()) continue;
            make_monic(prime_, t);
            add(std::move(t));
        }
        while (!pairs_.empty()) {
            std::size_t best = select();
            Pair pair = pairs_[best];
            pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
            Terms s = spoly(polys_[pair.i], polys_[pair.j], pair.lcm);
            Terms h = reduce(prime_, order_, std::move(s), active_terms());
            if (h.empty()) continue;
            make_monic(prime_, h);
            add(std::move(h));
        }
        return finish();
    }

private:
    std::vector<const Terms*> active_terms() const {
        std::vector<const Terms*> out;
        out.reserve(active_.size());
        for (std::size_t g : active_) out.push_back(&polys_[g]);
        return out;
    }

    const Monomial& lead(std::size_t k) const { return polys_[k].front().monomial; }

    Terms spoly(const Terms& f, const Terms& g, const Monomial& lcm) const {
        Terms a = axpy(prime_, order_, Terms{}, f, lcm / f.front().monomial, 1);
        return axpy(prime_, order_, a, g, lcm / g.front().monomial, prime_.neg(1));
    }

    // Normal strategy: smallest lcm first; ties broken by insertion.
    std::size_t select() const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            if (order_.compare(pairs_[k].lcm, pairs_[best].lcm) < 0) best = k;
        }
        return best;
    }

    // Gebauer-Moeller installation of a new basis element.
    void add(Terms h_terms) {
        if (h_terms.front().monomial.is_one()) {
            // Unit ideal.
            polys_.push_back(std::move(h_terms));
            active_ = {polys_.size() - 1};
            pairs_.clear();
            return;
        }
        polys_.push_back(std::move(h_terms));
        const std::size_t h = polys_.size() - 1;
        const Monomial& lh = lead(h);

        std::vector<Pair> candidates;
        for (std::size_t g : active_) candidates.push_back({g, h, lead(g).lcm(lh)});

        std::vector<Pair> kept;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            const Pair& c = candidates[k];
            bool keep = lead(c.i).coprime(lh);
            if (!keep) {
                keep = true;
                for (std::size_t l = k + 1; l < candidates.size() && keep; ++l) {
                    if (candidates[l].lcm.divides(c.lcm)) keep = false;
                }
                for (const auto& d : kept) {
                    if (!keep) break;
                    if (d.lcm.divides(c.lcm)) keep = false;
                }
            }
            if (keep) kept.push_back(c);
        }

        std::vector<Pair> next;
        for (auto& b : pairs_) {
            bool drop = lh.divides(b.lcm) && lead(b.i).lcm(lh) != b.lcm && lead(b.j).lcm(lh) != b.lcm;
            if (!drop) next.push_back(std::move(b));
        }
        for (auto& c : kept) {
            if (!lead(c.i).coprime(lh)) next.push_back(std::move(c));
        }
        pairs_ = std::move(next);

        std::vector<std::size_t> still;
        for (std::size_t g : active_) {
            if (!lh.divides(lead(g))) still.push_back(g);
        }
        still.push_back(h);
        active_ = std::move(still);
    }

    GroebnerBasis finish() const {
        std::vector<Terms> reduced;
        reduced.reserve(active_.size());
        for (std::size_t k = 0; k < active_.size(); ++k) {
            std::vector<const Terms*> others;
            for (std::size_t l = 0; l < active_.size(); ++l) {
                if (l != k) others.push_back(&polys_[active_[l]]);
            }
            // The lead term is irreducible by the others (minimal basis), so
            // reduction only rewrites the tail.
            Terms t = reduce(prime_, order_, polys_[active_[k]], others);
            make_monic(prime_, t);
            reduced.push_back(std::move(t));
        }
        std::sort(reduced.begin(), reduced.end(), [&](const Terms& a, const Terms& b) {
            return order_.greater(a.front().monomial, b.front().monomial);
        });
        std::vector<Polynomial> basis;
        basis.reserve(reduced.size());
        for (auto& t : reduced) basis.push_back(to_polynomial(ring_, std::move(t)));
        return GroebnerBasis(ring_, order_, std::move(basis));
    }

    RingPtr ring_;
    MonomialOrder order_;
    const Prime& prime_;
    std::vector<Terms> polys_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
};

}  // namespace

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) {
        if (!same_ring(g.ring(), ring_)) throw ContextMismatch("ideal generator belongs to a different ring");
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }
}

std::string IdealPresentation::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i > 0) out += ", ";
        out += generators_[i].to_string();
    }
    return out + ")";
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) throw InvalidArgument("zero polynomial has no leading monomial");
    const Monomial* best = &f.terms().front().monomial;
    for (const auto& t : f.terms()) {
        if (order.greater(t.monomial, *best)) best = &t.monomial;
    }
    return *best;
}

Monomial GroebnerBasis::leading_monomial(std::size_t i) const { return fsplit::leading_monomial(basis_.at(i), order_); }

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
    if (!same_ring(f.ring(), g.ring())) throw ContextMismatch("normal_form: polynomial and basis rings differ");
    std::vector<Terms> divisors;
    divisors.reserve(g.basis().size());
    for (const auto& b : g.basis()) divisors.push_back(sorted_terms(b, g.order()));
    std::vector<const Terms*> ptrs;
    for (const auto& d : divisors) ptrs.push_back(&d);
    return to_polynomial(f.ring(), reduce(f.prime(), g.order(), sorted_terms(f, g.order()), ptrs));
}

bool GroebnerBasis::contains(const Polynomial& f) const {
    if (is_unit()) return true;
    return normal_form(f, *this).is_zero();
}

std::string GroebnerBasis::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i > 0) out += ", ";
        out += basis_[i].to_string();
    }
    return out + "}";
}

GroebnerBasis buchberger(const IdealPresentation& ideal, MonomialOrder order) {
    if (order.kind() == OrderKind::Elim && order.block() >= ideal.ring()->arity()) {
        throw InvalidArgument("elimination block must be smaller than the number of variables");
    }
    return Buchberger(ideal.ring(), order).run(ideal.generators());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    Monomial lf = leading_monomial(f, order);
    Monomial lg = leading_monomial(g, order);
    Monomial l = lf.lcm(lg);
    const Prime& prime = f.prime();
    std::uint32_t cf = prime.inv(f.coefficient_of(lf).residue());
    std::uint32_t cg = prime.inv(g.coefficient_of(lg).residue());
    return f.times_monomial(l / lf, cf) - g.times_monomial(l / lg, cg);
}

bool all_s_polynomials_reduce(const GroebnerBasis& g) {
    const auto& b = g.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (!normal_form(s_polynomial(b[i], b[j], g.order()), g).is_zero()) return false;
        }
    }
    return true;
}

bool is_reduced(const GroebnerBasis& g) {
    const auto& b = g.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        Monomial li = g.leading_monomial(i);
        if (!b[i].coefficient_of(li).is_one()) return false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (i == j) continue;
            Monomial lj = g.leading_monomial(j);
            for (const auto& t : b[i].terms()) {
                if (lj.divides(t.monomial)) return false;
            }
        }
    }
    return true;
}

}  // namespace fsplit
