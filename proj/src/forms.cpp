#include "fsplit/forms.hpp"

#include <algorithm>


namespace fsplit {

namespace {

// Sorts in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<std::size_t>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    return sign;
}

}  // namespace

DifferentialForm::DifferentialForm(RingPtr ring, std::size_t degree) : ring_(std::move(ring)), degree_(degree) {
    if (degree_ > ring_->arity()) throw InvalidArgument("form degree exceeds the number of variables");
}

DifferentialForm DifferentialForm::function(const Polynomial& f) {
    DifferentialForm w(f.ring(), 0);
    w.accumulate({}, f);
    return w;
}

DifferentialForm DifferentialForm::basis(const Polynomial& f, Indices indices) {
    for (auto i : indices) {
        if (i >= f.arity()) throw InvalidArgument("form index out of range");
    }
    DifferentialForm w(f.ring(), indices.size());
    int sign = sort_with_sign(indices);
    if (sign == 0) return w;
    w.accumulate(indices, sign > 0 ? f : -f);
    return w;
}

DifferentialForm DifferentialForm::volume(const RingPtr& ring) {
    Indices all(ring->arity());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return basis(Polynomial::constant(ring, 1), std::move(all));
}

Polynomial DifferentialForm::coefficient(const Indices& indices) const {
    auto it = components_.find(indices);
    return it == components_.end() ? Polynomial(ring_) : it->second;
}

void DifferentialForm::accumulate(const Indices& indices, const Polynomial& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = components_.try_emplace(indices, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) components_.erase(it);
    }
}

void DifferentialForm::require_compatible(const DifferentialForm& o) const {
    if (!same_ring(ring_, o.ring_)) throw ContextMismatch("forms belong to different rings");
    if (degree_ != o.degree_) throw InvalidArgument("forms have different degrees");
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
    require_compatible(o);
    DifferentialForm out = *this;
    for (const auto& [idx, f] : o.components_) out.accumulate(idx, f);
    return out;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& o) const {
    require_compatible(o);
    DifferentialForm out = *this;
    for (const auto& [idx, f] : o.components_) out.accumulate(idx, -f);
    return out;
}

DifferentialForm DifferentialForm::operator*(const Polynomial& f) const {
    DifferentialForm out(ring_, degree_);
    for (const auto& [idx, g] : components_) out.accumulate(idx, g * f);
    return out;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
    return same_ring(a.ring_, b.ring_) && a.degree_ == b.degree_ && a.components_ == b.components_;
}

std::string DifferentialForm::to_string() const {
    if (components_.empty()) return "0";
    std::string out;
    for (const auto& [idx, f] : components_) {
        std::string dx;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (k > 0) dx += '^';
            dx += "d" + ring_->variables()[idx[k]];
        }
        for (const auto& t : f.terms()) {
            if (!out.empty()) out += " + ";
            std::string coeff;
            if (t.monomial.is_one()) {
                coeff = t.coeff == 1 && !dx.empty() ? "" : std::to_string(t.coeff);
            } else {
                coeff = (t.coeff == 1 ? "" : std::to_string(t.coeff) + "*") + render_monomial(*ring_, t.monomial);
            }
            out += coeff;
            if (!coeff.empty() && !dx.empty()) out += ' ';
            out += dx;
        }
    }
    return out;
}

DifferentialForm exterior_d(const DifferentialForm& w) {
    const std::size_t n = w.ring()->arity();
    if (w.degree() >= n) return DifferentialForm(w.ring(), std::min(w.degree() + 1, n));
    DifferentialForm out(w.ring(), w.degree() + 1);
    for (const auto& [idx, f] : w.components()) {
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial df = partial_derivative(f, j);
            if (df.is_zero()) continue;
            DifferentialForm::Indices with_j{j};
            with_j.insert(with_j.end(), idx.begin(), idx.end());
            out = out + DifferentialForm::basis(df, std::move(with_j));
        }
    }
    return out;
}

DifferentialForm exterior_d(const Polynomial& f) { return exterior_d(DifferentialForm::function(f)); }

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    if (!same_ring(a.ring(), b.ring())) throw ContextMismatch("forms belong to different rings");
    if (a.degree() + b.degree() > a.ring()->arity()) throw InvalidArgument("wedge degree exceeds the dimension");
    DifferentialForm out(a.ring(), a.degree() + b.degree());
    for (const auto& [ia, fa] : a.components()) {
        for (const auto& [ib, fb] : b.components()) {
            DifferentialForm::Indices joined = ia;
            joined.insert(joined.end(), ib.begin(), ib.end());
            out = out + DifferentialForm::basis(fa * fb, std::move(joined));
        }
    }
    return out;
}

Polynomial phi_poly(const Prime& p) {
    RingPtr ring = std::make_shared<const RingContext>(p, std::vector<std::string>{"X", "Y"});
    const std::uint32_t n = p.value();
    // Exact integer binomials, divided by p before reduction. binom(61, k)
    // still fits in 128 bits; beyond that use the congruence below.
    std::vector<Term> terms;
    if (n <= 61) {
        unsigned __int128 binom = 1;
        for (std::uint32_t k = 1; k < n; ++k) {
            binom = binom * (n - k + 1) / k;
            auto c = static_cast<std::uint32_t>((binom / n) % n);
            if (c != 0) terms.push_back({Monomial{n - k, k}, c});
        }
    } else {
        // binom(p, k)/p = (p-1)!/(k!(p-k)!) = (-1)^{k-1}/k mod p.
        for (std::uint32_t k = 1; k < n; ++k) {
            std::uint32_t c = p.inv(k);
            if ((k - 1) % 2 == 1) c = p.neg(c);
            terms.push_back({Monomial{n - k, k}, c});
        }
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

DifferentialForm gamma(const Polynomial& f) {
    if (f.is_zero()) return DifferentialForm(f.ring(), std::min<std::size_t>(1, f.arity()));
    return exterior_d(f) * pow(f, f.ring()->p() - 1);
}

Polynomial cartier_top(const Polynomial& g) {
    // Per monomial: if some m_i + 1 is prime to p, x^m tau is the boundary
    // exactness_witness(m) and C kills it. Otherwise x_1...x_n x^m = h^p and
    // x^m tau = h^p dlog x_1 ^ ... ^ dlog x_n, so C(x^m tau) = h / (x_1...x_n) tau.
    const RingPtr& ring = g.ring();
    const std::uint32_t p = ring->p();
    const std::size_t n = ring->arity();
    std::vector<Term> out;
    for (const auto& t : g.terms()) {
        bool boundary = false;
        for (std::size_t i = 0; i < n && !boundary; ++i) boundary = (std::uint64_t{t.monomial[i]} + 1) % p != 0;
        if (boundary) continue;
        std::vector<Monomial::Exponent> root(n);
        for (std::size_t i = 0; i < n; ++i) root[i] = (t.monomial[i] + 1) / p;
        Monomial h(std::move(root));
        out.push_back({h / Monomial(std::vector<Monomial::Exponent>(n, 1)), t.coeff});
    }
    return Polynomial::from_terms(ring, std::move(out));
}

DifferentialForm cartier_top(const DifferentialForm& top) {
    const std::size_t n = top.ring()->arity();
    if (top.degree() != n) throw InvalidArgument("cartier_top needs a top-degree form");
    DifferentialForm::Indices all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return DifferentialForm::basis(cartier_top(top.coefficient(all)), all);
}

DifferentialForm exactness_witness(const RingPtr& ring, const Monomial& m) {
    const std::size_t n = ring->arity();
    if (m.arity() != n) throw ContextMismatch("monomial arity does not match ring");
    if (n == 0) throw NoSuchIndex("no variables");
    const Prime& prime = ring->prime();
    std::size_t i = n;
    for (std::size_t k = 0; k < n; ++k) {
        if ((std::uint64_t{m[k]} + 1) % prime.value() != 0) {
            i = k;
            break;
        }
    }
    if (i == n) throw NoSuchIndex("every exponent is congruent to p-1; x^m dx_1^...^dx_n is not exhibited as exact");

    Monomial shifted = m;
    shifted.set(i, m[i] + 1);
    // d(x_i x^m) = (m_i + 1) x^m dx_i, and moving dx_i to slot i costs (-1)^i.
    std::uint32_t c = prime.inv(prime.reduce(std::int64_t{m[i]} + 1));
    if (i % 2 == 1) c = prime.neg(c);
    DifferentialForm::Indices rest;
    for (std::size_t k = 0; k < n; ++k) {
        if (k != i) rest.push_back(k);
    }
    DifferentialForm eta = DifferentialForm::basis(Polynomial::monomial(ring, shifted, c), std::move(rest));
    if (exterior_d(eta) != DifferentialForm::volume(ring) * Polynomial::monomial(ring, m)) {
        throw Error("exactness witness failed its defining equation");
    }
    return eta;
}

}  // namespace fsplit
