// Acceptance suite: one PASS/FAIL line per criterion, each under its own
// wall-clock limit. Exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "fsplit/forms.hpp"
#include "fsplit/ideal.hpp"
#include "fsplit/parser.hpp"
#include "fsplit/residue.hpp"
#include "fsplit/splitting.hpp"
#include "support.hpp"

using namespace fsplit;
using namespace fsplit::test;

namespace {

// Records the first failed requirement.
class Outcome {
public:
    void require(bool ok, const std::string& what) {
        if (!ok && failure_.empty()) failure_ = what;
    }
    bool ok() const { return failure_.empty(); }
    const std::string& failure() const { return failure_; }

private:
    std::string failure_;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Outcome&)> body;
};

std::string str(std::uint32_t p) { return "p=" + std::to_string(p); }

IdealPresentation ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> polys;
    for (const char* g : gens) polys.push_back(parse_polynomial(g, r));
    return IdealPresentation(r, std::move(polys));
}

void cross(Outcome& out) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        auto r = make_ring(p, {"x", "y"});
        TwistedEndo s(parse_polynomial("(x*y)^(p-1)", r));
        out.require(check_splitting(s).kind == VerdictKind::Splitting, "cross not splitting at " + str(p));
        auto I = ideal(r, {"x*y"});
        out.require(is_compatible(s, I, CompatMethod::Fedder), "cross/(xy) fedder at " + str(p));
        out.require(is_compatible(s, I, CompatMethod::Finite), "cross/(xy) finite at " + str(p));
    }
}

void node(Outcome& out) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        auto r = make_ring(p, {"x", "y"});
        TwistedEndo s(parse_polynomial("(y^2-x^3-x^2)^(p-1)", r));
        out.require(check_splitting(s).kind == VerdictKind::Splitting, "node not splitting at " + str(p));
    }
    auto r2 = make_ring(2, {"x", "y"});
    auto v = check_splitting(TwistedEndo(parse_polynomial("(y^2-x^3-x^2)^(p-1)", r2)));
    out.require(v.kind == VerdictKind::NotSplitting, "node equation splits at p=2");
    out.require(v.witness && v.witness->is_zero(), "node equation at p=2: witness is not 0");
}

void cusp(Outcome& out) {
    NumericalSemigroup s23({2, 3});
    auto v = semigroup_split_check(s23, Prime(2));
    out.require(!v.split && v.witness == 1u, "<2,3> at p=2: expected witness 1");
    out.require(!s23.contains(1) && s23.contains(2), "<2,3>: t not in A or t^2 in A fails");
    out.require(semigroup_split_check(NumericalSemigroup({1}), Prime(2)).split, "<1> not split");
    NumericalSemigroup s35({3, 5});
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto w = semigroup_split_check(s35, Prime(p));
        out.require(!w.split && w.witness, "<3,5> split at " + str(p));
        if (w.witness) {
            out.require(!s35.contains(*w.witness) && s35.contains(p * *w.witness), "<3,5> witness invalid at " + str(p));
        }
    }
}

void parabola(Outcome& out) {
    for (std::uint32_t p : {2u, 3u}) {
        auto r = make_ring(p, {"x", "y"});
        auto e = exists_compatible_splitting(ideal(r, {"y*(y-x^2)"}));
        out.require(!e.exists, "parabola admits a compatible splitting at " + str(p));
        out.require(!e.obstruction.is_unit() && !e.obstruction.is_zero_ideal(), "obstruction not strictly below (1)");
    }
    auto r2 = make_ring(2, {"x", "y"});
    auto k = nilpotent_witness(parse_polynomial("x", r2), ideal(r2, {"y", "y-x^2"}), 4);
    out.require(k == 2u, "nilpotent witness is not 2");
}

void matrix_chains(Outcome& out) {
    const std::vector<std::size_t> order2 = {0, 1, 2, 3};
    const std::vector<std::size_t> order3 = {0, 1, 3, 4, 2, 6, 5, 7, 8};
    for (unsigned n : {2u, 3u}) {
        for (std::uint32_t p : {2u, 3u}) {
            std::string at = "n=" + std::to_string(n) + " " + str(p);
            auto ring = matrix_ring(n, p);
            auto f = matrix_section(n, ring);
            auto h = is_homogeneous(f);
            out.require(h && h->degree == n * n * (p - 1) && ring->arity() == n * n, "section degree wrong at " + at);
            auto chain = certify_chain(f, n == 2 ? order2 : order3);
            out.require(!chain.terminal.is_zero(), "chain terminal zero at " + at);
            out.require(origin_coefficient(f).is_one(), "origin coefficient is not 1 at " + at);
            out.require(homogeneous_fastpath(TwistedEndo(f)).kind == VerdictKind::Splitting, "fast path verdict at " + at);
        }
    }
}

void matrix_compat(Outcome& out) {
    for (unsigned n : {2u, 3u}) {
        auto ring = matrix_ring(n, 2);
        std::vector<unsigned> all(n);
        for (unsigned i = 0; i < n; ++i) all[i] = i;
        IdealPresentation det(ring, {minor_determinant(ring, n, all, all)});
        TwistedEndo s(matrix_section(n, ring));
        out.require(is_compatible(s, det, CompatMethod::Both), "not compatible with det at n=" + std::to_string(n));
    }
    for (std::uint32_t p : {2u, 3u}) {
        auto ring = matrix_ring(2, p);
        IdealPresentation minors(ring, {minor_determinant(ring, 2, {0, 1}, {0, 1})});
        TwistedEndo s(matrix_section(2, ring));
        out.require(is_compatible(s, minors, CompatMethod::Both), "2x2 minors ideal at " + str(p));
    }
}

void fedder_agreement(Outcome& out) {
    std::mt19937_64 rng(2024);
    int disagreements = 0;
    int compatible = 0;
    for (int i = 0; i < 100; ++i) {
        std::uint32_t p = i % 2 == 0 ? 2 : 3;
        std::size_t n = 1 + static_cast<std::size_t>((i / 2) % 3);
        auto ring = make_ring(p, var_names(n));
        std::vector<Polynomial> gens{random_nonzero(ring, rng, 3, 3)};
        if (i % 3 != 0) gens.push_back(random_nonzero(ring, rng, 3, 3));
        IdealPresentation I(ring, gens);
        Polynomial coeff = random_poly(ring, rng, 4, static_cast<unsigned>(n * (p - 1) + 1));
        // Every other instance draws its coefficient from the module so that
        // both verdicts occur.
        if (i % 2 == 1) coeff = fedder_module(I).generators()[0] * random_poly(ring, rng, 2, 2);
        TwistedEndo s(coeff);
        bool a = is_compatible(s, I, CompatMethod::Fedder);
        bool b = is_compatible(s, I, CompatMethod::Finite);
        if (a != b) ++disagreements;
        if (a) ++compatible;
    }
    out.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    out.require(compatible > 0 && compatible < 100, "degenerate sample: " + std::to_string(compatible) + " compatible");
}

void splitting_axioms(Outcome& out) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[i % 3];
        std::size_t n = 1 + static_cast<std::size_t>(i % 3);
        auto ring = make_ring(p, var_names(n));
        TwistedEndo s(random_splitting_coeff(ring, rng, 4, 6));
        out.require(check_splitting(s).kind == VerdictKind::Splitting, "generated sigma is not a splitting");
        auto a = random_poly(ring, rng, 4, 4);
        auto b = random_poly(ring, rng, 4, 4);
        out.require(s(a + b) == s(a) + s(b), "additivity");
        out.require(s(frobenius_power(a) * b) == a * s(b), "twisted linearity");
        out.require(s(frobenius_power(a)) == a, "left inverse of Frobenius");
    }
}

void cartier_suite(Outcome& out) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            auto ring = make_ring(p, var_names(n));
            std::vector<Monomial::Exponent> e(n, 0);
            const unsigned max_degree = 3 * p;
            for (;;) {
                unsigned total = 0;
                for (auto x : e) total += x;
                if (total <= max_degree) {
                    Monomial m(e);
                    auto f = Polynomial::monomial(ring, m);
                    out.require(cartier_top(f) == sigma0(f), "cartier_top != sigma0 on " + f.to_string());
                    bool applicable = false;
                    for (auto x : e) applicable = applicable || (x + 1) % p != 0;
                    if (applicable) {
                        auto eta = exactness_witness(ring, m);
                        out.require(exterior_d(eta) == DifferentialForm::volume(ring) * f,
                                    "witness fails on " + f.to_string());
                    }
                }
                std::size_t i = 0;
                while (i < n && ++e[i] > max_degree) e[i++] = 0;
                if (i == n) break;
            }
        }
        std::mt19937_64 rng(p);
        auto ring = make_ring(p, {"x", "y"});
        auto phi = phi_poly(Prime(p));
        for (int i = 0; i < 100; ++i) {
            auto f = random_poly(ring, rng, 3, 3);
            auto g = random_poly(ring, rng, 3, 3);
            out.require(gamma(f + g) == gamma(f) + gamma(g) + exterior_d(compose(phi, {f, g})),
                        "gamma additivity at " + str(p));
        }
    }
}

void p1_and_dsplit(Outcome& out) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto r = make_ring(p, {"x"});
        auto e = p1_extension_check(TwistedEndo(parse_polynomial("x^(p-1)", r)));
        out.require(e.extends && e.compatible_zero && e.compatible_infinity, "x^(p-1) on P1 at " + str(p));
        out.require(!p1_extension_check(TwistedEndo(parse_polynomial("x^(2*p-1)", r))).extends,
                    "x^(2p-1) extends at " + str(p));
        auto r2 = make_ring(p, {"x", "y"});
        TwistedEndo cross(parse_polynomial("(x*y)^(p-1)", r2));
        out.require(d_splitting_check(cross, parse_polynomial("x*y", r2)), "D = div(xy) at " + str(p));
        out.require(d_splitting_check(cross, parse_polynomial("(x*y)^(p-1)", r2)), "D = div((xy)^(p-1)) at " + str(p));
        out.require(!d_splitting_check(cross, parse_polynomial("(x*y)^p", r2)), "D = div((xy)^p) at " + str(p));
    }
}

void localization(Outcome& out) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        std::uint32_t p = i % 2 == 0 ? 2 : 3;
        auto ring = make_ring(p, {"x", "y"});
        TwistedEndo s(random_poly(ring, rng, 4, 4));
        auto a = random_poly(ring, rng, 3, 3);
        auto b = random_nonzero(ring, rng, 3, 3);
        auto c = random_nonzero(ring, rng, 3, 2);
        out.require(same_fraction(localized_apply(s, a, b), localized_apply(s, a * c, b * c)), "a/b vs ac/bc");
    }
}

void parser(Outcome& out) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        std::uint32_t p = std::array<std::uint32_t, 4>{2, 3, 5, 101}[i % 4];
        auto ring = make_ring(p, var_names(1 + static_cast<std::size_t>(i % 4)));
        auto f = random_poly(ring, rng, 6, 6);
        out.require(parse_polynomial(f.to_string(), ring) == f, "round trip of " + f.to_string());
    }
    auto r3 = make_ring(3, {"x", "y"});
    out.require(to_dense(parse_polynomial("(x*y)^(p-1)", r3)) == Dense{{{2, 2}, 1}}, "(x*y)^(p-1)");
    Dense node = {{{0, 2}, 1}, {{3, 0}, -1}, {{2, 0}, -1}};
    out.require(to_dense(parse_polynomial("(y^2-x^3-x^2)^(p-1)", r3)) == dense_pow(node, 2, 2, 3),
                "(y^2-x^3-x^2)^(p-1)");
    auto r2 = make_ring(2, {"x"});
    out.require(to_dense(parse_polynomial("x^(p-2)", r2)) == Dense{{{0}, 1}}, "x^(p-2)");
    std::string cmd = std::string("\"") + FSPLIT_CLI + "\" corpus run \"" + FSPLIT_CORPUS + "\" > /dev/null";
    out.require(std::system(cmd.c_str()) == 0, "shipped corpus does not exit 0");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "cross splits and is compatible with (xy)", 1, cross},
        {2, "node splits for p in {3,5,7}, not at p=2", 1, node},
        {3, "cusp semigroup witnesses", 1, cusp},
        {4, "parabola: no compatible splitting, nilpotent x", 5, parabola},
        {5, "matrix sections: residue chains and fast path", 30, matrix_chains},
        {6, "matrix section compatible with determinant ideals", 120, matrix_compat},
        {7, "Fedder and finite methods agree on 100 instances", 120, fedder_agreement},
        {8, "splitting axioms on 200 triples", 10, splitting_axioms},
        {9, "Cartier operator, exactness witnesses, gamma additivity", 30, cartier_suite},
        {10, "P1 extension and D-splitting", 1, p1_and_dsplit},
        {11, "localization well-definedness", 5, localization},
        {12, "parser round trip, corpus expressions, shipped corpus", 10, parser},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome out;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(out);
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.ok() && seconds > c.limit_seconds) {
            out.require(false, "exceeded " + std::to_string(c.limit_seconds) + " s");
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.3fs/%.0fs", seconds, c.limit_seconds);
        std::cout << (out.ok() ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << ")";
        if (!out.ok()) std::cout << ": " << out.failure();
        std::cout << '\n';
        if (!out.ok()) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
