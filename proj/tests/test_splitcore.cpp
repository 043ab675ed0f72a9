#include <doctest.h>

#include <numeric>

#include "fsplit/parser.hpp"
#include "fsplit/splitting.hpp"
#include "support.hpp"

using namespace fsplit;
using namespace fsplit::test;

TEST_SUITE("splitcore") {

TEST_CASE("sigma0 examples") {
    auto r2 = make_ring(2, {"x", "y"});
    CHECK(sigma0(parse_polynomial("x*y", r2)).to_string() == "1");
    CHECK(sigma0(parse_polynomial("x^3*y", r2)).to_string() == "x");
    CHECK(sigma0(parse_polynomial("x^2", r2)).is_zero());
    auto r3 = make_ring(3, {"x", "y"});
    CHECK(sigma0(parse_polynomial("x^2*y^2", r3)).to_string() == "1");
    CHECK(sigma0(parse_polynomial("(y^2-x^3-x^2)^2", r3)).to_string() == "1");
}

TEST_CASE("endo_apply examples") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto r = make_ring(p, {"x", "y"});
        TwistedEndo cross(parse_polynomial("(x*y)^(p-1)", r));
        CHECK(cross(parse_polynomial("x^p", r)).to_string() == "x");
        TwistedEndo plain(Polynomial::constant(r, 1));
        CHECK(plain(parse_polynomial("(x*y)^(p-1)", r)).to_string() == "1");
    }
    auto r3 = make_ring(3, {"x", "y"});
    TwistedEndo node(parse_polynomial("(y^2-x^3-x^2)^2", r3));
    CHECK(endo_apply(node, Polynomial::constant(r3, 1)).to_string() == "1");
    CHECK_THROWS_AS(node(Polynomial::constant(make_ring(3, {"x"}), 1)), ContextMismatch);
}

TEST_CASE("check_splitting examples") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto r = make_ring(p, {"x", "y"});
        CHECK(check_splitting(TwistedEndo(parse_polynomial("(x*y)^(p-1)", r))).kind == VerdictKind::Splitting);
    }
    auto r3 = make_ring(3, {"x", "y"});
    CHECK(check_splitting(TwistedEndo(parse_polynomial("(y^2-x^3-x^2)^(p-1)", r3))).kind == VerdictKind::Splitting);

    auto r2 = make_ring(2, {"x", "y"});
    SplitVerdict cusp = check_splitting(TwistedEndo(parse_polynomial("y^2+x^3+x^2", r2)));
    CHECK(cusp.kind == VerdictKind::NotSplitting);
    REQUIRE(cusp.witness);
    CHECK(cusp.witness->is_zero());

    auto r5 = make_ring(5, {"x"});
    SplitVerdict spans = check_splitting(TwistedEndo(parse_polynomial("3*x^4", r5)));
    CHECK(spans.kind == VerdictKind::SpansSplitting);
    REQUIRE(spans.constant);
    CHECK(spans.constant->residue() == 3);
    auto rescaled = parse_polynomial("3*x^4", r5).scaled(spans.constant->inverse().residue());
    CHECK(check_splitting(TwistedEndo(rescaled)).kind == VerdictKind::Splitting);
}

TEST_CASE("homogeneous fast path") {
    auto r = make_ring(3, {"x", "y", "z"});
    CHECK(homogeneous_fastpath(TwistedEndo(parse_polynomial("(x*y*z)^2", r))).kind == VerdictKind::Splitting);
    CHECK(homogeneous_fastpath(TwistedEndo(parse_polynomial("x^2*y*z^2 + x*y^2*z^2", r))).kind ==
          VerdictKind::NotSplitting);
    CHECK_THROWS_AS(homogeneous_fastpath(TwistedEndo(parse_polynomial("x + y^2", r))), NotHomogeneous);
}

TEST_CASE("homogeneous fast path agrees with check_splitting") {
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {2u, 3u}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            auto ring = make_ring(p, var_names(n));
            for (int i = 0; i < 60; ++i) {
                // Homogeneous part of a random polynomial in a chosen degree,
                // often seeded with the corner monomial.
                auto f = random_poly(ring, rng, 6, static_cast<unsigned>(n * (p - 1) + 2));
                std::uint64_t target = (i % 3 == 0) ? n * (p - 1) + 1 : n * (p - 1);
                std::vector<Term> keep;
                for (const auto& t : f.terms()) {
                    if (t.monomial.degree() == target) keep.push_back(t);
                }
                if (i % 2 == 0 && target == n * (p - 1)) {
                    keep.push_back({Monomial(std::vector<Monomial::Exponent>(n, p - 1)), 1});
                }
                auto h = Polynomial::from_terms(ring, keep);
                if (h.is_zero()) continue;
                TwistedEndo s(h);
                auto fast = homogeneous_fastpath(s);
                auto full = check_splitting(s);
                CHECK(fast.kind == full.kind);
                CHECK(fast.name() == full.name());
            }
        }
    }
}

TEST_CASE("D-splitting truth table for the cross") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto r = make_ring(p, {"x", "y"});
        TwistedEndo cross(parse_polynomial("(x*y)^(p-1)", r));
        CHECK(d_splitting_check(cross, parse_polynomial("x*y", r)));
        CHECK(d_splitting_check(cross, parse_polynomial("(x*y)^(p-1)", r)));
        CHECK_FALSE(d_splitting_check(cross, parse_polynomial("(x*y)^p", r)));
        CHECK_THROWS_AS(d_splitting_check(cross, Polynomial(r)), InvalidArgument);
        CHECK_THROWS_AS(d_splitting_check(TwistedEndo(Polynomial::constant(r, 1)), parse_polynomial("x", r)),
                        NotASplitting);
    }
}

TEST_CASE("localization") {
    auto r = make_ring(3, {"t"});
    TwistedEndo split(parse_polynomial("t^2", r));
    Fraction f = localized_apply(split, parse_polynomial("t^3", r), Polynomial::constant(r, 1));
    CHECK(f.numerator.to_string() == "t");
    CHECK(f.denominator.to_string() == "1");
    CHECK_THROWS_AS(localized_apply(split, f.numerator, Polynomial(r)), InvalidArgument);

    // sigma0 applied to x^{p-1}/x: the formula gives sigma0(x^{p-1} x^{p-1}) / x.
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto rx = make_ring(p, {"x"});
        auto x = Polynomial::variable(rx, 0);
        Fraction g = localized_apply(TwistedEndo(Polynomial::constant(rx, 1)), pow(x, p - 1), x);
        Dense oracle = dense_sigma0({{{2 * (p - 1)}, 1}}, p);
        CHECK(to_dense(g.numerator) == oracle);
        CHECK(g.denominator == x);
    }
}

TEST_CASE("localization is well defined") {
    std::mt19937_64 rng(23);
    for (std::uint32_t p : {2u, 3u}) {
        auto ring = make_ring(p, {"x", "y"});
        for (int i = 0; i < 30; ++i) {
            TwistedEndo s(random_poly(ring, rng, 4, 4));
            auto a = random_poly(ring, rng, 3, 3);
            auto b = random_nonzero(ring, rng, 3, 3);
            auto c = random_nonzero(ring, rng, 3, 2);
            CHECK(same_fraction(localized_apply(s, a, b), localized_apply(s, a * c, b * c)));
        }
    }
}

TEST_CASE("tensor products") {
    for (std::uint32_t p : {2u, 3u}) {
        auto rx = make_ring(p, {"x"});
        auto ry = make_ring(p, {"y"});
        auto one = tensor_endo(TwistedEndo(Polynomial::constant(rx, 1)), TwistedEndo(Polynomial::constant(ry, 1)));
        CHECK(one.ring()->variables() == std::vector<std::string>{"x", "y"});
        CHECK(one.coeff().to_string() == "1");
        auto cross = tensor_endo(TwistedEndo(parse_polynomial("x^(p-1)", rx)), TwistedEndo(parse_polynomial("y^(p-1)", ry)));
        CHECK(cross.coeff() == parse_polynomial("(x*y)^(p-1)", cross.ring()));
        CHECK(check_splitting(cross).kind == VerdictKind::Splitting);
    }
    auto r = make_ring(3, {"x"});
    CHECK_THROWS_AS(tensor_endo(TwistedEndo(Polynomial::constant(r, 1)), TwistedEndo(Polynomial::constant(r, 1))),
                    InvalidArgument);
}

TEST_CASE("tensor application identity") {
    std::mt19937_64 rng(29);
    for (std::uint32_t p : {2u, 3u}) {
        auto ra = make_ring(p, {"x", "y"});
        auto rb = make_ring(p, {"z"});
        for (int i = 0; i < 20; ++i) {
            TwistedEndo a(random_poly(ra, rng, 4, 5));
            TwistedEndo b(random_poly(rb, rng, 3, 5));
            auto g = random_poly(ra, rng, 3, 4);
            auto h = random_poly(rb, rng, 3, 4);
            auto t = tensor_endo(a, b);
            auto joint = t.ring();
            auto lhs = t(embed(g, joint, {0, 1}) * embed(h, joint, {2}));
            auto rhs = embed(a(g), joint, {0, 1}) * embed(b(h), joint, {2});
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("P1 extension") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto r = make_ring(p, {"x"});
        auto dlog = p1_extension_check(TwistedEndo(parse_polynomial("x^(p-1)", r)));
        CHECK(dlog.extends);
        CHECK(dlog.compatible_zero);
        CHECK(dlog.compatible_infinity);
        REQUIRE(dlog.other_chart);
        CHECK(dlog.other_chart->to_string() == parse_polynomial("(-1)^(p-1)*y^(p-1)", dlog.other_chart->ring()).to_string());

        auto plain = p1_extension_check(TwistedEndo(Polynomial::constant(r, 1)));
        CHECK(plain.extends);
        CHECK_FALSE(plain.compatible_zero);

        auto high = p1_extension_check(TwistedEndo(parse_polynomial("x^(2*p-1)", r)));
        CHECK_FALSE(high.extends);
        CHECK_FALSE(high.other_chart);
    }
    CHECK_THROWS_AS(p1_extension_check(TwistedEndo(Polynomial::constant(make_ring(3, {"x", "y"}), 1))),
                    InvalidArgument);
}

TEST_CASE("P1 chart transform is an involution up to sign") {
    std::mt19937_64 rng(31);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto rx = make_ring(p, {"x"});
        auto ry = make_ring(p, {"y"});
        for (int i = 0; i < 20; ++i) {
            auto f = random_poly(rx, rng, 4, 2 * (p - 1));
            auto back = p1_chart_transform(p1_chart_transform(f, ry), rx);
            // The forced sign squares to 1.
            CHECK(back == f);
        }
    }
}

TEST_CASE("numerical semigroups") {
    NumericalSemigroup cusp({2, 3});
    CHECK(cusp.gaps() == std::vector<std::uint64_t>{1});
    CHECK(cusp.conductor() == 2);
    NumericalSemigroup s35({3, 5});
    CHECK(s35.gaps() == std::vector<std::uint64_t>{1, 2, 4, 7});
    CHECK(s35.conductor() == 8);
    NumericalSemigroup all({1});
    CHECK(all.gaps().empty());
    CHECK_THROWS_AS(NumericalSemigroup({2, 4}), InvalidArgument);
    CHECK_THROWS_AS(NumericalSemigroup({0, 1}), InvalidArgument);
    CHECK_THROWS_AS(NumericalSemigroup({}), InvalidArgument);

    auto v = semigroup_split_check(cusp, Prime(2));
    CHECK_FALSE(v.split);
    CHECK(v.witness == 1u);
    CHECK(semigroup_split_check(all, Prime(2)).split);
    auto w = semigroup_split_check(s35, Prime(2));
    CHECK_FALSE(w.split);
    CHECK(w.witness == 4u);
}

TEST_CASE("semigroup gaps match brute-force membership") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<std::uint64_t> gen(2, 12);
    for (int i = 0; i < 40; ++i) {
        std::vector<std::uint64_t> gens{gen(rng), gen(rng), gen(rng)};
        std::uint64_t g = 0;
        for (auto x : gens) g = std::gcd(g, x);
        if (g != 1) continue;
        NumericalSemigroup s(gens);
        // Reachability by unbounded knapsack up to a generous limit.
        const std::uint64_t limit = 200;
        std::vector<bool> in(limit + 1, false);
        in[0] = true;
        for (std::uint64_t m = 1; m <= limit; ++m) {
            for (auto a : gens) in[m] = in[m] || (m >= a && in[m - a]);
        }
        std::vector<std::uint64_t> gaps;
        for (std::uint64_t m = 0; m <= limit; ++m) {
            if (!in[m]) gaps.push_back(m);
            CHECK(s.contains(m) == in[m]);
        }
        CHECK(s.gaps() == gaps);
        for (std::uint32_t p : {2u, 3u, 5u}) {
            auto v = semigroup_split_check(s, Prime(p));
            CHECK(v.split == gaps.empty());
            if (v.witness) {
                CHECK_FALSE(s.contains(*v.witness));
                CHECK(s.contains(p * *v.witness));
            }
        }
    }
}

TEST_CASE("splitting axioms on random splittings") {
    std::mt19937_64 rng(41);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            auto ring = make_ring(p, var_names(n));
            for (int i = 0; i < 10; ++i) {
                TwistedEndo s(random_splitting_coeff(ring, rng, 4, 6));
                REQUIRE(check_splitting(s).kind == VerdictKind::Splitting);
                auto a = random_poly(ring, rng, 4, 4);
                auto b = random_poly(ring, rng, 4, 4);
                CHECK(s(a + b) == s(a) + s(b));
                CHECK(s(frobenius_power(a) * b) == a * s(b));
                CHECK(s(frobenius_power(a)) == a);
                CHECK(to_dense(s(b)) == dense_sigma0(dense_mul(to_dense(s.coeff()), to_dense(b), p), p));
            }
        }
    }
}

}  // TEST_SUITE
