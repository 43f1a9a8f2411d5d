#include "kummer/errors.hpp"
#include "kummer/local.hpp"
#include "kummer/ratfunc.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

using namespace kummer;
using kummer::testing::RandomRational;

namespace {

Poly P(std::vector<long> c) {
    std::vector<Rat> r;
    for (long v : c) r.emplace_back(v);
    return Poly(r);
}

RatFunc X() { return RatFunc::x(); }
RatFunc C(long n, long d = 1) { return RatFunc(make_rat(n, d)); }

} // namespace

TEST(Rat, CanonicalForm) {
    const Rat q = make_rat(6, -4);
    EXPECT_EQ(q.get_num(), -3);
    EXPECT_EQ(q.get_den(), 2);
    EXPECT_EQ(to_string(q), "-3/2");
    EXPECT_EQ(parse_rat("10/4"), make_rat(5, 2));
    EXPECT_TRUE(is_integer(make_rat(4, 2)));
}

TEST(Rat, Factorization) {
    const auto f = factor_integer(Int(360));
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].first, 2);
    EXPECT_EQ(f[0].second, 3u);
    EXPECT_EQ(f[2].first, 5);
    // Semiprime beyond trial division.
    const Int big = Int("1000000007") * Int("998244353");
    const auto g = factor_integer(big);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0].first * g[1].first, big);
}

TEST(Rat, ExactSqrt) {
    auto s = exact_sqrt(make_rat(9, 4));
    EXPECT_EQ(s.scale, make_rat(3, 2));
    EXPECT_EQ(s.radicand, 1);
    s = exact_sqrt(make_rat(8, 3));
    EXPECT_EQ(s.radicand, 6);
    EXPECT_EQ(s.scale * s.scale * Rat(s.radicand), make_rat(8, 3));
    s = exact_sqrt(Rat(-4));
    EXPECT_EQ(s.radicand, -1);
    EXPECT_EQ(s.scale, 2);
}

TEST(Poly, Examples) {
    EXPECT_EQ(Poly::x().pow(3).derivative(), P({0, 0, 3}));
    EXPECT_EQ(gcd(P({-1, 0, 1}), P({1, -2, 1})), P({-1, 1}));
    const auto [q, r] = divrem(P({1, 0, 1}), Poly::x());
    EXPECT_EQ(q, Poly::x());
    EXPECT_EQ(r, P({1}));
    EXPECT_THROW(divrem(P({1}), Poly()), std::domain_error);
    EXPECT_EQ(Poly().degree(), Poly::kZeroDegree);
    EXPECT_EQ(P({1, 2, 3}).eval(2), 17);
}

TEST(Poly, RootsAndRendering) {
    const Poly p = Poly::linear(make_rat(1, 2)) * Poly::linear(-3).pow(2) * P({2, 0, 1});
    EXPECT_EQ(rational_roots(p), (std::vector<Rat>{-3, make_rat(1, 2)}));
    EXPECT_EQ(root_multiplicity(p, -3), 2u);
    EXPECT_EQ((Poly::x().pow(2) - make_rat(3, 2) * Poly::x() + Poly(1)).to_string(), "x^2-3/2*x+1");
    EXPECT_EQ(P({1, 1}).shifted(1), P({2, 1}));
}

TEST(RatFunc, Canonical) {
    const RatFunc f(P({-1, 0, 1}), P({0, -1, 0, 1}));
    EXPECT_EQ(f, C(1) / X());
    const RatFunc g(P({2}), P({0, 0, 2}));
    EXPECT_EQ(g.den(), P({0, 0, 1}));
    EXPECT_EQ((C(-4) / (X() * X())).to_string(), "-4/x^2");
    EXPECT_EQ(((X() + C(1)) / (X() * X() - C(2))).to_string(), "(x+1)/(x^2-2)");
    EXPECT_THROW(RatFunc(P({1}), Poly()), std::domain_error);
    EXPECT_THROW((C(1) / X()).eval(0), PoleError);
}

TEST(Local, RationalPoles) {
    const auto p = rational_poles(C(-4) / (X() * X()));
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p[0].location, 0);
    EXPECT_EQ(p[0].order, 2u);
    EXPECT_EQ(p[0].laurent, (std::map<int, Rat>{{-2, -4}}));

    const auto q = rational_poles(C(1) / (X() * (X() - C(1)).pow(3)));
    ASSERT_EQ(q.size(), 2u);
    EXPECT_EQ(q[0].order, 1u);
    EXPECT_EQ(q[1].location, 1);
    EXPECT_EQ(q[1].order, 3u);

    EXPECT_THROW(rational_poles(C(1) / (X() * X() + C(1))), UnsupportedPoles);
    try {
        rational_poles(C(1) / (X() * (X() * X() + C(1))));
    } catch (const UnsupportedPoles& e) {
        EXPECT_EQ(e.factor(), "x^2+1");
    }
}

TEST(Local, PartialFractions) {
    using T = PartialFractions::Term;
    auto pf = partial_fractions(C(1) / (X() * X() - X()));
    EXPECT_TRUE(pf.polynomial_part.is_zero());
    EXPECT_EQ(pf.terms, (std::vector<T>{{-1, 0, 1}, {1, 1, 1}}));
    pf = partial_fractions(X());
    EXPECT_EQ(pf.polynomial_part, Poly::x());
    EXPECT_TRUE(pf.terms.empty());
    pf = partial_fractions(C(2) / (X() * X()));
    EXPECT_EQ(pf.terms, (std::vector<T>{{2, 0, 2}}));
}

TEST(Local, Series) {
    EXPECT_EQ(series_at(C(1) / (C(1) - X()), 0, 3), (std::vector<Rat>{1, 1, 1, 1}));
    EXPECT_EQ(series_at(X() * X(), 1, 2), (std::vector<Rat>{1, 2, 1}));
    EXPECT_EQ(series_at(C(1) / X(), 1, 2), (std::vector<Rat>{1, -1, 1}));
    EXPECT_THROW(series_at(C(1) / X(), 0, 2), PoleError);
}

TEST(Local, OrderAtInfinity) {
    EXPECT_EQ(order_at_infinity(X()), -1);
    EXPECT_EQ(order_at_infinity(C(1) / (X() * X())), 2);
    EXPECT_EQ(order_at_infinity((X() + C(1)) / X().pow(3)), 2);
    EXPECT_THROW(order_at_infinity(C(0)), std::domain_error);
}

TEST(Local, Laurent) {
    const auto l = laurent_at((X() + C(1)) / (X() * X()), 0, 1);
    EXPECT_EQ(l.valuation(), -2);
    EXPECT_EQ(l.at(-2), 1);
    EXPECT_EQ(l.at(-1), 1);
    EXPECT_EQ(l.at(0), 0);
    const auto inf = laurent_at_infinity(X() * X() + C(3) / X(), 1);
    EXPECT_EQ(inf.at(-2), 1);
    EXPECT_EQ(inf.at(1), 3);
    EXPECT_EQ(valuation_at(X().pow(3) / (X() - C(1)), 0), 3);
}

TEST(Properties, MultiplyThenDivide) {
    RandomRational rng(11);
    for (int i = 0; i < 300; ++i) {
        const RatFunc f = rng.ratfunc(3, 4);
        RatFunc g = rng.ratfunc(3, 4);
        if (g.is_zero()) g = C(1);
        EXPECT_EQ(f * g / g, f);
    }
}

TEST(Properties, PartialFractionsReassemble) {
    RandomRational rng(12);
    for (int i = 0; i < 1000; ++i) {
        const RatFunc f = rng.ratfunc(3, 5);
        EXPECT_EQ(partial_fractions(f).reassemble(), f);
    }
}

TEST(Properties, SeriesOfProduct) {
    RandomRational rng(13);
    for (int i = 0; i < 200; ++i) {
        const RatFunc f = rng.ratfunc(2, 3);
        const RatFunc g = rng.ratfunc(2, 3);
        Rat p = rng.rational();
        while (f.is_pole(p) || g.is_pole(p)) p += 1;
        EXPECT_EQ(series_at(f * g, p, 8), series_mul(series_at(f, p, 8), series_at(g, p, 8), 8));
    }
}

TEST(Properties, Leibniz) {
    RandomRational rng(14);
    for (int i = 0; i < 300; ++i) {
        const RatFunc f = rng.ratfunc(3, 4);
        const RatFunc g = rng.ratfunc(3, 4);
        EXPECT_EQ((f * g).derivative(), f.derivative() * g + f * g.derivative());
    }
}
