#include <doctest.h>

#include <random>

#include "cassel/lfactor.hpp"

using namespace cassel;

namespace {
RationalFn mono3(int32_t a, int32_t b, int32_t c, Rat k = Rat(1)) {
    return RationalFn(LaurentPoly::monomial(3, {a, b, c}, std::move(k)));
}
}  // namespace

TEST_CASE("euler factor at the trivial class") {
    // the trivial class is singular for the normalized functionals (and not
    // an admissible split tuple), but the Euler factor itself is fine there;
    // the inert constructor admits it
    auto ctx = CSContext::make_numeric(CSCase::Inert, Rat(1), Rat(1), Rat(1), Rat(3));
    CHECK(ctx.u_val.as_rat() == Rat(1));
    auto split = euler_factor(ctx, Twist::Trivial);
    auto inert = euler_factor(ctx, Twist::Quadratic);
    // (1 -+ t)^5 coefficients
    const long long binom[6] = {1, 5, 10, 10, 5, 1};
    for (size_t k = 0; k <= 5; ++k) {
        long long sign = (k % 2 == 0) ? 1 : -1;
        CHECK(split.inverse[k].as_rat() == Rat(sign * binom[k]));
        CHECK(inert.inverse[k].as_rat() == Rat(binom[k]));
    }
}

TEST_CASE("euler factor splits over the five standard weights") {
    auto ctx = CSContext::make_symbolic(CSCase::Split);
    auto f = euler_factor(ctx, Twist::Trivial);
    // multiply the displayed factors (1 - w t) directly
    std::vector<RationalFn> expect = {RationalFn::constant(3, Rat(1))};
    for (auto w : {mono3(2, 2, 0), mono3(2, -2, 0), mono3(0, 0, 0), mono3(-2, 2, 0),
                   mono3(-2, -2, 0)}) {
        std::vector<RationalFn> next(expect.size() + 1, RationalFn::constant(3, Rat(0)));
        for (size_t i = 0; i < expect.size(); ++i) {
            next[i] = next[i] + expect[i];
            next[i + 1] = next[i + 1] - expect[i] * w;
        }
        expect = std::move(next);
    }
    REQUIRE(f.inverse.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) CHECK(f.inverse[i] == expect[i]);
    CHECK(f.inverse[0] == RationalFn::constant(3, Rat(1)));

    // palindromic weight multiset: t^5 coefficient is -1, and t^4 mirrors
    // t^1 up to the alternating sign
    CHECK(f.inverse[5] == RationalFn::constant(3, Rat(-1)));
    CHECK(f.inverse[4] == -f.inverse[1]);
}

TEST_CASE("series route basics") {
    auto ctx = CSContext::make_symbolic(CSCase::Split);
    auto s = lfactor_series(ctx, Twist::Trivial, 4);
    CHECK(s[0] == RationalFn::constant(3, Rat(1)));
    // t^1: the five weight monomials
    RationalFn tr = mono3(2, 2, 0) + mono3(2, -2, 0) + mono3(0, 0, 0) + mono3(-2, 2, 0) +
                    mono3(-2, -2, 0);
    CHECK(s[1] == tr);
    auto tw = lfactor_series(ctx, Twist::Quadratic, 4);
    CHECK(tw[1] == -tr);
    CHECK(tw[2] == s[2]);  // even coefficients match
}

TEST_CASE("two-path agreement at moderate order") {
    auto ctx = CSContext::make_symbolic(CSCase::Split);
    for (Twist tw : {Twist::Trivial, Twist::Quadratic})
        CHECK(euler_series(euler_factor(ctx, tw), 8) == lfactor_series(ctx, tw, 8));
}

TEST_CASE("zeta series bookkeeping") {
    // the modulus power against the section exponent leaves a clean t^n, so
    // the zeta series starts at 1 for both cases
    for (CSCase c : {CSCase::Split, CSCase::Inert}) {
        auto ctx = CSContext::make_symbolic(c);
        auto z = zeta_series(ctx, 3);
        CHECK(z[0] == RationalFn::constant(3, Rat(1)));
    }
}

TEST_CASE("identity verification, symbolic") {
    for (CSCase c : {CSCase::Split, CSCase::Inert}) {
        auto ctx = CSContext::make_symbolic(c);
        auto rep = verify_identity(ctx, 6);
        CHECK(rep.equal);
        CHECK_FALSE(rep.first_mismatch.has_value());
    }
}

TEST_CASE("identity verification, random rational points") {
    std::mt19937_64 rng(314);
    int done = 0;
    while (done < 5) {
        long long s = 2 + static_cast<long long>(rng() % 8);
        long long t = 2 + static_cast<long long>(rng() % 8);
        long long qv = 2 + static_cast<long long>(rng() % 5);
        if (s == t) continue;
        for (CSCase c : {CSCase::Split, CSCase::Inert}) {
            auto ctx = CSContext::make_numeric(c, Rat(s * s), Rat(t * t), Rat(1, s * t),
                                               Rat(qv));
            auto rep = verify_identity(ctx, 12);
            CHECK(rep.equal);
        }
        ++done;
    }
}

TEST_CASE("telescoping identity") {
    // (1 - t^2)^-1 sum t^n (a_n - a_{n-1}/q) = (1 - t/q) sum t^n sum_k a_{n-2k}
    // with a_n the character ratios and a_{-1} = 0
    const size_t order = 10;
    auto ctx = CSContext::make_symbolic(CSCase::Split);
    std::vector<RationalFn> a;
    for (size_t n = 0; n <= order; ++n)
        a.push_back(ctx.eval_uv(
            weyl_character({2 * static_cast<int32_t>(n), 2 * static_cast<int32_t>(n)}).value));
    RationalFn q = RationalFn::var(3, 2);
    RationalFn one = RationalFn::constant(3, Rat(1));
    TruncatedSeries lhs_inner(3, order);
    for (size_t n = 0; n <= order; ++n) {
        RationalFn prev = n == 0 ? RationalFn::constant(3, Rat(0)) : a[n - 1];
        lhs_inner.set(n, a[n] - prev / q);
    }
    TruncatedSeries zeta2 = TruncatedSeries::inverse_of_poly(
        3, order, {one, RationalFn::constant(3, Rat(0)), -one});
    TruncatedSeries lhs = zeta2 * lhs_inner;

    TruncatedSeries rhs_inner(3, order);
    for (size_t n = 0; n <= order; ++n) {
        RationalFn acc = RationalFn::constant(3, Rat(0));
        for (size_t k = 0; 2 * k <= n; ++k) acc = acc + a[n - 2 * k];
        rhs_inner.set(n, acc);
    }
    TruncatedSeries lin = TruncatedSeries::from_poly(3, order, {one, -(q.inv())});
    CHECK(lhs == lin * rhs_inner);
}

TEST_CASE("mutation sensitivity") {
    for (CSCase c : {CSCase::Split, CSCase::Inert}) {
        auto ctx = CSContext::make_symbolic(c);
        auto rep1 = verify_identity(ctx, 4, BracketSigns{-1, +1});
        REQUIRE(rep1.first_mismatch.has_value());
        CHECK(*rep1.first_mismatch == 0);
        auto rep2 = verify_identity(ctx, 4, BracketSigns{+1, -1});
        REQUIRE(rep2.first_mismatch.has_value());
        CHECK(*rep2.first_mismatch == 1);
        CHECK(*rep1.first_mismatch <= 2);
        CHECK(*rep2.first_mismatch <= 2);
        CHECK(!rep1.lhs.empty());
        CHECK(!rep1.rhs.empty());
    }
}
