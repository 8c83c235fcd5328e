#include <doctest.h>

#include "cassel/structure.hpp"

using namespace cassel;

TEST_CASE("quadratic extension scalar arithmetic") {
    Rat d(2);
    QuadExt<Rat> x{Rat(1), Rat(2), d}, y{Rat(-3), Rat(1, 2), d};
    CHECK((x * y).a == Rat(-3) + Rat(2));            // 1*(-3) + 2*(1/2)*2
    CHECK((x * y).b == Rat(1, 2) + Rat(-6));         // 1*(1/2) + 2*(-3)
    CHECK(x.conjugate().b == Rat(-2));
    CHECK(x.norm() == Rat(1) - Rat(8));
    CHECK((x * x.inverse()) == QuadExt<Rat>{Rat(1), Rat(0), d});
}

TEST_CASE("factorization identities") {
    // rank-one case, symbolic y over a one-variable field
    RationalFn y = RationalFn::var(1, 0);
    CHECK(lemfact1_case1<RationalFn>(y, RationalFn::constant(1, Rat(1)),
                                     RationalFn::constant(1, Rat(0))));
    CHECK(lemfact1_case1<Rat>(Rat(1), Rat(1), Rat(0)));
    CHECK(lemfact1_case1<Rat>(Rat(-5, 7), Rat(1), Rat(0)));
    CHECK_THROWS_AS((void)lemfact1_case1<Rat>(Rat(0), Rat(1), Rat(0)), excluded_locus_error);

    // quadratic case with all of a_y, b_y, d free symbols
    RationalFn a = RationalFn::var(3, 0), b = RationalFn::var(3, 1),
               dd = RationalFn::var(3, 2);
    CHECK(lemfact1_case2<RationalFn>(QuadExt<RationalFn>{a, b, dd}));
    CHECK(lemfact1_case2<Rat>(QuadExt<Rat>{Rat(2, 3), Rat(1, 5), Rat(2)}));
    // excluded locus: N(y) + b_y = 0, e.g. y = delta/ sqrt... pick a^2 - d b^2 + b = 0:
    // with d = 2: a = 1, b solves 1 - 2 b^2 + b = 0, b = 1
    CHECK_THROWS_AS((void)lemfact1_case2<Rat>(QuadExt<Rat>{Rat(1), Rat(1), Rat(2)}),
                    excluded_locus_error);
    // the dispatcher
    CHECK(lemfact1_check(Lemfact1Case::One, Rat(3), QuadExt<Rat>{}));
    CHECK(lemfact1_check(Lemfact1Case::Two, Rat(0), QuadExt<Rat>{Rat(1), Rat(2), Rat(3)}));
}

TEST_CASE("exceptional isomorphism torus action") {
    Rat d(2);
    // identity acts trivially
    CHECK(excep_iso_check<Rat>(QuadExt<Rat>{Rat(1), Rat(0), d},
                               QuadExt<Rat>{Rat(1), Rat(0), d}, Rat(1)));
    // a = delta: the first slot picks up N(delta) = -d, covered in the check
    CHECK(excep_iso_check<Rat>(QuadExt<Rat>{Rat(0), Rat(1), d},
                               QuadExt<Rat>{Rat(1), Rat(0), d}, Rat(1)));
    std::mt19937_64 rng(55);
    auto r = [&](bool nz) {
        long long n = static_cast<long long>(rng() % 9) - 4;
        if (nz && n == 0) n = 2;
        return Rat(n, 1 + static_cast<long long>(rng() % 3));
    };
    int checked = 0;
    while (checked < 50) {
        QuadExt<Rat> a{r(true), r(false), d}, b{r(true), r(false), d}, x{r(true), r(false), d};
        if (is_zero(a.norm()) || is_zero(b.norm()) || is_zero(x.norm())) continue;
        CHECK(excep_iso_check<Rat>(a, b, x.norm()));
        ++checked;
    }
}

TEST_CASE("torus action is multiplicative on samples") {
    Rat d(2);
    std::mt19937_64 rng(77);
    auto r = [&](bool nz) {
        long long n = static_cast<long long>(rng() % 7) - 3;
        if (nz && n == 0) n = 2;
        return Rat(n, 1 + static_cast<long long>(rng() % 3));
    };
    auto action = [&](const QuadExt<Rat>& a, const QuadExt<Rat>& b, const Rat& nu,
                      const Mat4<QuadExt<Rat>>& v) {
        QuadExt<Rat> nuE = QuadExt<Rat>::scalar(nu, d);
        std::array<QuadExt<Rat>, 4> diag = {a, b, nuE * b.conjugate().inverse(),
                                            nuE * a.conjugate().inverse()};
        QuadExt<Rat> twist = (a * b).conjugate();
        Mat4<QuadExt<Rat>> out;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out.m[i][j] = twist * diag[i] * v.m[i][j] * diag[j];
        return out;
    };
    for (int trial = 0; trial < 10; ++trial) {
        QuadExt<Rat> a1{r(true), r(false), d}, b1{r(true), r(false), d};
        QuadExt<Rat> a2{r(true), r(false), d}, b2{r(true), r(false), d};
        QuadExt<Rat> x1{r(true), r(false), d}, x2{r(true), r(false), d};
        if (is_zero(a1.norm()) || is_zero(b1.norm()) || is_zero(a2.norm()) ||
            is_zero(b2.norm()) || is_zero(x1.norm()) || is_zero(x2.norm())) {
            --trial;
            continue;
        }
        std::array<Rat, 6> coords = {r(false), r(false), r(false), r(false), r(false), r(false)};
        auto v = quad_space_vector<Rat>(coords, d);
        auto lhs = action(a1 * a2, b1 * b2, x1.norm() * x2.norm(), v);
        auto rhs = action(a1, b1, x1.norm(), action(a2, b2, x2.norm(), v));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("stabilizer membership per orbit") {
    Rat d(2);
    std::mt19937_64 rng(101);
    for (const auto& orb : orbit_table()) {
        for (int k = 0; k < 6; ++k) {
            auto p = random_sample_params(rng);
            EMat s = stabilizer_sample(orb, p, d);
            CHECK(similitude_multiplier(s, d).has_value());
            CHECK(stabilizer_check(orb, s, d));
        }
    }
    // a generic unipotent is not in the open-orbit stabilizer
    EMat bad = shalika_unipotent(e_of(Rat(1), Rat(1), d), Rat(1), Rat(2), d);
    CHECK_FALSE(stabilizer_check(orbit_table()[7], bad, d));
    // nor is a full Borel sample in the twisted-torus stabilizers
    EMat borel = embed_gl2(e_rat(Rat(2), d), e_rat(Rat(1), d), e_rat(Rat(0), d),
                           e_rat(Rat(3), d), d);
    CHECK_FALSE(stabilizer_check(orbit_table()[7], borel, d));
}

TEST_CASE("one-generator period integral") {
    for (long long p : {3LL, 5LL}) {
        for (Rat z2 : {Rat(1), Rat(3, 2)}) {
            PadicSampler s(p, 3);
            auto r = padic_integral_comp1(s, z2, 12);
            double cf = comp1_closed_form(p, z2);
            CHECK(std::abs(r.value - std::complex<double>(cf)) + r.tail_bound < 1e-9);
            CHECK(std::abs(r.value.imag()) < 1e-9);
        }
    }
    // depth-zero shell alone: psi is trivial on integral arguments
    PadicSampler s3(3, 3);
    auto shell0 = padic_integral_comp1(s3, Rat(1), 0);
    CHECK(shell0.value.real() == doctest::Approx(1.0 - 1.0 / 3).epsilon(1e-12));
    CHECK_THROWS_AS(PadicSampler(4, 3), constraint_error);
    CHECK_THROWS_AS((void)padic_integral_comp1(s3, Rat(-1), 4), constraint_error);
}

TEST_CASE("two-variable period integral") {
    {
        PadicSampler s(3, 3);
        auto r = padic_integral_comp2(s, Rat(1), Rat(1, 2), 12);
        CHECK(std::abs(r.value.real() - comp2_closed_form(3, Rat(1), Rat(1, 2))) +
                  r.tail_bound <
              1e-6);
    }
    {
        PadicSampler s(5, 3);
        auto r = padic_integral_comp2(s, Rat(2), Rat(-1), 10);
        CHECK(std::abs(r.value.real() - comp2_closed_form(5, Rat(2), Rat(-1))) + r.tail_bound <
              1e-6);
    }
    {
        // unit-region stratum alone
        PadicSampler s(3, 3);
        auto r = padic_integral_comp2(s, Rat(1), Rat(1, 2), 12, true);
        CHECK(std::abs(r.value.real() - comp2_unit_region_closed_form(3, Rat(1), Rat(1, 2))) +
                  r.tail_bound <
              1e-6);
    }
    PadicSampler s(3, 3);
    CHECK_THROWS_AS((void)padic_integral_comp2(s, Rat(0), Rat(0), 6), constraint_error);
}

TEST_CASE("exponent bookkeeping matches the quadratic character sign") {
    // with xi written through |.|^z exponents, -chi(a_{2a2-a0}) = q^(2 z1 + z0):
    // the sign is exactly the inert quadratic-character value at the
    // uniformizer carried by the transfer slot y0 = -x1
    RationalFn q = RationalFn::var(1, 0);
    Rat z1(1), z2(1, 2);
    Rat z0 = -(z1 + z2);  // central constraint on exponents
    RationalFn y0 = value_from_exponent(q, z0);
    RationalFn y2v = value_from_exponent(q, Rat(2) * z2);
    RationalFn x1 = RationalFn::constant(1, Rat(kChiQuadInert)) * y0;  // -y0
    RationalFn x2 = y2v * x1;
    RationalFn expect = value_from_exponent(q, -(Rat(2) * z1 + z0));  // q^(2 z1 + z0)
    CHECK(RationalFn::constant(1, Rat(-1)) * x2 == expect);
}
