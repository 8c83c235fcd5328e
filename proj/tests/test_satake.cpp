#include <doctest.h>

#include <random>

#include "cassel/rootdata.hpp"

using namespace cassel;

namespace {

RationalFn cst(Rat r) { return RationalFn::constant(0, std::move(r)); }

CharacterTriple gsp4(Rat x1, Rat x2, Rat x0, Rat q = Rat(3)) {
    CharacterTriple chi;
    chi.group = Group::GSp4;
    chi.values = {cst(std::move(x1)), cst(std::move(x2)), cst(std::move(x0))};
    chi.q = cst(std::move(q));
    return chi;
}

CharacterTriple gl4(Rat a1, Rat a2, Rat a3, Rat a4) {
    CharacterTriple chi;
    chi.group = Group::GL4;
    chi.values = {cst(std::move(a1)), cst(std::move(a2)), cst(std::move(a3)),
                  cst(std::move(a4))};
    chi.q = cst(Rat(3));
    return chi;
}

}  // namespace

TEST_CASE("frobenius representative") {
    FrobeniusClass triv = frobenius(gsp4(Rat(1), Rat(1), Rat(1)));
    for (const auto& e : triv.entries) CHECK(e.as_rat() == Rat(1));

    // symbolic: entries follow the displayed products, entry4 = entry1^-1
    CharacterTriple sym;
    sym.group = Group::GSp4;
    sym.values = {RationalFn::var(4, 0), RationalFn::var(4, 1), RationalFn::var(4, 2)};
    sym.q = RationalFn::var(4, 3);
    // impose the constraint by eliminating x2 = 1/(x1 x0^2)
    sym.values[1] = (sym.values[0] * sym.values[2] * sym.values[2]).inv();
    FrobeniusClass g = frobenius(sym);
    CHECK(g.entries[0] == sym.x1() * sym.x2() * sym.x0());
    CHECK(g.entries[1] == sym.x1() * sym.x0());
    CHECK(g.entries[3] == g.entries[0].inv());
    CHECK(g.entries[2] == g.entries[1].inv());

    // the worked arithmetic point
    FrobeniusClass num = frobenius(gsp4(Rat(4), Rat(1, 9), Rat(3, 2)));
    CHECK(num.entries[0].as_rat() == Rat(2, 3));
    CHECK(num.entries[1].as_rat() == Rat(6));
    CHECK(num.entries[2].as_rat() == Rat(1, 6));
    CHECK(num.entries[3].as_rat() == Rat(3, 2));

    // violated constraint names the condition
    bool threw = false;
    try {
        frobenius(gsp4(Rat(2), Rat(1), Rat(1)));
    } catch (const constraint_error& e) {
        threw = true;
        CHECK(e.condition == "trivial central character");
    }
    CHECK(threw);
}

TEST_CASE("nondegeneracy predicate") {
    RationalFn q = cst(Rat(3));
    CHECK_FALSE(is_generic_regular(gsp4(Rat(3), Rat(1, 2), Rat(1)), q));  // x1 = q
    CHECK(is_generic_regular(gsp4(Rat(4), Rat(1, 9), Rat(3, 2)), q));
    // x1 / x2 = 1/q
    CHECK_FALSE(is_generic_regular(gsp4(Rat(1, 6), Rat(1, 2), Rat(1)), q));
    // symbolic values are never equal to q
    CharacterTriple sym;
    sym.group = Group::GSp4;
    sym.values = {RationalFn::var(3, 0), RationalFn::var(3, 1), RationalFn::var(3, 2)};
    sym.q = cst(Rat(3));
    CHECK(is_generic_regular(sym, RationalFn::constant(3, Rat(3))));
}

TEST_CASE("dihedral detection and its Weyl symmetry") {
    CHECK(is_dihedral(gsp4(Rat(2), Rat(-1), Rat(1))));
    CHECK(is_dihedral(gsp4(Rat(-1), Rat(5), Rat(1))));
    CHECK_FALSE(is_dihedral(gsp4(Rat(1), Rat(1), Rat(1))));
    // invariant under the swap
    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        Rat x1(static_cast<long long>(rng() % 9) - 4, 1 + static_cast<long long>(rng() % 3));
        Rat x2 = (rng() % 2) ? Rat(-1) : Rat(7, 2);
        auto chi = gsp4(x1, x2, Rat(1));
        auto swapped = weyl_translate(chi, Gen::s1);
        CHECK(is_dihedral(chi) == is_dihedral(swapped));
    }
}

TEST_CASE("split admissibility") {
    CHECK(split_shalika_admissible(gl4(Rat(2), Rat(3), Rat(1, 3), Rat(1, 2))));
    CHECK_FALSE(split_shalika_admissible(gl4(Rat(2), Rat(3), Rat(5), Rat(1, 30))));
    CHECK_FALSE(split_shalika_admissible(gl4(Rat(2), Rat(2), Rat(1, 2), Rat(1, 2))));

    // invariant under all 24 permutations
    std::array<Rat, 4> vals = {Rat(2), Rat(3), Rat(1, 3), Rat(1, 2)};
    for (const auto& p : all_s4()) {
        auto chi = gl4(vals[p.p[0]], vals[p.p[1]], vals[p.p[2]], vals[p.p[3]]);
        CHECK(split_shalika_admissible(chi));
    }
    std::array<Rat, 4> bad = {Rat(2), Rat(3), Rat(5), Rat(1, 30)};
    for (const auto& p : all_s4()) {
        auto chi = gl4(bad[p.p[0]], bad[p.p[1]], bad[p.p[2]], bad[p.p[3]]);
        CHECK_FALSE(split_shalika_admissible(chi));
    }
}

TEST_CASE("value from exponent") {
    RationalFn q = RationalFn::var(1, 0);
    CHECK(value_from_exponent(q, Rat(1)) == q.inv());
    CHECK(value_from_exponent(q, Rat(-2)) == q * q);
    // half-integral exponents stay in the half-unit lattice
    CHECK(value_from_exponent(q, Rat(1, 2)) ==
          RationalFn(LaurentPoly::var_pow(1, 0, -1)));
    CHECK_THROWS_AS(value_from_exponent(q, Rat(1, 3)), arithmetic_error);
}

TEST_CASE("weyl translation preserves the central constraint") {
    auto chi = gsp4(Rat(4), Rat(1, 9), Rat(3, 2));
    CHECK(chi.central_ok());
    for (Gen g : {Gen::s1, Gen::s2}) {
        auto t = weyl_translate(chi, g);
        CHECK(t.central_ok());
    }
    // s2: (x1, x2, x0) -> (x1, 1/x2, x2 x0)
    auto t = weyl_translate(chi, Gen::s2);
    CHECK(t.x1().as_rat() == Rat(4));
    CHECK(t.x2().as_rat() == Rat(9));
    CHECK(t.x0().as_rat() == Rat(1, 6));
}
