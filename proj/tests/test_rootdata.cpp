#include <doctest.h>

#include "cassel/rootdata.hpp"

using namespace cassel;

TEST_CASE("Weyl group sizes and lengths") {
    const auto& w8 = weyl_c2_elements();
    CHECK(w8.size() == 8);
    for (const auto& w : w8) CHECK(weyl_length(w.elem) == w.length());
    CHECK(all_s4().size() == 24);
    int by_len[7] = {0};
    for (const auto& p : all_s4()) ++by_len[p.length()];
    CHECK(by_len[0] == 1);  // identity
    CHECK(by_len[6] == 1);  // longest element of S4
}

TEST_CASE("simple reflections and the longest element") {
    // s1 swaps the coordinates
    CHECK(weyl_s1().act({2, 0}) == Coweight{0, 2});
    // s2 flips the sign of the second coordinate
    CHECK(weyl_s2().act({0, 2}) == Coweight{0, -2});
    const auto& w0 = weyl_c2_longest();
    CHECK(w0.length() == 4);
    CHECK(w0.elem.act(kRhoCheck) == -kRhoCheck);
    // group axioms on the table: closed under inverse, associative samples
    for (const auto& a : weyl_c2_elements()) {
        CHECK(a.elem * a.elem.inverse() == WeylElement{});
        for (const auto& b : weyl_c2_elements())
            for (const auto& c : weyl_c2_elements())
                CHECK(((a.elem * b.elem) * c.elem) == (a.elem * (b.elem * c.elem)));
    }
}

TEST_CASE("coweight evaluation on a Frobenius class") {
    CharacterTriple chi;
    chi.group = Group::GSp4;
    auto cst = [](Rat r) { return RationalFn::constant(0, std::move(r)); };
    chi.values = {cst(Rat(4)), cst(Rat(1, 9)), cst(Rat(3, 2))};
    chi.q = cst(Rat(3));
    FrobeniusClass g = frobenius(chi);
    CHECK(g.u().as_rat() == Rat(2, 3));
    CHECK(g.v().as_rat() == Rat(6));

    CHECK(eval_coweight({2, 0}, g).as_rat() == Rat(2, 3));          // u
    CHECK(eval_coweight({2, 2}, g).as_rat() == Rat(4));             // uv
    CHECK(eval_coweight(kRhoCheck, g).as_rat() == Rat(8, 3));       // u^2 v
    // genuinely half-integral monomials refuse points without square roots
    CHECK_THROWS_AS(eval_coweight({1, 0}, g), numeric_specialization_error);
    // but evaluate when the entries are exact squares: u = 1, v = 4
    CharacterTriple chi2 = chi;
    chi2.values = {cst(Rat(4)), cst(Rat(1, 4)), cst(Rat(1))};
    FrobeniusClass g2 = frobenius(chi2);
    CHECK(eval_coweight({1, 1}, g2).as_rat() == Rat(2));  // u^(1/2) v^(1/2) = 2
}

TEST_CASE("evaluation intertwines the Weyl action") {
    CharacterTriple chi;
    chi.group = Group::GSp4;
    auto cst = [](Rat r) { return RationalFn::constant(0, std::move(r)); };
    chi.values = {cst(Rat(9)), cst(Rat(4)), cst(Rat(1, 6))};
    chi.q = cst(Rat(5));
    FrobeniusClass g = frobenius(chi);
    Rat logs[2] = {*g.u().as_rat(), *g.v().as_rat()};
    for (const auto& w : weyl_c2_elements()) {
        // conjugating the diagonal by w acts on (u, v) by the inverse
        // signed permutation
        WeylElement wi = w.elem.inverse();
        Rat m[2] = {logs[0], logs[1]};
        Rat cu = wi.sign[0] > 0 ? m[wi.perm[0]] : m[wi.perm[0]].inv();
        Rat cv = wi.sign[1] > 0 ? m[wi.perm[1]] : m[wi.perm[1]].inv();
        FrobeniusClass gw = g;
        gw.entries = {RationalFn::constant(0, cu), RationalFn::constant(0, cv),
                      RationalFn::constant(0, cv.inv()), RationalFn::constant(0, cu.inv())};
        for (Coweight mu : {Coweight{2, 0}, Coweight{2, 2}, Coweight{4, -2}})
            CHECK(eval_coweight(w.elem.act(mu), g) == eval_coweight(mu, gw));
    }
}

TEST_CASE("root tables and the identification map") {
    // the identification is a bijection onto the positive coroot symbols,
    // sending the long relative roots to the short-root entries
    std::vector<Coweight> images;
    for (RelRoot r : rel_positive_roots()) images.push_back(rel_root_to_sp4_coroot(r));
    for (const auto& e : sp4_positive_coroots()) {
        int hits = 0;
        for (const auto& im : images)
            if (im == e.coroot) ++hits;
        CHECK(hits == 1);
    }
    CHECK(rel_root_to_sp4_coroot(RelRoot::TwoA1mA0) == Coweight{2, 2});
    CHECK(rel_root_to_sp4_coroot(RelRoot::TwoA2mA0) == Coweight{2, -2});
    for (RelRoot r : {RelRoot::TwoA1mA0, RelRoot::TwoA2mA0}) {
        bool lands_short = false;
        for (const auto& e : sp4_positive_coroots())
            if (e.coroot == rel_root_to_sp4_coroot(r)) lands_short = e.short_root;
        CHECK(lands_short);
    }

    // two-to-one restriction onto short entries, one-to-one onto long
    int short_hits = 0, long_hits = 0;
    for (const auto& r : gl4_positive_roots()) (r.sp4_short ? short_hits : long_hits)++;
    CHECK(gl4_positive_roots().size() == 6);
    CHECK(short_hits == 4);
    CHECK(long_hits == 2);
}

TEST_CASE("q-weights and the Poincare sum") {
    RationalFn q = RationalFn::var(1, 0);
    CHECK(q_alpha(RelRoot::A1mA2, q) == q * q);
    CHECK(q_alpha(RelRoot::TwoA2mA0, q) == q);
    CHECK(iwahori_index(Gen::s1, q) == q * q);
    CHECK(iwahori_index(Gen::s2, q) == q);
    // S4 Poincare sum at q = 2: (3/2)(7/4)(15/8)
    RationalFn q2 = RationalFn::constant(0, Rat(2));
    CHECK(gl4_poincare_sum(q2).as_rat() == Rat(315, 64));
}

TEST_CASE("modulus characters") {
    RationalFn q = RationalFn::var(1, 0);
    // Siegel modulus at diag(I, pi^-n I)
    for (long long n : {0LL, 1LL, 3LL}) {
        TorusValuations t;
        t.val_det = 0;
        t.val_mu = -n;
        CHECK(modulus_exponent(ModulusGroup::P_H, t) == -3 * n);
        CHECK(modulus_eval(ModulusGroup::P_H, t, q) == q.pow(-3 * n));
    }
    TorusValuations id{};
    CHECK(modulus_exponent(ModulusGroup::B_G, id) == 0);
    TorusValuations b;
    b.val_a = 1;  // |a| = q^-1, |b| = |nu| = 1
    CHECK(modulus_exponent(ModulusGroup::B_G, b) == -6);
    // the zeta reduction bookkeeping: delta_{P_H}^{-1} at depth n combines
    // with the section value to q^{n(2-s)}; at s -> the exponent pairing
    // this reads 3n - n(s+1) = n(2-s), checked at the exponent level
    TorusValuations depth;
    depth.val_det = 0;
    depth.val_mu = -2;
    CHECK(-modulus_exponent(ModulusGroup::P_H, depth) == 6);
}
