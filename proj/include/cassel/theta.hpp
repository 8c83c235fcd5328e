#pragma once

// Character-level theta transfer between GSp4 and GU22 over the inert
// quadratic extension, the exceptional-isomorphism pullback of GSO42
// characters, the eight-orbit Mackey table for the Shalika subgroup acting
// on the flag variety, and the existence/uniqueness verdict for spherical
// Shalika functionals.

#include <set>

#include "cassel/satake.hpp"

namespace cassel {

// Pullback through the exceptional isomorphism. With the inert extension
// unramified, the uniformizer norms to its square, so at value level
//   y1 = y1'^2 y2'^2 y0',   y2 = y1'^2 y0',   y0 = y2' y0'.
inline CharacterTriple changechar_pullback(const CharacterTriple& xiP) {
    if (xiP.group != Group::GSO42)
        throw constraint_error("group mismatch", "changechar_pullback expects GSO42");
    const RationalFn &y1p = xiP.values[0], &y2p = xiP.values[1], &y0p = xiP.values[2];
    CharacterTriple xi = xiP;
    xi.group = Group::GU22;
    xi.values = {y1p * y1p * y2p * y2p * y0p, y1p * y1p * y0p, y2p * y0p};
    return xi;
}

// Solves the 3x3 monomial system backwards; requires the square roots to be
// exact (used as a consistency check on rational inputs).
inline CharacterTriple changechar_pullback_inverse(const CharacterTriple& xi) {
    if (xi.group != Group::GU22)
        throw constraint_error("group mismatch", "expected a GU22 triple");
    // y1/y2 = y2'^2 and y2 = y1'^2 y0', y0 = y2' y0'.
    RationalFn y2p_sq = xi.values[0] / xi.values[1];
    RationalFn y2p = y2p_sq.pow_half(1);
    RationalFn y0p = xi.values[2] / y2p;
    RationalFn y1p = (xi.values[1] / y0p).pow_half(1);
    CharacterTriple out = xi;
    out.group = Group::GSO42;
    out.values = {y1p, y2p, y0p};
    return out;
}

enum class ThetaCase {
    IrreducibleRestriction,  // restriction to the similitude-norm subgroup stays irreducible
    Dihedral2a,              // x2 = -1 after normalization
    Case2b,                  // {x1, x2} = {-1, 1}
};

inline std::string theta_case_name(ThetaCase c) {
    switch (c) {
        case ThetaCase::IrreducibleRestriction: return "irreducible-restriction";
        case ThetaCase::Dihedral2a: return "dihedral-2a";
        case ThetaCase::Case2b: return "case-2b";
    }
    return "?";
}

struct ThetaTransfer {
    CharacterTriple xi;          // GU22 values (y1, y2, y0)
    ThetaCase case_tag;
    CharacterTriple normalized;  // the Weyl translate actually transferred
};

// Value-level theta transfer (y1, y2, y0) = (x0^2, x2^2 x0^2, -x1), after
// normalizing the dihedral slot to x2 (swap x1 <-> x2 when only x1 is -1).
inline ThetaTransfer theta_transfer(const CharacterTriple& chi) {
    if (chi.group != Group::GSp4)
        throw constraint_error("group mismatch", "theta_transfer expects a GSp4 character");
    chi.require_central_if_decidable();
    if (!is_generic_regular(chi))
        throw constraint_error("nondegeneracy",
                               "one of x1, x2, x1 x2, x1/x2 equals q or 1/q");
    RationalFn minus_one = chi.minus_one();
    RationalFn one = chi.one();
    bool m1 = chi.x1() == minus_one, m2 = chi.x2() == minus_one;
    bool two_b = (m1 && chi.x2() == one) || (m2 && chi.x1() == one);
    CharacterTriple norm = chi;
    ThetaCase tag = ThetaCase::IrreducibleRestriction;
    if (two_b) {
        // normal form (x1, x2) = (-1, 1); the value map then lands on
        // (x0^2, x0^2, 1) with trivial third entry
        if (!m1) norm = weyl_translate(chi, Gen::s1);
        tag = ThetaCase::Case2b;
    } else if (m1 || m2) {
        // dihedral slot normalized to x2
        if (m1 && !m2) norm = weyl_translate(chi, Gen::s1);
        tag = ThetaCase::Dihedral2a;
    }

    CharacterTriple xi = norm;
    xi.group = Group::GU22;
    xi.values = {norm.x0() * norm.x0(), norm.x2() * norm.x2() * norm.x0() * norm.x0(),
                 -norm.x1()};
    return {xi, tag, norm};
}

// The two boundary identities of the Mackey analysis, decided at powers of
// the uniformizer: each identity splits into the coefficient of a and of d.
//   (1)  xi1(a) xi0(ad) = xi2^-1(a)  <=>  y1 y0 = y2^-1  and  y0 = 1
//   (2)  xi1(a) xi0(ad) = xi2^-1(d)  <=>  y1 y0 = 1      and  y0 = y2^-1
inline std::pair<bool, bool> mackey_conditions(const CharacterTriple& xi) {
    if (xi.group != Group::GU22)
        throw constraint_error("group mismatch", "mackey_conditions expects GU22");
    xi.require_central_if_decidable();
    RationalFn one = xi.one();
    const RationalFn &y1 = xi.x1(), &y2 = xi.x2(), &y0 = xi.x0();
    bool cond1 = (y1 * y0 * y2 == one) && (y0 == one);
    bool cond2 = (y1 * y0 == one) && (y0 * y2 == one);
    return {cond1, cond2};
}

// Closed orbits that can support the functional. Orbits 1, 2, 5, 6, 7 never
// contribute; orbit 3 needs xi0 = 1 and xi1 = xi2^-1, orbit 4 needs
// xi1 xi0 = 1 on F^x and xi2 xi0 = 1.
inline std::set<int> closed_orbit_contributions(const CharacterTriple& xi) {
    if (xi.group != Group::GU22)
        throw constraint_error("group mismatch", "closed_orbit_contributions expects GU22");
    std::set<int> out;
    RationalFn one = xi.one();
    const RationalFn &y1 = xi.x1(), &y2 = xi.x2(), &y0 = xi.x0();
    if (y1 * y2 * y0 == one && y0 == one) out.insert(3);
    if (y1 * y0 == one && y2 * y0 == one) out.insert(4);
    return out;
}

// ---------------------------------------------------------------------------
// Orbit table: S(F) acting on the flag variety, four Kostant words each with
// and without the quadratic twist element, one open orbit.
// ---------------------------------------------------------------------------

enum class StabilizerKind {
    BorelGL2FullUnipotent,   // B_GL2 . N_G
    BorelGL2NoLowerEntry,    // B_GL2 . { n : y-entry = 0 }
    BorelGL2CornerOnly,      // B_GL2 . { n : only the corner x survives }
    BorelGL2,                // B_GL2
    TorusDeltaFullUnipotent, // T_delta . N_G
    TorusDeltaTwistedPlane,  // T_delta . { n : y = delta(alpha - alphabar) + delta^2 x }
    TorusDeltaTwistedLine,   // T_delta . { n(alpha, x, y) on the -delta x line }
    TorusDelta,              // T_delta (open orbit)
};

struct OrbitEntry {
    int index = 0;                 // 1..8
    bool twisted = false;          // carries the w_delta factor
    std::vector<Gen> word;         // the Kostant part: {}, s2, s2 s1, s2 s1 s2
    bool open = false;
    StabilizerKind stabilizer = StabilizerKind::BorelGL2FullUnipotent;
    std::string stabilizer_name;
};

inline const std::vector<OrbitEntry>& orbit_table() {
    static const std::vector<OrbitEntry> t = [] {
        using G = Gen;
        std::vector<OrbitEntry> v;
        v.push_back({1, false, {}, false, StabilizerKind::BorelGL2FullUnipotent,
                     "B_GL2 . N_G"});
        v.push_back({2, false, {G::s2}, false, StabilizerKind::BorelGL2NoLowerEntry,
                     "B_GL2 . N_G^{y=0}"});
        v.push_back({3, false, {G::s2, G::s1}, false, StabilizerKind::BorelGL2CornerOnly,
                     "B_GL2 . N_G^{corner}"});
        v.push_back({4, false, {G::s2, G::s1, G::s2}, false, StabilizerKind::BorelGL2,
                     "B_GL2"});
        v.push_back({5, true, {}, false, StabilizerKind::TorusDeltaFullUnipotent,
                     "T_delta . N_G"});
        v.push_back({6, true, {G::s2}, false, StabilizerKind::TorusDeltaTwistedPlane,
                     "T_delta . N_G^{plane}"});
        v.push_back({7, true, {G::s2, G::s1}, false, StabilizerKind::TorusDeltaTwistedLine,
                     "T_delta . N_G^{line}"});
        v.push_back({8, true, {G::s2, G::s1, G::s2}, true, StabilizerKind::TorusDelta,
                     "T_delta"});
        return v;
    }();
    return t;
}

// ---------------------------------------------------------------------------
// Verdict.
// ---------------------------------------------------------------------------

enum class ShalikaRoute { MackeyOpenOrbit, ThetaDihedral };

struct ShalikaReport {
    bool exists = false;
    bool unique = false;
    ShalikaRoute via = ShalikaRoute::MackeyOpenOrbit;
    bool cond1 = false, cond2 = false;  // boundary identities on the transfer
    ThetaCase case_tag = ThetaCase::IrreducibleRestriction;
    CharacterTriple theta_source;       // the GSp4 input
    CharacterTriple xi;                 // its transfer
};

// Generic unramified input with trivial central character: a spherical
// Shalika functional exists and is unique. The route records whether
// uniqueness needs the dihedral theta argument (a boundary identity holds)
// or follows from the open orbit alone.
inline ShalikaReport shalika_verdict(const CharacterTriple& chi) {
    ThetaTransfer t = theta_transfer(chi);  // validates the preconditions
    auto [c1, c2] = mackey_conditions(t.xi);
    ShalikaReport r;
    r.exists = r.unique = true;
    r.cond1 = c1;
    r.cond2 = c2;
    r.via = (c1 || c2) ? ShalikaRoute::ThetaDihedral : ShalikaRoute::MackeyOpenOrbit;
    r.case_tag = t.case_tag;
    r.theta_source = chi;
    r.xi = t.xi;
    return r;
}

}  // namespace cassel
