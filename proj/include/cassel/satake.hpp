#pragma once

// Unramified characters recorded by their values at the uniformizer, the
// diagonal Frobenius representatives they induce, and the character-level
// predicates (central constraint, nondegeneracy, dihedral detection,
// inverse-pair admissibility for the split Shalika model).
//
// All values live in a shared exact coefficient field realized as rational
// functions in caller-chosen symbols; purely numeric data uses constants.

#include <array>

#include "cassel/rational_fn.hpp"

namespace cassel {

// Quadratic character of F^x attached to E at the uniformizer: -1 when E/F
// is the unramified quadratic field extension, +1 when E splits.
inline constexpr int kChiQuadInert = -1;
inline constexpr int kChiQuadSplit = +1;

enum class Group { GSp4, GU22, GSO42, GL4 };

inline std::string group_name(Group g) {
    switch (g) {
        case Group::GSp4: return "GSp4";
        case Group::GU22: return "GU22";
        case Group::GSO42: return "GSO42";
        case Group::GL4: return "GL4";
    }
    return "?";
}

struct constraint_error : std::runtime_error {
    std::string condition;  // name of the violated condition
    constraint_error(std::string cond, const std::string& detail)
        : std::runtime_error(cond + ": " + detail), condition(std::move(cond)) {}
};

// An unramified character of the relevant maximal torus, as its tuple of
// uniformizer values, together with the residue cardinality q (a value or a
// symbol in the same field).
struct CharacterTriple {
    Group group = Group::GSp4;
    std::vector<RationalFn> values;  // 3 entries, or 4 for GL4
    RationalFn q;
    std::vector<std::string> var_names;  // print names for the symbol slots

    int arity() const { return q.arity(); }

    const RationalFn& x1() const { return values.at(0); }
    const RationalFn& x2() const { return values.at(1); }
    const RationalFn& x0() const { return values.at(2); }
    const RationalFn& a(size_t i) const { return values.at(i); }

    RationalFn one() const { return RationalFn::constant(arity(), Rat(1)); }
    RationalFn minus_one() const { return RationalFn::constant(arity(), Rat(-1)); }

    // Trivial-central-character test at the level of uniformizer values.
    bool central_ok() const {
        switch (group) {
            case Group::GSp4:
            case Group::GU22:
                return x1() * x2() * x0() * x0() == one();
            case Group::GSO42:
                // No value-level constraint is recorded on this side; the
                // operative condition lives on the GU22 pullback.
                return true;
            case Group::GL4: {
                RationalFn p = values.at(0) * values.at(1) * values.at(2) * values.at(3);
                return p == one();
            }
        }
        return false;
    }

    void require_central() const {
        if (!central_ok())
            throw constraint_error("trivial central character",
                                   "product of uniformizer values is not 1 for " +
                                       group_name(group));
    }

    bool all_values_constant() const {
        for (const auto& v : values)
            if (!v.as_rat()) return false;
        return true;
    }

    // Enforce the central constraint where it is decidable: fully numeric
    // triples must satisfy it on the nose; free symbols are taken to satisfy
    // it by assumption (the constraint cannot be imposed on a polynomial
    // ring, e.g. the quadratic-character pattern needs x0^2 = -1).
    void require_central_if_decidable() const {
        if (all_values_constant()) require_central();
    }
};

// Diagonal Satake representative diag(u, v, v^-1, u^-1).
struct FrobeniusClass {
    std::array<RationalFn, 4> entries;
    CharacterTriple source;

    const RationalFn& u() const { return entries[0]; }
    const RationalFn& v() const { return entries[1]; }
};

// diag(x1 x2 x0, x1 x0, x2 x0, x0); the central constraint makes the shape
// symplectic (entry1*entry4 = entry2*entry3 = 1).
inline FrobeniusClass frobenius(const CharacterTriple& chi) {
    if (chi.group != Group::GSp4)
        throw constraint_error("group mismatch", "frobenius expects a GSp4 character");
    chi.require_central();
    FrobeniusClass g;
    g.entries = {chi.x1() * chi.x2() * chi.x0(), chi.x1() * chi.x0(), chi.x2() * chi.x0(),
                 chi.x0()};
    g.source = chi;
    return g;
}

// Nondegeneracy: none of x1, x2, x1 x2, x1 x2^-1 equals q or q^-1.
inline bool is_generic_regular(const CharacterTriple& chi, const RationalFn& q) {
    const RationalFn tests[4] = {chi.x1(), chi.x2(), chi.x1() * chi.x2(),
                                 chi.x1() / chi.x2()};
    RationalFn qi = q.inv();
    for (const auto& t : tests)
        if (t == q || t == qi) return false;
    return true;
}

inline bool is_generic_regular(const CharacterTriple& chi) {
    return is_generic_regular(chi, chi.q);
}

// Dihedral over the inert quadratic extension: the quadratic character value
// -1 appears among x1, x2.
inline bool is_dihedral(const CharacterTriple& chi) {
    RationalFn m = chi.minus_one();
    return chi.x1() == m || chi.x2() == m;
}

// Split Shalika admissibility for a GL4 tuple: the four values split into two
// inverse pairs and are pairwise distinct (regularity).
inline bool split_shalika_admissible(const CharacterTriple& chi) {
    if (chi.group != Group::GL4)
        throw constraint_error("group mismatch", "split_shalika_admissible expects GL4");
    const auto& a = chi.values;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if (a[i] == a[j]) return false;
    RationalFn one = chi.one();
    static constexpr int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& p : pairings)
        if (a[p[0]] * a[p[1]] == one && a[p[2]] * a[p[3]] == one) return true;
    return false;
}

// |.|^z at the uniformizer: q^-z, with z in half-unit steps.
inline RationalFn value_from_exponent(const RationalFn& q, const Rat& z) {
    Rat doubled = z * Rat(2);
    if (!doubled.is_integer())
        throw arithmetic_error("exponent must lie in the half-unit lattice");
    auto d = doubled.num().to_int64();
    if (!d) throw arithmetic_error("exponent too large");
    return q.pow_half(-*d);
}

// Weyl translates at value level. The torus actions of the two generators
// read the same on GSp4 and GU22 triples: s1 swaps the first two values,
// s2 maps (t1, t2, t0) to (t1, t2^-1, t2 t0).
enum class Gen { s1, s2 };

inline CharacterTriple weyl_translate(const CharacterTriple& chi, Gen s) {
    CharacterTriple r = chi;
    if (s == Gen::s1) {
        std::swap(r.values[0], r.values[1]);
    } else {
        r.values[2] = chi.values[1] * chi.values[2];
        r.values[1] = chi.values[1].inv();
    }
    return r;
}

}  // namespace cassel
