#pragma once

// Weyl alternator and character formula for Sp4(C), the symmetric-power
// decomposition of the 5-dimensional standard representation, and an
// independent symmetric-function oracle for the same characters.
//
// Characters are computed by exact division of alternators, never by a
// recursion on weights; the oracle takes the other route (complete
// homogeneous symmetric functions of the explicit weight monomials), so the
// two implementations can certify each other.

#include <mutex>

#include "cassel/rootdata.hpp"

namespace cassel {

// The alternating Weyl sum of a single exponential: sum over the eight
// signed permutations of (-1)^length e^(w mu). Arity defaults to the bare
// (u, v) ring; wider rings put u, v in the two designated slots.
inline LaurentPoly alternator(Coweight mu, int arity = 2, int slot_u = 0, int slot_v = 1) {
    LaurentPoly acc(arity);
    for (const auto& w : weyl_c2_elements()) {
        Coweight im = w.elem.act(mu);
        Rat sign = (w.length() % 2 == 0) ? Rat(1) : Rat(-1);
        acc.add_term(im.as_expo(arity, slot_u, slot_v), sign);
    }
    return acc;
}

// Alternator applied termwise to a Laurent polynomial whose (slot_u, slot_v)
// exponents carry the coweight.
inline LaurentPoly alternator_poly(const LaurentPoly& arg, int slot_u = 0, int slot_v = 1) {
    LaurentPoly acc(arg.arity());
    for (const auto& w : weyl_c2_elements()) {
        Rat sign = (w.length() % 2 == 0) ? Rat(1) : Rat(-1);
        const WeylElement& e = w.elem;
        acc = acc + arg.map_exponents([&](const Expo& ex) {
            Expo r = ex;
            const int32_t m[2] = {ex[static_cast<size_t>(slot_u)],
                                  ex[static_cast<size_t>(slot_v)]};
            r[static_cast<size_t>(slot_u)] = e.sign[0] * m[e.perm[0]];
            r[static_cast<size_t>(slot_v)] = e.sign[1] * m[e.perm[1]];
            return r;
        }) * sign;
    }
    return acc;
}

// e^rho * product over positive coroots of (1 - e^(-coroot)); equal to
// A(e^rho) by the denominator identity, which the tests pin down.
inline LaurentPoly weyl_denominator_product(int arity = 2, int slot_u = 0, int slot_v = 1) {
    LaurentPoly acc =
        LaurentPoly::monomial(arity, kRhoCheck.as_expo(arity, slot_u, slot_v));
    for (const auto& e : sp4_positive_coroots()) {
        LaurentPoly f = LaurentPoly::one(arity) -
                        LaurentPoly::monomial(arity, (-e.coroot).as_expo(arity, slot_u, slot_v));
        acc = acc * f;
    }
    return acc;
}

struct dominance_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An Sp4(C) character: Weyl-invariant Laurent polynomial in (u, v) with its
// highest weight.
struct CharacterPoly {
    LaurentPoly value;  // arity 2
    Coweight highest_weight;

    Rat dimension() const { return value.coefficient_sum(); }
};

// Weyl character formula: chi_lambda = A(e^(rho+lambda)) / A(e^rho).
// Memoized; characters are reused heavily by the series expansions.
inline CharacterPoly weyl_character(Coweight lambda) {
    if (!lambda.is_dominant_integral())
        throw dominance_error("highest weight must be dominant integral (a >= b >= 0)");
    static std::map<std::pair<int32_t, int32_t>, LaurentPoly> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto key = std::make_pair(lambda.a, lambda.b);
    auto it = cache.find(key);
    if (it == cache.end()) {
        LaurentPoly num = alternator(kRhoCheck + lambda);
        LaurentPoly den = alternator(kRhoCheck);
        it = cache.emplace(key, exact_divide(num, den)).first;
    }
    return {it->second, lambda};
}

// Sym^k(std) = direct sum of the irreducibles with highest weight
// (k - 2i)(alpha1-check + alpha2-check), i = 0 .. floor(k/2).
inline std::vector<Coweight> sym_decomp(int k) {
    std::vector<Coweight> out;
    for (int i = 0; 2 * i <= k; ++i) out.push_back((k - 2 * i) * kAlphaSumCheck);
    return out;
}

// Character of Sym^k(std) computed directly: the complete homogeneous
// symmetric function of degree k in the five weight monomials of std.
inline CharacterPoly sym_power_oracle(int k) {
    const LaurentPoly std_char = weyl_character({2, 2}).value;
    std::vector<LaurentPoly> weights;
    for (const auto& [e, c] : std_char.terms()) {
        if (!c.is_one()) throw arithmetic_error("std character must be multiplicity free");
        weights.push_back(LaurentPoly::monomial(2, e));
    }
    // h_k over the weights: H[j] = complete homogeneous of degree j using the
    // weights seen so far.
    std::vector<LaurentPoly> H(static_cast<size_t>(k) + 1, LaurentPoly::zero(2));
    H[0] = LaurentPoly::one(2);
    for (const auto& w : weights)
        for (int j = 1; j <= k; ++j) H[static_cast<size_t>(j)] =
            H[static_cast<size_t>(j)] + w * H[static_cast<size_t>(j) - 1];
    return {H[static_cast<size_t>(k)], k * kAlphaSumCheck};
}

// Weyl invariance of a (u, v) Laurent polynomial.
inline bool is_weyl_invariant(const LaurentPoly& p, int slot_u = 0, int slot_v = 1) {
    for (const auto& w : weyl_c2_elements()) {
        const WeylElement& e = w.elem;
        LaurentPoly im = p.map_exponents([&](const Expo& ex) {
            Expo r = ex;
            const int32_t m[2] = {ex[static_cast<size_t>(slot_u)],
                                  ex[static_cast<size_t>(slot_v)]};
            r[static_cast<size_t>(slot_u)] = e.sign[0] * m[e.perm[0]];
            r[static_cast<size_t>(slot_v)] = e.sign[1] * m[e.perm[1]];
            return r;
        });
        if (im != p) return false;
    }
    return true;
}

}  // namespace cassel
