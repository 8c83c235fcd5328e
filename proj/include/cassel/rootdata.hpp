#pragma once

// Root and coroot data for the C2 and A3 systems, their Weyl groups as
// explicit element tables with reduced words, coweight evaluation on diagonal
// Frobenius classes, and the modulus characters of the standard parabolic
// subgroups used in the unramified zeta computation.

#include <cassert>

#include "cassel/satake.hpp"

namespace cassel {

// A coweight for C2 in doubled epsilon-coordinates: (a, b) denotes the
// monomial u^(a/2) v^(b/2) on diag(u, v, v^-1, u^-1).
struct Coweight {
    int32_t a = 0, b = 0;

    friend Coweight operator+(Coweight x, Coweight y) { return {x.a + y.a, x.b + y.b}; }
    friend Coweight operator-(Coweight x, Coweight y) { return {x.a - y.a, x.b - y.b}; }
    friend Coweight operator*(int32_t n, Coweight x) { return {n * x.a, n * x.b}; }
    Coweight operator-() const { return {-a, -b}; }
    friend bool operator==(Coweight x, Coweight y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(Coweight x, Coweight y) { return !(x == y); }
    friend bool operator<(Coweight x, Coweight y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }

    bool is_integral() const { return a % 2 == 0 && b % 2 == 0; }
    // dominance for the standard C2 chamber, in epsilon-coordinates
    bool is_dominant_integral() const { return is_integral() && a >= b && b >= 0; }

    Expo as_expo(int arity, int slot_u = 0, int slot_v = 1) const {
        Expo e(static_cast<size_t>(arity), 0);
        e[static_cast<size_t>(slot_u)] = a;
        e[static_cast<size_t>(slot_v)] = b;
        return e;
    }
};

// The exponent dictionary follows the evaluation recipe for e^(alpha-check):
// entry ratios of diag(u, v, v^-1, u^-1). The four positive-root symbols
// evaluate to u/v, uv, u^2, v^2, so the half-sum exponent is
// rho-check -> u^2 v, stored doubled as (4, 2). This normalization is the one
// that makes the degree-5 standard factor and the symmetric-power dimensions
// (5, 14, ...) come out, and it is pinned by the acceptance suite.
inline constexpr Coweight kRhoCheck{4, 2};
// the depth shift exponent: uv, stored doubled as (2, 2)
inline constexpr Coweight kAlphaSumCheck{2, 2};

// Signed permutation of two coordinates: the C2 Weyl group element
// (m1, m2) -> (s0 * m_{p0}, s1 * m_{p1}).
struct WeylElement {
    std::array<uint8_t, 2> perm{0, 1};
    std::array<int8_t, 2> sign{1, 1};

    Coweight act(Coweight w) const {
        const int32_t m[2] = {w.a, w.b};
        return {sign[0] * m[perm[0]], sign[1] * m[perm[1]]};
    }
    friend WeylElement operator*(const WeylElement& x, const WeylElement& y) {
        WeylElement r;
        for (int i = 0; i < 2; ++i) {
            r.perm[i] = y.perm[x.perm[i]];
            r.sign[i] = static_cast<int8_t>(x.sign[i] * y.sign[x.perm[i]]);
        }
        return r;
    }
    WeylElement inverse() const {
        WeylElement r;
        for (int i = 0; i < 2; ++i) {
            r.perm[perm[i]] = static_cast<uint8_t>(i);
            r.sign[perm[i]] = sign[i];
        }
        return r;
    }
    friend bool operator==(const WeylElement& x, const WeylElement& y) {
        return x.perm == y.perm && x.sign == y.sign;
    }
};

// composition convention: (x*y).act = x.act after y.act
inline WeylElement weyl_s1() { return {{1, 0}, {1, 1}}; }   // swap (refl. in eps1 - eps2)
inline WeylElement weyl_s2() { return {{0, 1}, {1, -1}}; }  // negate 2nd (refl. in 2 eps2)

struct WeylWord {
    WeylElement elem;
    std::vector<Gen> word;  // a reduced word in s1, s2
    int length() const { return static_cast<int>(word.size()); }
};

// The eight elements of W(C2), found by breadth-first closure from the
// generators, each with a reduced word.
inline const std::vector<WeylWord>& weyl_c2_elements() {
    static const std::vector<WeylWord> table = [] {
        std::vector<WeylWord> elems{{WeylElement{}, {}}};
        const WeylElement gens[2] = {weyl_s1(), weyl_s2()};
        for (size_t i = 0; i < elems.size(); ++i) {
            for (int gi = 0; gi < 2; ++gi) {
                WeylElement cand = gens[gi] * elems[i].elem;  // prepend one letter
                bool known = false;
                for (const auto& e : elems)
                    if (e.elem == cand) {
                        known = true;
                        break;
                    }
                if (!known) {
                    WeylWord w;
                    w.elem = cand;
                    w.word.push_back(gi == 0 ? Gen::s1 : Gen::s2);
                    w.word.insert(w.word.end(), elems[i].word.begin(), elems[i].word.end());
                    elems.push_back(std::move(w));
                }
            }
        }
        assert(elems.size() == 8);
        return elems;
    }();
    return table;
}

inline const WeylWord& weyl_c2_longest() {
    static const WeylWord& w0 = []() -> const WeylWord& {
        const auto& t = weyl_c2_elements();
        size_t best = 0;
        for (size_t i = 1; i < t.size(); ++i)
            if (t[i].length() > t[best].length()) best = i;
        return t[best];
    }();
    return w0;
}

// Exponents of the positive-root symbols e^(alpha-check) on the Frobenius
// diagonal, doubled, with a flag telling whether the underlying root is
// short. The short-root entries are the two that enter the spherical
// Shalika products.
struct CorootEntry {
    Coweight coroot;
    bool short_root;
};
inline const std::array<CorootEntry, 4>& sp4_positive_coroots() {
    static const std::array<CorootEntry, 4> t = {{
        {{2, -2}, true},   // eps1 - eps2 : u/v
        {{2, 2}, true},    // eps1 + eps2 : uv
        {{4, 0}, false},   // 2 eps1      : u^2
        {{0, 4}, false},   // 2 eps2      : v^2
    }};
    return t;
}

inline int weyl_length(const WeylElement& w) {
    int len = 0;
    for (const auto& e : sp4_positive_coroots()) {
        Coweight im = w.act(e.coroot);
        bool positive = false;
        for (const auto& f : sp4_positive_coroots())
            if (im == f.coroot) positive = true;
        if (!positive) ++len;
    }
    return len;
}

inline Coweight weyl_act(const WeylElement& w, Coweight mu) { return w.act(mu); }

// ---------------------------------------------------------------------------
// The relative root system of the similitude groups (type C2). Roots are
// labelled by the classical names used for the torus t(a, b, nu).
// In the orthogonal basis f1 = alpha1 - alpha0/2, f2 = alpha2 - alpha0/2 the
// four positive roots are f1 - f2, f1 + f2, 2 f1, 2 f2.
// ---------------------------------------------------------------------------

enum class RelRoot {
    A1mA2,     // alpha1 - alpha2            (relative short)
    A1pA2mA0,  // alpha1 + alpha2 - alpha0   (relative short)
    TwoA1mA0,  // 2 alpha1 - alpha0          (relative long)
    TwoA2mA0,  // 2 alpha2 - alpha0          (relative long)
};

inline const std::array<RelRoot, 4>& rel_positive_roots() {
    static const std::array<RelRoot, 4> t = {RelRoot::A1mA2, RelRoot::A1pA2mA0,
                                             RelRoot::TwoA1mA0, RelRoot::TwoA2mA0};
    return t;
}

inline bool rel_root_is_long(RelRoot r) {
    return r == RelRoot::TwoA1mA0 || r == RelRoot::TwoA2mA0;
}

// f-coordinates of a relative root (doubled, to share the Coweight type).
inline Coweight rel_root_coords(RelRoot r) {
    switch (r) {
        case RelRoot::A1mA2: return {2, -2};
        case RelRoot::A1pA2mA0: return {2, 2};
        case RelRoot::TwoA1mA0: return {4, 0};
        case RelRoot::TwoA2mA0: return {0, 4};
    }
    return {};
}

// Signed Weyl action on relative roots: returns (root, positive?).
inline std::pair<RelRoot, bool> rel_root_act(const WeylElement& w, RelRoot r) {
    Coweight im = w.act(rel_root_coords(r));
    for (RelRoot cand : rel_positive_roots()) {
        if (im == rel_root_coords(cand)) return {cand, true};
        if (im == -rel_root_coords(cand)) return {cand, false};
    }
    throw arithmetic_error("relative root action left the root system");
}

// Identification of the positive relative roots with the positive coroot
// symbols of Sp4(C), matching chi(a_alpha) with the exponent of e at the
// Frobenius class: the two long relative roots land on the short-root
// entries, the two short ones on the long-root entries.
inline Coweight rel_root_to_sp4_coroot(RelRoot r) {
    switch (r) {
        case RelRoot::A1mA2: return {0, 4};      // x1/x2  = v^2
        case RelRoot::A1pA2mA0: return {4, 0};   // x1 x2  = u^2
        case RelRoot::TwoA1mA0: return {2, 2};   // x1     = u v
        case RelRoot::TwoA2mA0: return {2, -2};  // x2     = u/v
    }
    return {};
}

// chi(a_alpha) for an unramified GSp4 character: a_alpha is the coroot of
// alpha at the uniformizer, so the value is a monomial in x1, x2.
// rows: a_{alpha1-alpha2} = (coroot a1-a2)(pi)        -> x1 / x2
//       a_{alpha1+alpha2-alpha0} = (coroot a1+a2)(pi) -> x1 * x2
//       a_{2 alpha1-alpha0} = (coroot a1)(pi)         -> x1
//       a_{2 alpha2-alpha0} = (coroot a2)(pi)         -> x2
inline RationalFn chi_at_a(RelRoot r, const CharacterTriple& chi) {
    switch (r) {
        case RelRoot::A1mA2: return chi.x1() / chi.x2();
        case RelRoot::A1pA2mA0: return chi.x1() * chi.x2();
        case RelRoot::TwoA1mA0: return chi.x1();
        case RelRoot::TwoA2mA0: return chi.x2();
    }
    throw arithmetic_error("unreachable");
}

// xi(a_alpha) for a GU22 character: the same coroot matrices read through the
// torus t(a, b, nu) = diag(a, b, nu b~^-1, nu a~^-1) give
// rows: a_{alpha1-alpha2} = diag(pi, pi^-1, pi, pi^-1)       -> y1 / y2
//       a_{alpha1+alpha2-alpha0} = diag(pi, pi, pi^-1, pi^-1)-> y1 * y2
//       a_{2 alpha1-alpha0} = diag(pi, 1, 1, pi^-1)          -> y1
//       a_{2 alpha2-alpha0} = diag(1, pi, pi^-1, 1)          -> y2
inline RationalFn xi_at_a(RelRoot r, const CharacterTriple& xi) {
    switch (r) {
        case RelRoot::A1mA2: return xi.x1() / xi.x2();
        case RelRoot::A1pA2mA0: return xi.x1() * xi.x2();
        case RelRoot::TwoA1mA0: return xi.x1();
        case RelRoot::TwoA2mA0: return xi.x2();
    }
    throw arithmetic_error("unreachable");
}

// Residue-degree weights q_alpha: the two relative short roots have root
// spaces defined over E (unramified quadratic), so q_alpha = q^2 there; the
// long ones stay over F with q_alpha = q.
inline RationalFn q_alpha(RelRoot r, const RationalFn& q) {
    return rel_root_is_long(r) ? q : q * q;
}

// Iwahori indices of the simple reflections: [Iw s1 Iw : Iw] = q^2 and
// [Iw s2 Iw : Iw] = q.
inline RationalFn iwahori_index(Gen g, const RationalFn& q) {
    return g == Gen::s1 ? q * q : q;
}

// ---------------------------------------------------------------------------
// A3 (the GL4 Weyl group) and the root surjection onto C2.
// ---------------------------------------------------------------------------

struct PermutationS4 {
    std::array<uint8_t, 4> p{0, 1, 2, 3};
    int length() const {  // inversions
        int len = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++len;
        return len;
    }
};

inline const std::vector<PermutationS4>& all_s4() {
    static const std::vector<PermutationS4> t = [] {
        std::vector<PermutationS4> v;
        std::array<uint8_t, 4> p{0, 1, 2, 3};
        do {
            v.push_back({p});
        } while (std::next_permutation(p.begin(), p.end()));
        assert(v.size() == 24);
        return v;
    }();
    return t;
}

// Positive roots e_i - e_j (i < j) of A3, and their restrictions to the Sp4
// torus diag(t1, t2, t2^-1, t1^-1); the map is two-to-one onto the short Sp4
// roots and one-to-one onto the long ones.
struct GL4Root {
    int i, j;  // 1-based, i < j
    Coweight sp4_coroot;
    bool sp4_short;
};
inline const std::array<GL4Root, 6>& gl4_positive_roots() {
    static const std::array<GL4Root, 6> t = {{
        {1, 2, {2, -2}, true},  // t1/t2        -> eps1 - eps2
        {3, 4, {2, -2}, true},  // t3/t4        -> eps1 - eps2
        {1, 3, {2, 2}, true},   // t1/t3 = t1t2 -> eps1 + eps2
        {2, 4, {2, 2}, true},   // t2/t4 = t1t2 -> eps1 + eps2
        {1, 4, {4, 0}, false},  // t1/t4 = t1^2 -> 2 eps1
        {2, 3, {0, 4}, false},  // t2/t3 = t2^2 -> 2 eps2
    }};
    return t;
}

// Poincare sum Q_GL4 = sum over S4 of q^{-length}.
inline RationalFn gl4_poincare_sum(const RationalFn& q) {
    RationalFn acc = RationalFn::constant(q.arity(), Rat(0));
    for (const auto& w : all_s4()) acc = acc + q.pow(-w.length());
    return acc;
}

// ---------------------------------------------------------------------------
// Coweight evaluation and modulus characters.
// ---------------------------------------------------------------------------

// e^mu at diag(u, v, v^-1, u^-1): u^(a/2) v^(b/2). Symbolic entries stay
// symbolic; a genuinely half-integral monomial refuses numeric points that
// have no exact square root.
inline RationalFn eval_coweight(Coweight mu, const FrobeniusClass& g) {
    return g.u().pow_half(mu.a) * g.v().pow_half(mu.b);
}

enum class ModulusGroup { B_G, P_H, B_GSp4 };

// Valuations of the torus coordinates; only what the modulus needs.
struct TorusValuations {
    long long val_a = 0, val_b = 0, val_nu = 0;  // Borel descriptors
    long long val_det = 0, val_mu = 0;           // Siegel Levi descriptor
};

// Returns the exponent k with modulus value q^k.
inline long long modulus_exponent(ModulusGroup which, const TorusValuations& t) {
    switch (which) {
        case ModulusGroup::B_G:
            // |a abar|^3 |b bbar| / |nu|^4 with E/F unramified
            return -(6 * t.val_a + 2 * t.val_b - 4 * t.val_nu);
        case ModulusGroup::P_H:
            // |det(g) / mu|^3
            return -3 * (t.val_det - t.val_mu);
        case ModulusGroup::B_GSp4:
            // |a|^4 |b|^2 |nu|^-3
            return -(4 * t.val_a + 2 * t.val_b - 3 * t.val_nu);
    }
    throw constraint_error("unknown modulus tag", "expected B_G, P_H, or B_GSp4");
}

inline RationalFn modulus_eval(ModulusGroup which, const TorusValuations& t,
                               const RationalFn& q) {
    return q.pow(modulus_exponent(which, t));
}

}  // namespace cassel
