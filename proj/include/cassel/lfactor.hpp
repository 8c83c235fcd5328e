#pragma once

// Degree-5 standard L-factors (optionally twisted by the quadratic class
// character of the inert extension), their power-series expansions through
// symmetric-power characters, the unramified zeta-integral series, and the
// coefficientwise identity check between the two.

#include "cassel/series.hpp"
#include "cassel/shalika.hpp"

namespace cassel {

enum class Twist { Trivial, Quadratic };

inline int twist_sign(Twist t) { return t == Twist::Quadratic ? kChiQuadInert : kChiQuadSplit; }

// Inverse Euler polynomial det(1 - eps std(g) t) as its coefficient list.
struct EulerFactor {
    std::vector<RationalFn> inverse;  // degree 5, inverse[0] = 1
    Twist twist = Twist::Trivial;
};

// The five weights of the standard representation, read off the character of
// highest weight alpha1-check + alpha2-check and evaluated at the Frobenius
// entries.
inline std::vector<RationalFn> standard_weights(const CSContext& ctx) {
    const LaurentPoly std_char = weyl_character({2, 2}).value;
    std::vector<RationalFn> out;
    for (const auto& [e, c] : std_char.terms()) {
        if (!c.is_one()) throw arithmetic_error("std character must be multiplicity free");
        out.push_back(ctx.u_val.pow_half(e[0]) * ctx.v_val.pow_half(e[1]));
    }
    return out;
}

inline EulerFactor euler_factor(const CSContext& ctx, Twist twist) {
    Rat eps(twist_sign(twist));
    std::vector<RationalFn> poly = {RationalFn::constant(3, Rat(1))};
    for (const auto& w : standard_weights(ctx)) {
        RationalFn root = RationalFn::constant(3, -eps) * w;  // factor (1 + root t)
        std::vector<RationalFn> next(poly.size() + 1, RationalFn::constant(3, Rat(0)));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i] = next[i] + poly[i];
            next[i + 1] = next[i + 1] + poly[i] * root;
        }
        poly = std::move(next);
    }
    return {std::move(poly), twist};
}

// L-factor series via the symmetric-power route:
//   sum_k eps^k tr(Sym^k std)(g) t^k, with Sym^k decomposed into the
//   irreducibles of highest weight (k-2i)(a1+a2).
inline TruncatedSeries lfactor_series(const CSContext& ctx, Twist twist, size_t order) {
    std::vector<RationalFn> char_values;  // tr(rho_{m,m})(g) for m = 0..order
    for (size_t m = 0; m <= order; ++m)
        char_values.push_back(
            ctx.eval_uv(weyl_character({2 * static_cast<int32_t>(m),
                                        2 * static_cast<int32_t>(m)}).value));
    Rat eps(twist_sign(twist));
    TruncatedSeries s(3, order);
    for (size_t k = 0; k <= order; ++k) {
        RationalFn acc = RationalFn::constant(3, Rat(0));
        for (size_t i = 0; 2 * i <= k; ++i) acc = acc + char_values[k - 2 * i];
        s.set(k, RationalFn::constant(3, eps.pow(static_cast<long long>(k))) * acc);
    }
    return s;
}

// Long-division expansion of the determinant route.
inline TruncatedSeries euler_series(const EulerFactor& f, size_t order) {
    return TruncatedSeries::inverse_of_poly(3, order, f.inverse);
}

// The zeta-integral series: the spherical section contributes the two local
// zeta factors (1 - q^-1 t)^-1 (1 - t^2)^-1, and the depth-n term carries
// q^{2n} times the spherical Shalika value, which cancels the modulus to a
// clean power of t.
inline TruncatedSeries zeta_series(const CSContext& ctx, size_t order,
                                   BracketSigns signs = {}) {
    ctx.require_regular();
    RationalFn one = RationalFn::constant(3, Rat(1));
    RationalFn zero = RationalFn::constant(3, Rat(0));
    TruncatedSeries zeta1 =
        TruncatedSeries::inverse_of_poly(3, order, {one, -(ctx.q.inv())});
    TruncatedSeries zeta2 = TruncatedSeries::inverse_of_poly(3, order, {one, zero, -one});
    TruncatedSeries bracket(3, order);
    const int eps_short = ctx.cs_case == CSCase::Inert ? +1 : -1;
    // normalizer of the spherical functional; see cs_inert / cs_split
    RationalFn norm = ctx.cs_case == CSCase::Inert ? (one - ctx.q.inv()) : (one + ctx.q.inv());
    for (size_t n = 0; n <= order; ++n) {
        LaurentPoly p = cs_bracket_over_weyl_denominator(static_cast<int>(n), eps_short, signs);
        RationalFn b = ctx.eval_uvq(p) / norm;
        if (ctx.cs_case == CSCase::Inert && n % 2 == 1) b = -b;
        bracket.set(n, std::move(b));
    }
    return zeta1 * zeta2 * bracket;
}

struct IdentityReport {
    CSCase cs_case = CSCase::Inert;
    size_t order = 0;
    bool equal = false;
    std::optional<size_t> first_mismatch;
    std::string lhs, rhs;  // the mismatching coefficients, when any
};

// Coefficientwise comparison of the zeta series against the (suitably
// twisted) L-factor series.
inline IdentityReport verify_identity(const CSContext& ctx, size_t order,
                                      BracketSigns signs = {}) {
    Twist twist = ctx.cs_case == CSCase::Inert ? Twist::Quadratic : Twist::Trivial;
    TruncatedSeries lhs = zeta_series(ctx, order, signs);
    TruncatedSeries rhs = lfactor_series(ctx, twist, order);
    IdentityReport r;
    r.cs_case = ctx.cs_case;
    r.order = order;
    r.first_mismatch = TruncatedSeries::first_mismatch(lhs, rhs);
    r.equal = !r.first_mismatch.has_value();
    if (r.first_mismatch) {
        r.lhs = lhs[*r.first_mismatch].to_string(uvq_names());
        r.rhs = rhs[*r.first_mismatch].to_string(uvq_names());
    }
    return r;
}

}  // namespace cassel
