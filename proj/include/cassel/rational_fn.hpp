#pragma once

// Rational functions: quotients of Laurent polynomials. Equality is decided
// by cross-multiplication, so no gcd machinery is needed; normalization only
// strips unit factors (monomials and rational contents) and collapses exact
// quotients, which keeps the common cases small.

#include "cassel/laurent.hpp"

namespace cassel {

struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class RationalFn {
  public:
    explicit RationalFn(int arity = 0)
        : num_(LaurentPoly::zero(arity)), den_(LaurentPoly::one(arity)) {}
    RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw arithmetic_error("zero denominator polynomial");
        if (num_.arity() != den_.arity()) throw arity_mismatch(num_.arity(), den_.arity());
        normalize();
    }
    RationalFn(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::one(num_.arity())) {
        normalize();
    }

    static RationalFn constant(int arity, Rat c) {
        return RationalFn(LaurentPoly::constant(arity, std::move(c)));
    }
    static RationalFn var(int arity, int slot) {
        return RationalFn(LaurentPoly::var_pow(arity, slot, 2));
    }
    // variable^(doubled/2)
    static RationalFn var_pow(int arity, int slot, int32_t doubled) {
        return RationalFn(LaurentPoly::var_pow(arity, slot, doubled));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    int arity() const { return num_.arity(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_one(); }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
        // keep sums over a common factored denominator small: if one
        // denominator divides the other, no cross product is needed
        size_t budget = 4 * (a.den_.term_count() + b.den_.term_count()) + 32;
        if (auto k = try_exact_divide(b.den_, a.den_, budget, false))
            return RationalFn(a.num_ * *k + b.num_, b.den_);
        if (auto k = try_exact_divide(a.den_, b.den_, budget, false))
            return RationalFn(a.num_ + b.num_ * *k, a.den_);
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
        return a + (-b);
    }
    RationalFn operator-() const {
        RationalFn r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.is_zero()) throw arithmetic_error("division by zero rational function");
        return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFn inv() const {
        if (is_zero()) throw arithmetic_error("division by zero rational function");
        return RationalFn(den_, num_);
    }

    RationalFn pow(long long e) const {
        if (e < 0) return inv().pow(-e);
        RationalFn acc = constant(arity(), Rat(1));
        RationalFn base = *this;
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k) {
            if (k & 1ULL) acc = acc * base;
            if (k >>= 1) base = base * base;
        }
        return acc;
    }

    // value^(half/2) for a monomial value; used for half-integral coweights.
    RationalFn pow_half(long long half_units) const {
        if (half_units % 2 == 0) return pow(half_units / 2);
        if (num_.term_count() != 1 || den_.term_count() != 1)
            throw numeric_specialization_error(
                "half-integral power of a non-monomial value");
        auto [ne, nc] = *num_.terms().begin();
        auto [de, dc] = *den_.terms().begin();
        Expo e = ne;
        for (size_t i = 0; i < e.size(); ++i) {
            long long x = static_cast<long long>(ne[i] - de[i]) * half_units;
            if (x % 2 != 0)
                throw numeric_specialization_error(
                    "half-integral exponent does not stay in the half-unit lattice");
            e[i] = static_cast<int32_t>(x / 2);
        }
        Rat c = nc / dc;
        if (half_units < 0) {
            c = c.inv();
            half_units = -half_units;
        }
        auto r = c.sqrt_exact();
        if (!r)
            throw numeric_specialization_error(
                "half-integral power of a coefficient with no exact square root");
        return RationalFn(LaurentPoly::monomial(arity(), e, r->pow(half_units)));
    }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        if (a.num_ == b.num_ && a.den_ == b.den_) return true;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    bool equals_rat(const Rat& c) const {
        return num_ == LaurentPoly::constant(arity(), c) * den_;
    }

    Rat eval(const std::vector<Rat>& vals) const {
        Rat d = den_.eval(vals);
        if (d.is_zero()) throw pole_error("denominator vanishes at the evaluation point");
        return num_.eval(vals) / d;
    }

    // Constant value if this is a constant, otherwise nullopt.
    std::optional<Rat> as_rat() const {
        if (!num_.is_constant() || !den_.is_constant()) return std::nullopt;
        if (num_.is_zero()) return Rat(0);
        return num_.terms().begin()->second / den_.terms().begin()->second;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (den_.is_one()) return num_.to_string(names);
        std::string n = num_.to_string(names);
        std::string d = den_.to_string(names);
        return "(" + n + ") / (" + d + ")";
    }

  private:
    LaurentPoly num_, den_;

    void normalize() {
        const int arity = num_.arity();
        if (num_.is_zero()) {
            den_ = LaurentPoly::one(arity);
            return;
        }
        if (den_.is_one()) return;
        // strip the joint monomial unit
        Expo nmin = num_.min_exponents(), dmin = den_.min_exponents();
        Expo shift = nmin;
        bool any = false;
        for (size_t i = 0; i < shift.size(); ++i) {
            shift[i] = -std::min(nmin[i], dmin[i]);
            any = any || shift[i] != 0;
        }
        if (any) {
            num_ = num_.shifted(shift);
            den_ = den_.shifted(shift);
        }
        // make the denominator primitive with positive leading coefficient
        Rat c = den_.content();
        if (den_.leading_term().second.sign() < 0) c = -c;
        if (!c.is_one()) {
            Rat ic = c.inv();
            num_ = num_ * ic;
            den_ = den_ * ic;
        }
        if (den_.is_one()) return;
        // collapse exact quotients; bounded attempt so a miss stays cheap
        size_t budget = 2 * num_.term_count() + 16;
        if (auto q = try_exact_divide(num_, den_, budget, false)) {
            num_ = std::move(*q);
            den_ = LaurentPoly::one(arity);
        }
    }
};

}  // namespace cassel
