#pragma once

// Formal power series in one distinguished variable t, truncated at a fixed
// order, with rational-function coefficients. Multiplication is the exact
// Cauchy product cut at the truncation order.

#include "cassel/rational_fn.hpp"

namespace cassel {

struct order_mismatch : std::runtime_error {
    order_mismatch(size_t a, size_t b)
        : std::runtime_error("truncation order mismatch: " + std::to_string(a) + " vs " +
                             std::to_string(b)) {}
};

class TruncatedSeries {
  public:
    TruncatedSeries(int arity, size_t order)
        : arity_(arity), coeffs_(order + 1, RationalFn::constant(arity, Rat(0))) {}

    static TruncatedSeries one(int arity, size_t order) {
        TruncatedSeries s(arity, order);
        s.coeffs_[0] = RationalFn::constant(arity, Rat(1));
        return s;
    }

    size_t order() const { return coeffs_.size() - 1; }
    int arity() const { return arity_; }
    const RationalFn& operator[](size_t k) const { return coeffs_.at(k); }
    void set(size_t k, RationalFn v) { coeffs_.at(k) = std::move(v); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check(b);
        TruncatedSeries r = a;
        for (size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = r.coeffs_[k] + b.coeffs_[k];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check(b);
        TruncatedSeries r = a;
        for (size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = r.coeffs_[k] - b.coeffs_[k];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check(b);
        TruncatedSeries r(a.arity_, a.order());
        for (size_t k = 0; k <= a.order(); ++k) {
            RationalFn acc = RationalFn::constant(a.arity_, Rat(0));
            for (size_t i = 0; i <= k; ++i) acc = acc + a.coeffs_[i] * b.coeffs_[k - i];
            r.coeffs_[k] = std::move(acc);
        }
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const RationalFn& c) {
        TruncatedSeries r = a;
        for (auto& x : r.coeffs_) x = x * c;
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.arity_ != b.arity_ || a.order() != b.order()) return false;
        for (size_t k = 0; k <= a.order(); ++k)
            if (a.coeffs_[k] != b.coeffs_[k]) return false;
        return true;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    // First index at which the two series differ, if any.
    static std::optional<size_t> first_mismatch(const TruncatedSeries& a,
                                                const TruncatedSeries& b) {
        a.check(b);
        for (size_t k = 0; k <= a.order(); ++k)
            if (a.coeffs_[k] != b.coeffs_[k]) return k;
        return std::nullopt;
    }

    // Multiplicative inverse; requires an invertible constant term.
    TruncatedSeries inverse() const {
        if (coeffs_[0].is_zero())
            throw arithmetic_error("series inverse needs a nonzero constant term");
        TruncatedSeries r(arity_, order());
        RationalFn c0 = coeffs_[0].inv();
        r.coeffs_[0] = c0;
        for (size_t k = 1; k <= order(); ++k) {
            RationalFn acc = RationalFn::constant(arity_, Rat(0));
            for (size_t i = 1; i <= k; ++i) acc = acc + coeffs_[i] * r.coeffs_[k - i];
            r.coeffs_[k] = -(c0 * acc);
        }
        return r;
    }

    // The truncation of a polynomial in t given by its coefficient list.
    static TruncatedSeries from_poly(int arity, size_t order,
                                     const std::vector<RationalFn>& poly) {
        TruncatedSeries s(arity, order);
        for (size_t k = 0; k < poly.size() && k <= order; ++k) s.coeffs_[k] = poly[k];
        return s;
    }

    // Long-division expansion of 1 / poly(t) to the given order.
    static TruncatedSeries inverse_of_poly(int arity, size_t order,
                                           const std::vector<RationalFn>& poly) {
        return from_poly(arity, order, poly).inverse();
    }

    std::string to_string(const std::vector<std::string>& names,
                         const std::string& tname = "t") const {
        std::ostringstream os;
        bool first = true;
        for (size_t k = 0; k <= order(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << coeffs_[k].to_string(names) << ")";
            if (k == 1) os << "*" << tname;
            if (k > 1) os << "*" << tname << "^" << k;
        }
        if (first) os << "0";
        os << " + O(" << tname << "^" << order() + 1 << ")";
        return os.str();
    }

  private:
    int arity_;
    std::vector<RationalFn> coeffs_;

    void check(const TruncatedSeries& o) const {
        if (arity_ != o.arity_) throw arity_mismatch(arity_, o.arity_);
        if (order() != o.order()) throw order_mismatch(order(), o.order());
    }
};

}  // namespace cassel
