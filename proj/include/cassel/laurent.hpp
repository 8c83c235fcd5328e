#pragma once

// Multivariate Laurent polynomials over the rationals, in canonical form:
// a sorted term map with no zero coefficients. Exponents are stored in
// half-unit steps: a stored exponent e in slot i denotes (variable i)^(e/2).
// Doubling keeps half-integral coweights (such as the Weyl vector) inside an
// integer-exponent ring.

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cassel/rational.hpp"

namespace cassel {

using Expo = std::vector<int32_t>;  // doubled exponents, length = arity

struct arity_mismatch : std::runtime_error {
    arity_mismatch(int a, int b)
        : std::runtime_error("arity mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct numeric_specialization_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class LaurentPoly;
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

struct division_error;  // carries the remainder witness, see below

class LaurentPoly {
  public:
    explicit LaurentPoly(int arity = 0) : arity_(arity) {}

    static LaurentPoly zero(int arity) { return LaurentPoly(arity); }
    static LaurentPoly constant(int arity, Rat c) {
        LaurentPoly p(arity);
        if (!c.is_zero()) p.terms_.emplace(Expo(static_cast<size_t>(arity), 0), std::move(c));
        return p;
    }
    static LaurentPoly one(int arity) { return constant(arity, Rat(1)); }
    static LaurentPoly monomial(int arity, Expo e, Rat c = Rat(1)) {
        if (static_cast<int>(e.size()) != arity) throw arity_mismatch(arity, static_cast<int>(e.size()));
        LaurentPoly p(arity);
        if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }
    // variable^(doubled/2) in the given slot
    static LaurentPoly var_pow(int arity, int slot, int32_t doubled, Rat c = Rat(1)) {
        Expo e(static_cast<size_t>(arity), 0);
        e[static_cast<size_t>(slot)] = doubled;
        return monomial(arity, std::move(e), std::move(c));
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->second.is_one() &&
               is_zero_expo(terms_.begin()->first);
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_expo(terms_.begin()->first));
    }
    size_t term_count() const { return terms_.size(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    Rat coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Expo& e, const Rat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_arity(b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_arity(b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r(arity_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_arity(b);
        LaurentPoly r(a.arity_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Expo e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const Rat& c) {
        LaurentPoly r(a.arity_);
        if (c.is_zero()) return r;
        for (const auto& [e, cc] : a.terms_) r.terms_.emplace(e, cc * c);
        return r;
    }
    friend LaurentPoly operator*(const Rat& c, const LaurentPoly& a) { return a * c; }

    LaurentPoly pow(unsigned e) const {
        LaurentPoly acc = one(arity_), base = *this;
        while (e) {
            if (e & 1U) acc = acc * base;
            if (e >>= 1) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Applies an exponent transform (e.g. a signed permutation of slots).
    LaurentPoly map_exponents(const std::function<Expo(const Expo&)>& f) const {
        LaurentPoly r(arity_);
        for (const auto& [e, c] : terms_) r.add_term(f(e), c);
        return r;
    }

    // Re-embeds into a wider ring; slot_map[i] = destination of old slot i.
    LaurentPoly extended(int new_arity, const std::vector<int>& slot_map) const {
        LaurentPoly r(new_arity);
        for (const auto& [e, c] : terms_) {
            Expo ne(static_cast<size_t>(new_arity), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[static_cast<size_t>(slot_map[i])] = e[i];
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    // Exact evaluation; every doubled exponent must be even unless the value
    // in that slot has an exact rational square root. Per-slot powers are
    // memoized across terms.
    Rat eval(const std::vector<Rat>& vals) const {
        if (static_cast<int>(vals.size()) != arity_)
            throw arity_mismatch(arity_, static_cast<int>(vals.size()));
        std::vector<std::map<int32_t, Rat>> powers(vals.size());
        auto slot_pow = [&](size_t i, int32_t doubled) -> const Rat& {
            auto it = powers[i].find(doubled);
            if (it != powers[i].end()) return it->second;
            Rat v;
            if (doubled % 2 == 0) {
                v = vals[i].pow(doubled / 2);
            } else {
                auto root = vals[i].sqrt_exact();
                if (!root)
                    throw numeric_specialization_error(
                        "half-integral exponent at a value with no exact square root");
                v = root->pow(doubled);
            }
            return powers[i].emplace(doubled, std::move(v)).first->second;
        };
        Rat acc(0);
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                t = t * slot_pow(i, e[i]);
            }
            acc = acc + t;
        }
        return acc;
    }

    Rat coefficient_sum() const {  // evaluation at all variables = 1
        Rat acc(0);
        for (const auto& [e, c] : terms_) acc = acc + c;
        return acc;
    }

    // Componentwise minimum of exponents over all terms (zero poly: all 0).
    Expo min_exponents() const {
        Expo m(static_cast<size_t>(arity_), 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) {
                m = e;
                first = false;
            } else {
                for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
            }
        }
        return m;
    }

    LaurentPoly shifted(const Expo& delta) const {
        LaurentPoly r(arity_);
        for (const auto& [e, c] : terms_) {
            Expo ne = e;
            for (size_t i = 0; i < ne.size(); ++i) ne[i] += delta[i];
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    // Graded-lexicographic leading term (largest total degree, then lex).
    std::pair<Expo, Rat> leading_term() const {
        if (terms_.empty()) throw arithmetic_error("leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (grlex_less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    // Rational content: the positive rational c such that (1/c)*this has
    // coprime integer coefficients. Zero polynomial has content 1.
    Rat content() const {
        if (terms_.empty()) return Rat(1);
        BigInt g(0), l(1);
        for (const auto& [e, c] : terms_) {
            g = BigInt::gcd(g, c.num());
            l = l / BigInt::gcd(l, c.den()) * c.den();
        }
        return Rat(g, l);
    }

    static bool grlex_less(const Expo& a, const Expo& b) {
        long long da = 0, db = 0;
        for (int32_t x : a) da += x;
        for (int32_t x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Expo, Rat>*> order;
        order.reserve(terms_.size());
        for (const auto& t : terms_) order.push_back(&t);
        std::sort(order.begin(), order.end(),
                  [](auto* x, auto* y) { return grlex_less(y->first, x->first); });
        std::ostringstream os;
        bool first = true;
        for (auto* t : order) {
            const Rat& c = t->second;
            Rat mag = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            std::string vars = expo_string(t->first, names);
            if (vars.empty()) {
                os << mag.to_string();
            } else {
                if (!mag.is_one()) os << mag.to_string() << "*";
                os << vars;
            }
        }
        return os.str();
    }

  private:
    int arity_;
    std::map<Expo, Rat> terms_;

    void check_arity(const LaurentPoly& o) const {
        if (arity_ != o.arity_) throw arity_mismatch(arity_, o.arity_);
    }
    static bool is_zero_expo(const Expo& e) {
        for (int32_t x : e)
            if (x != 0) return false;
        return true;
    }
    static std::string expo_string(const Expo& e, const std::vector<std::string>& names) {
        std::ostringstream os;
        bool any = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) os << "*";
            any = true;
            os << (i < names.size() ? names[i] : "x" + std::to_string(i));
            if (e[i] != 2) {
                if (e[i] % 2 == 0)
                    os << "^" << (e[i] / 2);
                else
                    os << "^(" << e[i] << "/2)";
            }
        }
        return os.str();
    }

    friend LaurentPoly exact_divide(const LaurentPoly&, const LaurentPoly&);
};

// Division failure in the Laurent ring; quotient-so-far and remainder satisfy
// a = quotient * b + remainder.
struct division_error : std::runtime_error {
    LaurentPoly quotient, remainder;
    division_error(LaurentPoly q, LaurentPoly r)
        : std::runtime_error("not divisible in the Laurent ring"),
          quotient(std::move(q)),
          remainder(std::move(r)) {}
};

// Exact quotient a/b. Both are shifted into the ordinary polynomial cone and
// divided by leading terms under grlex; a non-divisible pair raises
// division_error carrying the witness. A nonzero step budget turns the
// routine into a bounded attempt (nullopt on failure or exhaustion), which
// is what opportunistic simplification wants.
inline std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& a, const LaurentPoly& b,
                                                   size_t max_steps, bool throw_on_fail) {
    if (a.arity() != b.arity()) throw arity_mismatch(a.arity(), b.arity());
    if (b.is_zero()) throw arithmetic_error("division by zero polynomial");
    const int arity = a.arity();
    if (a.is_zero()) return LaurentPoly::zero(arity);

    Expo amin = a.min_exponents(), bmin = b.min_exponents();
    Expo aneg = amin, bneg = bmin, delta = amin;
    for (size_t i = 0; i < amin.size(); ++i) {
        aneg[i] = -amin[i];
        bneg[i] = -bmin[i];
        delta[i] = amin[i] - bmin[i];
    }
    LaurentPoly rem = a.shifted(aneg);      // ordinary polynomial now
    LaurentPoly divisor = b.shifted(bneg);  // likewise, min exponent 0 in each slot
    auto [lbe, lbc] = divisor.leading_term();
    LaurentPoly quot(arity);
    size_t steps = 0;
    while (!rem.is_zero()) {
        if (max_steps != 0 && ++steps > max_steps) {
            if (throw_on_fail)
                throw division_error(quot.shifted(delta), rem.shifted(amin));
            return std::nullopt;
        }
        auto [lre, lrc] = rem.leading_term();
        Expo qe = lre;
        bool divisible = true;
        for (size_t i = 0; i < qe.size(); ++i) {
            qe[i] -= lbe[i];
            if (qe[i] < 0) divisible = false;
        }
        if (!divisible) {
            if (throw_on_fail)
                // restore the original normalization for the witness
                throw division_error(quot.shifted(delta), rem.shifted(amin));
            return std::nullopt;
        }
        Rat qc = lrc / lbc;
        LaurentPoly t = LaurentPoly::monomial(arity, qe, qc);
        quot = quot + t;
        rem = rem - t * divisor;
    }
    return quot.shifted(delta);
}

inline LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    return *try_exact_divide(a, b, 0, true);
}

}  // namespace cassel
