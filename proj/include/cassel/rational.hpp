#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals.
// No floating point is used anywhere in the exact layers built on top.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cassel {

struct arithmetic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signed arbitrary-precision integer, little-endian base-2^32 limbs.
// Canonical form: no leading zero limbs, zero has empty limbs and sign 0.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m =
            v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL : static_cast<unsigned long long>(v);
        while (m != 0) {
            limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        if (i == s.size()) throw arithmetic_error("empty integer literal");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw arithmetic_error("bad integer literal: " + s);
            r = r.mul_small(10U);
            r = r + BigInt(s[i] - '0');
        }
        if (!r.is_zero()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    bool odd() const { return !limbs_.empty() && (limbs_[0] & 1U); }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a.limbs_[i];
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.limbs_.size();
            while (carry) {
                uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        if (r.limbs_.empty()) r.sign_ = 0;
        return r;
    }

    // Truncated quotient and remainder: a = q*b + r with |r| < |b| and sign(r) = sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw arithmetic_error("division by zero");
        if (a.sign_ == 0) {
            q = BigInt();
            r = BigInt();
            return;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<uint32_t> qm, rm;
        divmod_mag(a.limbs_, b.limbs_, qm, rm);
        q.limbs_ = std::move(qm);
        q.trim();
        q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        r.limbs_ = std::move(rm);
        r.trim();
        r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    // gcd of magnitudes (binary algorithm); gcd(0,0) = 0.
    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.limbs_.empty() ? 0 : 1;
        b.sign_ = b.limbs_.empty() ? 0 : 1;
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int shift = 0;
        while (!a.odd() && !b.odd()) {
            a = a.shr1();
            b = b.shr1();
            ++shift;
        }
        while (!a.odd()) a = a.shr1();
        while (!b.is_zero()) {
            while (!b.odd()) b = b.shr1();
            if (cmp_mag(a.limbs_, b.limbs_) > 0) std::swap(a, b);
            b = b - a;
            b.sign_ = b.limbs_.empty() ? 0 : 1;
        }
        for (int i = 0; i < shift; ++i) a = a.shl1();
        return a;
    }

    BigInt pow(unsigned long long e) const {
        BigInt base = *this, acc(1);
        while (e) {
            if (e & 1ULL) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Exact integer square root when *this is a perfect square.
    std::optional<BigInt> sqrt_exact() const {
        if (sign_ < 0) return std::nullopt;
        if (is_zero()) return BigInt();
        // Newton iteration on a shrinking over-estimate.
        BigInt x = *this, prev;
        BigInt two(2);
        // initial estimate: 2^(ceil(bits/2))
        size_t bits = bit_length();
        BigInt est(1);
        for (size_t i = 0; i < (bits + 1) / 2 + 1; ++i) est = est.shl1();
        x = est;
        while (true) {
            BigInt y = (x + *this / x) / two;
            if (!(y < x)) break;
            x = y;
        }
        if (x * x == *this) return x;
        return std::nullopt;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string digits;
        std::vector<uint32_t> m = limbs_;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    // Value as double; adequate for the numeric p-adic oracle only.
    double to_double() const {
        double r = 0;
        for (size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
        return sign_ < 0 ? -r : r;
    }

    std::optional<long long> to_int64() const {
        if (limbs_.size() > 2) return std::nullopt;
        unsigned long long m = 0;
        if (limbs_.size() >= 1) m = limbs_[0];
        if (limbs_.size() == 2) m |= static_cast<unsigned long long>(limbs_[1]) << 32;
        if (sign_ >= 0) {
            if (m > 0x7fffffffffffffffULL) return std::nullopt;
            return static_cast<long long>(m);
        }
        if (m > 0x8000000000000000ULL) return std::nullopt;
        return -static_cast<long long>(m - 1) - 1;
    }

    size_t bit_length() const {
        if (limbs_.empty()) return 0;
        uint32_t top = limbs_.back();
        size_t b = (limbs_.size() - 1) * 32;
        while (top) {
            ++b;
            top >>= 1;
        }
        return b;
    }

  private:
    int sign_ = 0;
    std::vector<uint32_t> limbs_;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }

    BigInt mul_small(uint32_t m) const {
        if (is_zero() || m == 0) return BigInt();
        BigInt r;
        r.sign_ = sign_;
        r.limbs_.resize(limbs_.size() + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(limbs_[i]) * m + carry;
            r.limbs_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r.limbs_[limbs_.size()] = static_cast<uint32_t>(carry);
        r.trim();
        return r;
    }

    BigInt shr1() const {
        BigInt r = *this;
        uint32_t carry = 0;
        for (size_t i = r.limbs_.size(); i-- > 0;) {
            uint32_t cur = r.limbs_[i];
            r.limbs_[i] = (cur >> 1) | (carry << 31);
            carry = cur & 1U;
        }
        r.trim();
        return r;
    }
    BigInt shl1() const {
        BigInt r = *this;
        uint32_t carry = 0;
        for (size_t i = 0; i < r.limbs_.size(); ++i) {
            uint32_t cur = r.limbs_[i];
            r.limbs_[i] = (cur << 1) | carry;
            carry = cur >> 31;
        }
        if (carry) r.limbs_.push_back(carry);
        return r;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < small.size() || carry; ++i) {
            if (i >= r.size()) r.push_back(0);
            uint64_t cur = static_cast<uint64_t>(r[i]) + (i < small.size() ? small[i] : 0) + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
            borrow = 0;
            if (cur < 0) {
                cur += (1LL << 32);
                borrow = 1;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Schoolbook long division of magnitudes, |a| >= |b| > 0.
    static void divmod_mag(std::vector<uint32_t> a, std::vector<uint32_t> b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        // normalize so that the top limb of b has its high bit set
        int shift = 0;
        {
            uint32_t top = b.back();
            while (!(top & 0x80000000U)) {
                top <<= 1;
                ++shift;
            }
        }
        auto shl = [](std::vector<uint32_t> v, int s) {
            if (s == 0) return v;
            uint32_t carry = 0;
            for (size_t i = 0; i < v.size(); ++i) {
                uint64_t cur = (static_cast<uint64_t>(v[i]) << s) | carry;
                v[i] = static_cast<uint32_t>(cur);
                carry = static_cast<uint32_t>(cur >> 32);
            }
            if (carry) v.push_back(carry);
            return v;
        };
        auto shr = [](std::vector<uint32_t> v, int s) {
            if (s == 0) return v;
            uint32_t carry = 0;
            for (size_t i = v.size(); i-- > 0;) {
                uint32_t cur = v[i];
                v[i] = (cur >> s) | (carry << (32 - s));
                carry = cur & ((1U << s) - 1U);
            }
            while (!v.empty() && v.back() == 0) v.pop_back();
            return v;
        };
        a = shl(a, shift);
        b = shl(b, shift);
        size_t n = b.size(), m = a.size();
        q.assign(m, 0);
        std::vector<uint32_t> rem;  // running remainder, invariant rem < b before each shift
        for (size_t pos = m; pos-- > 0;) {
            // rem = rem * 2^32 + a[pos]
            rem.insert(rem.begin(), a[pos]);
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (cmp_mag(rem, b) < 0) {
                q[pos] = 0;
                continue;
            }
            uint64_t rhigh = 0;
            if (rem.size() == n + 1)
                rhigh = (static_cast<uint64_t>(rem[n]) << 32) | rem[n - 1];
            else if (rem.size() == n)
                rhigh = rem[n - 1];
            else
                rhigh = 0;  // unreachable: rem >= b here
            uint64_t qhat = rhigh / b.back();
            if (qhat > 0xffffffffULL) qhat = 0xffffffffULL;
            if (qhat == 0) qhat = 1;  // rem >= b guarantees at least 1
            // multiply-and-compare correction
            std::vector<uint32_t> prod;
            auto mul_by = [&](uint64_t f) {
                prod.assign(b.size() + 2, 0);
                uint64_t carry = 0;
                for (size_t i = 0; i < b.size(); ++i) {
                    uint64_t lo = (f & 0xffffffffULL) * b[i];
                    uint64_t cur = prod[i] + (lo & 0xffffffffULL) + carry;
                    prod[i] = static_cast<uint32_t>(cur);
                    carry = (cur >> 32) + (lo >> 32);
                }
                size_t k = b.size();
                while (carry) {
                    uint64_t cur = prod[k] + carry;
                    prod[k] = static_cast<uint32_t>(cur);
                    carry = cur >> 32;
                    ++k;
                }
                while (!prod.empty() && prod.back() == 0) prod.pop_back();
            };
            mul_by(qhat);
            while (cmp_mag(prod, rem) > 0) {
                --qhat;
                mul_by(qhat);
            }
            rem = sub_mag(rem, prod);
            while (cmp_mag(rem, b) >= 0) {  // guard against an under-estimate
                rem = sub_mag(rem, b);
                ++qhat;
            }
            q[pos] = static_cast<uint32_t>(qhat);
        }
        r = shr(rem, shift);
    }
};

// Rational number in lowest terms; denominator always positive, zero is 0/1.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { reduce(); }
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    explicit Rat(BigInt n) : num_(std::move(n)), den_(1) {}

    // Parses "p", "p/q", or "-p/q".
    static Rat from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(BigInt::from_string(s), BigInt(1));
        return Rat(BigInt::from_string(s.substr(0, slash)),
                   BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Rat operator-() const {
        Rat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw arithmetic_error("rational division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat inv() const {
        if (is_zero()) throw arithmetic_error("rational division by zero");
        return Rat(den_, num_);
    }

    Rat pow(long long e) const {
        if (e >= 0) return Rat(num_.pow(static_cast<unsigned long long>(e)),
                               den_.pow(static_cast<unsigned long long>(e)));
        return inv().pow(-e);
    }

    // Exact square root if this is the square of a rational.
    std::optional<Rat> sqrt_exact() const {
        if (sign() < 0) return std::nullopt;
        auto n = num_.sqrt_exact();
        if (!n) return std::nullopt;
        auto d = den_.sqrt_exact();
        if (!d) return std::nullopt;
        return Rat(*n, *d);
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    double to_double() const { return num_.to_double() / den_.to_double(); }

  private:
    BigInt num_, den_;

    void reduce() {
        if (den_.is_zero()) throw arithmetic_error("zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace cassel
