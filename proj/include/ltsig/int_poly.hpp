#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ltsig/util.hpp"

namespace ltsig {

// Integer Laurent polynomial: coeffs[i] is the coefficient of t^(low+i).
// Invariant: coeffs is empty (zero polynomial) or has nonzero first and
// last entries.
class IntPoly {
public:
    IntPoly() = default;

    IntPoly(std::vector<Int> coeffs, long low = 0) : c_(std::move(coeffs)), low_(low) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return constant(1); }
    static IntPoly constant(Int v) {
        IntPoly p;
        if (v != 0) {
            p.c_.push_back(std::move(v));
        }
        return p;
    }
    static IntPoly monomial(Int coeff, long exp) {
        IntPoly p = constant(std::move(coeff));
        if (!p.is_zero()) p.low_ = exp;
        return p;
    }
    // t - 1, t + 1, t
    static IntPoly t_minus_one() { return IntPoly({-1, 1}); }
    static IntPoly t_plus_one() { return IntPoly({1, 1}); }
    static IntPoly t() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_ordinary() const { return is_zero() || low_ >= 0; }
    bool is_constant() const { return c_.size() <= 1 && (is_zero() || low_ == 0); }

    long low_exp() const { return is_zero() ? 0 : low_; }
    long high_exp() const { return is_zero() ? 0 : low_ + static_cast<long>(c_.size()) - 1; }
    // degree of the ordinary polynomial part (valid when low_exp() == 0)
    long degree() const { return high_exp(); }
    std::size_t term_span() const { return c_.size(); }

    const Int& leading() const {
        static const Int kZero = 0;
        return is_zero() ? kZero : c_.back();
    }
    const Int& trailing() const {
        static const Int kZero = 0;
        return is_zero() ? kZero : c_.front();
    }

    Int coeff(long exp) const {
        if (is_zero() || exp < low_ || exp > high_exp()) return 0;
        return c_[static_cast<std::size_t>(exp - low_)];
    }

    const std::vector<Int>& coeffs() const { return c_; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) {
        return a.low_exp() == b.low_exp() && a.c_ == b.c_;
    }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long lo = std::min(a.low_, b.low_);
        long hi = std::max(a.high_exp(), b.high_exp());
        std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[a.low_ - lo + i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[b.low_ - lo + i] += b.c_[i];
        return IntPoly(std::move(c), lo);
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c), a.low_ + b.low_);
    }

    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    IntPoly shifted(long k) const {
        IntPoly r = *this;
        if (!r.is_zero()) r.low_ += k;
        return r;
    }

    IntPoly pow(unsigned long e) const {
        IntPoly r = one(), b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    // p(t^-1)
    IntPoly reversed() const {
        if (is_zero()) return zero();
        std::vector<Int> c(c_.rbegin(), c_.rend());
        return IntPoly(std::move(c), -high_exp());
    }

    // Self-inversive: coefficient sequence equals + or - its reverse.
    bool is_self_inversive() const {
        if (is_zero()) return false;
        std::vector<Int> rev(c_.rbegin(), c_.rend());
        if (rev == c_) return true;
        for (auto& x : rev) x = -x;
        return rev == c_;
    }
    // Palindromic: coefficient sequence equals its reverse exactly.
    bool is_palindromic() const {
        if (is_zero()) return false;
        return std::equal(c_.begin(), c_.end(), c_.rbegin());
    }

    Rat eval(const Rat& x) const {
        if (is_zero()) return Rat(0);
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
        if (low_ != 0) {
            if (sgn(x) == 0) throw Error("IntPoly::eval: Laurent polynomial at 0");
            Rat p = pow_rat(x, static_cast<unsigned long>(low_ < 0 ? -low_ : low_));
            if (low_ > 0)
                acc *= p;
            else
                acc /= p;
        }
        return acc;
    }

    Int eval_at_one() const {
        Int s = 0;
        for (const auto& x : c_) s += x;
        return s;
    }

    Int eval_int(const Int& x) const {
        if (!is_ordinary()) throw Error("IntPoly::eval_int: negative exponents");
        Int acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        for (long i = 0; i < low_exp(); ++i) acc *= x;
        return acc;
    }

    // derivative of the ordinary polynomial part (requires low_exp() >= 0)
    IntPoly derivative() const {
        if (!is_ordinary()) throw Error("IntPoly::derivative: negative exponents");
        if (is_zero() || high_exp() == 0) return zero();
        std::vector<Int> c;
        c.reserve(c_.size());
        for (long e = low_; e <= high_exp(); ++e) {
            if (e == 0) continue;
            c.push_back(coeff(e) * e);
        }
        return IntPoly(std::move(c), std::max(0L, low_ - 1));
    }

    Int content() const {
        Int g = 0;
        for (const auto& x : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    IntPoly primitive_part() const {
        if (is_zero()) return zero();
        Int g = content();
        IntPoly r = *this;
        for (auto& x : r.c_) x /= g;
        return r;
    }

    // Canonical form modulo units of Z[t, t^-1]: low exponent 0, positive
    // leading coefficient.
    IntPoly unit_normalized() const {
        if (is_zero()) return zero();
        IntPoly r = *this;
        r.low_ = 0;
        if (sgn(r.c_.back()) < 0)
            for (auto& x : r.c_) x = -x;
        return r;
    }

    // Equality up to multiplication by +/- t^k.
    bool equals_up_to_unit(const IntPoly& o) const {
        return unit_normalized() == o.unit_normalized();
    }

    // Exact division of ordinary polynomials over Z; nullopt if not exact.
    std::optional<IntPoly> divide_exact(const IntPoly& d) const {
        if (d.is_zero()) throw Error("IntPoly::divide_exact: division by zero");
        if (is_zero()) return zero();
        if (!is_ordinary() || !d.is_ordinary())
            throw Error("IntPoly::divide_exact: Laurent operands");
        long shift = low_exp() - d.low_exp();
        if (shift < 0) return std::nullopt;
        // work on dense coefficient arrays
        std::vector<Int> num(c_);
        const std::vector<Int>& den = d.c_;
        if (num.size() < den.size()) return std::nullopt;
        std::vector<Int> q(num.size() - den.size() + 1);
        for (std::size_t qi = q.size(); qi-- > 0;) {
            Int& head = num[qi + den.size() - 1];
            if (head == 0) continue;
            Int qc;
            mpz_tdiv_qr(qc.get_mpz_t(), head.get_mpz_t(), head.get_mpz_t(),
                        den.back().get_mpz_t());
            if (head != 0) return std::nullopt;  // non-exact leading division
            q[qi] = qc;
            for (std::size_t j = 0; j + 1 < den.size(); ++j) num[qi + j] -= qc * den[j];
        }
        for (std::size_t j = 0; j + 1 < den.size(); ++j)
            if (num[j] != 0) return std::nullopt;
        return IntPoly(std::move(q), shift);
    }

    bool divides(const IntPoly& into) const {
        return into.divide_with_laurent_slack(*this).has_value();
    }

    // Division tolerant of Laurent unit mismatch: tests whether `d` divides
    // this up to +/- t^k, returning the ordinary-quotient when exact.
    std::optional<IntPoly> divide_with_laurent_slack(const IntPoly& d) const {
        IntPoly a = unit_normalized();
        IntPoly b = d.unit_normalized();
        if (b.is_zero()) return std::nullopt;
        if (a.is_zero()) return zero();
        return a.divide_exact(b);
    }

    // sum of squared coefficients (for Mignotte / Mahler style bounds)
    Int norm2_squared() const {
        Int s = 0;
        for (const auto& x : c_) s += x * x;
        return s;
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (long e = high_exp(); e >= low_exp(); --e) {
            Int c = coeff(e);
            if (c == 0) continue;
            bool first = out.empty();
            if (sgn(c) < 0)
                out += first ? "-" : " - ";
            else if (!first)
                out += " + ";
            Int a = abs(c);
            if (a != 1 || e == 0) out += a.get_str();
            if (e != 0) {
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    std::vector<Int> c_;
    long low_ = 0;

    void trim() {
        std::size_t front = 0;
        while (front < c_.size() && c_[front] == 0) ++front;
        if (front == c_.size()) {
            c_.clear();
            low_ = 0;
            return;
        }
        std::size_t back = c_.size();
        while (back > front && c_[back - 1] == 0) --back;
        if (front > 0 || back < c_.size()) {
            std::vector<Int> t(c_.begin() + front, c_.begin() + back);
            c_ = std::move(t);
            low_ += static_cast<long>(front);
        }
    }
};

inline IntPoly operator*(const Int& s, const IntPoly& p) { return IntPoly::constant(s) * p; }

}  // namespace ltsig
