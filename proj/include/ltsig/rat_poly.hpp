#pragma once

#include <utility>
#include <vector>

#include "ltsig/int_poly.hpp"
#include "ltsig/util.hpp"

namespace ltsig {

// Dense rational polynomial (ordinary, nonnegative exponents).
// coeffs[i] is the coefficient of t^i; leading coefficient nonzero.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly zero() { return QPoly(); }
    static QPoly constant(Rat v) {
        QPoly p;
        if (sgn(v) != 0) p.c_.push_back(std::move(v));
        return p;
    }
    static QPoly one() { return constant(Rat(1)); }
    static QPoly x() { return QPoly({Rat(0), Rat(1)}); }

    static QPoly from_int(const IntPoly& p) {
        if (p.is_zero()) return zero();
        if (!p.is_ordinary()) throw Error("QPoly::from_int: Laurent input");
        std::vector<Rat> c(static_cast<std::size_t>(p.high_exp() + 1));
        for (long e = p.low_exp(); e <= p.high_exp(); ++e) c[e] = Rat(p.coeff(e));
        return QPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return is_zero() ? -1 : static_cast<long>(c_.size()) - 1; }
    const Rat& leading() const {
        static const Rat kZero = 0;
        return is_zero() ? kZero : c_.back();
    }
    Rat coeff(long e) const {
        if (e < 0 || e > degree()) return Rat(0);
        return c_[static_cast<std::size_t>(e)];
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    QPoly operator-() const {
        QPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return QPoly(std::move(c));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return QPoly(std::move(c));
    }
    friend QPoly operator*(const Rat& s, const QPoly& p) {
        QPoly r = p;
        for (auto& x : r.c_) x *= s;
        return QPoly(std::move(r.c_));
    }
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    // Euclidean division: returns {quotient, remainder}.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
        if (d.is_zero()) throw Error("QPoly::divmod: division by zero");
        QPoly r = *this;
        std::vector<Rat> q;
        long dd = d.degree();
        if (r.degree() >= dd) q.assign(static_cast<std::size_t>(r.degree() - dd + 1), Rat(0));
        while (!r.is_zero() && r.degree() >= dd) {
            long k = r.degree() - dd;
            Rat f = r.leading() / d.leading();
            q[static_cast<std::size_t>(k)] = f;
            for (long i = 0; i <= dd; ++i)
                r.c_[static_cast<std::size_t>(k + i)] -= f * d.c_[static_cast<std::size_t>(i)];
            r.trim();
        }
        return {QPoly(std::move(q)), r};
    }
    QPoly operator/(const QPoly& d) const { return divmod(d).first; }
    QPoly operator%(const QPoly& d) const { return divmod(d).second; }

    QPoly monic() const {
        if (is_zero()) return zero();
        return (Rat(1) / leading()) * (*this);
    }

    QPoly derivative() const {
        if (degree() <= 0) return zero();
        std::vector<Rat> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * c_[i];
        return QPoly(std::move(c));
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Monic gcd over Q.
    static QPoly gcd(QPoly a, QPoly b) {
        while (!b.is_zero()) {
            QPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // Clears denominators and divides by content: the primitive integer
    // polynomial proportional to this one (positive leading coefficient).
    IntPoly to_primitive_int() const {
        if (is_zero()) return IntPoly::zero();
        Int den = 1;
        for (const auto& x : c_) {
            Int d = denominator(x);
            Int g;
            mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
            den = den / g * d;
        }
        std::vector<Int> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            Rat v = c_[i] * Rat(den);
            c[i] = numerator(v);
        }
        return IntPoly(std::move(c)).primitive_part().unit_normalized();
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (long e = degree(); e >= 0; --e) {
            Rat c = coeff(e);
            if (sgn(c) == 0) continue;
            bool first = out.empty();
            if (sgn(c) < 0)
                out += first ? "-" : " - ";
            else if (!first)
                out += " + ";
            Rat a = abs(c);
            if (a != 1 || e == 0) out += ltsig::to_string(a);
            if (e != 0) {
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    std::vector<Rat> c_;

    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
};

}  // namespace ltsig
