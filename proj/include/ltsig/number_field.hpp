#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "ltsig/circle_point.hpp"
#include "ltsig/interval.hpp"
#include "ltsig/rat_poly.hpp"

namespace ltsig {

class FieldElem;

// The number field Q(z) = Q[t]/(M) for a unit-circle point z, with M the
// monic rescaling of the primitive minimal polynomial. Carries z itself so
// that signs of real elements can be certified by interval evaluation.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static std::shared_ptr<const NumberField> of(const CirclePoint& z) {
        return std::shared_ptr<const NumberField>(new NumberField(z));
    }

    const CirclePoint& point() const { return z_; }
    const QPoly& modulus() const { return modulus_; }
    long degree() const { return degree_; }
    const std::vector<Rat>& inverse_generator() const { return t_inverse_; }

    // canonical representative: reduce a coefficient vector modulo the monic
    // modulus and pad to the field degree
    std::vector<Rat> reduce(std::vector<Rat> v) const {
        std::size_t d = static_cast<std::size_t>(degree_);
        while (v.size() > d) {
            Rat lead = v.back();
            v.pop_back();
            if (sgn(lead) != 0) {
                std::size_t off = v.size() - d;
                for (long i = 0; i < degree_; ++i)
                    v[off + static_cast<std::size_t>(i)] -= lead * modulus_.coeff(i);
            }
        }
        v.resize(d, Rat(0));
        return v;
    }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem constant(const Rat& c) const;
    FieldElem generator() const;                       // t, i.e. z itself
    FieldElem from_poly(const QPoly& p) const;         // p(t) reduced mod M
    FieldElem from_int_poly(const IntPoly& p) const;   // Laurent ok: t^-1 = conj

private:
    CirclePoint z_;
    QPoly modulus_;
    long degree_;
    std::vector<Rat> t_inverse_;  // representative of t^-1 = conj(z)

    explicit NumberField(const CirclePoint& z)
        : z_(z), modulus_(QPoly::from_int(z.min_poly()).monic()), degree_(modulus_.degree()) {
        // t^-1 = -(t^(d-1) + m_{d-1} t^(d-2) + ... + m_1)/m_0
        Rat m0 = modulus_.coeff(0);
        if (sgn(m0) == 0) throw Error("NumberField: modulus with zero constant term");
        t_inverse_.assign(static_cast<std::size_t>(degree_), Rat(0));
        for (long i = 1; i <= degree_; ++i) {
            Rat c = -modulus_.coeff(i) / m0;
            t_inverse_[static_cast<std::size_t>(i - 1)] = c;
        }
    }

    friend class FieldElem;
};

using Field = std::shared_ptr<const NumberField>;

// Element of a NumberField: rational coefficient vector of the canonical
// representative (degree below the field degree). Immutable value type.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(Field field, std::vector<Rat> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        c_.resize(static_cast<std::size_t>(field_->degree()), Rat(0));
    }

    const Field& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (sgn(x) != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }
    const Rat& rational_value() const {
        if (!is_rational()) throw Error("FieldElem::rational_value: element not rational");
        static const Rat kZero = 0;
        return c_.empty() ? kZero : c_[0];
    }

    friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.c_ == b.c_; }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    FieldElem operator-() const {
        FieldElem r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        a.check_same(b);
        FieldElem r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        a.check_same(b);
        std::size_t d = a.c_.size();
        std::vector<Rat> prod(2 * d - 1);
        for (std::size_t i = 0; i < d; ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (sgn(b.c_[j]) == 0) continue;
                prod[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return FieldElem(a.field_, a.field_->reduce(std::move(prod)));
    }
    friend FieldElem operator*(const Rat& s, const FieldElem& a) {
        FieldElem r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    FieldElem inverse() const {
        if (is_zero()) throw Error("FieldElem::inverse: division by zero");
        // extended euclid in Q[t] against the modulus
        QPoly a = to_poly(), m = field_->modulus();
        QPoly r0 = m, r1 = a;
        QPoly s0 = QPoly::zero(), s1 = QPoly::one();
        while (!r1.is_zero()) {
            auto [q, r2] = r0.divmod(r1);
            QPoly s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.degree() != 0) throw Error("FieldElem::inverse: modulus not irreducible?");
        QPoly inv = (Rat(1) / r0.coeff(0)) * s0;
        return field_->from_poly(inv);
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

    // circle involution t -> t^-1 (complex conjugation on Q(z))
    FieldElem conj() const {
        FieldElem inv_t(field_, field_->inverse_generator());
        FieldElem acc = field_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * inv_t;
            acc.c_[0] += c_[i];
        }
        return acc;
    }

    bool is_real() const { return conj() == *this; }

    QPoly to_poly() const { return QPoly(c_); }

    // bit-size metric used for pivot selection
    std::size_t size_metric() const {
        std::size_t s = 0;
        for (const auto& x : c_)
            if (sgn(x) != 0) s += bit_size(x);
        return s;
    }

    // Complex interval enclosure of the value at z, for the given enclosure
    // of z itself.
    Box eval_box_at(const Box& zbox) const { return eval_box(to_poly(), zbox); }

    std::string to_string() const { return to_poly().to_string("z"); }

private:
    Field field_;
    std::vector<Rat> c_;

    void check_same(const FieldElem& o) const {
        if (field_.get() != o.field_.get()) {
            // distinct field objects are fine if they agree structurally
            if (!field_ || !o.field_ || field_->modulus() != o.field_->modulus())
                throw Error("FieldElem: mixed fields");
        }
    }
};

inline FieldElem NumberField::zero() const {
    return FieldElem(shared_from_this(), std::vector<Rat>(static_cast<std::size_t>(degree_)));
}
inline FieldElem NumberField::one() const { return constant(Rat(1)); }
inline FieldElem NumberField::constant(const Rat& c) const {
    std::vector<Rat> v(static_cast<std::size_t>(degree_));
    if (!v.empty()) v[0] = c;
    return FieldElem(shared_from_this(), std::move(v));
}
inline FieldElem NumberField::generator() const {
    std::vector<Rat> v(static_cast<std::size_t>(degree_));
    if (degree_ >= 2)
        v[1] = 1;
    else {
        // degree-1 field: t is the rational root of the modulus
        v[0] = -modulus().coeff(0);
    }
    return FieldElem(shared_from_this(), std::move(v));
}
inline FieldElem NumberField::from_poly(const QPoly& p) const {
    std::vector<Rat> v = p.coeffs();
    return FieldElem(shared_from_this(), reduce(std::move(v)));
}
inline FieldElem NumberField::from_int_poly(const IntPoly& p) const {
    FieldElem t_inv(shared_from_this(), t_inverse_);
    FieldElem acc = zero();
    // ordinary part by Horner, then multiply by the inverse power if Laurent
    for (long e = p.high_exp(); e >= std::max(0L, p.low_exp()); --e) {
        acc = acc * generator();
        acc += constant(Rat(p.coeff(e)));
    }
    if (p.low_exp() < 0) {
        // Horner in u = t^-1: sum_{e<0} c_e t^e
        FieldElem low = zero();
        for (long e = p.low_exp(); e <= -1; ++e) {
            low += constant(Rat(p.coeff(e)));
            low = low * t_inv;
        }
        acc += low;
    }
    return acc;
}

// Exact complex evaluation of the representative at an exact rational point.
inline std::pair<Rat, Rat> eval_exact_complex(const QPoly& p, const Rat& zr, const Rat& zi) {
    Rat re = 0, im = 0;
    for (long e = p.degree(); e >= 0; --e) {
        Rat nre = re * zr - im * zi + p.coeff(e);
        Rat nim = re * zi + im * zr;
        re = std::move(nre);
        im = std::move(nim);
    }
    return {re, im};
}

// Certified sign of a real element of Q(z): exact evaluation at rational
// points, otherwise interval evaluation with enclosure refinement. The zero
// case is decided by the canonical representative alone.
inline int sign_of_real_element(const FieldElem& x) {
    if (!x.is_real()) throw Error("sign_of_real_element: element is not conjugation-fixed");
    if (x.is_zero()) return 0;
    if (x.is_rational()) return sgn(x.rational_value());
    const CirclePoint& z = x.field()->point();
    if (z.is_exact()) {
        auto [re, im] = eval_exact_complex(x.to_poly(), z.exact_re(), z.exact_im());
        LTSIG_CHECK(sgn(im) == 0, "real element evaluated to nonzero imaginary part");
        return sgn(re);
    }
    Rat eps(1, 16);
    for (int round = 0; round < 100000; ++round) {
        Box v = x.eval_box_at(z.enclosure(eps));
        int s = v.re.determined_sign();
        if (s != 0) return s;
        eps /= 4;
    }
    throw Error("sign_of_real_element: interval refinement did not converge");
}

}  // namespace ltsig
