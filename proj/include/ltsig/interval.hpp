#pragma once

#include <algorithm>
#include <string>

#include "ltsig/rat_poly.hpp"
#include "ltsig/util.hpp"

namespace ltsig {

// Closed interval with exact rational endpoints.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw Error("RatInterval: inverted endpoints");
    }
    static RatInterval point(const Rat& x) { return RatInterval(x, x); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool intersects(const RatInterval& o) const { return !(hi < o.lo || o.hi < lo); }
    bool contains_interval(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }

    // sign if determined: +1 if lo > 0, -1 if hi < 0, 0 otherwise (straddles)
    int determined_sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return RatInterval(a.lo + b.lo, a.hi + b.hi);
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
        return RatInterval(a.lo - b.hi, a.hi - b.lo);
    }
    friend RatInterval operator-(const RatInterval& a) { return RatInterval(-a.hi, -a.lo); }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
        Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
        return RatInterval(std::move(lo), std::move(hi));
    }
    friend RatInterval operator*(const Rat& s, const RatInterval& a) {
        return RatInterval::point(s) * a;
    }
};

// Axis-aligned rectangle in the complex plane: re x im intervals.
struct Box {
    RatInterval re, im;

    Box() = default;
    Box(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
    static Box point(const Rat& x, const Rat& y) {
        return Box(RatInterval::point(x), RatInterval::point(y));
    }

    bool intersects(const Box& o) const { return re.intersects(o.re) && im.intersects(o.im); }
    bool contains_box(const Box& o) const {
        return re.contains_interval(o.re) && im.contains_interval(o.im);
    }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    Rat max_side() const { return std::max(re.width(), im.width()); }

    friend Box operator+(const Box& a, const Box& b) { return Box(a.re + b.re, a.im + b.im); }
    friend Box operator-(const Box& a, const Box& b) { return Box(a.re - b.re, a.im - b.im); }
    friend Box operator*(const Box& a, const Box& b) {
        return Box(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    Box conj() const { return Box(re, -im); }
};

// Interval Horner evaluation of a rational polynomial over a complex box.
inline Box eval_box(const QPoly& p, const Box& z) {
    Box acc = Box::point(Rat(0), Rat(0));
    for (long e = p.degree(); e >= 0; --e) {
        acc = acc * z + Box::point(p.coeff(e), Rat(0));
    }
    return acc;
}

// Same for an integer Laurent polynomial; the box must exclude 0 when
// negative exponents are present. On the unit circle 1/z = conj(z), but this
// helper stays generic: it divides via multiplication by the reciprocal box
// only when the caller has already shifted away negative exponents.
inline Box eval_box_ordinary(const IntPoly& p, const Box& z) {
    if (!p.is_ordinary()) throw Error("eval_box_ordinary: negative exponents");
    Box acc = Box::point(Rat(0), Rat(0));
    for (long e = p.high_exp(); e >= 0; --e) {
        acc = acc * z + Box::point(Rat(p.coeff(e)), Rat(0));
    }
    return acc;
}

}  // namespace ltsig
