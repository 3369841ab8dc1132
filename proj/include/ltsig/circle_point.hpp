#pragma once

#include <cmath>
#include <memory>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "ltsig/cyclotomic.hpp"
#include "ltsig/factorization.hpp"
#include "ltsig/interval.hpp"
#include "ltsig/sturm.hpp"

namespace ltsig {

// Lower bound on the distance between distinct roots of a squarefree integer
// polynomial (Mahler): sep > sqrt(3|D|) * d^-((d+2)/2) * |f|_2^-(d-1) with
// |D| >= 1. Used to certify equality of algebraic numbers.
inline Rat root_separation_lb(const IntPoly& f) {
    long d = f.unit_normalized().degree();
    if (d <= 1) return Rat(1);
    Int A = isqrt_floor(pow_int(Int(d), static_cast<unsigned long>(d + 2))) + 1;
    Int B = isqrt_floor(pow_int(f.norm2_squared(), static_cast<unsigned long>(d - 1))) + 1;
    Rat r(1);
    r /= A * B;
    return r;
}

// For palindromic f of even degree 2k, the degree-k integer polynomial T with
// f(t) = t^k T(t + 1/t). Circle roots of f correspond to roots of T in (-2,2).
inline IntPoly trace_polynomial(const IntPoly& f0) {
    IntPoly f = f0.unit_normalized();
    if (!f.is_palindromic() || f.degree() % 2 != 0)
        throw Error("trace_polynomial: input not palindromic of even degree");
    long k = f.degree() / 2;
    // c_j(x) = t^j + t^-j expressed in x = t + 1/t
    IntPoly T = IntPoly::constant(f.coeff(k));
    IntPoly c_prev = IntPoly::constant(2);  // c_0
    IntPoly c_cur = IntPoly::t();           // c_1
    for (long j = 1; j <= k; ++j) {
        T += f.coeff(k + j) * c_cur;
        IntPoly c_next = IntPoly::t() * c_cur - c_prev;
        c_prev = std::move(c_cur);
        c_cur = std::move(c_next);
    }
    return T;
}

// residues j in (0, n/2) coprime to n, ascending
inline std::vector<unsigned long> coprime_residues_upper(unsigned long n) {
    std::vector<unsigned long> out;
    for (unsigned long j = 1; 2 * j < n; ++j)
        if (std::gcd(j, n) == 1) out.push_back(j);
    return out;
}

// ---------------------------------------------------------------------------
// CirclePoint: an algebraic number on S^1 minus {1}. Immutable; all
// refinement happens on local copies, so concurrent use is safe.
// ---------------------------------------------------------------------------

class CirclePoint {
public:
    enum class Kind { Rational, RootOfUnity, Algebraic };

    // --- constructors (each certifies its input or throws) ---

    static CirclePoint rational(const Rat& re, const Rat& im) {
        if (re * re + im * im != 1)
            throw CertificationError(CertificationError::Reason::NotOnCircle,
                                     "(" + ltsig::to_string(re) + ", " + ltsig::to_string(im) +
                                         ") is not on the unit circle");
        if (sgn(im) == 0 && re == 1)
            throw CertificationError(CertificationError::Reason::EqualsOne, "z = 1 excluded");
        CirclePoint p;
        p.kind_ = Kind::Rational;
        p.exact_ = true;
        p.re_ = re;
        p.im_ = im;
        if (sgn(im) == 0) {
            p.min_poly_ = IntPoly::t_plus_one();
            p.kind_ = Kind::RootOfUnity;
            p.rou_n_ = 2;
            p.rou_k_ = 1;
        } else {
            // z^2 - 2*re*z + 1; irreducible since |re| < 1
            Int den = denominator(re), num = numerator(re);
            p.min_poly_ = IntPoly({den, -2 * num, den}).primitive_part().unit_normalized();
            if (sgn(re) == 0) {
                // +/- i, the only rational points that are roots of unity
                p.kind_ = Kind::RootOfUnity;
                p.rou_n_ = 4;
                p.rou_k_ = sgn(im) > 0 ? 1 : 3;
            }
        }
        return p;
    }

    static CirclePoint root_of_unity(long n_in, long k_in) {
        if (n_in < 1) throw InputError("root_of_unity: order must be positive");
        unsigned long n = static_cast<unsigned long>(n_in);
        long k_mod = k_in % n_in;
        if (k_mod < 0) k_mod += n_in;
        unsigned long g = std::gcd(static_cast<unsigned long>(k_mod), n);
        if (k_mod == 0) g = n;
        unsigned long nn = n / g;
        unsigned long kk = static_cast<unsigned long>(k_mod) / g;
        if (nn == 1)
            throw CertificationError(CertificationError::Reason::EqualsOne, "z = 1 excluded");
        if (nn == 2) {
            CirclePoint p = rational(Rat(-1), Rat(0));
            return p;
        }
        if (nn > 10000) throw CapacityError("root_of_unity: order too large");
        std::vector<CirclePoint> roots = roots_of_irreducible(cyclotomic(nn));
        for (const auto& r : roots)
            if (r.rou_k_ == kk) return r;
        throw Error("root_of_unity: internal lookup failure");
    }

    static CirclePoint algebraic(const IntPoly& poly, const Box& rect) {
        if (poly.is_zero())
            throw CertificationError(CertificationError::Reason::NotOnCircle,
                                     "zero polynomial has no roots");
        IntPoly f = poly.unit_normalized().primitive_part();
        if (f.degree() < 1)
            throw CertificationError(CertificationError::Reason::NotOnCircle,
                                     "constant polynomial has no roots");
        if (f == IntPoly::t_minus_one())
            throw CertificationError(CertificationError::Reason::EqualsOne, "z = 1 excluded");
        if (!is_irreducible(f))
            throw CertificationError(CertificationError::Reason::NotIrreducible,
                                     "polynomial is reducible: " + f.to_string());
        if (!f.is_self_inversive())
            throw CertificationError(CertificationError::Reason::NotOnCircle,
                                     "polynomial is not self-inversive, no unit-circle roots");
        std::vector<CirclePoint> roots = roots_of_irreducible(f);
        std::vector<CirclePoint> hits;
        for (const auto& r : roots)
            if (r.meets(rect)) hits.push_back(r);
        if (hits.empty())
            throw CertificationError(CertificationError::Reason::NoRootInRect,
                                     "rectangle contains no unit-circle root of " + f.to_string());
        if (hits.size() > 1)
            throw CertificationError(CertificationError::Reason::MultipleRootsInRect,
                                     "rectangle contains several unit-circle roots of " +
                                         f.to_string());
        return hits.front();
    }

    // All roots of p on the unit circle minus {1}, ordered by argument.
    static std::vector<CirclePoint> unit_circle_roots(const IntPoly& p);

    // --- observers ---

    Kind kind() const { return kind_; }
    const IntPoly& min_poly() const { return min_poly_; }
    long field_degree() const { return min_poly_.degree(); }

    bool is_exact() const { return exact_; }
    const Rat& exact_re() const { return re_; }
    const Rat& exact_im() const { return im_; }

    bool is_root_of_unity() const { return rou_n_ != 0; }
    unsigned long rou_order() const { return rou_n_; }
    unsigned long rou_index() const { return rou_k_; }

    bool is_minus_one() const { return exact_ && sgn(im_) == 0; }

    // 0: upper half plane, 1: the point -1, 2: lower half plane
    int half_plane() const {
        if (exact_) {
            int s = sgn(im_);
            return s > 0 ? 0 : (s == 0 ? 1 : 2);
        }
        return upper_ ? 0 : 2;
    }

    CirclePoint conjugate() const {
        CirclePoint p = *this;
        if (p.exact_) p.im_ = -p.im_;
        p.upper_ = !upper_;
        if (p.rou_n_ != 0) p.rou_k_ = p.rou_n_ - p.rou_k_;
        return p;
    }

    // Rectangle with both sides at most max_side, certified to contain the
    // point and no other root of min_poly once below the separation bound.
    Box enclosure(const Rat& max_side) const {
        if (exact_) return Box::point(re_, im_);
        std::pair<Rat, Rat> xiv = xiv_;
        Rat sqeps = max_side / 4;
        for (int round = 0; round < 100000; ++round) {
            Box b = box_from_xiv(xiv, sqeps);
            if (b.re.width() <= max_side && b.im.width() <= max_side) return b;
            xiv = chain_->refine(xiv);
            sqeps /= 2;
        }
        throw Error("CirclePoint::enclosure: refinement did not converge");
    }

    // Rectangle refined below the root-separation bound of min_poly.
    Box isolating_rect() const {
        if (exact_) return Box::point(re_, im_);
        Rat sep = root_separation_lb(min_poly_);
        return enclosure(sep / 4);
    }

    // A copy whose stored interval is refined below the separation bound.
    CirclePoint refined() const {
        if (exact_) return *this;
        CirclePoint p = *this;
        Rat sep = root_separation_lb(min_poly_);
        p.xiv_ = chain_->refine_below(p.xiv_, sep / 4);
        return p;
    }

    bool equals(const CirclePoint& o) const {
        if (exact_ && o.exact_) return re_ == o.re_ && im_ == o.im_;
        if (min_poly_ != o.min_poly_) return false;
        if (half_plane() != o.half_plane()) return false;
        // Boxes below a quarter of the separation bound intersect exactly
        // when they enclose the same root.
        Rat side = root_separation_lb(min_poly_) / 4;
        return enclosure(side).intersects(o.enclosure(side));
    }

    // strict ordering by argument in (0, 2*pi)
    bool argument_less(const CirclePoint& o) const {
        int ha = half_plane(), hb = o.half_plane();
        if (ha != hb) return ha < hb;
        if (ha == 1) return false;  // both are -1
        if (equals(o)) return false;
        int c = compare_re(o);
        // upper half: argument grows as re falls; lower half: the reverse
        return ha == 0 ? c > 0 : c < 0;
    }

    // exact comparison of real parts: -1, 0, +1
    int compare_re(const CirclePoint& o) const {
        if (exact_ && o.exact_) return re_ < o.re_ ? -1 : (re_ == o.re_ ? 0 : 1);
        // on the circle, equal real parts mean equal or conjugate points
        if (equals(o) || equals(o.conjugate())) return 0;
        Rat side(1, 4);
        for (int round = 0; round < 100000; ++round) {
            Box a = enclosure(side), b = o.enclosure(side);
            if (a.re.hi < b.re.lo) return -1;
            if (b.re.hi < a.re.lo) return 1;
            side /= 4;
        }
        throw Error("CirclePoint::compare_re: refinement did not converge");
    }

    // midpoint approximations for rendering
    Rat approx_re(unsigned digits) const { return approx_component(digits, true); }
    Rat approx_im(unsigned digits) const { return approx_component(digits, false); }

    double argument_approx() const {
        Box b = enclosure(Rat(1, 1 << 20));
        double x = mpq_get_d(b.re.mid().get_mpq_t());
        double y = mpq_get_d(b.im.mid().get_mpq_t());
        double a = std::atan2(y, x);
        if (a <= 0) a += 2 * 3.14159265358979323846;
        return a;
    }

    static std::vector<CirclePoint> roots_of_irreducible(const IntPoly& f0);

private:
    Kind kind_ = Kind::Algebraic;
    IntPoly min_poly_;
    unsigned long rou_n_ = 0, rou_k_ = 0;  // set when the point is a root of unity

    bool exact_ = false;
    Rat re_, im_;  // exact location when exact_

    // trace location: x = z + 1/z is the unique root of chain_->poly() in
    // [xiv_.first, xiv_.second]; upper_ selects the half plane
    std::shared_ptr<const SturmChain> chain_;
    std::pair<Rat, Rat> xiv_;
    bool upper_ = true;

    CirclePoint() = default;

    Box box_from_xiv(const std::pair<Rat, Rat>& xiv, const Rat& sqeps) const {
        Rat rlo = xiv.first / 2, rhi = xiv.second / 2;
        if (rlo < -1) rlo = -1;
        if (rhi > 1) rhi = 1;
        Rat alo = abs(rlo), ahi = abs(rhi);
        Rat amax = std::max(alo, ahi);
        Rat amin = (sgn(rlo) <= 0 && sgn(rhi) >= 0) ? Rat(0) : std::min(alo, ahi);
        Rat smin = 1 - amax * amax;
        Rat smax = 1 - amin * amin;
        if (sgn(smin) < 0) smin = 0;
        Rat im_lo = sqrt_bounds(smin, sqeps).first;
        Rat im_hi = sqrt_bounds(smax, sqeps).second;
        if (im_hi > 1) im_hi = 1;
        RatInterval imr = upper_ ? RatInterval(im_lo, im_hi) : RatInterval(-im_hi, -im_lo);
        return Box(RatInterval(rlo, rhi), imr);
    }

    // closed intersection test against a fixed rectangle, by refinement
    bool meets(const Box& rect) const {
        if (exact_) return rect.re.contains(re_) && rect.im.contains(im_);
        Rat side(1, 4);
        for (int round = 0; round < 256; ++round) {
            Box b = enclosure(side);
            if (!b.intersects(rect)) return false;
            if (rect.contains_box(b)) return true;
            side /= 4;
        }
        return true;  // persistent straddle: the root lies on the boundary
    }

    Rat approx_component(unsigned digits, bool real_part) const {
        Rat eps(1);
        for (unsigned i = 0; i < digits + 2; ++i) eps /= 10;
        Box b = enclosure(eps);
        return real_part ? b.re.mid() : b.im.mid();
    }
};

inline std::vector<CirclePoint> CirclePoint::roots_of_irreducible(const IntPoly& f0) {
    IntPoly f = f0.unit_normalized();
    std::vector<CirclePoint> out;
    if (f == IntPoly::t_minus_one()) return out;  // z = 1 excluded
    if (f == IntPoly::t_plus_one()) {
        out.push_back(rational(Rat(-1), Rat(0)));
        return out;
    }
    if (!f.is_self_inversive() || f.degree() < 2) return out;
    LTSIG_CHECK(f.is_palindromic() && f.degree() % 2 == 0,
                "irreducible self-inversive polynomial of degree >= 2 must be palindromic of "
                "even degree");

    IntPoly T = trace_polynomial(f);
    auto chain = std::make_shared<SturmChain>(QPoly::from_int(T));
    LTSIG_CHECK(sgn(chain->poly().eval(Rat(-2))) != 0 && sgn(chain->poly().eval(Rat(2))) != 0,
                "trace polynomial vanishing at +/-2");
    std::vector<std::pair<Rat, Rat>> ivs = chain->isolate(Rat(-2), Rat(2));
    if (ivs.empty()) return out;

    std::optional<unsigned long> rou = cyclotomic_index(f);
    std::vector<unsigned long> cps;
    if (rou) {
        cps = coprime_residues_upper(*rou);
        LTSIG_CHECK(cps.size() == ivs.size(), "cyclotomic trace root count mismatch");
    }

    for (std::size_t i = 0; i < ivs.size(); ++i) {
        for (bool upper : {true, false}) {
            CirclePoint p;
            p.min_poly_ = f;
            p.chain_ = chain;
            p.xiv_ = ivs[i];
            p.upper_ = upper;
            p.kind_ = Kind::Algebraic;
            if (rou) {
                p.kind_ = Kind::RootOfUnity;
                // ascending x = descending argument in the upper half
                unsigned long j = cps[cps.size() - 1 - i];
                p.rou_n_ = *rou;
                p.rou_k_ = upper ? j : *rou - j;
            }
            if (ivs[i].first == ivs[i].second) {
                // exact rational trace root; the point itself may be rational
                Rat c = ivs[i].first / 2;
                Rat s2 = 1 - c * c;
                Rat s;
                if (is_rational_square(s2, &s)) {
                    p.exact_ = true;
                    p.re_ = c;
                    p.im_ = upper ? s : -s;
                    if (p.kind_ != Kind::RootOfUnity) p.kind_ = Kind::Rational;
                }
            }
            out.push_back(std::move(p));
        }
    }
    return out;
}

inline std::vector<CirclePoint> CirclePoint::unit_circle_roots(const IntPoly& p) {
    if (p.is_zero()) throw Error("unit_circle_roots: zero polynomial");
    std::vector<CirclePoint> out;
    Factorization fac = factor_integer_polynomial(p);
    for (const auto& [f, mult] : fac.factors) {
        if (f.degree() < 1) continue;
        std::vector<CirclePoint> roots = roots_of_irreducible(f);
        out.insert(out.end(), roots.begin(), roots.end());
    }
    std::sort(out.begin(), out.end(),
              [](const CirclePoint& a, const CirclePoint& b) { return a.argument_less(b); });
    return out;
}

inline std::vector<CirclePoint> unit_circle_roots(const IntPoly& p) {
    return CirclePoint::unit_circle_roots(p);
}

inline IntPoly minimal_polynomial(const CirclePoint& z) { return z.min_poly(); }

// Rational-cosine point: z = c + i*sqrt(1-c^2) (or its conjugate), |c| < 1.
// Field degree at most 2; used as arc witnesses.
inline CirclePoint point_from_cosine(const Rat& c, bool upper) {
    if (abs(c) >= 1) throw Error("point_from_cosine: |c| must be < 1");
    Rat s2 = 1 - c * c, s;
    if (is_rational_square(s2, &s)) return CirclePoint::rational(c, upper ? s : -s);
    Int den = denominator(c), num = numerator(c);
    IntPoly f = IntPoly({den, -2 * num, den}).primitive_part().unit_normalized();
    std::vector<CirclePoint> roots = CirclePoint::roots_of_irreducible(f);
    LTSIG_CHECK(roots.size() == 2, "degree-2 circle polynomial must have one conjugate pair");
    for (auto& r : roots)
        if ((r.half_plane() == 0) == upper) return r;
    throw Error("point_from_cosine: internal lookup failure");
}

}  // namespace ltsig
