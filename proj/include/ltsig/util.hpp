#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ltsig {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input exceeds a configured size limit (e.g. factorization degree cap).
struct CapacityError : Error {
    using Error::Error;
};

// Malformed or semantically invalid user input (wire forms, CLI args).
struct InputError : Error {
    using Error::Error;
};

// A candidate circle point failed certification.
struct CertificationError : Error {
    enum class Reason {
        NotOnCircle,
        EqualsOne,
        NoRootInRect,
        MultipleRootsInRect,
        NotIrreducible,
    };
    Reason reason;
    CertificationError(Reason r, const std::string& msg) : Error(msg), reason(r) {}
};

// Matrix shape violations (non-square, odd size where even required, ...).
struct ShapeError : Error {
    using Error::Error;
};

// The floating-point oracle could not separate eigenvalues from zero.
struct InconclusiveError : Error {
    using Error::Error;
};

// A built-in postcondition check failed; indicates a bug, never user error.
struct VerificationError : Error {
    using Error::Error;
};

#define LTSIG_CHECK(cond, msg)                                   \
    do {                                                         \
        if (!(cond)) throw ::ltsig::VerificationError(msg);      \
    } while (0)

// ---------------------------------------------------------------------------
// Integer / rational helpers
// ---------------------------------------------------------------------------

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

inline Int numerator(const Rat& x) { return x.get_num(); }
inline Int denominator(const Rat& x) { return x.get_den(); }

inline Int abs_of(const Int& x) { return abs(x); }
inline Rat abs_of(const Rat& x) { return abs(x); }

inline std::size_t bit_size(const Int& x) {
    if (x == 0) return 1;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Combined numerator/denominator bit length; used as a pivot-size metric.
inline std::size_t bit_size(const Rat& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

inline Int isqrt_floor(const Int& x) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    unsigned long k = e;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

// Encloses sqrt(w) for w >= 0: returns [lo, hi] with hi - lo <= eps and
// 0 <= lo <= sqrt(w) <= hi.
inline std::pair<Rat, Rat> sqrt_bounds(const Rat& w, const Rat& eps) {
    if (sgn(w) < 0) throw Error("sqrt_bounds: negative argument");
    if (sgn(w) == 0) return {Rat(0), Rat(0)};
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^k to push the +/-1 isqrt slack
    // below eps.
    Int n = numerator(w), d = denominator(w);
    Int nd = n * d;
    Int den = d;
    // error of isqrt enclosure is 1/den; need 1/den <= eps
    Rat err(1);
    err /= den;
    while (err > eps) {
        nd *= 4;
        den *= 2;
        err /= 2;
    }
    Int s = isqrt_floor(nd);
    Rat lo(s), hi(s + 1);
    lo /= den;
    hi /= den;
    return {lo, hi};
}

// True iff w is the square of a rational; if so *root is the nonnegative root.
inline bool is_rational_square(const Rat& w, Rat* root = nullptr) {
    if (sgn(w) < 0) return false;
    Int n = numerator(w), d = denominator(w);
    Int sn = isqrt_floor(n), sd = isqrt_floor(d);
    if (sn * sn != n || sd * sd != d) return false;
    if (root) {
        *root = Rat(sn);
        *root /= sd;
    }
    return true;
}

// Decimal rendering of an exact rational, `digits` places after the point,
// rounded to nearest (ties away from zero). Deterministic.
inline std::string decimal_string(const Rat& x, unsigned digits) {
    Int n = numerator(x), d = denominator(x);
    bool neg = sgn(n) < 0;
    Int an = abs(n);
    Int scale = pow_int(Int(10), digits);
    Int q = (2 * an * scale + d) / (2 * d);  // round(an*scale/d)
    Int ip = q / scale;
    Int fp = q % scale;
    std::string out = neg && q != 0 ? "-" : "";
    out += ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        out += "." + std::string(digits - frac.size(), '0') + frac;
    }
    return out;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) {
    std::string s = numerator(x).get_str();
    if (denominator(x) != 1) s += "/" + denominator(x).get_str();
    return s;
}

inline Rat parse_rational(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw InputError("malformed rational: '" + s + "'");
    if (sgn(Rat(denominator(r))) == 0) throw InputError("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// Deterministic RNG (splitmix64); reproducible across platforms
// ---------------------------------------------------------------------------

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi] inclusive
    long range(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }
};

// ---------------------------------------------------------------------------
// Parallel map over an index range. Results are assembled by index, so the
// output order never depends on the thread schedule.
// ---------------------------------------------------------------------------

template <typename Fn>
void parallel_for(unsigned jobs, std::size_t count, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned nthreads = std::min<std::size_t>(jobs, count);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += nthreads) fn(i);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace ltsig
