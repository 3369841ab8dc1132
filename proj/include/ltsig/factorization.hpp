#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "ltsig/int_poly.hpp"
#include "ltsig/rat_poly.hpp"
#include "ltsig/util.hpp"

namespace ltsig {

inline constexpr long kFactorDegreeCap = 64;

// ---------------------------------------------------------------------------
// GCD over Z[t] (up to sign): gcd of contents times primitive gcd.
// ---------------------------------------------------------------------------

inline IntPoly gcd_int_poly(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.unit_normalized();
    if (b.is_zero()) return a.unit_normalized();
    IntPoly pa = a.unit_normalized(), pb = b.unit_normalized();
    Int ca = pa.content(), cb = pb.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    QPoly g = QPoly::gcd(QPoly::from_int(pa.primitive_part()), QPoly::from_int(pb.primitive_part()));
    IntPoly gp = g.to_primitive_int();
    return (cg * gp).unit_normalized();
}

namespace detail {

// ---------------------------------------------------------------------------
// Polynomials over F_p, p an odd word-sized prime. coeff[i] ~ t^i.
// ---------------------------------------------------------------------------

using ModPoly = std::vector<std::uint64_t>;

inline void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline long mp_deg(const ModPoly& a) { return static_cast<long>(a.size()) - 1; }

inline ModPoly mp_from_int(const IntPoly& f, std::uint64_t p) {
    ModPoly a(static_cast<std::size_t>(f.high_exp() + 1));
    for (long e = 0; e <= f.high_exp(); ++e) {
        Int c = f.coeff(e) % static_cast<long>(p);
        if (c < 0) c += static_cast<long>(p);
        a[static_cast<std::size_t>(e)] = c.get_ui();
    }
    mp_trim(a);
    return a;
}

inline ModPoly mp_add(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
    ModPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + b[i]) % p;
    mp_trim(c);
    return c;
}
inline ModPoly mp_sub(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
    ModPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + p - b[i]) % p;
    mp_trim(c);
    return c;
}
inline ModPoly mp_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    mp_trim(c);
    return c;
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

inline std::pair<ModPoly, ModPoly> mp_divmod(const ModPoly& a, const ModPoly& d, std::uint64_t p) {
    if (d.empty()) throw Error("mp_divmod: zero divisor");
    ModPoly r = a, q;
    long dd = mp_deg(d);
    if (mp_deg(r) >= dd) q.assign(static_cast<std::size_t>(mp_deg(r) - dd + 1), 0);
    std::uint64_t inv_lead = mod_inv(d.back(), p);
    while (mp_deg(r) >= dd) {
        long k = mp_deg(r) - dd;
        std::uint64_t f = r.back() * inv_lead % p;
        q[static_cast<std::size_t>(k)] = f;
        for (long i = 0; i <= dd; ++i) {
            auto& rc = r[static_cast<std::size_t>(k + i)];
            rc = (rc + p - f * d[static_cast<std::size_t>(i)] % p) % p;
        }
        mp_trim(r);
    }
    mp_trim(q);
    return {q, r};
}

inline ModPoly mp_monic(const ModPoly& a, std::uint64_t p) {
    if (a.empty()) return a;
    std::uint64_t inv = mod_inv(a.back(), p);
    ModPoly r = a;
    for (auto& c : r) c = c * inv % p;
    return r;
}

inline ModPoly mp_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
    while (!b.empty()) {
        ModPoly r = mp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a, p);
}

// extended euclid: s*a + t*b = 1 for coprime a, b
inline void mp_ext_gcd(const ModPoly& a, const ModPoly& b, std::uint64_t p, ModPoly& s,
                       ModPoly& t) {
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r2] = mp_divmod(r0, r1, p);
        ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
        ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (mp_deg(r0) != 0) throw Error("mp_ext_gcd: inputs not coprime");
    std::uint64_t inv = mod_inv(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    s = std::move(s0);
    t = std::move(t0);
}

// a^e mod f, e an arbitrary-precision exponent
inline ModPoly mp_powmod(ModPoly a, const Int& e, const ModPoly& f, std::uint64_t p) {
    ModPoly r = {1};
    a = mp_divmod(a, f, p).second;
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        r = mp_divmod(mp_mul(r, r, p), f, p).second;
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
            r = mp_divmod(mp_mul(r, a, p), f, p).second;
    }
    return r;
}

// Cantor-Zassenhaus equal-degree splitting: f = product of irreducibles of
// degree d, f monic squarefree, p odd.
inline void mp_equal_degree(const ModPoly& f, long d, std::uint64_t p, SplitMix64& rng,
                            std::vector<ModPoly>& out) {
    if (mp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    Int exponent = (pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
    for (;;) {
        ModPoly a(static_cast<std::size_t>(mp_deg(f)), 0);
        for (auto& c : a) c = rng.next() % p;
        mp_trim(a);
        if (mp_deg(a) < 1) continue;
        ModPoly g = mp_gcd(a, f, p);
        if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(f)) {
            mp_equal_degree(g, d, p, rng, out);
            mp_equal_degree(mp_divmod(f, g, p).first, d, p, rng, out);
            return;
        }
        ModPoly b = mp_powmod(a, exponent, f, p);
        b = mp_sub(b, ModPoly{1}, p);
        g = mp_gcd(b, f, p);
        if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(f)) {
            mp_equal_degree(g, d, p, rng, out);
            mp_equal_degree(mp_divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

// Full factorization of a squarefree monic f over F_p into monic irreducibles.
inline std::vector<ModPoly> mp_factor_squarefree(ModPoly f, std::uint64_t p) {
    std::vector<ModPoly> out;
    SplitMix64 rng(0x5eedf00dULL ^ (p * 0x9e3779b9ULL) ^ (static_cast<std::uint64_t>(mp_deg(f)) << 32));
    ModPoly x = {0, 1};
    ModPoly xq = x;
    long d = 0;
    while (mp_deg(f) > 0 && 2 * (d + 1) <= mp_deg(f)) {
        ++d;
        xq = mp_powmod(xq, Int(static_cast<unsigned long>(p)), f, p);
        ModPoly g = mp_gcd(mp_sub(xq, x, p), f, p);
        if (mp_deg(g) > 0) {
            mp_equal_degree(g, d, p, rng, out);
            f = mp_divmod(f, g, p).first;
            xq = mp_divmod(xq, f, p).second;
        }
    }
    if (mp_deg(f) > 0) out.push_back(f);
    return out;
}

// ---------------------------------------------------------------------------
// Polynomials over Z/m, m an arbitrary modulus. Coefficients in [0, m).
// ---------------------------------------------------------------------------

using ZmPoly = std::vector<Int>;

inline void zm_trim(ZmPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline long zm_deg(const ZmPoly& a) { return static_cast<long>(a.size()) - 1; }

inline Int zm_norm(Int v, const Int& m) {
    v %= m;
    if (v < 0) v += m;
    return v;
}

inline ZmPoly zm_from_mod(const ModPoly& a) {
    ZmPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<unsigned long>(a[i]));
    return r;
}

inline ZmPoly zm_from_int(const IntPoly& f, const Int& m) {
    ZmPoly a(static_cast<std::size_t>(f.high_exp() + 1));
    for (long e = 0; e <= f.high_exp(); ++e) a[static_cast<std::size_t>(e)] = zm_norm(f.coeff(e), m);
    zm_trim(a);
    return a;
}

inline ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = zm_norm(c[i] + b[i], m);
    zm_trim(c);
    return c;
}
inline ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = zm_norm(c[i] - b[i], m);
    zm_trim(c);
    return c;
}
inline ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZmPoly c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    for (auto& v : c) v = zm_norm(v, m);
    zm_trim(c);
    return c;
}

// division by a monic divisor
inline std::pair<ZmPoly, ZmPoly> zm_divmod_monic(const ZmPoly& a, const ZmPoly& d, const Int& m) {
    if (d.empty() || d.back() != 1) throw Error("zm_divmod_monic: divisor not monic");
    ZmPoly r = a, q;
    long dd = zm_deg(d);
    if (zm_deg(r) >= dd) q.assign(static_cast<std::size_t>(zm_deg(r) - dd + 1), Int(0));
    while (zm_deg(r) >= dd) {
        long k = zm_deg(r) - dd;
        Int f = r.back();
        q[static_cast<std::size_t>(k)] = f;
        for (long i = 0; i <= dd; ++i) {
            auto& rc = r[static_cast<std::size_t>(k + i)];
            rc = zm_norm(rc - f * d[static_cast<std::size_t>(i)], m);
        }
        zm_trim(r);
    }
    zm_trim(q);
    return {q, r};
}

// One quadratic Hensel step: f == g*h (mod m), s*g + t*h == 1 (mod m),
// h monic. Lifts everything to modulus m^2 in place.
inline void hensel_step(const IntPoly& f, ZmPoly& g, ZmPoly& h, ZmPoly& s, ZmPoly& t, Int& m) {
    Int m2 = m * m;
    ZmPoly fz = zm_from_int(f, m2);
    ZmPoly e = zm_sub(fz, zm_mul(g, h, m2), m2);
    auto [q, r] = zm_divmod_monic(zm_mul(s, e, m2), h, m2);
    ZmPoly g_new = zm_add(g, zm_add(zm_mul(t, e, m2), zm_mul(q, g, m2), m2), m2);
    ZmPoly h_new = zm_add(h, r, m2);
    ZmPoly b = zm_sub(zm_add(zm_mul(s, g_new, m2), zm_mul(t, h_new, m2), m2), ZmPoly{Int(1)}, m2);
    auto [c, d] = zm_divmod_monic(zm_mul(s, b, m2), h_new, m2);
    ZmPoly s_new = zm_sub(s, d, m2);
    ZmPoly t_new = zm_sub(t, zm_add(zm_mul(t, b, m2), zm_mul(c, g_new, m2), m2), m2);
    g = std::move(g_new);
    h = std::move(h_new);
    s = std::move(s_new);
    t = std::move(t_new);
    m = std::move(m2);
}

// symmetric representative in (-m/2, m/2]
inline Int zm_symmetric(const Int& v, const Int& m) {
    Int r = zm_norm(v, m);
    if (2 * r > m) r -= m;
    return r;
}

inline IntPoly zm_to_int_symmetric(const ZmPoly& a, const Int& m) {
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = zm_symmetric(a[i], m);
    return IntPoly(std::move(c));
}

inline const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> ps;
        std::vector<bool> sieve(100000, true);
        for (std::size_t i = 2; i < sieve.size(); ++i) {
            if (!sieve[i]) continue;
            if (i > 2) ps.push_back(i);  // odd primes only; CZ needs p odd
            for (std::size_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
        }
        return ps;
    }();
    return primes;
}

// ---------------------------------------------------------------------------
// Integer factorization for contents (trial division + Brent-Pollard rho).
// ---------------------------------------------------------------------------

inline Int pollard_rho(const Int& n, SplitMix64& rng) {
    if (n % 2 == 0) return 2;
    for (;;) {
        Int x = Int(static_cast<unsigned long>(rng.next())) % n;
        Int c = Int(static_cast<unsigned long>(rng.next())) % n + 1;
        Int y = x, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x - y;
            if (diff == 0) break;  // cycle; retry with new parameters
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_integer_rec(const Int& n, std::map<Int, unsigned>& out, SplitMix64& rng) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        out[n] += 1;
        return;
    }
    Int d = pollard_rho(n, rng);
    factor_integer_rec(d, out, rng);
    factor_integer_rec(n / d, out, rng);
}

}  // namespace detail

// Prime factorization of a positive integer.
inline std::map<Int, unsigned> factor_integer(Int n) {
    if (n <= 0) throw Error("factor_integer: argument must be positive");
    std::map<Int, unsigned> out;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Int(static_cast<unsigned long>(p))] += 1;
            n /= static_cast<unsigned long>(p);
        }
    }
    if (n > 1) {
        SplitMix64 rng(0xfacade ^ bit_size(n));
        detail::factor_integer_rec(n, out, rng);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Squarefree decomposition over Z (Yun). Input primitive with positive
// leading coefficient; returns pairwise coprime squarefree primitive parts
// with their multiplicities.
// ---------------------------------------------------------------------------

inline std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f) {
    std::vector<std::pair<IntPoly, unsigned>> out;
    if (f.degree() == 0) return out;
    IntPoly df = f.derivative();
    IntPoly a = gcd_int_poly(f, df);
    if (a.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly b = *f.divide_exact(a);
    IntPoly c = *df.divide_exact(a);
    IntPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        IntPoly g = gcd_int_poly(b, d);
        if (g.degree() > 0) out.emplace_back(g.unit_normalized(), i);
        b = *b.divide_exact(g);
        c = *d.divide_exact(g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Factorization of primitive squarefree polynomials over Z
// (Zassenhaus: factor mod p, Hensel lift, subset recombination).
// ---------------------------------------------------------------------------

inline std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& f) {
    std::vector<IntPoly> out;
    long n = f.degree();
    if (n <= 0) throw Error("factor_squarefree_primitive: constant input");
    if (n == 1) {
        out.push_back(f.unit_normalized());
        return out;
    }

    // pick an odd prime keeping f squarefree with stable degree
    std::uint64_t p = 0;
    detail::ModPoly fbar;
    for (std::uint64_t cand : detail::small_primes()) {
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), cand)) continue;
        detail::ModPoly red = detail::mp_from_int(f, cand);
        detail::ModPoly dred = detail::mp_from_int(f.derivative(), cand);
        if (detail::mp_deg(detail::mp_gcd(red, dred, cand)) == 0) {
            p = cand;
            fbar = std::move(red);
            break;
        }
    }
    if (p == 0) throw Error("factor: no usable prime found");

    std::vector<detail::ModPoly> modular = detail::mp_factor_squarefree(detail::mp_monic(fbar, p), p);
    if (modular.size() == 1) {
        out.push_back(f.unit_normalized());
        return out;
    }

    // coefficient bound for lc(f) * (any monic factor of f), Mignotte style
    Int bound = (isqrt_floor(f.norm2_squared()) + 1) * pow_int(Int(2), static_cast<unsigned long>(n)) *
                abs(f.leading());
    Int target = 2 * bound + 1;

    // Hensel lift each monic modular factor against its cofactor
    Int plift(static_cast<unsigned long>(p));
    std::vector<IntPoly> lifted;   // images mod M, symmetric lift deferred
    std::vector<detail::ZmPoly> lifted_zm;
    Int M = 0;
    for (const auto& gi : modular) {
        detail::ModPoly cof = detail::mp_divmod(fbar, gi, p).first;
        detail::ZmPoly g = detail::zm_from_mod(cof);   // carries lc(f) mod p
        detail::ZmPoly h = detail::zm_from_mod(gi);    // monic
        detail::ModPoly s_mp, t_mp;
        detail::mp_ext_gcd(cof, gi, p, s_mp, t_mp);
        detail::ZmPoly s = detail::zm_from_mod(s_mp), t = detail::zm_from_mod(t_mp);
        Int m = plift;
        while (m < target) detail::hensel_step(f, g, h, s, t, m);
        lifted_zm.push_back(std::move(h));
        M = m;
    }

    // subset recombination with trial division over Z
    std::vector<std::size_t> active(lifted_zm.size());
    std::iota(active.begin(), active.end(), 0);
    IntPoly remaining = f.unit_normalized();

    auto try_subset = [&](const std::vector<std::size_t>& subset) -> bool {
        detail::ZmPoly prod = {detail::zm_norm(remaining.leading(), M)};
        for (std::size_t idx : subset) prod = detail::zm_mul(prod, lifted_zm[idx], M);
        IntPoly cand = detail::zm_to_int_symmetric(prod, M);
        if (cand.is_zero()) return false;
        cand = cand.primitive_part().unit_normalized();
        if (cand.degree() == 0) return false;
        auto q = remaining.divide_exact(cand);
        if (!q) return false;
        out.push_back(cand);
        remaining = q->unit_normalized();
        return true;
    };

    std::size_t s = 1;
    while (2 * s <= active.size()) {
        // iterate over size-s subsets of active
        std::vector<std::size_t> pick(s);
        std::iota(pick.begin(), pick.end(), 0);
        bool found = false;
        for (;;) {
            std::vector<std::size_t> subset(s);
            for (std::size_t i = 0; i < s; ++i) subset[i] = active[pick[i]];
            if (try_subset(subset)) {
                std::vector<std::size_t> next;
                for (std::size_t i = 0, j = 0; i < active.size(); ++i) {
                    if (j < s && pick[j] == i) {
                        ++j;
                        continue;
                    }
                    next.push_back(active[i]);
                }
                active = std::move(next);
                found = true;
                break;
            }
            // next combination
            long i = static_cast<long>(s) - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] ==
                                 active.size() - s + static_cast<std::size_t>(i))
                --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < s; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (remaining.degree() > 0) out.push_back(remaining.primitive_part().unit_normalized());
    return out;
}

// ---------------------------------------------------------------------------
// Public factorization API
// ---------------------------------------------------------------------------

struct Factorization {
    int unit_sign = 1;        // +/- 1
    long unit_t_exponent = 0;  // power of t
    // irreducible factors with multiplicities; degree-0 entries are the prime
    // factors of the content
    std::vector<std::pair<IntPoly, unsigned>> factors;

    IntPoly product() const {
        IntPoly r = IntPoly::constant(unit_sign);
        for (const auto& [f, m] : factors) r *= f.pow(m);
        return r.shifted(unit_t_exponent);
    }
};

inline Factorization factor_integer_polynomial(const IntPoly& p) {
    if (p.is_zero()) throw Error("factor_integer_polynomial: zero polynomial");
    if (static_cast<long>(p.term_span()) - 1 > kFactorDegreeCap)
        throw CapacityError("factor_integer_polynomial: degree exceeds cap of " +
                            std::to_string(kFactorDegreeCap));

    Factorization result;
    result.unit_sign = sign_of(p.leading());
    result.unit_t_exponent = p.low_exp();
    IntPoly body = p.unit_normalized();

    Int content = body.content();
    if (content > 1)
        for (const auto& [prime, mult] : factor_integer(content))
            result.factors.emplace_back(IntPoly::constant(prime), mult);

    IntPoly prim = body.primitive_part();
    if (prim.degree() > 0) {
        for (const auto& [sqf, mult] : squarefree_decomposition(prim))
            for (const auto& irr : factor_squarefree_primitive(sqf))
                result.factors.emplace_back(irr, mult);
    }

    std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (long e = a.first.degree(); e >= 0; --e) {
            Int ca = a.first.coeff(e), cb = b.first.coeff(e);
            if (ca != cb) return ca < cb;
        }
        return a.second < b.second;
    });
    return result;
}

inline bool is_irreducible(const IntPoly& p) {
    if (p.is_zero()) return false;
    IntPoly q = p.unit_normalized();
    if (q.degree() < 1) return false;
    if (q.content() != 1) return false;
    Factorization f = factor_integer_polynomial(q);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace ltsig
