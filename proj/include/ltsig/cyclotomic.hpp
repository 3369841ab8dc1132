#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "ltsig/factorization.hpp"
#include "ltsig/int_poly.hpp"

namespace ltsig {

inline unsigned long totient(unsigned long n) {
    if (n == 0) throw Error("totient: n must be positive");
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

// n = p^k for a prime p, k >= 1 ? returns p if so
inline std::optional<unsigned long> prime_power_base(unsigned long n) {
    if (n < 2) return std::nullopt;
    unsigned long m = n;
    unsigned long p = 0;
    for (unsigned long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            while (m % d == 0) m /= d;
            break;
        }
    }
    if (p == 0) return n;  // n itself prime
    return m == 1 ? std::optional<unsigned long>(p) : std::nullopt;
}

// n-th cyclotomic polynomial: Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d.
inline IntPoly cyclotomic(unsigned long n) {
    if (n == 0) throw Error("cyclotomic: n must be positive");
    static std::map<unsigned long, IntPoly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<Int> num(static_cast<std::size_t>(n) + 1);
    num[0] = -1;
    num[n] = 1;
    IntPoly phi(std::move(num));  // t^n - 1
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d) continue;
        phi = *phi.divide_exact(cyclotomic(d));
    }
    {
        std::lock_guard<std::mutex> lock(mtx);
        cache.emplace(n, phi);
    }
    return phi;
}

// If p equals some cyclotomic polynomial Phi_n, returns n. The candidates n
// satisfy totient(n) = deg(p); totient(n) >= sqrt(n/2) bounds the search.
inline std::optional<unsigned long> cyclotomic_index(const IntPoly& p) {
    IntPoly q = p.unit_normalized();
    long d = q.degree();
    if (d < 1) return std::nullopt;
    unsigned long limit = 2 * static_cast<unsigned long>(d) * static_cast<unsigned long>(d) + 1;
    for (unsigned long n = 1; n <= limit; ++n) {
        if (totient(n) != static_cast<unsigned long>(d)) continue;
        if (cyclotomic(n) == q) return n;
    }
    return std::nullopt;
}

}  // namespace ltsig
