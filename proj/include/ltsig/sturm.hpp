#pragma once

#include <utility>
#include <vector>

#include "ltsig/rat_poly.hpp"
#include "ltsig/util.hpp"

namespace ltsig {

// Sturm chain of a squarefree rational polynomial; counts and isolates real
// roots in an interval.
class SturmChain {
public:
    explicit SturmChain(QPoly f) {
        if (f.is_zero()) throw Error("SturmChain: zero polynomial");
        chain_.push_back(f);
        QPoly d = f.derivative();
        if (!d.is_zero()) {
            chain_.push_back(d);
            for (;;) {
                const QPoly& a = chain_[chain_.size() - 2];
                const QPoly& b = chain_[chain_.size() - 1];
                QPoly r = -(a % b);
                if (r.is_zero()) break;
                chain_.push_back(std::move(r));
            }
        }
        if (chain_.back().degree() > 0)
            throw Error("SturmChain: input polynomial is not squarefree");
    }

    const QPoly& poly() const { return chain_.front(); }

    // number of sign variations of the chain at x
    int variations(const Rat& x) const {
        int count = 0, prev = 0;
        for (const auto& p : chain_) {
            int s = sgn(p.eval(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    // number of roots in the half-open interval (a, b]
    int count_roots(const Rat& a, const Rat& b) const {
        if (a >= b) return 0;
        return variations(a) - variations(b);
    }

    // Isolating intervals for all roots in the open interval (a, b); the
    // endpoints must not be roots. Each returned [lo, hi] contains exactly
    // one root; degenerate intervals (lo == hi) mark exact rational roots.
    std::vector<std::pair<Rat, Rat>> isolate(const Rat& a, const Rat& b) const {
        if (sgn(poly().eval(a)) == 0 || sgn(poly().eval(b)) == 0)
            throw Error("SturmChain::isolate: endpoint is a root");
        std::vector<std::pair<Rat, Rat>> out;
        isolate_rec(a, b, count_roots(a, b), out);
        return out;
    }

    // Halves an isolating interval, preserving the isolation property.
    // Degenerate intervals are returned unchanged.
    std::pair<Rat, Rat> refine(const std::pair<Rat, Rat>& iv) const {
        if (iv.first == iv.second) return iv;
        Rat mid = (iv.first + iv.second) / 2;
        if (sgn(poly().eval(mid)) == 0) return {mid, mid};
        if (count_roots(iv.first, mid) == 1) return {iv.first, mid};
        return {mid, iv.second};
    }

    std::pair<Rat, Rat> refine_below(std::pair<Rat, Rat> iv, const Rat& width) const {
        while (iv.second - iv.first > width) iv = refine(iv);
        return iv;
    }

private:
    std::vector<QPoly> chain_;

    void isolate_rec(const Rat& a, const Rat& b, int count,
                     std::vector<std::pair<Rat, Rat>>& out) const {
        if (count == 0) return;
        if (count == 1) {
            out.emplace_back(a, b);
            return;
        }
        Rat mid = (a + b) / 2;
        if (sgn(poly().eval(mid)) == 0) {
            // exact rational root at the midpoint; shrink a guard interval
            // around it until the guard contains only this root
            Rat radius = (b - a) / 4;
            while (sgn(poly().eval(mid - radius)) == 0 || sgn(poly().eval(mid + radius)) == 0 ||
                   count_roots(mid - radius, mid + radius) != 1)
                radius /= 2;
            out.emplace_back(mid, mid);
            isolate_rec(a, mid - radius, count_roots(a, mid - radius), out);
            isolate_rec(mid + radius, b, count_roots(mid + radius, b), out);
            return;
        }
        isolate_rec(a, mid, count_roots(a, mid), out);
        isolate_rec(mid, b, count_roots(mid, b), out);
    }
};

}  // namespace ltsig
