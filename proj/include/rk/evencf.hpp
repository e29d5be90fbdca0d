#ifndef RK_EVENCF_HPP
#define RK_EVENCF_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rk/fraction.hpp"

namespace rk {

// Even continued fraction [c1,...,cn]: p/q = c1 + 1/(c2 + 1/(...)), all c_i even.
struct EvenCF {
    std::vector<int64_t> c;
    bool mirrored = false;  // q was replaced by p-q to make it even

    int64_t crossings() const {
        int64_t s = 0;
        for (int64_t x : c) s += std::llabs(x);
        return s;
    }
};

namespace detail {
inline int64_t floor_div_i64(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}
}  // namespace detail

// At each step the even quotient with |remainder| < |denominator| is unique:
// the state alternates (odd,even) -> (even,odd), so num/den is never an odd
// integer nor exactly 1 away from one.
inline EvenCF even_continued_fraction(const Fraction& f) {
    EvenCF out;
    int64_t q = f.q;
    if (q % 2 != 0) {
        q = f.p - q;
        out.mirrored = true;
    }
    int64_t num = f.p, den = q;
    while (den != 0) {
        int64_t qf = detail::floor_div_i64(num, den);
        int64_t c = 0;
        bool found = false;
        for (int64_t cand = qf - 1; cand <= qf + 1; ++cand) {
            if (cand % 2 != 0) continue;
            if (std::llabs(num - cand * den) < std::llabs(den)) {
                if (found) throw std::logic_error("even_continued_fraction: quotient not unique");
                c = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("even_continued_fraction: no even quotient");
        out.c.push_back(c);
        int64_t r = num - c * den;
        num = den;
        den = r;
    }
    return out;
}

// Fold [c1,...,cn] back to num/den.
inline std::pair<int64_t, int64_t> fold(const std::vector<int64_t>& cf) {
    int64_t num = cf.back(), den = 1;
    for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) {
        // x -> c + 1/x
        int64_t n2 = *it * num + den;
        den = num;
        num = n2;
    }
    if (num < 0) { num = -num; den = -den; }
    return {num, den};
}

}  // namespace rk

#endif
