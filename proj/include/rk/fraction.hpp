#ifndef RK_FRACTION_HPP
#define RK_FRACTION_HPP

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace rk {

// A two-bridge knot label p/q: p odd, 0 < q < p, gcd(p,q) = 1.
struct Fraction {
    int64_t p = 0;
    int64_t q = 0;

    Fraction() = default;
    Fraction(int64_t p_, int64_t q_) : p(p_), q(q_) {
        if (p <= 0 || q <= 0 || q >= p) throw std::invalid_argument("fraction: need 0 < q < p");
        if (std::gcd(p, q) != 1) throw std::invalid_argument("fraction: gcd(p,q) != 1");
        if (p % 2 == 0) throw std::invalid_argument("fraction: p even labels a two-component link");
    }

    Fraction mirror() const { return Fraction(p, p - q); }

    bool operator==(const Fraction& o) const { return p == o.p && q == o.q; }
};

inline int64_t inverse_mod(int64_t a, int64_t m) {
    int64_t t = 0, new_t = 1, r = m, new_r = a % m;
    while (new_r != 0) {
        int64_t quo = r / new_r;
        t -= quo * new_t;
        std::swap(t, new_t);
        r -= quo * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::invalid_argument("inverse_mod: not coprime");
    return t < 0 ? t + m : t;
}

// Orbit of q under q -> q^{-1} and mirror q -> p-q; knots K and -K count once.
struct KnotClass {
    int64_t p = 0;
    int64_t canonical_q = 0;
    std::vector<int64_t> orbit;
};

inline KnotClass canonical_class(const Fraction& f) {
    int64_t qi = inverse_mod(f.q, f.p);
    std::set<int64_t> orb = {f.q, qi, f.p - f.q, f.p - qi};
    KnotClass c;
    c.p = f.p;
    c.orbit.assign(orb.begin(), orb.end());
    c.canonical_q = c.orbit.front();
    return c;
}

}  // namespace rk

#endif
