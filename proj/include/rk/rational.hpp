#ifndef RK_RATIONAL_HPP
#define RK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

inline Int abs_of(const Int& x) { return boost::multiprecision::abs(x); }

inline Int gcd_of(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int pow_int(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// floor division; works for negative numerators
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_euclid(const Int& a, const Int& b) {
    Int r = a % b;
    if (r < 0) r += abs_of(b);
    return r;
}

inline int64_t mod_euclid(int64_t a, int64_t b) {
    int64_t r = a % b;
    if (r < 0) r += (b < 0 ? -b : b);
    return r;
}

// extended gcd: g = a*x + b*y
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) { x = (a < 0 ? -1 : 1); y = 0; return abs_of(a); }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// inverse of a modulo m (m > 1, gcd(a,m) = 1)
inline Int inv_mod(const Int& a, const Int& m) {
    Int x, y;
    Int g = ext_gcd(mod_euclid(a, m), m, x, y);
    if (g != 1) throw std::invalid_argument("inv_mod: arguments not coprime");
    return mod_euclid(x, m);
}

inline int64_t inv_mod(int64_t a, int64_t m) {
    return static_cast<int64_t>(inv_mod(Int(a), Int(m)));
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline bool is_prime_power_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d <= n; ++d) {
        if (n % d == 0) {
            while (n % d == 0) n /= d;
            return n == 1;
        }
    }
    return false;
}

inline bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

// canonical "num/den" text form, "num" when integral
inline std::string to_string(const Rat& x) {
    std::ostringstream os;
    os << num(x);
    if (den(x) != 1) os << "/" << den(x);
    return os.str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace rk

#endif
