#ifndef RK_PRIMEFIELD_HPP
#define RK_PRIMEFIELD_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rk/rational.hpp"

namespace rk {

// Element of F_r, r (small) prime carried with the value. r == 0 marks an
// untyped integer that promotes on contact.
class FpElem {
  public:
    FpElem() : v_(0), r_(0) {}
    explicit FpElem(long n) : v_(n), r_(0) {}
    FpElem(int64_t v, int64_t r) : v_(v), r_(r) {
        if (r_ < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
        v_ = mod_euclid(v_, r_);
    }

    static FpElem zero(int64_t r) { return FpElem(0, r); }
    static FpElem one(int64_t r) { return FpElem(1, r); }

    int64_t value() const { return v_; }
    int64_t modulus() const { return r_; }
    bool is_zero() const { return v_ == 0; }
    bool untyped() const { return r_ == 0; }

    friend FpElem operator+(const FpElem& a, const FpElem& b) {
        auto [x, y, r] = promote(a, b);
        return r == 0 ? FpElem(x + y) : FpElem(x + y, r);
    }
    friend FpElem operator-(const FpElem& a, const FpElem& b) {
        auto [x, y, r] = promote(a, b);
        return r == 0 ? FpElem(x - y) : FpElem(x - y, r);
    }
    FpElem operator-() const { return r_ == 0 ? FpElem(-v_) : FpElem(-v_, r_); }
    friend FpElem operator*(const FpElem& a, const FpElem& b) {
        auto [x, y, r] = promote(a, b);
        if (r == 0) return FpElem(x * y);
        return FpElem(static_cast<int64_t>((__int128)x * y % r), r);
    }
    FpElem& operator+=(const FpElem& o) { return *this = *this + o; }
    FpElem& operator-=(const FpElem& o) { return *this = *this - o; }
    FpElem& operator*=(const FpElem& o) { return *this = *this * o; }

    friend bool operator==(const FpElem& a, const FpElem& b) {
        auto [x, y, r] = promote(a, b);
        return r == 0 ? x == y : mod_euclid(x, r) == mod_euclid(y, r);
    }
    friend bool operator!=(const FpElem& a, const FpElem& b) { return !(a == b); }

    FpElem inverse() const {
        if (r_ == 0) {
            if (v_ == 1 || v_ == -1) return *this;
            throw std::invalid_argument("Fp: untyped inverse");
        }
        if (v_ == 0) throw std::invalid_argument("Fp: division by zero");
        return FpElem(inv_mod(v_, r_), r_);
    }
    friend FpElem operator/(const FpElem& a, const FpElem& b) { return a * b.inverse(); }

    FpElem pow(int64_t e) const {
        if (r_ == 0) throw std::invalid_argument("Fp: untyped pow");
        if (e < 0) return inverse().pow(-e);
        FpElem acc = one(r_), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // multiplicative order (r prime, v != 0)
    int64_t order() const {
        if (v_ == 0) throw std::invalid_argument("Fp: order of zero");
        int64_t n = 1;
        FpElem x = *this;
        while (x != one(r_)) {
            x *= *this;
            ++n;
            if (n > r_) throw std::logic_error("Fp: order overflow (modulus not prime?)");
        }
        return n;
    }

    std::string str() const { return std::to_string(v_); }

  private:
    int64_t v_, r_;

    static std::tuple<int64_t, int64_t, int64_t> promote(const FpElem& a, const FpElem& b) {
        if (a.r_ == b.r_) return {a.v_, b.v_, a.r_};
        if (a.r_ == 0) return {mod_euclid(a.v_, b.r_), b.v_, b.r_};
        if (b.r_ == 0) return {a.v_, mod_euclid(b.v_, a.r_), a.r_};
        throw std::invalid_argument("Fp: mixed moduli");
    }
};

// elements of order exactly k in F_r^* (r prime)
inline std::vector<int64_t> elements_of_order(int64_t r, int64_t k) {
    std::vector<int64_t> out;
    if ((r - 1) % k != 0) return out;
    for (int64_t b = 2; b < r; ++b)
        if (FpElem(b, r).order() == k) out.push_back(b);
    return out;
}

}  // namespace rk

#endif
