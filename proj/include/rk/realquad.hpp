#ifndef RK_REALQUAD_HPP
#define RK_REALQUAD_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "rk/cyclotomic.hpp"
#include "rk/rational.hpp"

namespace rk {

// x + y*sqrt(d), d a square-free positive integer. The real embedding fixes
// sqrt(d) > 0. d == 0 marks a plain rational promoting on contact.
class RealQuad {
  public:
    RealQuad() : d_(0), x_(0), y_(0) {}
    explicit RealQuad(const Rat& r) : d_(0), x_(r), y_(0) {}
    explicit RealQuad(long n) : d_(0), x_(n), y_(0) {}
    RealQuad(int64_t d, Rat x, Rat y) : d_(d), x_(std::move(x)), y_(std::move(y)) {
        if (d < 2) throw std::invalid_argument("realquad: need square-free d >= 2");
    }

    static RealQuad zero(int64_t d) { return RealQuad(d, Rat(0), Rat(0)); }
    static RealQuad one(int64_t d) { return RealQuad(d, Rat(1), Rat(0)); }
    static RealQuad sqrt_d(int64_t d) { return RealQuad(d, Rat(0), Rat(1)); }

    int64_t d() const { return d_; }
    const Rat& a() const { return x_; }
    const Rat& b() const { return y_; }
    bool untyped() const { return d_ == 0; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }
    Rat rational_part() const {
        if (y_ != 0) throw std::invalid_argument("realquad: not rational");
        return x_;
    }

    friend RealQuad operator+(const RealQuad& a, const RealQuad& b) {
        auto [u, v] = promote(a, b);
        return make(u.d_, u.x_ + v.x_, u.y_ + v.y_);
    }
    friend RealQuad operator-(const RealQuad& a, const RealQuad& b) {
        auto [u, v] = promote(a, b);
        return make(u.d_, u.x_ - v.x_, u.y_ - v.y_);
    }
    RealQuad operator-() const { return make(d_, -x_, -y_); }
    friend RealQuad operator*(const RealQuad& a, const RealQuad& b) {
        auto [u, v] = promote(a, b);
        if (u.d_ == 0) return make(0, u.x_ * v.x_, Rat(0));
        return make(u.d_, u.x_ * v.x_ + Rat(u.d_) * u.y_ * v.y_, u.x_ * v.y_ + u.y_ * v.x_);
    }
    RealQuad& operator+=(const RealQuad& o) { return *this = *this + o; }
    RealQuad& operator-=(const RealQuad& o) { return *this = *this - o; }
    RealQuad& operator*=(const RealQuad& o) { return *this = *this * o; }

    friend bool operator==(const RealQuad& a, const RealQuad& b) {
        auto [u, v] = promote(a, b);
        return u.x_ == v.x_ && u.y_ == v.y_;
    }
    friend bool operator!=(const RealQuad& a, const RealQuad& b) { return !(a == b); }

    // Galois conjugate sqrt(d) -> -sqrt(d)
    RealQuad conj() const { return make(d_, x_, -y_); }

    // field norm x^2 - d y^2
    Rat norm() const { return x_ * x_ - Rat(d_) * y_ * y_; }

    RealQuad inverse() const {
        if (is_zero()) throw std::invalid_argument("realquad: division by zero");
        if (d_ == 0) return make(0, Rat(1) / x_, Rat(0));
        Rat n = norm();
        return make(d_, x_ / n, -y_ / n);
    }
    friend RealQuad operator/(const RealQuad& a, const RealQuad& b) { return a * b.inverse(); }

    // sign under the embedding sqrt(d) > 0
    int sign() const {
        if (is_zero()) return 0;
        int sx = sign_of(x_), sy = sign_of(y_);
        if (sy == 0) return sx;
        if (sx == 0) return sy;
        if (sx == sy) return sx;
        // compare x^2 with d y^2
        Rat diff = x_ * x_ - Rat(d_) * y_ * y_;
        int c = sign_of(diff);
        return c == 0 ? 0 : (c > 0 ? sx : sy);
    }

    bool operator<(const RealQuad& o) const { return (*this - o).sign() < 0; }
    bool operator>(const RealQuad& o) const { return (*this - o).sign() > 0; }

    // z = w^2 solvable in Q(sqrt(d))? If so return w (the one with w >= 0).
    bool sqrt_in_field(RealQuad& w) const {
        if (is_zero()) { w = make(d_, Rat(0), Rat(0)); return true; }
        if (sign() < 0) return false;
        auto rational_sqrt = [](const Rat& v, Rat& out) {
            if (v < 0) return false;
            Int rn, rd;
            if (!is_perfect_square(num(v), rn) || !is_perfect_square(den(v), rd)) return false;
            out = Rat(rn, rd);
            return true;
        };
        if (y_ == 0) {
            Rat s;
            if (rational_sqrt(x_, s)) { w = make(d_, s, Rat(0)); return true; }
            if (d_ != 0 && rational_sqrt(x_ / Rat(d_), s)) { w = make(d_, Rat(0), s); return true; }
            return false;
        }
        // (u + v sqrt d)^2 = x + y sqrt d: u^2 + d v^2 = x, 2uv = y
        // u^2 = (x +- sqrt(x^2 - d y^2))/2, need x^2 - d y^2 a rational square
        Rat disc = x_ * x_ - Rat(d_) * y_ * y_;
        Rat sd;
        if (!rational_sqrt(disc, sd)) return false;
        for (int s = 0; s < 2; ++s) {
            Rat u2 = (x_ + (s ? -sd : sd)) / 2;
            Rat u;
            if (u2 >= 0 && rational_sqrt(u2, u) && u != 0) {
                Rat v = y_ / (2 * u);
                RealQuad cand = make(d_, u, v);
                if (cand * cand == *this) {
                    w = cand.sign() >= 0 ? cand : -cand;
                    return true;
                }
            }
        }
        return false;
    }

    std::string str() const {
        std::ostringstream os;
        os << rk::to_string(x_);
        if (y_ != 0) os << (sign_of(y_) >= 0 ? "+" : "") << rk::to_string(y_) << "*sqrt(" << d_ << ")";
        return os.str();
    }

  private:
    int64_t d_;
    Rat x_, y_;

    static RealQuad make(int64_t d, Rat x, Rat y) {
        RealQuad r;
        r.d_ = d;
        r.x_ = std::move(x);
        r.y_ = std::move(y);
        return r;
    }
    static std::pair<RealQuad, RealQuad> promote(const RealQuad& a, const RealQuad& b) {
        if (a.d_ == b.d_) return {a, b};
        if (a.d_ == 0) return {make(b.d_, a.x_, Rat(0)), b};
        if (b.d_ == 0) return {a, make(a.d_, b.x_, Rat(0))};
        throw std::invalid_argument("realquad: mixed fields");
    }
};

// Image of a conjugation-invariant element of Q(xi_5) in Q(sqrt 5),
// via xi^2 + xi^3 = (-1 - sqrt 5)/2. Rationals map to themselves.
inline RealQuad cyclo_to_realquad(const CycloNumber& a) {
    if (a.untyped() || a.is_rational()) return RealQuad(a.untyped() ? a.coeffs()[0] : a.rational_part());
    if (a.conductor() != 5)
        throw std::invalid_argument("cyclo_to_realquad: only conductor 5 supported");
    if (a.conj() != a)
        throw std::invalid_argument("cyclo_to_realquad: element not conjugation-invariant");
    // fixed elements have the form c0 + c2 (xi^2 + xi^3), i.e. c1 = 0, c2 = c3
    const auto& c = a.coeffs();
    return RealQuad(5, c[0] - c[2] / 2, -c[2] / 2);
}

}  // namespace rk

#endif
