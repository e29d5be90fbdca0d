#ifndef RK_CYCLOTOMIC_HPP
#define RK_CYCLOTOMIC_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rk/rational.hpp"

namespace rk {

// Element of Q(xi_k), k an odd prime, in the power basis 1, xi, ..., xi^{k-2}.
// Arithmetic is mod Phi_k(x) = 1 + x + ... + x^{k-1}; xi^{k-1} = -(1+xi+...+xi^{k-2}).
// k == 0 marks a plain rational that promotes on contact with a typed element.
class CycloNumber {
  public:
    CycloNumber() : k_(0), c_(1) {}
    explicit CycloNumber(const Rat& r) : k_(0), c_(1) { c_[0] = r; }
    explicit CycloNumber(long n) : k_(0), c_(1) { c_[0] = n; }

    CycloNumber(int64_t k, std::vector<Rat> coeffs) : k_(k), c_(std::move(coeffs)) {
        check_conductor(k_);
        if (c_.size() != static_cast<size_t>(k_ - 1))
            throw std::invalid_argument("cyclo: need k-1 coefficients");
    }

    static CycloNumber zero(int64_t k) { return CycloNumber(k, std::vector<Rat>(k - 1)); }
    static CycloNumber one(int64_t k) {
        auto v = std::vector<Rat>(k - 1);
        v[0] = 1;
        return CycloNumber(k, std::move(v));
    }
    // xi^e, e arbitrary integer
    static CycloNumber root_power(int64_t k, int64_t e) {
        std::vector<Rat> ext(k, Rat(0));
        ext[static_cast<size_t>(mod_euclid(e, k))] = 1;
        return reduce(k, ext);
    }

    int64_t conductor() const { return k_; }
    bool untyped() const { return k_ == 0; }

    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rat rational_part() const {
        if (!is_rational()) throw std::invalid_argument("cyclo: not rational");
        return c_[0];
    }
    bool is_integral() const {
        for (const auto& x : c_)
            if (den(x) != 1) return false;
        return true;
    }

    friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
        auto [x, y] = promote(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) {
        auto [x, y] = promote(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    CycloNumber operator-() const {
        CycloNumber r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
        auto [x, y] = promote(a, b);
        if (x.k_ == 0) {
            CycloNumber r;
            r.c_[0] = x.c_[0] * y.c_[0];
            return r;
        }
        int64_t k = x.k_;
        std::vector<Rat> ext(k, Rat(0));
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i] == 0) continue;
            for (size_t j = 0; j < y.c_.size(); ++j) {
                if (y.c_[j] == 0) continue;
                ext[(i + j) % k] += x.c_[i] * y.c_[j];
            }
        }
        return reduce(k, ext);
    }
    CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
    CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
    CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

    friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
        auto [x, y] = promote(a, b);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

    // Galois map xi -> xi^j, gcd(j,k) = 1. Identity on rationals.
    CycloNumber galois(int64_t j) const {
        if (k_ == 0) return *this;
        int64_t jm = mod_euclid(j, k_);
        if (jm == 0 || std::gcd(jm, k_) != 1)
            throw std::invalid_argument("cyclo: galois exponent not coprime to conductor");
        std::vector<Rat> ext(k_, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            ext[static_cast<size_t>((static_cast<int64_t>(i) * jm) % k_)] += c_[i];
        return reduce(k_, ext);
    }
    // complex conjugation xi -> xi^{-1}
    CycloNumber conj() const { return k_ == 0 ? *this : galois(k_ - 1); }

    CycloNumber inverse() const {
        if (is_zero()) throw std::invalid_argument("cyclo: division by zero");
        if (k_ == 0) {
            CycloNumber r;
            r.c_[0] = Rat(1) / c_[0];
            return r;
        }
        // extended Euclid in Q[x] against Phi_k
        std::vector<Rat> phi(k_, Rat(1));  // 1 + x + ... + x^{k-1}
        std::vector<Rat> a(c_.begin(), c_.end());
        trim(a);
        std::vector<Rat> r0 = phi, r1 = a;
        std::vector<Rat> s0 = {Rat(0)}, s1 = {Rat(1)};  // coeffs of a-side
        while (!r1.empty()) {
            auto [quo, rem] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            auto s2 = sub(s0, mul(quo, s1));
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 = gcd (a nonzero constant since Phi_k is irreducible)
        if (r0.size() != 1) throw std::logic_error("cyclo: inverse gcd not constant");
        Rat g = r0[0];
        std::vector<Rat> inv(k_ - 1, Rat(0));
        for (size_t i = 0; i < s0.size() && i < inv.size(); ++i) inv[i] = s0[i] / g;
        // s0 may have degree up to k-2 only; higher terms cannot appear
        if (s0.size() > static_cast<size_t>(k_ - 1)) {
            std::vector<Rat> ext(k_, Rat(0));
            for (size_t i = 0; i < s0.size(); ++i) ext[i % k_] += s0[i] / g;
            return reduce(k_, ext);
        }
        return CycloNumber(k_, std::move(inv));
    }
    friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) {
        return a * b.inverse();
    }

    // first nonzero power-basis entry (throws on zero)
    const Rat& leading_entry() const {
        for (const auto& x : c_)
            if (x != 0) return x;
        throw std::invalid_argument("cyclo: zero has no leading entry");
    }

    // least common denominator of the coefficients
    Int lcd() const {
        Int l = 1;
        for (const auto& x : c_) l = l / gcd_of(l, den(x)) * den(x);
        return l;
    }

    // text form [c0,c1,...]
    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ",";
            os << rk::to_string(c_[i]);
        }
        os << "]";
        return os.str();
    }

    static void check_conductor(int64_t k) {
        if (k < 3 || k % 2 == 0 || !is_prime_u64(static_cast<uint64_t>(k)))
            throw std::invalid_argument("cyclo: conductor must be an odd prime");
    }

  private:
    int64_t k_;
    std::vector<Rat> c_;

    static CycloNumber reduce(int64_t k, const std::vector<Rat>& ext) {
        // ext has k entries (exponents 0..k-1); fold xi^{k-1} into the basis
        std::vector<Rat> v(ext.begin(), ext.begin() + (k - 1));
        const Rat& top = ext[k - 1];
        if (top != 0)
            for (auto& x : v) x -= top;
        return CycloNumber(k, std::move(v));
    }

    static std::pair<CycloNumber, CycloNumber> promote(const CycloNumber& a, const CycloNumber& b) {
        if (a.k_ == b.k_) return {a, b};
        if (a.k_ == 0) {
            CycloNumber ap = zero(b.k_);
            ap.c_[0] = a.c_[0];
            return {ap, b};
        }
        if (b.k_ == 0) {
            CycloNumber bp = zero(a.k_);
            bp.c_[0] = b.c_[0];
            return {a, bp};
        }
        throw std::invalid_argument("cyclo: mixed conductors");
    }

    // little dense Q[x] helpers for the inverse
    static void trim(std::vector<Rat>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    static std::vector<Rat> sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> r(std::max(a.size(), b.size()), Rat(0));
        for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
        trim(r);
        return r;
    }
    static std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        trim(r);
        return r;
    }
    static std::pair<std::vector<Rat>, std::vector<Rat>> divmod(std::vector<Rat> num,
                                                                const std::vector<Rat>& d) {
        std::vector<Rat> quo(num.size() > d.size() - 1 ? num.size() - d.size() + 1 : 0, Rat(0));
        while (num.size() >= d.size() && !num.empty()) {
            Rat f = num.back() / d.back();
            size_t off = num.size() - d.size();
            quo[off] = f;
            for (size_t i = 0; i < d.size(); ++i) num[off + i] -= f * d[i];
            trim(num);
            if (!quo.empty() && num.size() >= d.size() && num.size() - d.size() + 1 > quo.size())
                throw std::logic_error("divmod");
        }
        return {quo, num};
    }
};

// xi -> xi^j as an operation on field elements
inline CycloNumber cyclo_galois(const CycloNumber& a, int64_t j) { return a.galois(j); }

}  // namespace rk

#endif
