#ifndef RK_LAURENT_HPP
#define RK_LAURENT_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rk/cyclotomic.hpp"
#include "rk/primefield.hpp"
#include "rk/rational.hpp"
#include "rk/realquad.hpp"

namespace rk {

// coefficient-ring hooks -----------------------------------------------------

inline bool ring_is_zero(const Rat& x) { return x == 0; }
inline bool ring_is_zero(const CycloNumber& x) { return x.is_zero(); }
inline bool ring_is_zero(const RealQuad& x) { return x.is_zero(); }
inline bool ring_is_zero(const FpElem& x) { return x.is_zero(); }

inline Rat ring_inverse(const Rat& x) { return Rat(1) / x; }
inline CycloNumber ring_inverse(const CycloNumber& x) { return x.inverse(); }
inline RealQuad ring_inverse(const RealQuad& x) { return x.inverse(); }
inline FpElem ring_inverse(const FpElem& x) { return x.inverse(); }

inline Rat ring_conj(const Rat& x) { return x; }
inline CycloNumber ring_conj(const CycloNumber& x) { return x.conj(); }
inline RealQuad ring_conj(const RealQuad& x) { return x.conj(); }
inline FpElem ring_conj(const FpElem& x) { return x; }

// unit u with u*lead canonical: sign-normalized, or monic over F_r
inline Rat canonical_unit(const Rat& lead) { return lead < 0 ? Rat(-1) : Rat(1); }
inline CycloNumber canonical_unit(const CycloNumber& lead) {
    return CycloNumber(Rat(sign_of(lead.leading_entry()) < 0 ? -1 : 1));
}
inline RealQuad canonical_unit(const RealQuad& lead) {
    int s = lead.a() != 0 ? sign_of(lead.a()) : sign_of(lead.b());
    return RealQuad(Rat(s < 0 ? -1 : 1));
}
inline FpElem canonical_unit(const FpElem& lead) { return lead.inverse(); }

inline std::string ring_str(const Rat& x) { return to_string(x); }
inline std::string ring_str(const CycloNumber& x) { return x.str(); }
inline std::string ring_str(const RealQuad& x) { return x.str(); }
inline std::string ring_str(const FpElem& x) { return x.str(); }

// ----------------------------------------------------------------------------

// Laurent polynomial over R: dense coefficients c[0..n] for t^{lo}..t^{lo+n}.
// Always trimmed: zero polynomial has empty c.
template <class R>
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(R constant) {
        if (!ring_is_zero(constant)) {
            lo_ = 0;
            c_.push_back(std::move(constant));
        }
    }
    LaurentPoly(int64_t lo, std::vector<R> coeffs) : lo_(lo), c_(std::move(coeffs)) { trim(); }

    static LaurentPoly monomial(R coeff, int64_t deg) {
        LaurentPoly f;
        if (!ring_is_zero(coeff)) {
            f.lo_ = deg;
            f.c_.push_back(std::move(coeff));
        }
        return f;
    }
    static LaurentPoly from_map(const std::map<int64_t, R>& m) {
        LaurentPoly f;
        for (const auto& [d, x] : m) f += monomial(x, d);
        return f;
    }

    bool is_zero() const { return c_.empty(); }
    int64_t low() const { require_nonzero(); return lo_; }
    int64_t high() const { require_nonzero(); return lo_ + static_cast<int64_t>(c_.size()) - 1; }
    // span of exponents; the zero polynomial has degree -1 by convention
    int64_t degree_span() const { return c_.empty() ? -1 : static_cast<int64_t>(c_.size()) - 1; }

    R at(int64_t deg) const {
        if (c_.empty() || deg < lo_ || deg > high()) return R{};
        return c_[static_cast<size_t>(deg - lo_)];
    }
    const std::vector<R>& coeffs() const { return c_; }
    const R& lead() const { require_nonzero(); return c_.back(); }
    const R& trail() const { require_nonzero(); return c_.front(); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int64_t lo = std::min(a.lo_, b.lo_);
        int64_t hi = std::max(a.high(), b.high());
        std::vector<R> v(static_cast<size_t>(hi - lo + 1), R{});
        for (size_t i = 0; i < a.c_.size(); ++i) v[a.lo_ - lo + i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) {
            auto& slot = v[b.lo_ - lo + i];
            slot = slot + b.c_[i];
        }
        return LaurentPoly(lo, std::move(v));
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly();
        std::vector<R> v(a.c_.size() + b.c_.size() - 1, R{});
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (ring_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (ring_is_zero(b.c_[j])) continue;
                v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return LaurentPoly(a.lo_ + b.lo_, std::move(v));
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        if (a.c_.empty()) return true;
        if (a.lo_ != b.lo_) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly shifted(int64_t by) const {
        LaurentPoly r = *this;
        if (!r.c_.empty()) r.lo_ += by;
        return r;
    }
    LaurentPoly scaled(const R& s) const {
        LaurentPoly r;
        if (ring_is_zero(s)) return r;
        r.lo_ = lo_;
        r.c_.reserve(c_.size());
        for (const auto& x : c_) r.c_.push_back(x * s);
        r.trim();
        return r;
    }

    // quotient and remainder treating both as ordinary polynomials in t after
    // shifting low degrees to zero; exact over a coefficient field
    static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& num,
                                                      const LaurentPoly& d) {
        if (d.is_zero()) throw std::invalid_argument("laurent: division by zero");
        if (num.is_zero()) return {LaurentPoly(), LaurentPoly()};
        int64_t shift = num.lo_ - d.lo_;
        std::vector<R> n = num.c_;
        const std::vector<R>& dv = d.c_;
        R dinv = ring_inverse(d.c_.back());
        std::vector<R> quo;
        if (n.size() >= dv.size()) quo.assign(n.size() - dv.size() + 1, R{});
        while (n.size() >= dv.size()) {
            R f = n.back() * dinv;
            size_t off = n.size() - dv.size();
            if (!ring_is_zero(f)) {
                quo[off] = f;
                for (size_t i = 0; i + 1 < dv.size(); ++i) n[off + i] = n[off + i] - f * dv[i];
            }
            n.pop_back();
            while (!n.empty() && ring_is_zero(n.back())) n.pop_back();
        }
        LaurentPoly q(shift, std::move(quo));
        LaurentPoly rem(num.lo_, std::move(n));
        return {q, rem};
    }

    // exact division; throws if the remainder is nonzero
    LaurentPoly divide_exact(const LaurentPoly& d) const {
        auto [q, rem] = divmod(*this, d);
        if (!rem.is_zero()) throw std::domain_error("laurent: division not exact");
        return q;
    }

    // f(t) -> conj(f)(t^{-1})
    LaurentPoly conj_reciprocal() const {
        if (c_.empty()) return LaurentPoly();
        std::vector<R> v(c_.size(), R{});
        for (size_t i = 0; i < c_.size(); ++i) v[c_.size() - 1 - i] = ring_conj(c_[i]);
        return LaurentPoly(-high(), std::move(v));
    }

    // shift so the minimum degree is 0, scale the leading coefficient canonical
    LaurentPoly unit_normalized() const {
        if (c_.empty()) return LaurentPoly();
        return shifted(-lo_).scaled(canonical_unit(c_.back()));
    }

    R content_unit() const { return canonical_unit(lead()); }

    LaurentPoly pow(int64_t e) const {
        if (e < 0) throw std::invalid_argument("laurent: negative power");
        LaurentPoly acc = LaurentPoly::monomial(R(1), 0);
        LaurentPoly base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // substitute a ring value for t (t must not be 0 if low() < 0)
    R eval(const R& tval) const {
        if (c_.empty()) return R{};
        R acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * tval + c_[i];
        if (lo_ > 0) {
            R tp = pow_ring(tval, lo_);
            return acc * tp;
        }
        if (lo_ < 0) {
            R tp = pow_ring(tval, -lo_);
            return acc * ring_inverse(tp);
        }
        return acc;
    }

    // canonical text form deg:coeff;deg:coeff;... ascending
    std::string str() const {
        if (c_.empty()) return "0:0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (ring_is_zero(c_[i])) continue;
            if (!first) os << ";";
            os << (lo_ + static_cast<int64_t>(i)) << ":" << ring_str(c_[i]);
            first = false;
        }
        return os.str();
    }

  private:
    int64_t lo_ = 0;
    std::vector<R> c_;

    void trim() {
        while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
        size_t lead0 = 0;
        while (lead0 < c_.size() && ring_is_zero(c_[lead0])) ++lead0;
        if (lead0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead0));
            lo_ += static_cast<int64_t>(lead0);
        }
        if (c_.empty()) lo_ = 0;
    }
    void require_nonzero() const {
        if (c_.empty()) throw std::invalid_argument("laurent: zero polynomial");
    }
    static R pow_ring(R base, int64_t e) {
        R acc = base;  // e >= 1 below
        if (e == 0) throw std::logic_error("pow_ring");
        --e;
        while (e) {
            acc = acc * base;
            --e;
        }
        return acc;
    }
};

// decision procedure for "equal up to units lambda * t^j"
template <class R>
bool equal_up_to_units(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    if (a.degree_span() != b.degree_span()) return false;
    LaurentPoly<R> an = a.shifted(-a.low());
    LaurentPoly<R> bn = b.shifted(-b.low());
    R lambda = bn.lead() * ring_inverse(an.lead());
    return an.scaled(lambda) == bn;
}

using QPoly = LaurentPoly<Rat>;
using CPoly = LaurentPoly<CycloNumber>;
using FpPoly = LaurentPoly<FpElem>;
using RqPoly = LaurentPoly<RealQuad>;

}  // namespace rk

#endif
