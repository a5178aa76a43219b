#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "cremona/poly.hpp"
#include "cremona/rat.hpp"

namespace cremona {

// Rational function over Q, kept normalized: gcd(num, den) = 1 with the
// monic gcd convention, den monic and nonzero, zero stored as 0/1.
// Equality of values is equality of these canonical representations.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& constant) : num_(constant), den_(Rat(1)) {} // NOLINT
    RatFunc(int constant) : RatFunc(Rat(constant)) {}
    RatFunc(const Poly& p) : num_(p), den_(Rat(1)) {} // NOLINT
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        return a * b.inverse();
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero())
            throw std::domain_error("division by zero rational function");
        return RatFunc(den_, num_);
    }

    RatFunc pow(long long e) const {
        const RatFunc base = e < 0 ? inverse() : *this;
        unsigned long long k = e < 0 ? -static_cast<unsigned long long>(e) : e;
        RatFunc r(1);
        RatFunc sq(base);
        for (; k; k >>= 1) {
            if (k & 1)
                r *= sq;
            if (k > 1)
                sq *= sq;
        }
        return r;
    }

    // g(X - t), renormalized.
    RatFunc shift(const Rat& t) const {
        return RatFunc(poly_shift(num_, t), poly_shift(den_, t));
    }

    bool defined_at(const Rat& x) const { return !den_.eval(x).is_zero(); }

    Rat eval(const Rat& x) const {
        const Rat d = den_.eval(x);
        if (d.is_zero())
            throw std::domain_error("denominator vanishes at evaluation point");
        return num_.eval(x) / d;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str(const std::string& var = "X") const {
        if (den_.is_one())
            return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    Poly num_;
    Poly den_;

    void normalize() {
        if (den_.is_zero())
            throw std::domain_error("division by zero rational function");
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        const Poly g = Poly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = Poly::divmod(num_, g).first;
            den_ = Poly::divmod(den_, g).first;
        }
        const Rat lc = den_.leading();
        if (!lc.is_one()) {
            const Rat inv = lc.inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
};

} // namespace cremona
