#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cremona/rat.hpp"

namespace cremona {

// Degree of a polynomial: a finite integer, or a distinguished minus-infinity
// for the zero polynomial that orders below every integer.
class Degree {
public:
    static Degree minus_infinity() { return Degree(); }
    Degree(long v) : finite_(true), v_(v) {} // NOLINT: implicit by design

    bool is_finite() const { return finite_; }
    long value() const {
        if (!finite_)
            throw std::logic_error("degree of the zero polynomial is not finite");
        return v_;
    }

    friend bool operator==(const Degree& a, const Degree& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    friend bool operator!=(const Degree& a, const Degree& b) { return !(a == b); }
    friend bool operator<(const Degree& a, const Degree& b) {
        if (!a.finite_)
            return b.finite_;
        return b.finite_ && a.v_ < b.v_;
    }
    friend bool operator>(const Degree& a, const Degree& b) { return b < a; }
    friend bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }
    friend bool operator>=(const Degree& a, const Degree& b) { return !(a < b); }

    std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

private:
    Degree() : finite_(false), v_(0) {}
    bool finite_;
    long v_;
};

// Univariate polynomial over the rationals, coefficients stored ascending.
// Invariant: the highest stored coefficient is nonzero; zero is the empty
// sequence. Multiplication is schoolbook.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& constant) { // NOLINT: implicit by design
        if (!constant.is_zero())
            c_.push_back(constant);
    }
    Poly(int constant) : Poly(Rat(constant)) {}
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static Poly variable() { return Poly({Rat(0), Rat(1)}); }
    static Poly monomial(std::size_t k, const Rat& coeff = Rat(1)) {
        if (coeff.is_zero())
            return Poly();
        std::vector<Rat> c(k + 1, Rat(0));
        c[k] = coeff;
        return Poly(std::move(c));
    }

    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    Degree degree() const {
        return c_.empty() ? Degree::minus_infinity()
                          : Degree(static_cast<long>(c_.size()) - 1);
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_)
            x = -x;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero())
            return Poly();
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const Rat& s, const Poly& p) {
        if (s.is_zero())
            return Poly();
        Poly r(p);
        for (auto& x : r.c_)
            x *= s;
        return r;
    }
    friend Poly operator*(const Poly& p, const Rat& s) { return s * p; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned long e) const {
        Poly r(Rat(1));
        Poly base(*this);
        for (; e; e >>= 1) {
            if (e & 1)
                r *= base;
            if (e > 1)
                base *= base;
        }
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            r = r * x + c_[i];
        return r;
    }

    // P(Q(X)) by Horner in Q.
    Poly compose(const Poly& inner) const {
        Poly r;
        for (std::size_t i = c_.size(); i-- > 0;)
            r = r * inner + Poly(c_[i]);
        return r;
    }

    Poly monic() const {
        if (is_zero())
            throw std::domain_error("monic: zero polynomial");
        return *this * leading().inverse();
    }

    // Euclidean division; b must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero())
            throw std::domain_error("polynomial division by zero");
        Poly q, r(a);
        const long db = b.degree().value();
        while (!r.is_zero() && r.degree().value() >= db) {
            const long k = r.degree().value() - db;
            const Rat c = r.leading() / b.leading();
            const Poly term = monomial(static_cast<std::size_t>(k), c);
            q += term;
            r -= term * b;
        }
        return {q, r};
    }

    // Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

    // Descending-power form with explicit '*', e.g. "3/2*X^2 - X + 1".
    std::string str(const std::string& var = "X") const {
        if (c_.empty())
            return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Rat& c = c_[i];
            if (c.is_zero())
                continue;
            if (out.empty())
                out += c.sign() < 0 ? "-" : "";
            else
                out += c.sign() < 0 ? " - " : " + ";
            const Rat mag = c.abs();
            if (i == 0) {
                out += mag.str();
            } else {
                if (!mag.is_one())
                    out += mag.str() + "*";
                out += var;
                if (i > 1)
                    out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    std::vector<Rat> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }
};

// P(X - t) via Horner composition with X - t.
inline Poly poly_shift(const Poly& p, const Rat& t) {
    return p.compose(Poly({-t, Rat(1)}));
}

// Delta P = -P(X) + P(X - 1). Lowers degree by exactly one on nonconstants.
inline Poly delta(const Poly& p) {
    return poly_shift(p, Rat(1)) - p;
}

inline Poly delta_iter(Poly p, unsigned long k) {
    for (unsigned long i = 0; i < k && !p.is_zero(); ++i)
        p = delta(p);
    return p;
}

} // namespace cremona
