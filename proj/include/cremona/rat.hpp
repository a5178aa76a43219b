#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cremona {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Canonical form: gcd(|num|, den) = 1, den >= 1,
// zero is 0/1. All operations return canonical values.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(int v) : num_(v), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    explicit Rat(BigInt v) : num_(std::move(v)), den_(1) {}

    Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw std::domain_error("division by zero");
        canonicalize();
    }

    Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero())
            throw std::domain_error("division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    Rat inverse() const {
        if (is_zero())
            throw std::domain_error("division by zero");
        return Rat(1) / *this;
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // "p" for integers, "p/q" otherwise; sign carried by the numerator.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    // Accepts "p" or "p/q" with optional leading sign on p.
    static Rat from_string(std::string_view s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rat(BigInt(std::string(s)));
            return Rat(BigInt(std::string(s.substr(0, slash))),
                       BigInt(std::string(s.substr(slash + 1))));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("malformed rational: " + std::string(s));
        }
    }

private:
    BigInt num_;
    BigInt den_;

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

} // namespace cremona
