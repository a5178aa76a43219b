#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "cremona/poly.hpp"
#include "cremona/rat.hpp"
#include "cremona/ratfunc.hpp"

namespace cremona {

// Order of a group element: a positive integer or infinity.
class ElementOrder {
public:
    static ElementOrder infinite() { return ElementOrder(0, false); }
    static ElementOrder finite(unsigned long k) { return ElementOrder(k, true); }

    bool is_finite() const { return finite_; }
    unsigned long value() const {
        if (!finite_)
            throw std::logic_error("element has infinite order");
        return k_;
    }

    friend bool operator==(const ElementOrder& a, const ElementOrder& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.k_ == b.k_);
    }
    friend bool operator!=(const ElementOrder& a, const ElementOrder& b) {
        return !(a == b);
    }

    std::string str() const { return finite_ ? std::to_string(k_) : "infinity"; }

private:
    ElementOrder(unsigned long k, bool finite) : k_(k), finite_(finite) {}
    unsigned long k_;
    bool finite_;
};

// Recognized normal forms of a Jonquieres element.
struct FormTag {
    enum class Kind { Identity, Shear, Scaling, Translation, General };

    Kind kind = Kind::General;
    // Degree of the shear polynomial; meaningful for Identity (-inf) and Shear.
    Degree shear_degree = Degree::minus_infinity();

    bool is_identity() const { return kind == Kind::Identity; }
    // t = 0, g = 1, f a polynomial (the identity counts, with f = 0).
    bool is_shear() const {
        return kind == Kind::Identity || kind == Kind::Shear;
    }
    bool is_scaling() const {
        return kind == Kind::Identity || kind == Kind::Scaling;
    }
    // Membership in the abelian subgroup of shears by polynomials of
    // degree at most n; the identity lies in every one of them.
    bool in_shear_subgroup(long n) const {
        return is_shear() && shear_degree <= Degree(n);
    }
};

// Element of the Jonquieres group over Q in normal form (t, g, f), acting by
//   (x, y) |-> (x + t, g(x) * y + f(x)),   g != 0.
// The product e1 * e2 applies e2 first. Values are immutable.
class JonqElement {
public:
    JonqElement() : t_(0), g_(1), f_() {}

    JonqElement(Rat t, RatFunc g, RatFunc f)
        : t_(std::move(t)), g_(std::move(g)), f_(std::move(f)) {
        if (g_.is_zero())
            throw std::domain_error("multiplier must be nonzero");
    }

    // s_t: horizontal translation (x, y) |-> (x + t, y).
    static JonqElement translation(const Rat& t) {
        return JonqElement(t, RatFunc(1), RatFunc());
    }
    // alpha_f: shear (x, y) |-> (x, y + f(x)).
    static JonqElement shear(const RatFunc& f) {
        return JonqElement(Rat(0), RatFunc(1), f);
    }
    // mu_g: scaling (x, y) |-> (x, g(x) * y); g must be nonzero.
    static JonqElement scaling(const RatFunc& g) {
        return JonqElement(Rat(0), g, RatFunc());
    }

    const Rat& t() const { return t_; }
    const RatFunc& g() const { return g_; }
    const RatFunc& f() const { return f_; }

    bool is_identity() const {
        return t_.is_zero() && g_.is_one() && f_.is_zero();
    }

    // Composition in normal form:
    //   e1 * e2 = ( t1 + t2, g1(X + t2) g2(X), g1(X + t2) f2(X) + f1(X + t2) ).
    friend JonqElement operator*(const JonqElement& a, const JonqElement& b) {
        const RatFunc ga = a.g_.shift(-b.t_); // g1(X + t2)
        const RatFunc fa = a.f_.shift(-b.t_);
        return JonqElement(a.t_ + b.t_, ga * b.g_, ga * b.f_ + fa);
    }

    // ( -t, 1/g(X - t), -f(X - t)/g(X - t) ).
    JonqElement inverse() const {
        const RatFunc gs = g_.shift(t_);
        const RatFunc fs = f_.shift(t_);
        return JonqElement(-t_, gs.inverse(), -(fs / gs));
    }

    JonqElement pow(long long e) const {
        const JonqElement base = e < 0 ? inverse() : *this;
        unsigned long long k = e < 0 ? -static_cast<unsigned long long>(e) : e;
        JonqElement r;
        JonqElement sq(base);
        for (; k; k >>= 1) {
            if (k & 1)
                r = r * sq;
            if (k > 1)
                sq = sq * sq;
        }
        return r;
    }

    // Exact pointwise action. Throws when a denominator of g or f vanishes
    // at the x-coordinate.
    std::pair<Rat, Rat> apply(const std::pair<Rat, Rat>& point) const {
        const Rat& x = point.first;
        if (!g_.defined_at(x) || !f_.defined_at(x))
            throw std::domain_error("point in indeterminacy locus");
        return {x + t_, g_.eval(x) * point.second + f_.eval(x)};
    }

    // Exact order. t != 0 translates forever; for t = 0 the multiplier of the
    // k-th power is g^k, and the only finite-order units of Q(X)^x are +-1
    // (a unit is  c * num/den  with num, den monic coprime; g^k = 1 forces
    // num = den = 1 and c^k = 1 in Q^x, hence c = 1 or -1). This theorem is
    // what makes the decision procedure below complete over Q.
    ElementOrder order() const {
        if (!t_.is_zero())
            return ElementOrder::infinite();
        if (g_.is_one())
            return f_.is_zero() ? ElementOrder::finite(1) : ElementOrder::infinite();
        if (g_ == RatFunc(-1))
            return ElementOrder::finite(2); // (0, -1, f)^2 = (0, 1, -f + f) = 1
        return ElementOrder::infinite();
    }

    FormTag classify() const {
        FormTag tag;
        if (is_identity()) {
            tag.kind = FormTag::Kind::Identity;
            return tag;
        }
        if (t_.is_zero() && g_.is_one() && f_.is_polynomial()) {
            tag.kind = FormTag::Kind::Shear;
            tag.shear_degree = f_.num().degree();
            return tag;
        }
        if (t_.is_zero() && f_.is_zero()) {
            tag.kind = FormTag::Kind::Scaling;
            return tag;
        }
        if (g_.is_one() && f_.is_zero()) {
            tag.kind = FormTag::Kind::Translation;
            return tag;
        }
        return tag;
    }

    friend bool operator==(const JonqElement& a, const JonqElement& b) {
        return a.t_ == b.t_ && a.g_ == b.g_ && a.f_ == b.f_;
    }
    friend bool operator!=(const JonqElement& a, const JonqElement& b) {
        return !(a == b);
    }

    // Recognized-form printing: "alpha(X)", "mu((X - 1)/(X))", "s(1)",
    // "identity", or the raw normal form.
    std::string str() const {
        switch (classify().kind) {
        case FormTag::Kind::Identity:
            return "identity";
        case FormTag::Kind::Shear:
            return "alpha(" + f_.str() + ")";
        case FormTag::Kind::Scaling:
            return "mu(" + g_.str() + ")";
        case FormTag::Kind::Translation:
            return "s(" + t_.str() + ")";
        case FormTag::Kind::General:
            break;
        }
        return normal_form_str();
    }

    std::string normal_form_str() const {
        return "(t = " + t_.str() + ", g = " + g_.str() + ", f = " + f_.str() + ")";
    }

private:
    Rat t_;
    RatFunc g_;
    RatFunc f_;
};

} // namespace cremona
