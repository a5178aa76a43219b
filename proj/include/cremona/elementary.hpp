#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cremona/poly.hpp"
#include "cremona/random_gen.hpp"
#include "cremona/rat.hpp"

namespace cremona {

// Elementary automorphism of the affine plane:
//   (x, y) |-> (alpha * x + P(y), beta * y + c),  alpha, beta != 0.
// The product e1 * e2 applies e2 first.
class ElementaryAut {
public:
    ElementaryAut() : alpha_(1), beta_(1), c_(0), p_() {}

    ElementaryAut(Rat alpha, Rat beta, Rat c, Poly p)
        : alpha_(std::move(alpha)), beta_(std::move(beta)), c_(std::move(c)),
          p_(std::move(p)) {
        if (alpha_.is_zero() || beta_.is_zero())
            throw std::domain_error("elementary automorphism: alpha and beta must be nonzero");
    }

    const Rat& alpha() const { return alpha_; }
    const Rat& beta() const { return beta_; }
    const Rat& c() const { return c_; }
    const Poly& p() const { return p_; }

    bool is_identity() const {
        return alpha_.is_one() && beta_.is_one() && c_.is_zero() && p_.is_zero();
    }

    // (a1 a2, b1 b2, b1 c2 + c1, a1 P2(y) + P1(b2 y + c2)).
    friend ElementaryAut operator*(const ElementaryAut& e1, const ElementaryAut& e2) {
        const Poly inner({e2.c_, e2.beta_}); // b2 y + c2
        return ElementaryAut(e1.alpha_ * e2.alpha_, e1.beta_ * e2.beta_,
                             e1.beta_ * e2.c_ + e1.c_,
                             e1.alpha_ * e2.p_ + e1.p_.compose(inner));
    }

    // (1/a, 1/b, -c/b, -(1/a) P((y - c)/b)).
    ElementaryAut inverse() const {
        const Rat ia = alpha_.inverse();
        const Rat ib = beta_.inverse();
        const Poly inner({-c_ * ib, ib}); // (y - c)/b
        return ElementaryAut(ia, ib, -c_ * ib, -(ia * p_.compose(inner)));
    }

    ElementaryAut pow(long long e) const {
        const ElementaryAut base = e < 0 ? inverse() : *this;
        long long k = e < 0 ? -e : e;
        ElementaryAut r;
        ElementaryAut sq(base);
        for (; k; k >>= 1) {
            if (k & 1)
                r = r * sq;
            if (k > 1)
                sq = sq * sq;
        }
        return r;
    }

    std::pair<Rat, Rat> apply(const std::pair<Rat, Rat>& point) const {
        return {alpha_ * point.first + p_.eval(point.second),
                beta_ * point.second + c_};
    }

    friend bool operator==(const ElementaryAut& a, const ElementaryAut& b) {
        return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.c_ == b.c_ &&
               a.p_ == b.p_;
    }
    friend bool operator!=(const ElementaryAut& a, const ElementaryAut& b) {
        return !(a == b);
    }

    std::string str() const {
        return "(alpha = " + alpha_.str() + ", beta = " + beta_.str() +
               ", c = " + c_.str() + ", P = " + p_.str("y") + ")";
    }

private:
    Rat alpha_;
    Rat beta_;
    Rat c_;
    Poly p_; // in the variable y
};

// Dense square matrix of rationals, row-major.
class RatMatrix {
public:
    explicit RatMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, Rat(0)) {}

    static RatMatrix identity(std::size_t dim) {
        RatMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i)
            m.at(i, i) = Rat(1);
        return m;
    }

    std::size_t dim() const { return dim_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    bool is_identity() const { return *this == identity(dim_); }

    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
        if (x.dim_ != y.dim_)
            throw std::invalid_argument("matrix dimension mismatch");
        RatMatrix r(x.dim_);
        for (std::size_t i = 0; i < x.dim_; ++i)
            for (std::size_t k = 0; k < x.dim_; ++k) {
                const Rat& v = x.at(i, k);
                if (v.is_zero())
                    continue;
                for (std::size_t j = 0; j < x.dim_; ++j)
                    r.at(i, j) += v * y.at(k, j);
            }
        return r;
    }

    friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
        return x.dim_ == y.dim_ && x.a_ == y.a_;
    }
    friend bool operator!=(const RatMatrix& x, const RatMatrix& y) {
        return !(x == y);
    }

private:
    std::size_t dim_;
    std::vector<Rat> a_;
};

// The linearization acts on the span of the coordinate functions
//   (x, 1, y, y^2, ..., y^{n+1}),
// dimension n + 3, where n bounds the degrees of the P-parts. The matrix of
// e is the pullback by e^{-1} (substitute x |-> alpha x + P(y),
// y |-> beta y + c into each basis function); inserting the inversion makes
// e |-> matrix(e) covariant, so it is a group homomorphism, and the
// parameters of e^{-1} can be read back off the matrix, so it is faithful.
inline std::size_t basis_dim(long n) { return static_cast<std::size_t>(n) + 3; }

inline RatMatrix pullback_matrix(const ElementaryAut& e, long n) {
    const ElementaryAut inv = e.inverse();
    if (Degree(n) < inv.p().degree())
        throw std::invalid_argument("pullback_matrix: degree bound too small");

    const std::size_t dim = basis_dim(n);
    RatMatrix m(dim);
    // Column 0: image of x is alpha' x + P'(y). Row 0 is the x-component;
    // row k+1 holds the y^k component.
    m.at(0, 0) = inv.alpha();
    for (std::size_t k = 0; k + 1 < dim; ++k)
        m.at(k + 1, 0) = inv.p().coeff(k);
    // Column k+1: image of y^k is (beta' y + c')^k, degree k <= n + 1.
    const Poly image_y({inv.c(), inv.beta()});
    Poly power(Rat(1));
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        for (std::size_t j = 0; j + 1 < dim; ++j)
            m.at(j + 1, k + 1) = power.coeff(j);
        power *= image_y;
    }
    return m;
}

// Reads alpha', beta', c', P' of e^{-1} off the matrix and inverts.
inline ElementaryAut matrix_parameters(const RatMatrix& m) {
    if (m.dim() < 4)
        throw std::invalid_argument("matrix_parameters: dimension must be >= 4");
    const Rat alpha = m.at(0, 0);
    const Rat c = m.at(1, 2);
    const Rat beta = m.at(2, 2);
    std::vector<Rat> coeffs;
    for (std::size_t k = 0; k + 1 < m.dim(); ++k)
        coeffs.push_back(m.at(k + 1, 0));
    return ElementaryAut(alpha, beta, c, Poly(std::move(coeffs))).inverse();
}

struct Linearization {
    long basis_degree = 1; // n
    std::size_t dim = 4;   // n + 3
    std::vector<RatMatrix> matrices;
};

inline Linearization linearize(const std::vector<ElementaryAut>& gens) {
    if (gens.empty())
        throw std::invalid_argument("linearize: generator list must be nonempty");
    long n = 1;
    for (const auto& e : gens) {
        const Degree d = e.p().degree();
        if (d.is_finite() && d.value() > n)
            n = d.value();
    }
    Linearization lin;
    lin.basis_degree = n;
    lin.dim = basis_dim(n);
    for (const auto& e : gens)
        lin.matrices.push_back(pullback_matrix(e, n));
    return lin;
}

// Random-word verification that the matrix assignment is a faithful
// homomorphism: evaluating a word through the group and multiplying its
// matrices must agree, any word whose matrix is the identity must evaluate
// to the identity automorphism, and parameter recovery must reproduce the
// evaluated element. A corrupted matrix makes this return false.
inline bool check_linearization(const std::vector<ElementaryAut>& gens,
                                const std::vector<RatMatrix>& matrices, long n,
                                unsigned trials, std::uint64_t seed) {
    if (gens.empty() || gens.size() != matrices.size())
        return false;
    // Each supplied matrix must cancel the independently built matrix of the
    // inverse; since the pullback is a homomorphism this pins the supplied
    // matrix exactly, so any corruption fails here.
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (matrices[i].dim() != basis_dim(n))
            return false;
        if (!(matrices[i] * pullback_matrix(gens[i].inverse(), n)).is_identity())
            return false;
    }
    Rng rng(seed);
    for (unsigned i = 0; i < trials; ++i) {
        const std::size_t len = 1 + rng.below(5);
        ElementaryAut word_value;
        RatMatrix word_matrix = RatMatrix::identity(basis_dim(n));
        for (std::size_t k = 0; k < len; ++k) {
            const std::size_t pick = rng.below(gens.size());
            const long long exp = rng.flip() ? 1 : -1;
            word_value = word_value * gens[pick].pow(exp);
            RatMatrix mg = matrices[pick];
            if (exp < 0)
                mg = pullback_matrix(gens[pick].inverse(), n);
            word_matrix = word_matrix * mg;
        }
        if (pullback_matrix(word_value, n) != word_matrix)
            return false;
        if (word_matrix.is_identity() && !word_value.is_identity())
            return false;
        if (matrix_parameters(word_matrix) != word_value)
            return false;
    }
    return true;
}

inline bool linearize_check(const std::vector<ElementaryAut>& gens, unsigned trials,
                            std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("linearize_check: trials must be >= 1");
    const Linearization lin = linearize(gens);
    return check_linearization(gens, lin.matrices, lin.basis_degree, trials, seed);
}

} // namespace cremona
