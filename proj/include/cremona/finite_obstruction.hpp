#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

// Monomial transformation (x1, x2) |-> (w^j1 x1, x1^n w^j2 x2) where w is a
// fixed primitive p-th root of unity. Everything is exponent arithmetic:
// the roots of unity never materialize. The n-component generates the
// integer factor of the semidirect product; j1, j2 live mod p.
class MonomialElement {
public:
    MonomialElement(unsigned p, long long j1, long long j2, long long n)
        : p_(p), j1_(mod(j1, p)), j2_(mod(j2, p)), n_(n) {
        if (p < 2)
            throw std::invalid_argument("modulus must be at least 2");
    }

    static MonomialElement identity(unsigned p) { return {p, 0, 0, 0}; }
    // The automorphism (x, y) |-> (x, x y) generating the integer factor.
    static MonomialElement twist(unsigned p) { return {p, 0, 0, 1}; }
    // Diagonal root-of-unity scaling on both coordinates.
    static MonomialElement diag_scaling(unsigned p) { return {p, 1, 1, 0}; }
    // Root-of-unity scaling on the second coordinate only.
    static MonomialElement second_scaling(unsigned p) { return {p, 0, 1, 0}; }

    unsigned p() const { return p_; }
    unsigned j1() const { return j1_; }
    unsigned j2() const { return j2_; }
    long long n() const { return n_; }

    // Apply v first: (j1+j1', n*j1' + j2 + j2', n+n') with exponents mod p.
    friend MonomialElement operator*(const MonomialElement& u, const MonomialElement& v) {
        if (u.p_ != v.p_)
            throw std::invalid_argument("mismatched modulus");
        return {u.p_, u.j1_ + v.j1_,
                u.n_ * static_cast<long long>(v.j1_) + u.j2_ + v.j2_, u.n_ + v.n_};
    }

    MonomialElement inverse() const {
        return {p_, -static_cast<long long>(j1_),
                n_ * static_cast<long long>(j1_) - static_cast<long long>(j2_), -n_};
    }

    MonomialElement pow(long long e) const {
        MonomialElement base = e < 0 ? inverse() : *this;
        long long k = e < 0 ? -e : e;
        MonomialElement r = identity(p_);
        for (long long i = 0; i < k; ++i)
            r = r * base;
        return r;
    }

    friend bool operator==(const MonomialElement& a, const MonomialElement& b) {
        return a.p_ == b.p_ && a.j1_ == b.j1_ && a.j2_ == b.j2_ && a.n_ == b.n_;
    }
    friend bool operator!=(const MonomialElement& a, const MonomialElement& b) {
        return !(a == b);
    }

    std::string str() const {
        return "(j1 = " + std::to_string(j1_) + ", j2 = " + std::to_string(j2_) +
               ", n = " + std::to_string(n_) + ") mod " + std::to_string(p_);
    }

private:
    unsigned p_;
    unsigned j1_, j2_;
    long long n_;

    static unsigned mod(long long v, unsigned p) {
        const long long m = v % static_cast<long long>(p);
        return static_cast<unsigned>(m < 0 ? m + p : m);
    }
};

// Unitriangular 3x3 matrix over Z/p encoded by its free entries (a, b, c):
// superdiagonal a, b and corner c. Order p^3; multiplication adds entries
// and picks up the cross term a*b'.
class HeisenbergElement {
public:
    HeisenbergElement(unsigned p, long long a, long long b, long long c)
        : p_(p), a_(mod(a, p)), b_(mod(b, p)), c_(mod(c, p)) {}

    static HeisenbergElement identity(unsigned p) { return {p, 0, 0, 0}; }

    unsigned p() const { return p_; }
    unsigned a() const { return a_; }
    unsigned b() const { return b_; }
    unsigned c() const { return c_; }

    friend HeisenbergElement operator*(const HeisenbergElement& x,
                                       const HeisenbergElement& y) {
        if (x.p_ != y.p_)
            throw std::invalid_argument("mismatched modulus");
        return {x.p_, x.a_ + y.a_, x.b_ + y.b_,
                static_cast<long long>(x.c_) + y.c_ +
                    static_cast<long long>(x.a_) * y.b_};
    }

    HeisenbergElement inverse() const {
        return {p_, -static_cast<long long>(a_), -static_cast<long long>(b_),
                static_cast<long long>(a_) * b_ - static_cast<long long>(c_)};
    }

    friend bool operator==(const HeisenbergElement& x, const HeisenbergElement& y) {
        return x.p_ == y.p_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }
    friend bool operator!=(const HeisenbergElement& x, const HeisenbergElement& y) {
        return !(x == y);
    }

    // Dense index in [0, p^3).
    unsigned index() const { return (a_ * p_ + b_) * p_ + c_; }
    static HeisenbergElement from_index(unsigned p, unsigned idx) {
        return {p, idx / (p * p), (idx / p) % p, idx % p};
    }

private:
    unsigned p_;
    unsigned a_, b_, c_;

    static unsigned mod(long long v, unsigned p) {
        const long long m = v % static_cast<long long>(p);
        return static_cast<unsigned>(m < 0 ? m + p : m);
    }
};

// Representation-theoretic profile of a finite group, with the irreducible
// dimension multiset pinned down by counting constraints alone.
struct GroupProfile {
    unsigned p = 0;
    unsigned long order = 0;
    unsigned long num_classes = 0;
    unsigned long center_size = 0;
    unsigned long derived_size = 0;
    unsigned long num_linear = 0;
    std::vector<unsigned long> irrep_dims; // ascending
    unsigned long uniqueness_candidates_examined = 0;
    bool multiset_unique = false;
    bool derived_equals_center = false;
};

namespace detail {

// All multisets of p-power dimensions with the given size and sum of
// squares. Returns the number of candidate multisets examined and appends
// each solution found.
inline void enumerate_dim_multisets(const std::vector<unsigned long>& powers,
                                    std::size_t next, unsigned long slots,
                                    unsigned long budget,
                                    std::vector<unsigned long>& counts,
                                    std::vector<std::vector<unsigned long>>& solutions,
                                    unsigned long& examined) {
    if (next == powers.size()) {
        ++examined;
        if (slots == 0 && budget == 0)
            solutions.push_back(counts);
        return;
    }
    const unsigned long sq = powers[next] * powers[next];
    for (unsigned long take = 0; take <= slots && take * sq <= budget; ++take) {
        counts[next] = take;
        enumerate_dim_multisets(powers, next + 1, slots - take, budget - take * sq,
                                counts, solutions, examined);
    }
    counts[next] = 0;
}

} // namespace detail

// Brute-force profile of the mod-p Heisenberg group: enumerate all p^3
// elements, compute conjugacy classes by orbit, center and derived subgroup
// by exhaustive search, then solve for the irreducible dimension multiset.
inline GroupProfile heisenberg_profile(unsigned p) {
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw std::invalid_argument("heisenberg_profile: p must be one of 2, 3, 5, 7");

    GroupProfile profile;
    profile.p = p;
    const unsigned long order = static_cast<unsigned long>(p) * p * p;
    profile.order = order;

    std::vector<HeisenbergElement> elems;
    elems.reserve(order);
    for (unsigned idx = 0; idx < order; ++idx)
        elems.push_back(HeisenbergElement::from_index(p, idx));

    // Conjugacy classes by orbit sweep.
    std::vector<bool> assigned(order, false);
    for (unsigned idx = 0; idx < order; ++idx) {
        if (assigned[idx])
            continue;
        ++profile.num_classes;
        for (const auto& g : elems) {
            const HeisenbergElement conj = g * elems[idx] * g.inverse();
            assigned[conj.index()] = true;
        }
    }

    // Center: elements commuting with everything.
    std::set<unsigned> center;
    for (const auto& z : elems) {
        bool central = true;
        for (const auto& g : elems) {
            if (z * g != g * z) {
                central = false;
                break;
            }
        }
        if (central)
            center.insert(z.index());
    }
    profile.center_size = center.size();

    // Derived subgroup: close the set of commutators under multiplication.
    std::set<unsigned> derived;
    for (const auto& x : elems)
        for (const auto& y : elems)
            derived.insert((x * y * x.inverse() * y.inverse()).index());
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<unsigned> current(derived.begin(), derived.end());
        for (unsigned i : current)
            for (unsigned j : current) {
                const unsigned k = (HeisenbergElement::from_index(p, i) *
                                    HeisenbergElement::from_index(p, j))
                                       .index();
                if (derived.insert(k).second)
                    grew = true;
            }
    }
    profile.derived_size = derived.size();
    profile.derived_equals_center = derived == center;

    // Linear characters factor through the abelianization.
    profile.num_linear = order / profile.derived_size;

    // Solve for the dimension multiset: p-power entries, one per class,
    // squares summing to the order. Uniqueness is established by exhausting
    // every candidate multiset, then the solution must also show exactly
    // num_linear ones.
    std::vector<unsigned long> powers;
    for (unsigned long d = 1; d * d <= order; d *= p)
        powers.push_back(d);
    std::vector<unsigned long> counts(powers.size(), 0);
    std::vector<std::vector<unsigned long>> solutions;
    detail::enumerate_dim_multisets(powers, 0, profile.num_classes, order, counts,
                                    solutions, profile.uniqueness_candidates_examined);
    profile.multiset_unique = solutions.size() == 1;
    if (!profile.multiset_unique)
        throw std::logic_error("heisenberg_profile: dimension multiset not unique");
    if (solutions.front().front() != profile.num_linear)
        throw std::logic_error("heisenberg_profile: linear count mismatch");
    for (std::size_t i = 0; i < powers.size(); ++i)
        profile.irrep_dims.insert(profile.irrep_dims.end(), solutions.front()[i],
                                  powers[i]);
    return profile;
}

// Minimal dimension of an irreducible representation acting nontrivially on
// the center, read off the profile: linear characters kill the derived
// subgroup, the derived subgroup equals the center, and all nonlinear
// dimensions coincide.
inline unsigned long birkhoff_min_dim(unsigned p) {
    const GroupProfile profile = heisenberg_profile(p);
    if (!profile.derived_equals_center)
        throw std::logic_error("birkhoff_min_dim: derived subgroup differs from center");
    unsigned long min_nonlinear = 0;
    for (unsigned long d : profile.irrep_dims) {
        if (d == 1)
            continue;
        if (min_nonlinear == 0 || d < min_nonlinear)
            min_nonlinear = d;
        if (d != profile.irrep_dims.back())
            throw std::logic_error("birkhoff_min_dim: nonlinear dimensions differ");
    }
    if (min_nonlinear == 0)
        throw std::logic_error("birkhoff_min_dim: no nonlinear dimension found");
    return min_nonlinear;
}

} // namespace cremona
