#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cremona/rat.hpp"

// Reference computations used for cross-checking. Everything here works on
// raw ascending coefficient vectors and deliberately shares no code with the
// polynomial kernel: shifts go through explicit binomial expansion, not
// composition. Nothing in the kernel includes this header.
namespace cremona::reference {

inline void trim(std::vector<Rat>& c) {
    while (!c.empty() && c.back().is_zero())
        c.pop_back();
}

// Pascal's triangle up to row n.
inline std::vector<std::vector<BigInt>> binomial_table(std::size_t n) {
    std::vector<std::vector<BigInt>> t(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        t[i].resize(i + 1);
        t[i][0] = t[i][i] = 1;
        for (std::size_t j = 1; j < i; ++j)
            t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
}

// Coefficients of P(X - t): expand each c_k (X - t)^k = c_k sum_j C(k,j) X^j (-t)^{k-j}.
inline std::vector<Rat> shift_coeffs(const std::vector<Rat>& coeffs, const Rat& t) {
    std::vector<Rat> out(coeffs.size(), Rat(0));
    if (coeffs.empty())
        return out;
    auto binom = binomial_table(coeffs.size() - 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero())
            continue;
        Rat power(1); // (-t)^{k-j}, built from j = k downward
        for (std::size_t j = k + 1; j-- > 0;) {
            out[j] += coeffs[k] * Rat(binom[k][j]) * power;
            power *= -t;
        }
    }
    trim(out);
    return out;
}

// Delta P = -P(X) + P(X - 1), via the binomial shift above.
inline std::vector<Rat> delta_coeffs(const std::vector<Rat>& coeffs) {
    std::vector<Rat> out = shift_coeffs(coeffs, Rat(1));
    out.resize(std::max(out.size(), coeffs.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out[i] -= coeffs[i];
    trim(out);
    return out;
}

inline std::vector<Rat> delta_iter_coeffs(std::vector<Rat> coeffs, unsigned k) {
    for (unsigned i = 0; i < k; ++i)
        coeffs = delta_coeffs(coeffs);
    return coeffs;
}

inline std::vector<Rat> xpow_coeffs(unsigned n) {
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = Rat(1);
    return c;
}

inline Rat factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return Rat(f);
}

// Smallest d in 1..c with d*d >= c, by linear scan.
inline unsigned min_dim_brute_force(unsigned c) {
    if (c < 1)
        throw std::invalid_argument("min_dim_brute_force: c must be >= 1");
    for (unsigned d = 1; d <= c; ++d)
        if (d * d >= c)
            return d;
    return c;
}

} // namespace cremona::reference
