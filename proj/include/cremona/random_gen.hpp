#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cremona/jonquieres.hpp"
#include "cremona/poly.hpp"
#include "cremona/rat.hpp"
#include "cremona/ratfunc.hpp"
#include "cremona/words.hpp"

namespace cremona {

// Deterministic generator for random kernel values. Draws come from
// mt19937_64 reduced by modulo, so a seed reproduces the same stream on
// every platform. Default bounds: degrees <= 4, |numerator| and
// denominator <= 20.
class Rng {
public:
    static constexpr std::uint64_t kDefaultSeed = 42;

    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

    long long range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool flip() { return below(2) == 1; }

    Rat rat(long long max_num = 20, long long max_den = 20) {
        return Rat(range(-max_num, max_num), range(1, max_den));
    }

    Rat nonzero_rat(long long max_num = 20, long long max_den = 20) {
        for (;;) {
            Rat r = rat(max_num, max_den);
            if (!r.is_zero())
                return r;
        }
    }

    Rat small_rat() { return rat(5, 5); }

    Poly poly(long max_deg = 4, long long max_num = 20, long long max_den = 20) {
        const long deg = static_cast<long>(below(static_cast<std::uint64_t>(max_deg + 1)));
        std::vector<Rat> c(static_cast<std::size_t>(deg) + 1, Rat(0));
        for (auto& x : c)
            x = rat(max_num, max_den);
        return Poly(std::move(c));
    }

    Poly nonzero_poly(long max_deg = 4) {
        for (;;) {
            Poly p = poly(max_deg);
            if (!p.is_zero())
                return p;
        }
    }

    // Polynomial of exactly the given degree.
    Poly poly_of_degree(long deg) {
        Poly p = poly(deg);
        if (p.coeff(static_cast<std::size_t>(deg)).is_zero())
            p += Poly::monomial(static_cast<std::size_t>(deg), nonzero_rat());
        return p;
    }

    RatFunc ratfunc(long max_deg = 4) {
        return RatFunc(poly(max_deg), nonzero_poly(max_deg));
    }

    RatFunc nonzero_ratfunc(long max_deg = 4) {
        for (;;) {
            RatFunc r = ratfunc(max_deg);
            if (!r.is_zero())
                return r;
        }
    }

    JonqElement jonq_element(long max_deg = 4) {
        return JonqElement(small_rat(), nonzero_ratfunc(max_deg), ratfunc(max_deg));
    }

    // Random word over the given generator names, with exponents in
    // [-max_exp, max_exp] \ {0}.
    Word word(const std::vector<std::string>& gens, std::size_t max_len = 4,
              long long max_exp = 2) {
        const std::size_t len = 1 + below(max_len);
        Word w;
        for (std::size_t i = 0; i < len; ++i) {
            long long e = range(1, max_exp);
            if (flip())
                e = -e;
            w = w * Word::letter(gens[below(gens.size())], e);
        }
        return w;
    }

    // Multiplier of the form prod (X - i)^{k_i} over integer nodes
    // i in [-3, 3], exponents k_i in [-2, 2], not all zero.
    RatFunc integer_node_multiplier() {
        for (;;) {
            Poly num(Rat(1)), den(Rat(1));
            bool nontrivial = false;
            for (long long i = -3; i <= 3; ++i) {
                const long long k = range(-2, 2);
                if (k == 0)
                    continue;
                nontrivial = true;
                const Poly lin({Rat(-i), Rat(1)}); // X - i
                if (k > 0)
                    num *= lin.pow(static_cast<unsigned long>(k));
                else
                    den *= lin.pow(static_cast<unsigned long>(-k));
            }
            if (nontrivial)
                return RatFunc(num, den);
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace cremona
