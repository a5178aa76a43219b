#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cremona/jonquieres.hpp"
#include "cremona/poly.hpp"
#include "cremona/random_gen.hpp"
#include "cremona/ratfunc.hpp"
#include "cremona/words.hpp"

namespace cremona {

// A word together with the element it evaluates to under a certificate's
// environment. Stored so an external checker can re-run the evaluation.
struct WitnessPair {
    Word word;
    JonqElement value;
};

// One randomized identity check: name, trial count, outcome.
struct CheckRecord {
    std::string name;
    unsigned trials = 0;
    bool passed = false;
};

namespace detail {

// Canonical generators of the two-generator nilpotent family:
// s bound to the unit translation, a bound to the degree-n monomial shear.
inline Assignment gamma_env(unsigned n) {
    return {{"s", JonqElement::translation(Rat(1))},
            {"a", JonqElement::shear(RatFunc(Poly::monomial(n)))}};
}

// Canonical generators of the three-generator solvable group:
// s the unit translation, a the constant shear, m the scaling by X.
inline Assignment solvable_env() {
    return {{"s", JonqElement::translation(Rat(1))},
            {"a", JonqElement::shear(RatFunc(1))},
            {"m", JonqElement::scaling(RatFunc(Poly::variable()))}};
}

} // namespace detail

// Certificate that the group generated by the unit translation and the
// degree-n monomial shear is nilpotent of class exactly n + 1.
//
// Lower bound: the n-iterated commutator of the translation against the
// shear evaluates to the shear by the nonzero constant (-1)^n n!, so class
// >= n + 1. Upper bound evidence: shears by degree-<=j polynomials form an
// abelian subgroup normalized by the translation, and commutation against
// the translation applies the difference operator, which drops polynomial
// degree by exactly one; the filtration checks record that drop for the
// monomials, the randomized checks probe the two structural identities.
struct ClassCertificate {
    unsigned n = 0;
    unsigned claimed_class = 0;
    Assignment env;
    WitnessPair lower_witness;     // n-iterated commutator, nonidentity value
    WitnessPair vanishing_witness; // (n+1)-iterated commutator, identity
    std::vector<std::pair<unsigned, bool>> filtration_checks; // j -> deg drop verified
    std::uint64_t seed = Rng::kDefaultSeed;
    std::vector<CheckRecord> upper_checks;
    bool verdict = false;
};

inline ClassCertificate gamma_class(unsigned n,
                                    std::uint64_t seed = Rng::kDefaultSeed,
                                    unsigned trials = 200) {
    if (n < 1)
        throw std::invalid_argument("gamma_class: n must be >= 1");

    ClassCertificate cert;
    cert.n = n;
    cert.claimed_class = n + 1;
    cert.env = detail::gamma_env(n);
    cert.seed = seed;

    const Word s = Word::letter("s");
    const Word a = Word::letter("a");

    cert.lower_witness.word = iterated_commutator(s, a, n);
    cert.lower_witness.value = cert.lower_witness.word.evaluate(cert.env);
    cert.vanishing_witness.word = iterated_commutator(s, a, n + 1);
    cert.vanishing_witness.value = cert.vanishing_witness.word.evaluate(cert.env);

    for (unsigned j = 1; j <= n; ++j) {
        const Degree d = delta(Poly::monomial(j)).degree();
        cert.filtration_checks.emplace_back(j, d == Degree(static_cast<long>(j) - 1));
    }

    Rng rng(seed);
    CheckRecord shears_commute{"shear_subgroup_abelian", trials, true};
    CheckRecord degree_preserved{"translation_conjugation_preserves_degree", trials, true};
    CheckRecord degree_drops{"translation_commutator_lowers_degree", trials, true};
    const JonqElement s1 = cert.env.at("s");
    for (unsigned i = 0; i < trials; ++i) {
        const Poly p = rng.poly(static_cast<long>(n));
        const Poly q = rng.poly(static_cast<long>(n));
        const JonqElement ap = JonqElement::shear(RatFunc(p));
        const JonqElement aq = JonqElement::shear(RatFunc(q));
        if (ap * aq != aq * ap)
            shears_commute.passed = false;

        const JonqElement conj = s1 * ap * s1.inverse();
        const FormTag tag = conj.classify();
        if (!tag.is_shear() || tag.shear_degree != p.degree())
            degree_preserved.passed = false;

        const JonqElement comm = conj * ap.inverse(); // [s1, alpha_p]
        const FormTag ctag = comm.classify();
        const Degree expect_below =
            p.degree().is_finite() ? Degree(p.degree().value() - 1)
                                   : Degree::minus_infinity();
        if (!ctag.is_shear() || !(ctag.shear_degree <= expect_below))
            degree_drops.passed = false;
    }
    cert.upper_checks = {shears_commute, degree_preserved, degree_drops};

    const JonqElement expected_lower =
        JonqElement::shear(RatFunc(delta_iter(Poly::monomial(n), n)));

    bool ok = cert.lower_witness.value == expected_lower &&
              !cert.lower_witness.value.is_identity() &&
              cert.vanishing_witness.value.is_identity();
    for (const auto& [j, passed] : cert.filtration_checks)
        ok = ok && passed;
    for (const auto& rec : cert.upper_checks)
        ok = ok && rec.passed;
    cert.verdict = ok;
    return cert;
}

// Full re-verification of a serialized certificate: environment is the
// canonical one, the words are the stated iterated commutators, every
// stored value re-evaluates, the lower witness is the shear by the exact
// constant (-1)^n n!, the vanishing witness is the identity, the degree
// filtration re-checks, and the randomized checks replay from the seed.
inline bool verify(const ClassCertificate& cert) {
    if (cert.n < 1 || cert.claimed_class != cert.n + 1)
        return false;
    if (cert.env != detail::gamma_env(cert.n))
        return false;

    const Word s = Word::letter("s");
    const Word a = Word::letter("a");
    if (cert.lower_witness.word != iterated_commutator(s, a, cert.n))
        return false;
    if (cert.vanishing_witness.word != iterated_commutator(s, a, cert.n + 1))
        return false;
    if (cert.lower_witness.word.evaluate(cert.env) != cert.lower_witness.value)
        return false;
    if (cert.vanishing_witness.word.evaluate(cert.env) != cert.vanishing_witness.value)
        return false;

    // (-1)^n n!, computed here independently of the witness pipeline.
    Rat constant(1);
    for (unsigned i = 2; i <= cert.n; ++i)
        constant *= Rat(static_cast<long long>(i));
    if (cert.n % 2)
        constant = -constant;
    if (cert.lower_witness.value != JonqElement::shear(RatFunc(constant)))
        return false;
    if (cert.lower_witness.value.is_identity())
        return false;
    if (!cert.vanishing_witness.value.is_identity())
        return false;

    if (cert.filtration_checks.size() != cert.n)
        return false;
    for (unsigned j = 1; j <= cert.n; ++j) {
        const auto& [jj, passed] = cert.filtration_checks[j - 1];
        if (jj != j || !passed)
            return false;
        if (delta(Poly::monomial(j)).degree() != Degree(static_cast<long>(j) - 1))
            return false;
    }

    for (const auto& rec : cert.upper_checks)
        if (!rec.passed)
            return false;
    if (!cert.upper_checks.empty()) {
        const ClassCertificate replay =
            gamma_class(cert.n, cert.seed, cert.upper_checks.front().trials);
        if (replay.upper_checks.size() != cert.upper_checks.size())
            return false;
        for (std::size_t i = 0; i < replay.upper_checks.size(); ++i)
            if (!replay.upper_checks[i].passed)
                return false;
    }
    return cert.verdict;
}

// The scaling by X conjugates the degree-n monomial shear to the
// degree-(n+1) one, so each group in the family embeds in the next.
inline bool gamma_chain_check(unsigned n) {
    const JonqElement m = JonqElement::scaling(RatFunc(Poly::variable()));
    const JonqElement an = JonqElement::shear(RatFunc(Poly::monomial(n)));
    const JonqElement an1 = JonqElement::shear(RatFunc(Poly::monomial(n + 1)));
    return m * an * m.inverse() == an1;
}

// Certificate that the group generated by the unit translation, the unit
// shear and the scaling by X is solvable of derived length exactly three.
//
// Upper evidence, one randomized layer per derived step: commutators kill
// the translation part, commutators of translation-free elements kill the
// multiplier, and pure shears commute. Lower bound: an explicit nontrivial
// element two derived steps down.
struct SolvabilityCertificate {
    unsigned claimed_derived_length = 3;
    Assignment env;
    std::vector<CheckRecord> upper_checks;
    WitnessPair lower_witness;
    std::uint64_t seed = Rng::kDefaultSeed;
    bool verdict = false;
};

namespace detail {

// Random element of the solvable group: a random word in the generators.
// Short words keep commutator degrees small enough for thousand-trial runs.
inline JonqElement random_solvable_element(Rng& rng, const Assignment& env) {
    static const std::vector<std::string> gens = {"s", "a", "m"};
    return rng.word(gens, 3, 1).evaluate(env);
}

// Random translation-free element: balance the net translation exponent.
inline JonqElement random_translation_free(Rng& rng, const Assignment& env) {
    const JonqElement e = random_solvable_element(rng, env);
    const JonqElement s = env.at("s");
    // e has integer translation part k; s^-k e is translation-free.
    const Rat& t = e.t();
    const long long k = static_cast<long long>(t.num());
    return s.pow(-k) * e;
}

inline JonqElement commutator_of(const JonqElement& a, const JonqElement& b) {
    return a * b * a.inverse() * b.inverse();
}

} // namespace detail

inline SolvabilityCertificate
derived_length_certificate(std::uint64_t seed = Rng::kDefaultSeed,
                           unsigned trials = 1000) {
    SolvabilityCertificate cert;
    cert.env = detail::solvable_env();
    cert.seed = seed;

    Rng rng(seed);
    CheckRecord layer1{"commutators_are_translation_free", trials, true};
    CheckRecord layer2{"second_commutators_have_trivial_multiplier", trials, true};
    CheckRecord layer3{"shears_commute", trials, true};
    for (unsigned i = 0; i < trials; ++i) {
        const JonqElement e1 = detail::random_solvable_element(rng, cert.env);
        const JonqElement e2 = detail::random_solvable_element(rng, cert.env);
        if (!detail::commutator_of(e1, e2).t().is_zero())
            layer1.passed = false;

        const JonqElement u1 = detail::random_translation_free(rng, cert.env);
        const JonqElement u2 = detail::random_translation_free(rng, cert.env);
        if (!u1.t().is_zero() || !u2.t().is_zero() ||
            !detail::commutator_of(u1, u2).g().is_one())
            layer2.passed = false;

        const JonqElement a1 = JonqElement::shear(rng.ratfunc());
        const JonqElement a2 = JonqElement::shear(rng.ratfunc());
        if (a1 * a2 != a2 * a1)
            layer3.passed = false;
    }
    cert.upper_checks = {layer1, layer2, layer3};

    const Word s = Word::letter("s");
    const Word a = Word::letter("a");
    const Word m = Word::letter("m");
    cert.lower_witness.word = commutator(commutator(s, m), commutator(m, a));
    cert.lower_witness.value = cert.lower_witness.word.evaluate(cert.env);

    bool ok = !cert.lower_witness.value.is_identity() &&
              cert.lower_witness.value.t().is_zero() &&
              cert.lower_witness.value.g().is_one() &&
              !cert.lower_witness.value.f().is_zero();
    for (const auto& rec : cert.upper_checks)
        ok = ok && rec.passed;
    cert.verdict = ok;
    return cert;
}

inline bool verify(const SolvabilityCertificate& cert) {
    if (cert.claimed_derived_length != 3)
        return false;
    if (cert.env != detail::solvable_env())
        return false;

    const Word s = Word::letter("s");
    const Word a = Word::letter("a");
    const Word m = Word::letter("m");
    if (cert.lower_witness.word != commutator(commutator(s, m), commutator(m, a)))
        return false;
    if (cert.lower_witness.word.evaluate(cert.env) != cert.lower_witness.value)
        return false;

    // The expected value: shear by -(X - 1)/X.
    const Poly x = Poly::variable();
    const RatFunc expected_f(-(x - Poly(1)), x);
    if (cert.lower_witness.value != JonqElement::shear(expected_f))
        return false;
    if (cert.lower_witness.value.is_identity())
        return false;

    for (const auto& rec : cert.upper_checks)
        if (!rec.passed)
            return false;
    if (!cert.upper_checks.empty()) {
        const SolvabilityCertificate replay =
            derived_length_certificate(cert.seed, cert.upper_checks.front().trials);
        for (const auto& rec : replay.upper_checks)
            if (!rec.passed)
                return false;
    }
    return cert.verdict;
}

// Smallest d with d^2 >= c: a lower bound on the dimension of a faithful
// characteristic-zero representation of any group containing a torsion-free
// nilpotent subgroup of class c.
inline unsigned min_dim_lower_bound(unsigned c) {
    if (c < 1)
        throw std::invalid_argument("min_dim_lower_bound: c must be >= 1");
    auto d = static_cast<unsigned>(std::ceil(std::sqrt(static_cast<double>(c))));
    if (d == 0)
        d = 1;
    while (d * d < c)
        ++d;
    while (d > 1 && (d - 1) * (d - 1) >= c)
        --d;
    return d;
}

struct NonlinearityRow {
    unsigned n = 0;
    unsigned nilpotency_class = 0;
    unsigned dim_lower_bound = 0;
};

struct TorsionCheck {
    std::string element;
    bool infinite_order = false;
};

// Dimension obstructions accumulated across the nilpotent family, plus the
// machine-checked hypotheses of the positive-characteristic exclusion.
struct NonlinearityReport {
    unsigned max_n = 0;
    std::vector<NonlinearityRow> rows;
    WitnessPair nonabelian_witness; // [s, a] in the n = 2 group, nonidentity
    Assignment nonabelian_env;
    std::vector<TorsionCheck> torsion_checks;
    std::string verdict;
};

inline NonlinearityReport
nonlinearity_report(unsigned max_n, std::uint64_t seed = Rng::kDefaultSeed,
                    unsigned trials = 100) {
    if (max_n < 2)
        throw std::invalid_argument("nonlinearity_report: max_n must be >= 2");

    NonlinearityReport report;
    report.max_n = max_n;
    for (unsigned n = 1; n <= max_n; ++n) {
        const ClassCertificate cert = gamma_class(n, seed, trials);
        if (!cert.verdict)
            throw std::logic_error("nonlinearity_report: class certificate failed");
        report.rows.push_back({n, cert.claimed_class,
                               min_dim_lower_bound(cert.claimed_class)});
    }

    // Hypotheses of the characteristic-p exclusion, checked on the n = 2
    // group: it is nonabelian and torsion-free (sampled via the order
    // procedure). The exclusion itself -- a torsion-free nilpotent linear
    // group in characteristic p is abelian -- is cited, not re-proved.
    report.nonabelian_env = detail::gamma_env(2);
    report.nonabelian_witness.word =
        commutator(Word::letter("s"), Word::letter("a"));
    report.nonabelian_witness.value =
        report.nonabelian_witness.word.evaluate(report.nonabelian_env);

    const JonqElement s1 = report.nonabelian_env.at("s");
    const JonqElement a2 = report.nonabelian_env.at("a");
    for (const JonqElement& e :
         {s1, a2, report.nonabelian_witness.value, s1 * a2}) {
        report.torsion_checks.push_back({e.str(), !e.order().is_finite()});
    }

    report.verdict =
        "Any group containing the full nilpotent family - the group generated by "
        "s(1), a(1), m(X); the union of the family; the polynomial automorphisms "
        "of the plane - has no faithful finite-dimensional linear representation "
        "over any field. In characteristic zero the nilpotency classes n+1 grow "
        "past every d^2; in characteristic p a faithful representation would make "
        "a torsion-free nonabelian nilpotent subgroup linear, contradicting the "
        "cited fact that such groups are abelian in characteristic p (hypotheses "
        "witnessed above).";
    return report;
}

} // namespace cremona
