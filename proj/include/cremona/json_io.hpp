#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cremona/certificates.hpp"
#include "cremona/elementary.hpp"
#include "cremona/finite_obstruction.hpp"
#include "cremona/jonquieres.hpp"
#include "cremona/poly.hpp"
#include "cremona/rat.hpp"
#include "cremona/ratfunc.hpp"
#include "cremona/words.hpp"

// JSON bindings. Objects keep nlohmann's sorted-key layout so output is
// stable; rationals are always decimal strings "p/q" (bare "p" for
// integers), never floats.
namespace cremona {

using nlohmann::json;

inline void to_json(json& j, const Rat& r) { j = r.str(); }
inline void from_json(const json& j, Rat& r) {
    r = Rat::from_string(j.get<std::string>());
}

inline void to_json(json& j, const Poly& p) {
    j = json::array();
    if (p.is_zero()) {
        j.push_back("0");
        return;
    }
    for (const Rat& c : p.coeffs())
        j.push_back(c.str());
}
inline void from_json(const json& j, Poly& p) {
    std::vector<Rat> coeffs;
    for (const auto& c : j)
        coeffs.push_back(Rat::from_string(c.get<std::string>()));
    p = Poly(std::move(coeffs));
}

inline void to_json(json& j, const RatFunc& f) {
    j = json{{"num", f.num()}, {"den", f.den()}};
}
inline void from_json(const json& j, RatFunc& f) {
    f = RatFunc(j.at("num").get<Poly>(), j.at("den").get<Poly>());
}

inline void to_json(json& j, const JonqElement& e) {
    j = json{{"t", e.t()}, {"g", e.g()}, {"f", e.f()}};
}
inline void from_json(const json& j, JonqElement& e) {
    e = JonqElement(j.at("t").get<Rat>(), j.at("g").get<RatFunc>(),
                    j.at("f").get<RatFunc>());
}

inline void to_json(json& j, const Word& w) {
    j = json::array();
    for (const auto& l : w.letters())
        j.push_back(json{{"gen", l.gen}, {"exp", l.exp}});
}
inline void from_json(const json& j, Word& w) {
    w = Word();
    for (const auto& l : j)
        w = w * Word::letter(l.at("gen").get<std::string>(),
                             l.at("exp").get<long long>());
}

inline void to_json(json& j, const WitnessPair& w) {
    j = json{{"word", w.word}, {"value", w.value}};
}
inline void from_json(const json& j, WitnessPair& w) {
    w.word = j.at("word").get<Word>();
    w.value = j.at("value").get<JonqElement>();
}

inline void to_json(json& j, const CheckRecord& r) {
    j = json{{"name", r.name}, {"trials", r.trials}, {"passed", r.passed}};
}
inline void from_json(const json& j, CheckRecord& r) {
    r.name = j.at("name").get<std::string>();
    r.trials = j.at("trials").get<unsigned>();
    r.passed = j.at("passed").get<bool>();
}

inline void to_json(json& j, const ClassCertificate& c) {
    json filt = json::array();
    for (const auto& [jj, verified] : c.filtration_checks)
        filt.push_back(json{{"j", jj}, {"verified", verified}});
    j = json{{"type", "gamma_class"},
             {"n", c.n},
             {"claimed_class", c.claimed_class},
             {"env", c.env},
             {"lower_witness", c.lower_witness},
             {"vanishing_witness", c.vanishing_witness},
             {"filtration_checks", filt},
             {"seed", c.seed},
             {"upper_checks", c.upper_checks},
             {"verdict", c.verdict}};
}
inline void from_json(const json& j, ClassCertificate& c) {
    c.n = j.at("n").get<unsigned>();
    c.claimed_class = j.at("claimed_class").get<unsigned>();
    c.env = j.at("env").get<Assignment>();
    c.lower_witness = j.at("lower_witness").get<WitnessPair>();
    c.vanishing_witness = j.at("vanishing_witness").get<WitnessPair>();
    c.filtration_checks.clear();
    for (const auto& f : j.at("filtration_checks"))
        c.filtration_checks.emplace_back(f.at("j").get<unsigned>(),
                                         f.at("verified").get<bool>());
    c.seed = j.at("seed").get<std::uint64_t>();
    c.upper_checks = j.at("upper_checks").get<std::vector<CheckRecord>>();
    c.verdict = j.at("verdict").get<bool>();
}

inline void to_json(json& j, const SolvabilityCertificate& c) {
    j = json{{"type", "derived_length"},
             {"claimed_derived_length", c.claimed_derived_length},
             {"env", c.env},
             {"upper_checks", c.upper_checks},
             {"lower_witness", c.lower_witness},
             {"seed", c.seed},
             {"verdict", c.verdict}};
}
inline void from_json(const json& j, SolvabilityCertificate& c) {
    c.claimed_derived_length = j.at("claimed_derived_length").get<unsigned>();
    c.env = j.at("env").get<Assignment>();
    c.upper_checks = j.at("upper_checks").get<std::vector<CheckRecord>>();
    c.lower_witness = j.at("lower_witness").get<WitnessPair>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.verdict = j.at("verdict").get<bool>();
}

inline void to_json(json& j, const NonlinearityRow& r) {
    j = json{{"n", r.n},
             {"class", r.nilpotency_class},
             {"dim_lower_bound", r.dim_lower_bound}};
}

inline void to_json(json& j, const TorsionCheck& t) {
    j = json{{"element", t.element}, {"infinite_order", t.infinite_order}};
}

inline void to_json(json& j, const NonlinearityReport& r) {
    j = json{{"type", "nonlinearity"},
             {"max_n", r.max_n},
             {"rows", r.rows},
             {"charp_nonabelian_witness", r.nonabelian_witness},
             {"charp_nonabelian_env", r.nonabelian_env},
             {"charp_torsion_checks", r.torsion_checks},
             {"verdict", r.verdict}};
}

inline void to_json(json& j, const GroupProfile& p) {
    j = json{{"p", p.p},
             {"order", p.order},
             {"num_classes", p.num_classes},
             {"center_size", p.center_size},
             {"derived_size", p.derived_size},
             {"num_linear", p.num_linear},
             {"irrep_dims", p.irrep_dims},
             {"uniqueness_candidates_examined", p.uniqueness_candidates_examined},
             {"multiset_unique", p.multiset_unique},
             {"derived_equals_center", p.derived_equals_center}};
}

inline void to_json(json& j, const RatMatrix& m) {
    j = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.dim(); ++k)
            row.push_back(m.at(i, k).str());
        j.push_back(std::move(row));
    }
}

inline void to_json(json& j, const Linearization& lin) {
    j = json{{"basis_degree", lin.basis_degree},
             {"dim", lin.dim},
             {"matrices", lin.matrices}};
}

} // namespace cremona
