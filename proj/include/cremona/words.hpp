#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cremona/jonquieres.hpp"

namespace cremona {

// Binding of generator names to group elements.
using Assignment = std::map<std::string, JonqElement>;

struct Letter {
    std::string gen;
    long long exp;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
};

// Formal word over named generators with integer exponents, kept freely
// reduced: no adjacent letters share a generator, no zero exponents.
// Generators stay symbolic; elements are substituted only at evaluation.
class Word {
public:
    Word() = default;

    static Word letter(std::string gen, long long exp = 1) {
        Word w;
        if (exp != 0)
            w.letters_.push_back({std::move(gen), exp});
        return w;
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    friend Word operator*(const Word& a, const Word& b) {
        Word w(a);
        for (const auto& l : b.letters_)
            w.push_reduced(l);
        return w;
    }

    Word inverse() const {
        Word w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back({it->gen, -it->exp});
        return w;
    }

    Word pow(long long e) const {
        Word base = e < 0 ? inverse() : *this;
        long long k = e < 0 ? -e : e;
        Word r;
        for (long long i = 0; i < k; ++i)
            r = r * base;
        return r;
    }

    friend bool operator==(const Word& a, const Word& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

    // Left-to-right composition of the bound elements.
    JonqElement evaluate(const Assignment& env) const {
        JonqElement acc;
        for (const auto& l : letters_) {
            auto it = env.find(l.gen);
            if (it == env.end())
                throw std::invalid_argument("unbound generator: " + l.gen);
            acc = acc * it->second.pow(l.exp);
        }
        return acc;
    }

    std::string str() const {
        if (letters_.empty())
            return "1";
        std::string out;
        for (const auto& l : letters_) {
            if (!out.empty())
                out += "*";
            out += l.gen;
            if (l.exp != 1)
                out += "^" + std::to_string(l.exp);
        }
        return out;
    }

private:
    std::vector<Letter> letters_;

    // Appends one letter, merging with the top and cascading cancellations.
    void push_reduced(const Letter& l) {
        if (l.exp == 0)
            return;
        if (!letters_.empty() && letters_.back().gen == l.gen) {
            letters_.back().exp += l.exp;
            if (letters_.back().exp == 0)
                letters_.pop_back();
            return;
        }
        letters_.push_back(l);
    }
};

// Rebuilds a word through the reducing concatenation; idempotent, and
// evaluation is invariant under it.
inline Word reduce(const Word& w) {
    Word r;
    for (const auto& l : w.letters())
        r = r * Word::letter(l.gen, l.exp);
    return r;
}

// [u, v] = u v u^-1 v^-1.
inline Word commutator(const Word& u, const Word& v) {
    return u * v * u.inverse() * v.inverse();
}

// [u, [u, ... , [u, v] ... ]] with k copies of u; k >= 1.
inline Word iterated_commutator(const Word& u, const Word& v, unsigned long k) {
    if (k == 0)
        throw std::invalid_argument("iterated_commutator: k must be >= 1");
    Word w = commutator(u, v);
    for (unsigned long i = 1; i < k; ++i)
        w = commutator(u, w);
    return w;
}

} // namespace cremona
