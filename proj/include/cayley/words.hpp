#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cayley/fingroup.hpp"
#include "cayley/mealy.hpp"

namespace cayley {

/// Letters of a generator word: the tree generator x, an embedded group
/// element, or a machine generator C(g) (the Cayley machine pointed at g).
enum class LetterKind { X, Embedded, StateGen };

struct Letter {
    LetterKind kind = LetterKind::X;
    int elem = -1;       // group element index; unused for X
    long long exp = 1;   // nonzero

    friend bool operator==(const Letter&, const Letter&) = default;
};

struct GenWord {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    friend bool operator==(const GenWord&, const GenWord&) = default;
};

/// Grammar (whitespace-separated tokens):
///   word   := empty | token (SPACE+ token)*
///   token  := base ("^" int)?
///   base   := "x" | "C(" label ")" | label
///   int    := "-"? [0-9]+          (zero rejected)
/// Throws SyntaxError (1-based position), UnknownLabel, ZeroExponent.
GenWord parse(const std::string& text, const FiniteGroup& g);

/// Inverse of parse up to canonical spacing; parse(format(w)) == w.
std::string format(const GenWord& w, const FiniteGroup& g);

/// One factor x^level * elem * x^-level of the rewritten word.
struct ConjugateFactor {
    long long level = 0;
    int elem = 0;

    friend bool operator==(const ConjugateFactor&, const ConjugateFactor&) = default;
};

/// The word rewritten over {x^±1} union G with all x-powers pushed to the
/// right: (product of conjugate factors, in word order) * x^t. Identity
/// elements are dropped; levels are not yet sorted.
struct ConjugateSequence {
    std::vector<ConjugateFactor> factors;
    long long t = 0;
};

ConjugateSequence to_conjugates(const GenWord& w, const FiniteGroup& g);

/// Cache of conjugate-block machines x^n g x^-n keyed by (n, elem);
/// pure memoization, shared across many word builds of one group.
struct MachineCache {
    std::map<std::pair<long long, int>, PointedMachine> blocks;
};

/// Pointed product of the letters' machines, rightmost letter acting on
/// input words first: x -> inverse Cayley pointed at the identity state,
/// C(g) -> Cayley pointed at g, embedded g -> the product x*C(g); negative
/// exponents via pointed inversion. The association order groups letters
/// at zero crossings of the running x-exponent and peels conjugate
/// sandwiches, which keeps intermediate products small; the result is the
/// same transformation regardless.
PointedMachine to_machine(const GenWord& w, const FiniteGroup& g,
                          std::size_t state_budget = kDefaultStateBudget,
                          MachineCache* cache = nullptr);

/// Applies the word to an input word by running the letter machines in
/// cascade (rightmost first) without building any product machine.
std::vector<int> act_word(const GenWord& w, const FiniteGroup& g, std::span<const int> input);

/// Reversed letters with negated exponents; represents the group inverse.
GenWord inverse_word(const GenWord& w);

GenWord concat(const GenWord& a, const GenWord& b);

/// x^level g x^-level ... x^t as explicit tokens; the conjugate-sequence
/// expansion used by round-trip checks.
GenWord expand_conjugates(const ConjugateSequence& c);

}  // namespace cayley
