#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/fingroup.hpp"

namespace cayley {

inline constexpr std::size_t kDefaultStateBudget = 1'000'000;

/// Letter-to-letter transducer over the alphabet 0..alphabet-1.
/// delta and lambda are state_count x alphabet arrays, row-major.
struct MealyMachine {
    int alphabet = 0;
    std::vector<int32_t> delta;
    std::vector<int32_t> lambda;
    std::vector<std::string> state_labels;  // optional; empty for synthetic machines

    int state_count() const { return alphabet == 0 ? 0 : static_cast<int>(delta.size()) / alphabet; }
    int32_t d(int q, int a) const { return delta[static_cast<std::size_t>(q) * alphabet + a]; }
    int32_t l(int q, int a) const { return lambda[static_cast<std::size_t>(q) * alphabet + a]; }

    /// Invertible iff every state's output row is a permutation of the
    /// alphabet; returns the first bad state in *witness otherwise.
    bool invertible(int* witness = nullptr) const;
};

using MachinePtr = std::shared_ptr<const MealyMachine>;

/// Machine plus a designated initial state: one tree automorphism.
struct PointedMachine {
    MachinePtr machine;
    int initial = 0;

    int alphabet() const { return machine->alphabet; }
};

/// States = alphabet = elements of G; both transition and output are the
/// group multiplication: d(q,a) = l(q,a) = q*a.
MachinePtr cayley_machine(const FiniteGroup& g);

/// General inverse of an invertible machine: l'(q,.) = l(q,.)^-1 and
/// d'(q,a) = d(q, l'(q,a)). For a Cayley machine this is the reset
/// automaton that maps state q, input a to output q^-1 a, next state a.
/// Throws NotInvertible with the witness state.
MachinePtr invert(const MealyMachine& m);
PointedMachine invert(const PointedMachine& p);

/// Pointed product: B acts on input words first, then A.
/// States are the pairs reachable from (A.initial, B.initial); throws
/// StateBudgetExceeded when more than state_budget pairs appear.
PointedMachine compose(const PointedMachine& a, const PointedMachine& b,
                       std::size_t state_budget = kDefaultStateBudget);

/// Moore-style partition refinement on the reachable part; the result is
/// behaviorally equivalent to p on every word and has no two equivalent
/// states. Class numbering follows first occurrence, so the output is
/// deterministic.
PointedMachine minimize(const PointedMachine& p);

/// Runs the machine; output word has the same length.
std::vector<int> act(const PointedMachine& p, std::span<const int> word);

/// Exact equality of the induced tree automorphisms (partition refinement
/// over the disjoint union of the two machines).
bool equal(const PointedMachine& p, const PointedMachine& q);

/// True iff every state reachable from the initial one outputs its input.
bool is_identity(const PointedMachine& p);

/// Depth-1 automorphism sending the first letter a to g*a and fixing the
/// rest; the direct construction of the embedded copy of g.
PointedMachine embedded_element(const FiniteGroup& g, int elem);

PointedMachine identity_machine(int alphabet);

/// x = inverse Cayley machine pointed at the identity state.
PointedMachine x_machine(const FiniteGroup& g);

/// Cayley machine pointed at state g.
PointedMachine state_generator(const FiniteGroup& g, int elem);

/// One line per (state, letter): `state | input -> output / next-state`.
/// Pointed dumps are prefixed with an `initial:` line.
std::string dump(const MealyMachine& m, const std::vector<std::string>& alphabet_labels);
std::string dump(const PointedMachine& p, const std::vector<std::string>& alphabet_labels);

}  // namespace cayley
