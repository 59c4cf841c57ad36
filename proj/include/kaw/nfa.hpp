#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kaw/expr.hpp"

namespace kaw {

/// Non-deterministic finite automaton with indexed states. delta is total on
/// states x used-alphabet in the sense that a missing entry is the empty set.
struct Nfa {
    std::vector<std::string> labels;
    std::vector<std::map<Letter, std::set<int>>> delta;
    std::set<int> initials;
    std::set<int> finals;

    int num_states() const { return static_cast<int>(labels.size()); }

    int add_state(const std::string& label);
    void add_transition(int from, Letter a, int to);

    /// Letters that occur on some transition.
    std::set<Letter> alphabet() const;

    bool operator==(const Nfa& other) const = default;
};

/// Binary relation on the state set of an automaton with num_states states.
struct StateRelation {
    int num_states = 0;
    std::set<std::pair<int, int>> pairs;

    bool operator==(const StateRelation& other) const = default;
    bool operator<(const StateRelation& other) const {
        if (num_states != other.num_states) return num_states < other.num_states;
        return pairs < other.pairs;
    }
};

StateRelation identity_relation(int num_states);

/// Relational composition; throws std::invalid_argument on mismatched base.
StateRelation compose(const StateRelation& r1, const StateRelation& r2);

/// The relation of single a-steps: {(q, q') : q' in delta(q, a)}.
StateRelation step_relation(const Nfa& a, Letter letter);

/// Fold of step relations over w; the empty word gives the identity.
StateRelation word_relation(const Nfa& a, const Word& w);

/// True iff word_relation(a, w) relates some initial to some final state.
bool accepts(const Nfa& a, const Word& w);

/// Antimirov automaton of e: states are reachset(e) in canonical order
/// (including derive-unreachable members), transitions from derive, initial
/// states from initials(e), finals the nullable states.
Nfa antimirov_automaton(const Expr& e);

/// Index of the state labelled with e's printed form, if present.
std::optional<int> state_of(const Nfa& a, const Expr& e);

struct SubsetVerdict {
    bool holds = false;
    Word counterexample;  // shortest, lexicographically least; valid if !holds
};

enum class Side { left, right };

struct EquivVerdict {
    bool holds = false;
    Word counterexample;       // valid if !holds
    Side side = Side::left;    // which language owns the counterexample
};

/// Decides L(a1) subseteq L(a2) by breadth-first exploration of pairs of
/// determinization subsets, built on the fly. A counterexample is the
/// shortest word in L(a1) \ L(a2), ties broken lexicographically.
SubsetVerdict language_subset(const Nfa& a1, const Nfa& a2);

/// Decides L(a1) = L(a2); a counterexample is a shortest separating word.
EquivVerdict language_equiv(const Nfa& a1, const Nfa& a2);

std::string to_json(const Nfa& a);
Nfa nfa_from_json(const std::string& text);
std::string to_dot(const Nfa& a);

}  // namespace kaw
