#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kaw/nfa.hpp"

namespace kaw {

inline constexpr size_t kDefaultMonoidBudget = 4096;

struct MonoidElement {
    StateRelation relation;
    Word witness;  // shortest word (shortlex) effecting the relation
};

/// The finite monoid of word relations of an automaton: the closure of the
/// identity under right-composition with the letter relations. Element 0 is
/// the identity; elements appear in breadth-first discovery order, so each
/// witness is shortlex-minimal.
struct TransitionMonoid {
    int num_states = 0;
    std::vector<MonoidElement> elements;
    std::map<Letter, int> generators;  // letter -> index of its step relation

    size_t size() const { return elements.size(); }
    std::optional<int> index_of(const StateRelation& r) const;

    /// Index of elements[i].relation composed with elements[j].relation;
    /// always defined because the element set is composition-closed.
    int compose_elements(int i, int j) const;

    std::set<Letter> alphabet() const;

private:
    friend TransitionMonoid transition_monoid(const Nfa&, std::set<Letter>, size_t);
    std::map<StateRelation, int> index_;
};

/// Computes the transition monoid of a over the given alphabet (the
/// automaton's used alphabet when empty). Throws ResourceError when the
/// element count exceeds the budget.
TransitionMonoid transition_monoid(const Nfa& a, std::set<Letter> alphabet = {},
                                   size_t budget = kDefaultMonoidBudget);

/// The transformation automaton with the given target relation as its only
/// accepting state: states are the monoid elements (plus the target when it
/// is not one of them), each state steps deterministically to its composite
/// with the letter relation, and the identity is initial. Words accepted are
/// exactly those whose word relation equals the target.
Nfa transformation_automaton(const TransitionMonoid& m, const StateRelation& target);
Nfa transformation_automaton(const Nfa& a, const StateRelation& target,
                             size_t budget = kDefaultMonoidBudget);

/// Canonical textual form of a relation: "{(0,1),(1,2)}".
std::string relation_label(const StateRelation& r);

std::string to_json(const StateRelation& r);
StateRelation relation_from_json(const std::string& text, int num_states);

}  // namespace kaw
