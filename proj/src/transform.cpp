#include "kaw/transform.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace kaw {

std::optional<int> TransitionMonoid::index_of(const StateRelation& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int TransitionMonoid::compose_elements(int i, int j) const {
    StateRelation r = compose(elements[i].relation, elements[j].relation);
    auto idx = index_of(r);
    if (!idx) throw std::logic_error("monoid is not composition-closed");
    return *idx;
}

std::set<Letter> TransitionMonoid::alphabet() const {
    std::set<Letter> out;
    for (const auto& [c, idx] : generators) out.insert(c);
    return out;
}

TransitionMonoid transition_monoid(const Nfa& a, std::set<Letter> alphabet,
                                   size_t budget) {
    if (alphabet.empty()) alphabet = a.alphabet();

    TransitionMonoid m;
    m.num_states = a.num_states();

    std::map<Letter, StateRelation> steps;
    for (Letter c : alphabet) steps.emplace(c, step_relation(a, c));

    auto add = [&](StateRelation r, Word witness) -> int {
        auto it = m.index_.find(r);
        if (it != m.index_.end()) return it->second;
        if (m.elements.size() >= budget)
            throw ResourceError("transition monoid exceeds budget of " +
                                std::to_string(budget) + " elements");
        int idx = static_cast<int>(m.elements.size());
        m.index_.emplace(r, idx);
        m.elements.push_back({std::move(r), std::move(witness)});
        return idx;
    };

    std::deque<int> queue{add(identity_relation(a.num_states()), Word())};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (const auto& [c, step] : steps) {
            StateRelation next = compose(m.elements[cur].relation, step);
            Word witness = m.elements[cur].witness + c;
            size_t before = m.elements.size();
            int idx = add(std::move(next), std::move(witness));
            if (m.elements.size() > before) queue.push_back(idx);
        }
    }

    for (const auto& [c, step] : steps)
        m.generators[c] = *m.index_of(step);
    return m;
}

Nfa transformation_automaton(const TransitionMonoid& m, const StateRelation& target) {
    if (target.num_states != m.num_states)
        throw std::invalid_argument("target relation over a different state set");

    Nfa a;
    for (const MonoidElement& el : m.elements)
        a.add_state(relation_label(el.relation));

    std::optional<int> target_idx = m.index_of(target);
    if (!target_idx) {
        // Unreachable target: keep it as an accepting state; only those of
        // its steps that land back in the state set can be represented.
        target_idx = a.add_state(relation_label(target));
    }

    for (size_t i = 0; i < m.size(); ++i)
        for (const auto& [c, gen] : m.generators)
            a.add_transition(static_cast<int>(i), c,
                             m.compose_elements(static_cast<int>(i), gen));

    if (*target_idx >= static_cast<int>(m.size())) {
        for (const auto& [c, gen] : m.generators) {
            StateRelation next = compose(target, m.elements[gen].relation);
            if (auto idx = m.index_of(next))
                a.add_transition(*target_idx, c, *idx);
            else if (next == target)
                a.add_transition(*target_idx, c, *target_idx);
        }
    }

    a.initials.insert(0);
    a.finals.insert(*target_idx);
    return a;
}

Nfa transformation_automaton(const Nfa& a, const StateRelation& target, size_t budget) {
    return transformation_automaton(transition_monoid(a, {}, budget), target);
}

std::string relation_label(const StateRelation& r) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [x, y] : r.pairs) {
        if (!first) out << ',';
        first = false;
        out << '(' << x << ',' << y << ')';
    }
    out << '}';
    return out.str();
}

std::string to_json(const StateRelation& r) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [x, y] : r.pairs) j.push_back({x, y});
    return j.dump();
}

StateRelation relation_from_json(const std::string& text, int num_states) {
    nlohmann::json j = nlohmann::json::parse(text);
    StateRelation r;
    r.num_states = num_states;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("relation entries must be [from, to] pairs");
        int x = pair[0].get<int>();
        int y = pair[1].get<int>();
        if (x < 0 || x >= num_states || y < 0 || y >= num_states)
            throw std::invalid_argument("relation pair out of range");
        r.pairs.emplace(x, y);
    }
    return r;
}

}  // namespace kaw
