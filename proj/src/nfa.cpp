#include "kaw/nfa.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace kaw {

int Nfa::add_state(const std::string& label) {
    labels.push_back(label);
    delta.emplace_back();
    return num_states() - 1;
}

void Nfa::add_transition(int from, Letter a, int to) {
    if (from < 0 || from >= num_states() || to < 0 || to >= num_states())
        throw std::invalid_argument("transition endpoint out of range");
    delta[from][a].insert(to);
}

std::set<Letter> Nfa::alphabet() const {
    std::set<Letter> out;
    for (const auto& row : delta)
        for (const auto& [a, succs] : row)
            if (!succs.empty()) out.insert(a);
    return out;
}

StateRelation identity_relation(int num_states) {
    StateRelation r;
    r.num_states = num_states;
    for (int q = 0; q < num_states; ++q) r.pairs.emplace(q, q);
    return r;
}

StateRelation compose(const StateRelation& r1, const StateRelation& r2) {
    if (r1.num_states != r2.num_states)
        throw std::invalid_argument("composing relations over different state sets");
    // index r2 by first component
    std::map<int, std::vector<int>> succ;
    for (const auto& [x, y] : r2.pairs) succ[x].push_back(y);
    StateRelation out;
    out.num_states = r1.num_states;
    for (const auto& [x, y] : r1.pairs) {
        auto it = succ.find(y);
        if (it == succ.end()) continue;
        for (int z : it->second) out.pairs.emplace(x, z);
    }
    return out;
}

StateRelation step_relation(const Nfa& a, Letter letter) {
    StateRelation r;
    r.num_states = a.num_states();
    for (int q = 0; q < a.num_states(); ++q) {
        auto it = a.delta[q].find(letter);
        if (it == a.delta[q].end()) continue;
        for (int q2 : it->second) r.pairs.emplace(q, q2);
    }
    return r;
}

StateRelation word_relation(const Nfa& a, const Word& w) {
    StateRelation r = identity_relation(a.num_states());
    for (Letter c : w) r = compose(r, step_relation(a, c));
    return r;
}

bool accepts(const Nfa& a, const Word& w) {
    StateRelation r = word_relation(a, w);
    for (const auto& [q, q2] : r.pairs)
        if (a.initials.count(q) && a.finals.count(q2)) return true;
    return false;
}

Nfa antimirov_automaton(const Expr& e) {
    ExprSet states = reachset(e);
    Nfa a;
    std::map<std::string, int> index;
    for (const Expr& s : states) {
        int q = a.add_state(to_string(s));
        index.emplace(a.labels[q], q);
    }
    std::set<Letter> sigma = letters(e);
    std::vector<Expr> items = states.items();
    for (int q = 0; q < a.num_states(); ++q) {
        for (Letter c : sigma) {
            for (const Expr& d : derive(items[q], c)) {
                auto it = index.find(to_string(d));
                if (it == index.end())
                    throw std::logic_error("derivative escapes the reachable set");
                a.add_transition(q, c, it->second);
            }
        }
        if (nullable(items[q])) a.finals.insert(q);
    }
    for (const Expr& i : initials(e)) {
        auto it = index.find(to_string(i));
        if (it == index.end())
            throw std::logic_error("initial expression outside the reachable set");
        a.initials.insert(it->second);
    }
    return a;
}

std::optional<int> state_of(const Nfa& a, const Expr& e) {
    std::string key = to_string(e);
    for (int q = 0; q < a.num_states(); ++q)
        if (a.labels[q] == key) return q;
    return std::nullopt;
}

// --- language inclusion ---------------------------------------------------

namespace {

using Subset = std::vector<int>;  // sorted state indices

Subset post(const Nfa& a, const Subset& s, Letter c) {
    std::set<int> out;
    for (int q : s) {
        auto it = a.delta[q].find(c);
        if (it == a.delta[q].end()) continue;
        out.insert(it->second.begin(), it->second.end());
    }
    return Subset(out.begin(), out.end());
}

bool hits_final(const Nfa& a, const Subset& s) {
    for (int q : s)
        if (a.finals.count(q)) return true;
    return false;
}

// Breadth-first search over reachable pairs of determinization subsets.
// `bad` classifies a pair; the first bad pair found (in shortlex order of
// discovery words) yields the word. Returns nullopt when no pair is bad.
template <typename BadFn>
std::optional<Word> product_search(const Nfa& a1, const Nfa& a2, BadFn bad) {
    std::set<Letter> sigma = a1.alphabet();
    {
        std::set<Letter> s2 = a2.alphabet();
        sigma.insert(s2.begin(), s2.end());
    }
    struct NodeInfo {
        int parent;
        Letter via;
    };
    std::map<std::pair<Subset, Subset>, int> seen;
    std::vector<std::pair<Subset, Subset>> nodes;
    std::vector<NodeInfo> info;
    std::deque<int> queue;

    auto push = [&](Subset l, Subset r, int parent, Letter via) {
        auto key = std::make_pair(std::move(l), std::move(r));
        if (seen.count(key)) return;
        seen.emplace(key, static_cast<int>(nodes.size()));
        nodes.push_back(key);
        info.push_back({parent, via});
        queue.push_back(static_cast<int>(nodes.size()) - 1);
    };

    push(Subset(a1.initials.begin(), a1.initials.end()),
         Subset(a2.initials.begin(), a2.initials.end()), -1, 0);

    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        // copy: push() below may grow `nodes` and invalidate references
        auto [l, r] = nodes[id];
        if (bad(l, r)) {
            Word w;
            for (int cur = id; info[cur].parent >= 0; cur = info[cur].parent)
                w.push_back(info[cur].via);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (Letter c : sigma)
            push(post(a1, l, c), post(a2, r, c), id, c);
    }
    return std::nullopt;
}

}  // namespace

SubsetVerdict language_subset(const Nfa& a1, const Nfa& a2) {
    auto word = product_search(a1, a2, [&](const Subset& l, const Subset& r) {
        return hits_final(a1, l) && !hits_final(a2, r);
    });
    if (!word) return {true, {}};
    return {false, *word};
}

EquivVerdict language_equiv(const Nfa& a1, const Nfa& a2) {
    bool owner_left = false;
    auto word = product_search(a1, a2, [&](const Subset& l, const Subset& r) {
        bool f1 = hits_final(a1, l);
        bool f2 = hits_final(a2, r);
        if (f1 == f2) return false;
        owner_left = f1;
        return true;
    });
    if (!word) return {true, {}, Side::left};
    return {false, *word, owner_left ? Side::left : Side::right};
}

// --- serialization ----------------------------------------------------------

std::string to_json(const Nfa& a) {
    nlohmann::json j;
    j["states"] = a.labels;
    nlohmann::json delta = nlohmann::json::array();
    for (int q = 0; q < a.num_states(); ++q)
        for (const auto& [c, succs] : a.delta[q]) {
            if (succs.empty()) continue;
            delta.push_back({{"from", q},
                             {"letter", std::string(1, c)},
                             {"to", std::vector<int>(succs.begin(), succs.end())}});
        }
    j["delta"] = std::move(delta);
    j["initial"] = std::vector<int>(a.initials.begin(), a.initials.end());
    j["final"] = std::vector<int>(a.finals.begin(), a.finals.end());
    return j.dump(2);
}

Nfa nfa_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Nfa a;
    for (const auto& label : j.at("states"))
        a.add_state(label.get<std::string>());
    for (const auto& entry : j.at("delta")) {
        int from = entry.at("from").get<int>();
        std::string letter = entry.at("letter").get<std::string>();
        if (letter.size() != 1 || !is_letter(letter[0]))
            throw std::invalid_argument("letter must be a single character a-z");
        for (const auto& to : entry.at("to"))
            a.add_transition(from, letter[0], to.get<int>());
    }
    for (const auto& q : j.at("initial")) {
        int i = q.get<int>();
        if (i < 0 || i >= a.num_states())
            throw std::invalid_argument("initial state out of range");
        a.initials.insert(i);
    }
    for (const auto& q : j.at("final")) {
        int i = q.get<int>();
        if (i < 0 || i >= a.num_states())
            throw std::invalid_argument("final state out of range");
        a.finals.insert(i);
    }
    return a;
}

std::string to_dot(const Nfa& a) {
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n";
    for (int q = 0; q < a.num_states(); ++q) {
        out << "  s" << q << " [label=\"" << a.labels[q] << "\", shape="
            << (a.finals.count(q) ? "doublecircle" : "circle") << "];\n";
    }
    int entry = 0;
    for (int q : a.initials) {
        out << "  entry" << entry << " [shape=none, label=\"\"];\n";
        out << "  entry" << entry << " -> s" << q << ";\n";
        ++entry;
    }
    for (int q = 0; q < a.num_states(); ++q) {
        std::map<int, std::string> merged;
        for (const auto& [c, succs] : a.delta[q])
            for (int to : succs) {
                auto& lbl = merged[to];
                if (!lbl.empty()) lbl += ", ";
                lbl += c;
            }
        for (const auto& [to, lbl] : merged)
            out << "  s" << q << " -> s" << to << " [label=\"" << lbl << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace kaw
