#include "kaw/fmp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kaw {

namespace {

void check_rho_budget(const Expr& e, const FmpBudgets& budgets) {
    size_t rho = reachset(e).size();
    if (rho > budgets.max_rho)
        throw ResourceError("reachable set of " + to_string(e) + " has " +
                            std::to_string(rho) + " states, budget is " +
                            std::to_string(budgets.max_rho));
}

SolveOptions simplified_options() {
    SolveOptions opts;
    opts.simplify = true;
    return opts;
}

Expr solved_transformation(const TransitionMonoid& m, const StateRelation& r) {
    return soli(transformation_automaton(m, r), simplified_options());
}

/// Sum of solved transformation automata over the relations of a powerset
/// element, in canonical relation order. Optionally reports the per-relation
/// terms it summed.
Expr middle_expression(const CanonicalModel& cm, KaElement x,
                       std::vector<std::pair<StateRelation, Expr>>* terms_out = nullptr) {
    std::vector<StateRelation> rels = relations_of(*cm.ka, x);
    std::vector<Expr> terms;
    terms.reserve(rels.size());
    for (const StateRelation& r : rels) {
        terms.push_back(solved_transformation(cm.monoid(), r));
        if (terms_out) terms_out->emplace_back(r, terms.back());
    }
    return sum_of(terms);
}

}  // namespace

std::vector<UpperCheckItem> interp_upper_check(const Expr& e, const FmpBudgets& budgets) {
    check_rho_budget(e, budgets);
    CanonicalModel cm = canonical_model(e, {}, budgets.max_monoid);
    std::vector<UpperCheckItem> out;
    for (const StateRelation& r : relations_of(*cm.ka, interpret(cm.h, e))) {
        UpperCheckItem item;
        item.relation = r;
        item.soli_expr = solved_transformation(cm.monoid(), r);
        SubsetVerdict v = language_subset(antimirov_automaton(item.soli_expr), cm.automaton);
        item.holds = v.holds;
        item.counterexample = v.counterexample;
        out.push_back(std::move(item));
    }
    return out;
}

InclusionVerdict interp_lower_check(const Expr& e, const Expr& f,
                                    const FmpBudgets& budgets) {
    check_rho_budget(e, budgets);
    check_rho_budget(f, budgets);
    std::set<Letter> alphabet = letters(e);
    {
        std::set<Letter> lf = letters(f);
        alphabet.insert(lf.begin(), lf.end());
    }
    CanonicalModel cm = canonical_model(e, alphabet, budgets.max_monoid);
    Expr middle = middle_expression(cm, interpret(cm.h, f));
    SubsetVerdict v = language_subset(antimirov_automaton(f), antimirov_automaton(middle));
    return {"f <= middle(e, f)", v.holds, v.counterexample};
}

FmpReport fmp_sandwich(const Expr& e, const Expr& f, const FmpBudgets& budgets) {
    auto started = std::chrono::steady_clock::now();

    FmpReport report;
    report.e = e;
    report.f = f;
    report.rho_e = reachset(e).size();
    report.rho_f = reachset(f).size();
    check_rho_budget(e, budgets);
    check_rho_budget(f, budgets);

    std::set<Letter> alphabet = letters(e);
    {
        std::set<Letter> lf = letters(f);
        alphabet.insert(lf.begin(), lf.end());
    }

    CanonicalModel cm_e = canonical_model(e, alphabet, budgets.max_monoid);
    CanonicalModel cm_f = canonical_model(f, alphabet, budgets.max_monoid);
    report.monoid_e = cm_e.monoid().size();
    report.monoid_f = cm_f.monoid().size();

    KaElement he_e = interpret(cm_e.h, e);
    KaElement he_f = interpret(cm_e.h, f);
    KaElement hf_e = interpret(cm_f.h, e);
    KaElement hf_f = interpret(cm_f.h, f);
    report.he_of_e = relations_of(*cm_e.ka, he_e);
    report.he_of_f = relations_of(*cm_e.ka, he_f);
    report.hf_of_e = relations_of(*cm_f.ka, hf_e);
    report.hf_of_f = relations_of(*cm_f.ka, hf_f);

    report.precondition_holds = (he_e == he_f) && (hf_e == hf_f);
    if (report.precondition_holds) {
        report.middle_e = middle_expression(cm_e, he_f, &report.middle_terms_e);
        report.middle_f = middle_expression(cm_f, hf_e, &report.middle_terms_f);
        Nfa a_middle_e = antimirov_automaton(report.middle_e);
        Nfa a_middle_f = antimirov_automaton(report.middle_f);

        auto record = [&](std::string name, SubsetVerdict v) {
            report.inclusions.push_back({std::move(name), v.holds, v.counterexample});
        };
        record("f <= middle(e)", language_subset(cm_f.automaton, a_middle_e));
        record("middle(e) <= e", language_subset(a_middle_e, cm_e.automaton));
        record("e <= middle(f)", language_subset(cm_e.automaton, a_middle_f));
        record("middle(f) <= f", language_subset(a_middle_f, cm_f.automaton));

        report.certified = std::all_of(report.inclusions.begin(), report.inclusions.end(),
                                       [](const InclusionVerdict& v) { return v.holds; });
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

std::string to_json(const FmpReport& report) {
    auto relations = [](const std::vector<StateRelation>& rels) {
        nlohmann::json out = nlohmann::json::array();
        for (const StateRelation& r : rels) {
            nlohmann::json pairs = nlohmann::json::array();
            for (const auto& [x, y] : r.pairs) pairs.push_back({x, y});
            out.push_back(std::move(pairs));
        }
        return out;
    };
    nlohmann::json j;
    j["e"] = to_string(report.e);
    j["f"] = to_string(report.f);
    j["precondition_holds"] = report.precondition_holds;
    j["interpretations"] = {{"he_of_e", relations(report.he_of_e)},
                            {"he_of_f", relations(report.he_of_f)},
                            {"hf_of_e", relations(report.hf_of_e)},
                            {"hf_of_f", relations(report.hf_of_f)}};
    if (report.precondition_holds) {
        j["middle_e"] = to_string(report.middle_e);
        j["middle_f"] = to_string(report.middle_f);
        auto terms = [](const std::vector<std::pair<StateRelation, Expr>>& items) {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& [r, soli_expr] : items) {
                nlohmann::json pairs = nlohmann::json::array();
                for (const auto& [x, y] : r.pairs) pairs.push_back({x, y});
                out.push_back({{"relation", std::move(pairs)},
                               {"soli", to_string(soli_expr)}});
            }
            return out;
        };
        j["middle_terms_e"] = terms(report.middle_terms_e);
        j["middle_terms_f"] = terms(report.middle_terms_f);
    }
    nlohmann::json inclusions = nlohmann::json::array();
    for (const InclusionVerdict& v : report.inclusions) {
        nlohmann::json item;
        item["name"] = v.name;
        item["holds"] = v.holds;
        if (!v.holds) item["counterexample"] = v.counterexample;
        inclusions.push_back(std::move(item));
    }
    j["inclusions"] = std::move(inclusions);
    j["certified"] = report.certified;
    j["sizes"] = {{"rho_e", report.rho_e},
                  {"rho_f", report.rho_f},
                  {"monoid_e", report.monoid_e},
                  {"monoid_f", report.monoid_f}};
    j["elapsed_seconds"] = report.elapsed_seconds;
    return j.dump(2);
}

// --- lemma suite ------------------------------------------------------------

namespace {

std::vector<Word> universe(const std::set<Letter>& sigma, int maxlen) {
    std::vector<Word> out{Word()};
    size_t start = 0;
    for (int len = 1; len <= maxlen; ++len) {
        size_t stop = out.size();
        for (size_t i = start; i < stop; ++i)
            for (Letter c : sigma) out.push_back(out[i] + c);
        start = stop;
    }
    return out;
}

Word random_word(std::mt19937_64& gen, const std::set<Letter>& sigma, int maxlen) {
    if (sigma.empty()) return {};
    std::vector<Letter> letters(sigma.begin(), sigma.end());
    std::uniform_int_distribution<int> len_dist(0, maxlen);
    std::uniform_int_distribution<size_t> pick(0, letters.size() - 1);
    Word w;
    int len = len_dist(gen);
    for (int i = 0; i < len; ++i) w.push_back(letters[pick(gen)]);
    return w;
}

Nfa from_state(const Nfa& a, int q) {
    Nfa out = a;
    out.initials = {q};
    return out;
}

/// Monoid elements reachable while reading a word accepted by `lang`:
/// breadth-first search over pairs of a monoid index and a determinization
/// subset of `lang`.
std::vector<int> monoid_image_of_language(const TransitionMonoid& m, const Nfa& lang) {
    std::set<Letter> sigma = m.alphabet();
    {
        std::set<Letter> s = lang.alphabet();
        sigma.insert(s.begin(), s.end());
    }
    using Subset = std::vector<int>;
    auto post = [&](const Subset& s, Letter c) {
        std::set<int> out;
        for (int q : s) {
            auto it = lang.delta[q].find(c);
            if (it == lang.delta[q].end()) continue;
            out.insert(it->second.begin(), it->second.end());
        }
        return Subset(out.begin(), out.end());
    };
    std::set<std::pair<int, Subset>> seen;
    std::deque<std::pair<int, Subset>> queue;
    std::set<int> image;
    auto push = [&](int elem, Subset s) {
        auto key = std::make_pair(elem, std::move(s));
        if (!seen.insert(key).second) return;
        queue.push_back(key);
    };
    push(0, Subset(lang.initials.begin(), lang.initials.end()));
    while (!queue.empty()) {
        auto [elem, subset] = queue.front();
        queue.pop_front();
        for (int q : subset)
            if (lang.finals.count(q)) {
                image.insert(elem);
                break;
            }
        for (Letter c : sigma) {
            auto gen = m.generators.find(c);
            if (gen == m.generators.end()) {
                // letters outside the monoid's alphabet cannot occur in a
                // word evaluated inside it; skip (the subset side would
                // drift while the monoid side has no step).
                continue;
            }
            push(m.compose_elements(elem, gen->second), post(subset, c));
        }
    }
    return std::vector<int>(image.begin(), image.end());
}

class SuiteRunner {
public:
    SuiteRunner(uint64_t seed, const FmpBudgets& budgets)
        : seed_(seed), budgets_(budgets) {}

    template <typename Fn>
    void run(const std::string& lemma, const std::string& instance, Fn fn) {
        LemmaResult r{lemma, instance, LemmaStatus::pass, {}};
        try {
            std::string detail;
            if (!fn(detail)) {
                r.status = LemmaStatus::fail;
                r.detail = detail;
            }
        } catch (const ResourceError& ex) {
            r.status = LemmaStatus::skip;
            r.detail = ex.what();
        }
        results_.push_back(std::move(r));
    }

    std::mt19937_64 rng(uint64_t salt) const {
        return std::mt19937_64(seed_ ^ (salt * 0x9e3779b97f4a7c15ull));
    }

    const FmpBudgets& budgets() const { return budgets_; }
    std::vector<LemmaResult> take() { return std::move(results_); }

private:
    uint64_t seed_;
    FmpBudgets budgets_;
    std::vector<LemmaResult> results_;
};

bool subset_holds(const Expr& small, const Expr& big, std::string& detail) {
    SubsetVerdict v = language_subset(antimirov_automaton(small), antimirov_automaton(big));
    if (!v.holds)
        detail = "word '" + v.counterexample + "' violates " + to_string(small) +
                 " <= " + to_string(big);
    return v.holds;
}

bool equiv_holds(const Nfa& a, const Nfa& b, std::string& detail) {
    EquivVerdict v = language_equiv(a, b);
    if (!v.holds)
        detail = "languages differ on '" + v.counterexample + "'";
    return v.holds;
}

void run_expression_checks(SuiteRunner& suite, const Expr& e, size_t index) {
    const std::string tag = "[" + std::to_string(index) + "] " + to_string(e);
    std::set<Letter> sigma = letters(e);
    const ExprSet rho = reachset(e);

    suite.run("syntax/derive-closure", tag, [&](std::string& detail) {
        for (const Expr& s : rho) {
            ExprSet inner = reachset(s);
            for (const Expr& x : inner)
                if (!rho.contains(x)) {
                    detail = to_string(x) + " reachable from " + to_string(s) +
                             " but outside the reachable set";
                    return false;
                }
            for (Letter c : sigma)
                for (const Expr& d : derive(s, c))
                    if (!rho.contains(d)) {
                        detail = "derivative " + to_string(d) + " escapes";
                        return false;
                    }
        }
        return true;
    });

    suite.run("syntax/initials-in-reach", tag, [&](std::string& detail) {
        for (const Expr& i : initials(e))
            if (!rho.contains(i)) {
                detail = to_string(i) + " not reachable";
                return false;
            }
        return true;
    });

    suite.run("syntax/nullable-vs-empty-word", tag, [&](std::string&) {
        return nullable(e) == (enumerate_words(e, 0).count(Word()) == 1);
    });

    // keep the word universe around 4k words regardless of alphabet size
    int member_len = 5;
    while (member_len > 1 && std::pow(double(sigma.size()), member_len) > 4096) --member_len;

    suite.run("syntax/member-vs-enumerate", tag, [&](std::string& detail) {
        auto lang = enumerate_words(e, member_len);
        for (const Word& w : universe(sigma, member_len))
            if (member(w, e) != (lang.count(w) == 1)) {
                detail = "disagree on '" + w + "'";
                return false;
            }
        return true;
    });

    suite.run("syntax/initials-reconstruct", tag, [&](std::string& detail) {
        std::set<Word> whole = enumerate_words(e, 4);
        std::set<Word> split;
        for (const Expr& i : initials(e)) {
            auto part = enumerate_words(i, 4);
            split.insert(part.begin(), part.end());
        }
        if (whole != split) {
            detail = "initial decomposition changes the language";
            return false;
        }
        return true;
    });

    suite.run("syntax/half-fundamental", tag, [&](std::string& detail) {
        if (nullable(e) && enumerate_words(e, 0).count(Word()) == 0) {
            detail = "nullable but empty word missing";
            return false;
        }
        std::set<Word> lang = enumerate_words(e, 5);
        for (Letter c : sigma)
            for (const Expr& d : derive(e, c))
                for (const Word& w : enumerate_words(d, 4))
                    if (lang.count(Word(1, c) + w) == 0) {
                        detail = std::string("'") + c + w + "' missing from the language";
                        return false;
                    }
        return true;
    });

    Nfa a = antimirov_automaton(e);

    suite.run("automata/antimirov-correct", tag, [&](std::string& detail) {
        auto lang = enumerate_words(e, member_len);
        for (const Word& w : universe(sigma, member_len))
            if (accepts(a, w) != (lang.count(w) == 1)) {
                detail = "automaton disagrees on '" + w + "'";
                return false;
            }
        return true;
    });

    suite.run("automata/word-relation-action", tag, [&](std::string& detail) {
        auto gen = suite.rng(index * 31 + 1);
        for (int i = 0; i < 5; ++i) {
            Word u = random_word(gen, sigma, 3);
            Word v = random_word(gen, sigma, 3);
            if (word_relation(a, u + v) !=
                compose(word_relation(a, u), word_relation(a, v))) {
                detail = "action fails on '" + u + "' / '" + v + "'";
                return false;
            }
        }
        return true;
    });

    const SolveOptions simplified = simplified_options();
    QVector sol = solve_automaton(a, simplified);

    suite.run("solver/solution-language", tag, [&](std::string& detail) {
        for (int q = 0; q < a.num_states(); ++q)
            if (!equiv_holds(antimirov_automaton(sol[q]), from_state(a, q), detail))
                return false;
        return true;
    });

    suite.run("solver/solution-inequalities", tag, [&](std::string& detail) {
        for (int q : a.finals)
            if (!nullable(sol[q])) {
                detail = "final state solution misses the empty word";
                return false;
            }
        for (int q = 0; q < a.num_states(); ++q)
            for (const auto& [c, succs] : a.delta[q])
                for (int q2 : succs)
                    if (!subset_holds(Expr::times(Expr::atom(c), sol[q2]), sol[q], detail))
                        return false;
        return true;
    });

    suite.run("solver/pivot-order-language", tag, [&](std::string& detail) {
        SolveOptions reversed = simplified;
        reversed.pivot_order.resize(a.num_states());
        for (int q = 0; q < a.num_states(); ++q)
            reversed.pivot_order[q] = a.num_states() - 1 - q;
        QVector other = solve_automaton(a, reversed);
        for (int q = 0; q < a.num_states(); ++q)
            if (!equiv_holds(antimirov_automaton(sol[q]), antimirov_automaton(other[q]),
                             detail))
                return false;
        return true;
    });

    suite.run("solver/soli-denotes-language", tag, [&](std::string& detail) {
        return equiv_holds(antimirov_automaton(soli(a, simplified)), a, detail);
    });

    // budgeted constructions are built lazily inside the reporting wrapper so
    // an exceeded budget records a skip instead of aborting the suite
    std::optional<TransitionMonoid> monoid_box;
    auto monoid_of = [&]() -> const TransitionMonoid& {
        if (!monoid_box)
            monoid_box = transition_monoid(a, sigma, suite.budgets().max_monoid);
        return *monoid_box;
    };

    suite.run("transform/witness-soundness", tag, [&](std::string& detail) {
        const TransitionMonoid& monoid = monoid_of();
        for (const MonoidElement& el : monoid.elements)
            if (word_relation(a, el.witness) != el.relation) {
                detail = "witness '" + el.witness + "' does not realize its relation";
                return false;
            }
        return true;
    });

    suite.run("transform/letter", tag, [&](std::string& detail) {
        const TransitionMonoid& monoid = monoid_of();
        for (Letter c : sigma) {
            Expr solved = solved_transformation(monoid, step_relation(a, c));
            if (!subset_holds(Expr::atom(c), solved, detail)) return false;
        }
        return true;
    });

    suite.run("transform/compose", tag, [&](std::string& detail) {
        const TransitionMonoid& monoid = monoid_of();
        auto gen = suite.rng(index * 31 + 2);
        std::uniform_int_distribution<size_t> pick(0, monoid.size() - 1);
        for (int i = 0; i < 3; ++i) {
            const StateRelation& r1 = monoid.elements[pick(gen)].relation;
            const StateRelation& r2 = monoid.elements[pick(gen)].relation;
            Expr lhs = Expr::times(solved_transformation(monoid, r1),
                                   solved_transformation(monoid, r2));
            Expr rhs = solved_transformation(monoid, compose(r1, r2));
            if (!subset_holds(lhs, rhs, detail)) return false;
        }
        return true;
    });

    suite.run("transform/shift", tag, [&](std::string& detail) {
        const TransitionMonoid& monoid = monoid_of();
        auto gen = suite.rng(index * 31 + 3);
        std::uniform_int_distribution<size_t> pick(0, monoid.size() - 1);
        const SolveOptions opts = simplified_options();
        for (int i = 0; i < 2; ++i) {
            size_t i1 = pick(gen), i2 = pick(gen), i3 = pick(gen);
            const StateRelation& r1 = monoid.elements[i1].relation;
            const StateRelation& r2 = monoid.elements[i2].relation;
            const StateRelation& r3 = monoid.elements[i3].relation;
            QVector s2 = solve_automaton(transformation_automaton(monoid, r2), opts);
            StateRelation r32 = compose(r3, r2);
            QVector s32 = solve_automaton(transformation_automaton(monoid, r32), opts);
            int from = static_cast<int>(i1);
            int to = *monoid.index_of(compose(r3, r1));
            if (!subset_holds(s2[from], s32[to], detail)) return false;
        }
        return true;
    });

    suite.run("transform/approximate-below", tag, [&](std::string& detail) {
        const TransitionMonoid& monoid = monoid_of();
        int done = 0;
        for (const MonoidElement& el : monoid.elements) {
            if (done >= 3) break;
            for (const auto& [q, qf] : el.relation.pairs) {
                if (!a.finals.count(qf)) continue;
                Expr lhs = solved_transformation(monoid, el.relation);
                if (!subset_holds(lhs, sol[q], detail)) return false;
                ++done;
                break;
            }
        }
        return true;
    });

    std::optional<CanonicalModel> cm_box;
    auto model_of = [&]() -> const CanonicalModel& {
        if (!cm_box) cm_box = canonical_model(e, sigma, suite.budgets().max_monoid);
        return *cm_box;
    };

    suite.run("models/word-model-correct", tag, [&](std::string& detail) {
        auto gen = suite.rng(index * 31 + 4);
        for (int i = 0; i < 5; ++i) {
            Word w = random_word(gen, sigma, 4);
            int n = static_cast<int>(w.size());
            Interpretation h = word_interpretation(w);
            FiniteKa::Value v = h.ka->value(interpret(h, e));
            std::set<Word> lang = enumerate_words(e, n);
            for (int from = 0; from <= n; ++from)
                for (int to = from; to <= n; ++to) {
                    bool in_model = std::binary_search(v.begin(), v.end(),
                                                       from * (n + 1) + to);
                    bool in_lang = lang.count(w.substr(from, to - from)) == 1;
                    if (in_model != in_lang) {
                        detail = "word model of '" + w + "' wrong at (" +
                                 std::to_string(from) + "," + std::to_string(to) + ")";
                        return false;
                    }
                }
        }
        return true;
    });

    suite.run("models/interpretation-via-words", tag, [&](std::string& detail) {
        const CanonicalModel& cm = model_of();
        FiniteKa::Value lhs = cm.ka->value(interpret(cm.h, e));
        // short words directly, the full image by reachability
        for (const Word& w : enumerate_words(e, 6)) {
            auto idx = cm.monoid().index_of(word_relation(cm.automaton, w));
            if (!idx || !std::binary_search(lhs.begin(), lhs.end(), *idx)) {
                detail = "relation of '" + w + "' missing from the interpretation";
                return false;
            }
        }
        std::vector<int> rhs = monoid_image_of_language(cm.monoid(), cm.automaton);
        if (lhs != FiniteKa::Value(rhs.begin(), rhs.end())) {
            detail = "interpretation disagrees with the word image";
            return false;
        }
        return true;
    });

    suite.run("models/embed-sem", tag, [&](std::string& detail) {
        const CanonicalModel& cm = model_of();
        KaElement top = interpret(cm.h, e);
        for (const Word& w : enumerate_words(e, 5))
            if (!cm.ka->leq(interpret(cm.h, word_to_expr(w)), top)) {
                detail = "word '" + w + "' not below the expression";
                return false;
            }
        return true;
    });

    suite.run("models/lang-vs-cont", tag, [&](std::string& detail) {
        const CanonicalModel& cm = model_of();
        Expr f = light_simplify(soli(a, simplified_options()));
        if (!language_equiv(a, antimirov_automaton(f)).holds) {
            detail = "solution is not language-equivalent";
            return false;
        }
        std::set<Letter> joint = sigma;
        CanonicalModel cm_f = canonical_model(f, joint, suite.budgets().max_monoid);
        if (!(interpret(cm.h, e) == interpret(cm.h, f))) {
            detail = "canonical model of e distinguishes equals";
            return false;
        }
        if (!(interpret(cm_f.h, e) == interpret(cm_f.h, f))) {
            detail = "canonical model of the solution distinguishes equals";
            return false;
        }
        auto gen = suite.rng(index * 31 + 5);
        Interpretation h;
        h.ka = relational_ka(2);
        for (Letter c : sigma) h.assignment[c] = h.ka->random_element(gen, 4);
        if (!(interpret(h, e) == interpret(h, f))) {
            detail = "random relational model distinguishes equals";
            return false;
        }
        return true;
    });

    suite.run("models/ka-axioms", tag, [&](std::string& detail) {
        AxiomCheckResult r = check_ka_axioms(*model_of().ka);
        if (!r.ok) detail = r.failure;
        return r.ok;
    });

    suite.run("fmp/interp-upper", tag, [&](std::string& detail) {
        for (const UpperCheckItem& item : interp_upper_check(e, suite.budgets()))
            if (!item.holds) {
                detail = "violated at " + relation_label(item.relation) + " by '" +
                         item.counterexample + "'";
                return false;
            }
        return true;
    });

    suite.run("fmp/interp-lower-self", tag, [&](std::string& detail) {
        InclusionVerdict v = interp_lower_check(e, e, suite.budgets());
        if (!v.holds) detail = "violated by '" + v.counterexample + "'";
        return v.holds;
    });

    suite.run("fmp/sandwich-self", tag, [&](std::string& detail) {
        FmpReport r = fmp_sandwich(e, e, suite.budgets());
        if (!r.certified) detail = "self pair not certified";
        return r.certified;
    });
}

}  // namespace

size_t SuiteReport::failures() const {
    return std::count_if(results.begin(), results.end(), [](const LemmaResult& r) {
        return r.status == LemmaStatus::fail;
    });
}

size_t SuiteReport::skipped() const {
    return std::count_if(results.begin(), results.end(), [](const LemmaResult& r) {
        return r.status == LemmaStatus::skip;
    });
}

SuiteReport lemma_suite(const std::vector<Expr>& corpus, uint64_t seed,
                        const FmpBudgets& budgets) {
    SuiteRunner suite(seed, budgets);
    for (size_t i = 0; i < corpus.size(); ++i)
        run_expression_checks(suite, corpus[i], i);

    // cross checks between corpus neighbours
    for (size_t i = 0; i + 1 < corpus.size(); ++i) {
        const std::string tag = "[" + std::to_string(i) + "," + std::to_string(i + 1) +
                                "] " + to_string(corpus[i]) + " vs " +
                                to_string(corpus[i + 1]);
        suite.run("fmp/interp-lower-cross", tag, [&](std::string& detail) {
            InclusionVerdict v = interp_lower_check(corpus[i], corpus[i + 1], budgets);
            if (!v.holds) detail = "violated by '" + v.counterexample + "'";
            return v.holds;
        });
    }

    SuiteReport report;
    report.results = suite.take();
    return report;
}

std::vector<Expr> default_corpus() {
    return {parse("a.(b.a)*"), parse("(a.b)*.a"), parse("a*"), parse("1"), parse("0")};
}

}  // namespace kaw
