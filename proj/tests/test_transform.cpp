#include <doctest.h>

#include "generators.hpp"
#include "kaw/solver.hpp"
#include "kaw/transform.hpp"

using namespace kaw;

namespace {

Nfa alternating() {
    Nfa a;
    for (int q = 0; q < 4; ++q) a.add_state("q" + std::to_string(q));
    a.add_transition(0, 'a', 1);
    a.add_transition(0, 'a', 3);
    a.add_transition(1, 'b', 2);
    a.add_transition(2, 'a', 1);
    a.add_transition(2, 'a', 3);
    a.initials = {0};
    a.finals = {3};
    return a;
}

SolveOptions simplified() {
    SolveOptions opts;
    opts.simplify = true;
    return opts;
}

}  // namespace

TEST_CASE("transition monoid of the alternating automaton") {
    Nfa a = alternating();
    TransitionMonoid m = transition_monoid(a);
    CHECK(m.size() == 6);

    // the six reachable transformations
    CHECK(m.index_of(identity_relation(4)).has_value());
    CHECK(m.index_of(word_relation(a, "a")).has_value());
    CHECK(m.index_of(word_relation(a, "b")).has_value());
    CHECK(m.index_of(word_relation(a, "ab")).has_value());
    CHECK(m.index_of(word_relation(a, "ba")).has_value());
    StateRelation empty;
    empty.num_states = 4;
    CHECK(m.index_of(empty).has_value());

    // identifications stated alongside the reachable part
    CHECK(word_relation(a, "aba") == word_relation(a, "a"));
    CHECK(word_relation(a, "bab") == word_relation(a, "b"));
    CHECK(word_relation(a, "aa") == empty);
    CHECK(word_relation(a, "bb") == empty);
    CHECK(word_relation(a, "baa") == empty);
    CHECK(word_relation(a, "abb") == empty);

    // element 0 is the identity and witnesses are shortlex-minimal
    CHECK(m.elements[0].relation == identity_relation(4));
    CHECK(m.elements[0].witness == "");
    for (const MonoidElement& el : m.elements)
        CHECK(word_relation(a, el.witness) == el.relation);
}

TEST_CASE("a self-loop collapses the monoid to the identity") {
    Nfa a;
    a.add_state("q0");
    a.add_transition(0, 'a', 0);
    a.initials = {0};
    a.finals = {0};
    TransitionMonoid m = transition_monoid(a);
    CHECK(m.size() == 1);
    CHECK(m.generators.at('a') == 0);
}

TEST_CASE("derivative automaton of a.(b.a)* has the same six-element monoid") {
    TransitionMonoid m = transition_monoid(antimirov_automaton(parse("a.(b.a)*")));
    CHECK(m.size() == 6);
}

TEST_CASE("monoid elements compose inside the monoid") {
    TransitionMonoid m = transition_monoid(alternating());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) {
            int k = m.compose_elements(static_cast<int>(i), static_cast<int>(j));
            CHECK(m.elements[k].relation ==
                  compose(m.elements[i].relation, m.elements[j].relation));
        }
}

TEST_CASE("composition identities of the running example") {
    Nfa a = alternating();
    CHECK(compose(word_relation(a, "a"), word_relation(a, "b")) ==
          word_relation(a, "ab"));
    StateRelation r = word_relation(a, "ab");
    CHECK(compose(r, identity_relation(4)) == r);
    StateRelation empty;
    empty.num_states = 4;
    CHECK(compose(word_relation(a, "a"), word_relation(a, "a")) == empty);
}

TEST_CASE("monoid construction respects the element budget") {
    Nfa a = alternating();
    CHECK_THROWS_AS(transition_monoid(a, {}, 3), ResourceError);
}

TEST_CASE("transformation automata accept words effecting the target") {
    Nfa a = alternating();
    TransitionMonoid m = transition_monoid(a);

    Nfa to_ba = transformation_automaton(m, word_relation(a, "ba"));
    CHECK(accepts(to_ba, "ba"));
    CHECK_FALSE(accepts(to_ba, "ab"));
    CHECK_FALSE(accepts(to_ba, ""));

    Nfa to_id = transformation_automaton(m, identity_relation(4));
    CHECK(accepts(to_id, ""));
    CHECK_FALSE(accepts(to_id, "a"));

    Nfa to_ab = transformation_automaton(m, word_relation(a, "ab"));
    CHECK(accepts(to_ab, "ab"));
    CHECK(accepts(to_ab, "abab"));
    CHECK_FALSE(accepts(to_ab, "a"));
}

TEST_CASE("transformation automata are deterministic over the monoid part") {
    Nfa a = alternating();
    TransitionMonoid m = transition_monoid(a);
    Nfa ta = transformation_automaton(m, word_relation(a, "ab"));
    std::set<Letter> sigma = a.alphabet();
    for (size_t q = 0; q < m.size(); ++q)
        for (Letter c : sigma) {
            REQUIRE(ta.delta[q].count(c) == 1);
            CHECK(ta.delta[q].at(c).size() == 1);
        }
    CHECK(ta.initials == std::set<int>{0});
}

TEST_CASE("an unreachable target keeps the language empty") {
    Nfa a = alternating();
    TransitionMonoid m = transition_monoid(a);
    StateRelation everything;
    everything.num_states = 4;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) everything.pairs.emplace(i, j);
    REQUIRE_FALSE(m.index_of(everything).has_value());

    Nfa ta = transformation_automaton(m, everything);
    CHECK(ta.num_states() == static_cast<int>(m.size()) + 1);
    Expr language = soli(ta, simplified());
    CHECK(enumerate_words(language, 5).empty());
}

TEST_CASE("words effecting a transformation, solved symbolically") {
    // the set of words whose relation equals a given target is exactly the
    // language of the solved transformation automaton
    std::mt19937_64 gen(61);
    for (int i = 0; i < 12; ++i) {
        auto [a, m] = testgen::random_nfa_with_small_monoid(gen, 3, {'a', 'b'}, 12);
        std::uniform_int_distribution<size_t> pick(0, m.size() - 1);
        const StateRelation& target = m.elements[pick(gen)].relation;
        Expr language = soli(transformation_automaton(m, target), simplified());
        std::set<Word> described = enumerate_words(language, 5);
        // only words over the automaton's own alphabet are in scope
        std::vector<Word> universe{""};
        for (size_t u = 0; u < universe.size() && universe[u].size() < 5; ++u)
            for (Letter c : a.alphabet()) universe.push_back(universe[u] + c);
        for (const Word& w : universe) {
            bool effects = word_relation(a, w) == target;
            CAPTURE(to_json(a));
            CAPTURE(w);
            CHECK(effects == (described.count(w) == 1));
        }
    }
}

TEST_CASE("letter lemma: each letter reaches its own step relation") {
    std::mt19937_64 gen(67);
    for (int i = 0; i < 10; ++i) {
        auto [a, m] = testgen::random_nfa_with_small_monoid(gen, 3, {'a', 'b'}, 10);
        for (Letter c : a.alphabet()) {
            Expr solved = soli(transformation_automaton(m, step_relation(a, c)),
                               simplified());
            CHECK(language_subset(antimirov_automaton(Expr::atom(c)),
                                  antimirov_automaton(solved))
                      .holds);
        }
    }
}

TEST_CASE("composition lemma on solved transformation automata") {
    std::mt19937_64 gen(71);
    for (int i = 0; i < 8; ++i) {
        auto [a, m] = testgen::random_nfa_with_small_monoid(gen, 3, {'a', 'b'}, 10);
        std::uniform_int_distribution<size_t> pick(0, m.size() - 1);
        for (int k = 0; k < 2; ++k) {
            const StateRelation& r1 = m.elements[pick(gen)].relation;
            const StateRelation& r2 = m.elements[pick(gen)].relation;
            Expr lhs = Expr::times(soli(transformation_automaton(m, r1), simplified()),
                                   soli(transformation_automaton(m, r2), simplified()));
            Expr rhs = soli(transformation_automaton(m, compose(r1, r2)), simplified());
            CHECK(language_subset(antimirov_automaton(lhs), antimirov_automaton(rhs))
                      .holds);
        }
    }
}

TEST_CASE("shift lemma on solved transformation automata") {
    std::mt19937_64 gen(73);
    for (int i = 0; i < 8; ++i) {
        auto [a, m] = testgen::random_nfa_with_small_monoid(gen, 3, {'a', 'b'}, 10);
        std::uniform_int_distribution<size_t> pick(0, m.size() - 1);
        for (int k = 0; k < 2; ++k) {
            size_t i1 = pick(gen), i2 = pick(gen), i3 = pick(gen);
            const StateRelation& r1 = m.elements[i1].relation;
            const StateRelation& r2 = m.elements[i2].relation;
            const StateRelation& r3 = m.elements[i3].relation;
            QVector s2 = solve_automaton(transformation_automaton(m, r2), simplified());
            QVector s32 = solve_automaton(
                transformation_automaton(m, compose(r3, r2)), simplified());
            int to = *m.index_of(compose(r3, r1));
            CHECK(language_subset(antimirov_automaton(s2[i1]),
                                  antimirov_automaton(s32[to]))
                      .holds);
        }
    }
}

TEST_CASE("relating a state to an accepting one bounds the solution") {
    std::mt19937_64 gen(79);
    for (int i = 0; i < 8; ++i) {
        auto [a, m] = testgen::random_nfa_with_small_monoid(gen, 3, {'a', 'b'}, 10);
        QVector sol = solve_automaton(a, simplified());
        int done = 0;
        for (const MonoidElement& el : m.elements) {
            if (done >= 2) break;
            for (const auto& [q, qf] : el.relation.pairs) {
                if (!a.finals.count(qf)) continue;
                Expr lhs = soli(transformation_automaton(m, el.relation), simplified());
                CHECK(language_subset(antimirov_automaton(lhs),
                                      antimirov_automaton(sol[q]))
                          .holds);
                ++done;
                break;
            }
        }
    }
}

TEST_CASE("relations serialize to sorted pair arrays") {
    StateRelation r;
    r.num_states = 3;
    r.pairs = {{2, 1}, {0, 2}, {0, 1}};
    CHECK(to_json(r) == "[[0,1],[0,2],[2,1]]");
    CHECK(relation_from_json(to_json(r), 3) == r);
    CHECK(relation_label(r) == "{(0,1),(0,2),(2,1)}");
    CHECK_THROWS_AS(relation_from_json("[[0,5]]", 3), std::invalid_argument);
    CHECK_THROWS_AS(relation_from_json("[[0]]", 3), std::invalid_argument);
}
