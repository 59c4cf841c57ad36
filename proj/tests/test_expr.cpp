#include <doctest.h>

#include "generators.hpp"
#include "kaw/expr.hpp"

using namespace kaw;

namespace {
const Expr a = Expr::atom('a');
const Expr b = Expr::atom('b');
}  // namespace

TEST_CASE("parse builds the grammar-forced tree") {
    Expr e = parse("(a.b)*.a");
    CHECK(e == Expr::times(Expr::star(Expr::times(a, b)), a));
    CHECK(parse("0") == Expr::zero());
    CHECK(parse("1") == Expr::one());
    CHECK(parse(" a + 1 ") == Expr::plus(a, Expr::one()));
    // chains nest to the right
    CHECK(parse("a.b.a") == Expr::times(a, Expr::times(b, a)));
    CHECK(parse("a+b+a") == Expr::plus(a, Expr::plus(b, a)));
    CHECK(parse("a**") == Expr::star(Expr::star(a)));
}

TEST_CASE("parse rejects malformed input with a position") {
    CHECK_THROWS_AS(parse("a+"), ParseError);
    try {
        parse("a+");
    } catch (const ParseError& ex) {
        CHECK(ex.position == 2);
    }
    CHECK_THROWS_AS(parse("(a"), ParseError);
    CHECK_THROWS_AS(parse("a)"), ParseError);
    CHECK_THROWS_AS(parse("A"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("print uses minimal parentheses") {
    CHECK(to_string(Expr::zero()) == "0");
    CHECK(to_string(Expr::times(Expr::star(Expr::times(b, a)), a)) == "(b.a)*.a");
    CHECK(to_string(Expr::plus(a, Expr::one())) == "a+1");
    // left nesting is preserved through parentheses
    CHECK(to_string(Expr::times(Expr::times(a, b), a)) == "(a.b).a");
    CHECK(to_string(Expr::plus(Expr::plus(a, b), a)) == "(a+b)+a");
}

TEST_CASE("parse after print is the identity on random expressions") {
    std::mt19937_64 gen(7);
    for (int i = 0; i < 300; ++i) {
        Expr e = testgen::random_expr(gen, 14, {'a', 'b', 'c'});
        CHECK(parse(to_string(e)) == e);
    }
}

TEST_CASE("nullable matches the empty-word test") {
    CHECK(nullable(parse("1.(b.a)*")));
    CHECK_FALSE(nullable(parse("a.(b.a)*")));
    CHECK_FALSE(nullable(Expr::zero()));
    CHECK(nullable(Expr::one()));
    CHECK(nullable(parse("a*")));
    CHECK_FALSE(nullable(parse("a.b")));
}

TEST_CASE("derive on atoms and products") {
    CHECK(derive(b, 'a').empty());
    CHECK(derive(a, 'a') == ExprSet{Expr::one()});
    CHECK(derive(parse("a.(b.a)*"), 'a') == ExprSet{parse("1.(b.a)*")});
    CHECK(derive(Expr::zero(), 'a').empty());
    CHECK(derive(Expr::one(), 'a').empty());
    // nullable left factors contribute the right derivative
    CHECK(derive(parse("a*.b"), 'b') == ExprSet{Expr::one()});
}

TEST_CASE("initial expressions") {
    CHECK(initials(Expr::zero()).empty());
    CHECK(initials(a) == ExprSet{a});
    CHECK(initials(parse("a.(b.a)*")) == ExprSet{parse("a.(b.a)*")});
    CHECK(initials(parse("a*")) == ExprSet{parse("a.a*"), Expr::one()});
    CHECK(initials(parse("a+1")) == ExprSet{a, Expr::one()});
}

TEST_CASE("reachable set of a.(b.a)* has five elements, duplicates kept") {
    ExprSet rho = reachset(parse("a.(b.a)*"));
    ExprSet expected{parse("a.(b.a)*"), parse("1.(b.a)*"), parse("1"),
                     parse("(b.a).(b.a)*"), parse("(1.a).(b.a)*")};
    CHECK(rho.size() == 5);
    CHECK(rho == expected);
}

TEST_CASE("reachable set of atoms and zero") {
    CHECK(reachset(a) == ExprSet{a, Expr::one()});
    CHECK(reachset(Expr::zero()).empty());
}

TEST_CASE("membership via derivatives") {
    CHECK(member("a", parse("(a.b)*.a")));
    CHECK(member("aba", parse("a.(b.a)*")));
    CHECK_FALSE(member("", a));
    CHECK_FALSE(member("ab", parse("(a.b)*.a")));
    CHECK(member("ababa", parse("(a.b)*.a")));
}

TEST_CASE("enumeration oracle frozen values") {
    CHECK(enumerate_words(parse("(a.b)*.a"), 3) == std::set<Word>{"a", "aba"});
    CHECK(enumerate_words(Expr::zero(), 4).empty());
    CHECK(enumerate_words(Expr::one(), 2) == std::set<Word>{""});
    CHECK(enumerate_words(parse("a.(b.a)*"), 3) == std::set<Word>{"a", "aba"});
    CHECK(enumerate_words(parse("a*"), 3) == std::set<Word>{"", "a", "aa", "aaa"});
    CHECK(enumerate_words(parse("a+b"), 1) == std::set<Word>{"a", "b"});
}

TEST_CASE("enumeration is guarded by a budget") {
    Expr big = parse("(a+b+c+d+e+f)*");
    CHECK_THROWS_AS(enumerate_words(big, 12, 1000), ResourceError);
}

TEST_CASE("derivatives stay inside the reachable set") {
    std::mt19937_64 gen(11);
    for (int i = 0; i < 150; ++i) {
        Expr e = testgen::random_expr(gen, 12, {'a', 'b'});
        ExprSet rho = reachset(e);
        for (const Expr& i0 : initials(e)) CHECK(rho.contains(i0));
        for (const Expr& s : rho) {
            for (Letter c : {'a', 'b'})
                for (const Expr& d : derive(s, c)) CHECK(rho.contains(d));
            ExprSet inner = reachset(s);
            for (const Expr& x : inner) CHECK(rho.contains(x));
        }
    }
}

TEST_CASE("derivative engine agrees with the enumeration oracle") {
    std::mt19937_64 gen(13);
    std::vector<Word> universe{""};
    for (size_t i = 0; i < universe.size() && universe[i].size() < 8; ++i)
        for (Letter c : {'a', 'b'}) universe.push_back(universe[i] + c);
    for (int i = 0; i < 80; ++i) {
        Expr e = testgen::random_expr(gen, 12, {'a', 'b'});
        std::set<Word> lang = enumerate_words(e, 8);
        CHECK(nullable(e) == (lang.count("") == 1));
        for (const Word& w : universe) {
            CAPTURE(to_string(e));
            CAPTURE(w);
            CHECK(member(w, e) == (lang.count(w) == 1));
        }
    }
}

TEST_CASE("initial expressions reconstruct the language") {
    std::mt19937_64 gen(17);
    for (int i = 0; i < 100; ++i) {
        Expr e = testgen::random_expr(gen, 12, {'a', 'b'});
        std::set<Word> whole = enumerate_words(e, 4);
        std::set<Word> split;
        for (const Expr& i0 : initials(e)) {
            auto part = enumerate_words(i0, 4);
            split.insert(part.begin(), part.end());
        }
        CHECK(whole == split);
    }
}

TEST_CASE("nullability and derivatives under-approximate the language") {
    std::mt19937_64 gen(19);
    for (int i = 0; i < 100; ++i) {
        Expr e = testgen::random_expr(gen, 10, {'a', 'b'});
        std::set<Word> lang = enumerate_words(e, 5);
        if (nullable(e)) CHECK(lang.count("") == 1);
        for (Letter c : {'a', 'b'})
            for (const Expr& d : derive(e, c))
                for (const Word& w : enumerate_words(d, 4)) {
                    CAPTURE(to_string(e));
                    CHECK(lang.count(Word(1, c) + w) == 1);
                }
    }
}

TEST_CASE("words convert to right-nested products") {
    CHECK(word_to_expr("") == Expr::one());
    CHECK(word_to_expr("aba") == Expr::times(a, Expr::times(b, a)));
    CHECK(sum_of({}) == Expr::zero());
    CHECK(sum_of({a}) == a);
    CHECK(sum_of({a, b, a}) == Expr::plus(a, Expr::plus(b, a)));
}

TEST_CASE("expression sets iterate in printed order and deduplicate") {
    ExprSet s;
    CHECK(s.insert(parse("a.b")));
    CHECK_FALSE(s.insert(parse("a.b")));
    CHECK(s.insert(parse("a+b")));
    CHECK(s.insert(Expr::one()));
    auto items = s.items();
    REQUIRE(items.size() == 3);
    CHECK(to_string(items[0]) == "1");
    CHECK(to_string(items[1]) == "a+b");  // '+' sorts before '.'
    CHECK(to_string(items[2]) == "a.b");
}
