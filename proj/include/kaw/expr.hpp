#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace kaw {

// Letters range over a fixed, ordered alphabet 'a'..'z'. The alphabet a
// computation actually works with is the set of letters occurring in its
// inputs.
using Letter = char;

// A word is a (possibly empty) sequence of letters; "" is the empty word.
using Word = std::string;

bool is_letter(char c);

enum class ExprKind : uint8_t { zero, one, atom, plus, times, star };

struct ExprNode;

/// Immutable regular-expression AST. Cheap to copy (shared nodes), compared
/// structurally. The default-constructed expression is 0.
class Expr {
public:
    Expr();

    static Expr zero();
    static Expr one();
    static Expr atom(Letter a);
    static Expr plus(const Expr& l, const Expr& r);
    static Expr times(const Expr& l, const Expr& r);
    static Expr star(const Expr& e);

    ExprKind kind() const;
    Letter letter() const;      // atom only
    const Expr& left() const;   // plus/times
    const Expr& right() const;  // plus/times
    const Expr& body() const;   // star

    bool operator==(const Expr& other) const;
    bool operator!=(const Expr& other) const { return !(*this == other); }

    const ExprNode* raw() const { return node_.get(); }

private:
    explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const ExprNode> node_;
};

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos);
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses the grammar
///   expr := sum; sum := prod ("+" prod)*; prod := star ("." star)*;
///   star := atom "*"*; atom := "0" | "1" | letter | "(" expr ")"
/// Chains of "+" and "." associate to the right; whitespace is ignored.
Expr parse(const std::string& text);

/// Prints with minimal parentheses such that parse(to_string(e)) == e.
std::string to_string(const Expr& e);

/// Finite set of expressions under structural equality, iterated in a
/// canonical order (lexicographic on the printed form).
class ExprSet {
public:
    ExprSet() = default;
    ExprSet(std::initializer_list<Expr> items);

    bool insert(const Expr& e);  // true if newly added
    void unite(const ExprSet& other);
    bool contains(const Expr& e) const;
    size_t size() const { return by_print_.size(); }
    bool empty() const { return by_print_.empty(); }

    std::vector<Expr> items() const;

    bool operator==(const ExprSet& other) const;
    bool operator!=(const ExprSet& other) const { return !(*this == other); }

    class const_iterator {
    public:
        using inner = std::map<std::string, Expr>::const_iterator;
        explicit const_iterator(inner it) : it_(it) {}
        const Expr& operator*() const { return it_->second; }
        const Expr* operator->() const { return &it_->second; }
        const_iterator& operator++() { ++it_; return *this; }
        bool operator!=(const const_iterator& o) const { return it_ != o.it_; }
        bool operator==(const const_iterator& o) const { return it_ == o.it_; }
    private:
        inner it_;
    };
    const_iterator begin() const { return const_iterator(by_print_.begin()); }
    const_iterator end() const { return const_iterator(by_print_.end()); }

private:
    std::map<std::string, Expr> by_print_;
};

/// { e'.e : e' in s }
ExprSet postfix_times(const ExprSet& s, const Expr& e);

/// True iff the empty word belongs to the language of e.
bool nullable(const Expr& e);

/// Antimirov's transition function: the set of derivatives of e after a.
ExprSet derive(const Expr& e, Letter a);

/// Initial expressions: together they make up e.
ExprSet initials(const Expr& e);

/// Reachable expressions: a finite superset of initials(e) closed under
/// derive. Kept as computed; structurally distinct duplicates with the same
/// language are not merged.
ExprSet reachset(const Expr& e);

/// Word membership, by folding derive over w and testing nullable.
bool member(const Word& w, const Expr& e);

inline constexpr uint64_t kDefaultEnumerateBudget = 1u << 22;

/// All words of length <= maxlen in the language of e, by structural
/// recursion (bounded concatenation and star unrolling). Deliberately does
/// not touch derive, so the two can check each other.
std::set<Word> enumerate_words(const Expr& e, int maxlen,
                               uint64_t budget = kDefaultEnumerateBudget);

/// Letters occurring in e.
std::set<Letter> letters(const Expr& e);

/// The word as an expression: right-nested product, "" becomes 1.
Expr word_to_expr(const Word& w);

/// Right-nested sum of the given terms; empty sum is 0, singleton is the
/// term itself.
Expr sum_of(const std::vector<Expr>& terms);

/// Number of nodes of the expression tree (shared subtrees counted once per
/// occurrence, saturating at uint64 max).
uint64_t node_count(const Expr& e);

}  // namespace kaw
