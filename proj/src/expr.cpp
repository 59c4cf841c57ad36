#include "kaw/expr.hpp"

#include <cctype>
#include <unordered_map>

namespace kaw {

bool is_letter(char c) { return c >= 'a' && c <= 'z'; }

struct ExprNode {
    ExprKind kind;
    Letter letter = 0;
    Expr left;   // plus/times lhs, star body
    Expr right;  // plus/times rhs

    ExprNode(ExprKind k, Letter a, Expr l, Expr r)
        : kind(k), letter(a), left(std::move(l)), right(std::move(r)) {}
};

namespace {

const std::shared_ptr<const ExprNode>& zero_node() {
    static const auto node =
        std::make_shared<const ExprNode>(ExprKind::zero, 0, Expr(), Expr());
    return node;
}

const std::shared_ptr<const ExprNode>& one_node() {
    static const auto node =
        std::make_shared<const ExprNode>(ExprKind::one, 0, Expr(), Expr());
    return node;
}

}  // namespace

// Expr() must not recurse into zero_node(), whose ExprNode holds default
// Exprs; a null node_ therefore also denotes 0.
Expr::Expr() : node_(nullptr) {}

Expr Expr::zero() { return Expr(zero_node()); }
Expr Expr::one() { return Expr(one_node()); }

Expr Expr::atom(Letter a) {
    if (!is_letter(a))
        throw std::invalid_argument(std::string("not a letter: '") + a + "'");
    return Expr(std::make_shared<const ExprNode>(ExprKind::atom, a, Expr(), Expr()));
}

Expr Expr::plus(const Expr& l, const Expr& r) {
    return Expr(std::make_shared<const ExprNode>(ExprKind::plus, 0, l, r));
}

Expr Expr::times(const Expr& l, const Expr& r) {
    return Expr(std::make_shared<const ExprNode>(ExprKind::times, 0, l, r));
}

Expr Expr::star(const Expr& e) {
    return Expr(std::make_shared<const ExprNode>(ExprKind::star, 0, e, Expr()));
}

ExprKind Expr::kind() const { return node_ ? node_->kind : ExprKind::zero; }

Letter Expr::letter() const { return node_->letter; }
const Expr& Expr::left() const { return node_->left; }
const Expr& Expr::right() const { return node_->right; }
const Expr& Expr::body() const { return node_->left; }

bool Expr::operator==(const Expr& other) const {
    const ExprNode* a = node_.get();
    const ExprNode* b = other.node_.get();
    if (a == b) return true;
    ExprKind ka = a ? a->kind : ExprKind::zero;
    ExprKind kb = b ? b->kind : ExprKind::zero;
    if (ka != kb) return false;
    switch (ka) {
        case ExprKind::zero:
        case ExprKind::one:
            return true;
        case ExprKind::atom:
            return a->letter == b->letter;
        case ExprKind::star:
            return a->left == b->left;
        case ExprKind::plus:
        case ExprKind::times:
            return a->left == b->left && a->right == b->right;
    }
    return false;
}

// --- parsing ------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Expr run() {
        Expr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected input", pos_);
        return e;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    Expr parse_sum() {
        std::vector<Expr> terms{parse_prod()};
        while (peek_is('+')) {
            ++pos_;
            terms.push_back(parse_prod());
        }
        Expr e = terms.back();
        for (size_t i = terms.size() - 1; i-- > 0;)
            e = Expr::plus(terms[i], e);
        return e;
    }

    Expr parse_prod() {
        std::vector<Expr> factors{parse_star()};
        while (peek_is('.')) {
            ++pos_;
            factors.push_back(parse_star());
        }
        Expr e = factors.back();
        for (size_t i = factors.size() - 1; i-- > 0;)
            e = Expr::times(factors[i], e);
        return e;
    }

    Expr parse_star() {
        Expr e = parse_atom();
        while (peek_is('*')) {
            ++pos_;
            e = Expr::star(e);
        }
        return e;
    }

    Expr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("expected expression", pos_);
        char c = text_[pos_];
        if (c == '0') { ++pos_; return Expr::zero(); }
        if (c == '1') { ++pos_; return Expr::one(); }
        if (is_letter(c)) { ++pos_; return Expr::atom(c); }
        if (c == '(') {
            ++pos_;
            Expr e = parse_sum();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        throw ParseError(std::string("expected expression, found '") + c + "'", pos_);
    }
};

}  // namespace

ParseError::ParseError(const std::string& msg, size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}

Expr parse(const std::string& text) { return Parser(text).run(); }

// --- printing -----------------------------------------------------------

namespace {

// Precedence: star > times > plus. A left-nested plus/times needs parens to
// survive the right-associating parser; right nesting prints bare.
void print_rec(const Expr& e, std::string& out) {
    switch (e.kind()) {
        case ExprKind::zero: out += '0'; return;
        case ExprKind::one: out += '1'; return;
        case ExprKind::atom: out += e.letter(); return;
        case ExprKind::star: {
            const Expr& b = e.body();
            bool parens = b.kind() == ExprKind::plus || b.kind() == ExprKind::times;
            if (parens) out += '(';
            print_rec(b, out);
            if (parens) out += ')';
            out += '*';
            return;
        }
        case ExprKind::times: {
            const Expr& l = e.left();
            bool lparens = l.kind() == ExprKind::plus || l.kind() == ExprKind::times;
            if (lparens) out += '(';
            print_rec(l, out);
            if (lparens) out += ')';
            out += '.';
            const Expr& r = e.right();
            bool rparens = r.kind() == ExprKind::plus;
            if (rparens) out += '(';
            print_rec(r, out);
            if (rparens) out += ')';
            return;
        }
        case ExprKind::plus: {
            const Expr& l = e.left();
            bool lparens = l.kind() == ExprKind::plus;
            if (lparens) out += '(';
            print_rec(l, out);
            if (lparens) out += ')';
            out += '+';
            print_rec(e.right(), out);
            return;
        }
    }
}

}  // namespace

std::string to_string(const Expr& e) {
    std::string out;
    print_rec(e, out);
    return out;
}

// --- ExprSet ------------------------------------------------------------

ExprSet::ExprSet(std::initializer_list<Expr> items) {
    for (const Expr& e : items) insert(e);
}

bool ExprSet::insert(const Expr& e) {
    return by_print_.emplace(to_string(e), e).second;
}

void ExprSet::unite(const ExprSet& other) {
    for (const auto& [key, e] : other.by_print_) by_print_.emplace(key, e);
}

bool ExprSet::contains(const Expr& e) const {
    return by_print_.count(to_string(e)) != 0;
}

std::vector<Expr> ExprSet::items() const {
    std::vector<Expr> out;
    out.reserve(by_print_.size());
    for (const auto& [key, e] : by_print_) out.push_back(e);
    return out;
}

bool ExprSet::operator==(const ExprSet& other) const {
    if (by_print_.size() != other.by_print_.size()) return false;
    auto it = by_print_.begin();
    auto jt = other.by_print_.begin();
    for (; it != by_print_.end(); ++it, ++jt)
        if (it->first != jt->first) return false;
    return true;
}

ExprSet postfix_times(const ExprSet& s, const Expr& e) {
    ExprSet out;
    for (const Expr& x : s) out.insert(Expr::times(x, e));
    return out;
}

// --- derivative calculus --------------------------------------------------

bool nullable(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::zero:
        case ExprKind::atom:
            return false;
        case ExprKind::one:
        case ExprKind::star:
            return true;
        case ExprKind::plus:
            return nullable(e.left()) || nullable(e.right());
        case ExprKind::times:
            return nullable(e.left()) && nullable(e.right());
    }
    return false;
}

ExprSet derive(const Expr& e, Letter a) {
    switch (e.kind()) {
        case ExprKind::zero:
        case ExprKind::one:
            return {};
        case ExprKind::atom:
            return e.letter() == a ? ExprSet{Expr::one()} : ExprSet{};
        case ExprKind::plus: {
            ExprSet out = derive(e.left(), a);
            out.unite(derive(e.right(), a));
            return out;
        }
        case ExprKind::times: {
            ExprSet out = postfix_times(derive(e.left(), a), e.right());
            if (nullable(e.left())) out.unite(derive(e.right(), a));
            return out;
        }
        case ExprKind::star:
            return postfix_times(derive(e.body(), a), e);
    }
    return {};
}

ExprSet initials(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::zero:
            return {};
        case ExprKind::one:
            return {Expr::one()};
        case ExprKind::atom:
            return {e};
        case ExprKind::plus: {
            ExprSet out = initials(e.left());
            out.unite(initials(e.right()));
            return out;
        }
        case ExprKind::times:
            return postfix_times(initials(e.left()), e.right());
        case ExprKind::star: {
            ExprSet out = postfix_times(initials(e.body()), e);
            out.insert(Expr::one());
            return out;
        }
    }
    return {};
}

ExprSet reachset(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::zero:
            return {};
        case ExprKind::one:
            return {Expr::one()};
        case ExprKind::atom:
            return {e, Expr::one()};
        case ExprKind::plus: {
            ExprSet out = reachset(e.left());
            out.unite(reachset(e.right()));
            return out;
        }
        case ExprKind::times: {
            ExprSet out = postfix_times(reachset(e.left()), e.right());
            out.unite(reachset(e.right()));
            return out;
        }
        case ExprKind::star: {
            ExprSet out = postfix_times(reachset(e.body()), e);
            out.insert(Expr::one());
            return out;
        }
    }
    return {};
}

bool member(const Word& w, const Expr& e) {
    ExprSet current{e};
    for (Letter a : w) {
        ExprSet next;
        for (const Expr& x : current) next.unite(derive(x, a));
        current = std::move(next);
        if (current.empty()) return false;
    }
    for (const Expr& x : current)
        if (nullable(x)) return true;
    return false;
}

// --- enumeration oracle ---------------------------------------------------

namespace {

uint64_t ipow_sat(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    while (exp--) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

std::set<Word> enumerate_rec(const Expr& e, int maxlen, uint64_t budget) {
    switch (e.kind()) {
        case ExprKind::zero:
            return {};
        case ExprKind::one:
            return {Word()};
        case ExprKind::atom:
            if (maxlen >= 1) return {Word(1, e.letter())};
            return {};
        case ExprKind::plus: {
            std::set<Word> out = enumerate_rec(e.left(), maxlen, budget);
            std::set<Word> rhs = enumerate_rec(e.right(), maxlen, budget);
            out.insert(rhs.begin(), rhs.end());
            return out;
        }
        case ExprKind::times: {
            std::set<Word> lhs = enumerate_rec(e.left(), maxlen, budget);
            std::set<Word> rhs = enumerate_rec(e.right(), maxlen, budget);
            std::set<Word> out;
            for (const Word& u : lhs)
                for (const Word& v : rhs) {
                    if (u.size() + v.size() <= static_cast<size_t>(maxlen))
                        out.insert(u + v);
                    if (out.size() > budget)
                        throw ResourceError("enumeration exceeds budget");
                }
            return out;
        }
        case ExprKind::star: {
            std::set<Word> base = enumerate_rec(e.body(), maxlen, budget);
            base.erase(Word());
            std::set<Word> out{Word()};
            std::set<Word> frontier = out;
            while (!frontier.empty()) {
                std::set<Word> next;
                for (const Word& u : frontier)
                    for (const Word& v : base) {
                        if (u.size() + v.size() > static_cast<size_t>(maxlen)) continue;
                        Word w = u + v;
                        if (out.insert(w).second) next.insert(std::move(w));
                        if (out.size() > budget)
                            throw ResourceError("enumeration exceeds budget");
                    }
                frontier = std::move(next);
            }
            return out;
        }
    }
    return {};
}

}  // namespace

std::set<Word> enumerate_words(const Expr& e, int maxlen, uint64_t budget) {
    if (maxlen < 0) return {};
    size_t sigma = letters(e).size();
    if (ipow_sat(sigma ? sigma : 1, static_cast<uint64_t>(maxlen)) > budget)
        throw ResourceError("word universe exceeds budget");
    return enumerate_rec(e, maxlen, budget);
}

std::set<Letter> letters(const Expr& e) {
    std::set<Letter> out;
    std::vector<const Expr*> stack{&e};
    while (!stack.empty()) {
        const Expr* cur = stack.back();
        stack.pop_back();
        switch (cur->kind()) {
            case ExprKind::atom:
                out.insert(cur->letter());
                break;
            case ExprKind::plus:
            case ExprKind::times:
                stack.push_back(&cur->left());
                stack.push_back(&cur->right());
                break;
            case ExprKind::star:
                stack.push_back(&cur->body());
                break;
            default:
                break;
        }
    }
    return out;
}

Expr word_to_expr(const Word& w) {
    if (w.empty()) return Expr::one();
    Expr e = Expr::atom(w.back());
    for (size_t i = w.size() - 1; i-- > 0;)
        e = Expr::times(Expr::atom(w[i]), e);
    return e;
}

Expr sum_of(const std::vector<Expr>& terms) {
    if (terms.empty()) return Expr::zero();
    Expr e = terms.back();
    for (size_t i = terms.size() - 1; i-- > 0;)
        e = Expr::plus(terms[i], e);
    return e;
}

uint64_t node_count(const Expr& e) {
    std::unordered_map<const ExprNode*, uint64_t> memo;
    auto rec = [&](auto&& self, const Expr& x) -> uint64_t {
        const ExprNode* key = x.raw();
        if (key) {
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        uint64_t n = 1;
        auto add = [&](uint64_t m) { n = (n > UINT64_MAX - m) ? UINT64_MAX : n + m; };
        switch (x.kind()) {
            case ExprKind::plus:
            case ExprKind::times:
                add(self(self, x.left()));
                add(self(self, x.right()));
                break;
            case ExprKind::star:
                add(self(self, x.body()));
                break;
            default:
                break;
        }
        if (key) memo.emplace(key, n);
        return n;
    };
    return rec(rec, e);
}

}  // namespace kaw
