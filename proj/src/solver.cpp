#include "kaw/solver.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace kaw {

namespace {

bool is_zero(const Expr& e) { return e.kind() == ExprKind::zero; }
bool is_one(const Expr& e) { return e.kind() == ExprKind::one; }

Expr mk_plus(const Expr& l, const Expr& r, bool simplify) {
    if (simplify) {
        if (is_zero(l)) return r;
        if (is_zero(r)) return l;
    }
    return Expr::plus(l, r);
}

Expr mk_times(const Expr& l, const Expr& r, bool simplify) {
    if (simplify) {
        if (is_zero(l) || is_zero(r)) return Expr::zero();
        if (is_one(l)) return r;
        if (is_one(r)) return l;
    }
    return Expr::times(l, r);
}

Expr mk_star(const Expr& e, bool simplify) {
    if (simplify && is_zero(e)) return Expr::one();
    return Expr::star(e);
}

// Right-nested sum of terms, with the first term outermost; a single term is
// returned as-is. Used where a base term is extended by a canonical list.
Expr chain_plus(const std::vector<Expr>& terms, bool simplify) {
    if (terms.empty()) return Expr::zero();
    Expr acc = terms.back();
    for (size_t i = terms.size() - 1; i-- > 0;)
        acc = mk_plus(terms[i], acc, simplify);
    return acc;
}

// The matrix arrives permuted so that the current pivot is row/column 0.
QVector solve_rec(const QMatrix& m, const QVector& b, const SolveOptions& opts) {
    const int n = static_cast<int>(b.size());
    if (n == 0) return {};

    Expr pivot_star = mk_star(m[0][0], opts.simplify);

    QMatrix next(n - 1, QVector(n - 1));
    QVector next_b(n - 1);
    for (int p = 1; p < n; ++p) {
        Expr reach = mk_times(m[p][0], pivot_star, opts.simplify);
        for (int p2 = 1; p2 < n; ++p2)
            next[p - 1][p2 - 1] =
                mk_plus(m[p][p2], mk_times(reach, m[0][p2], opts.simplify), opts.simplify);
        next_b[p - 1] = mk_plus(b[p], mk_times(reach, b[0], opts.simplify), opts.simplify);
    }

    QVector t = solve_rec(next, next_b, opts);

    std::vector<Expr> terms{b[0]};
    for (int p = 1; p < n; ++p)
        terms.push_back(mk_times(m[0][p], t[p - 1], opts.simplify));
    Expr s0 = mk_times(pivot_star, chain_plus(terms, opts.simplify), opts.simplify);

    QVector out(n);
    out[0] = s0;
    for (int p = 1; p < n; ++p) out[p] = t[p - 1];
    return out;
}

}  // namespace

Expr light_simplify(const Expr& e) {
    std::unordered_map<const ExprNode*, Expr> memo;
    auto rec = [&](auto&& self, const Expr& x) -> Expr {
        const ExprNode* key = x.raw();
        if (key) {
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        Expr out;
        switch (x.kind()) {
            case ExprKind::zero:
            case ExprKind::one:
            case ExprKind::atom:
                out = x;
                break;
            case ExprKind::plus:
                out = mk_plus(self(self, x.left()), self(self, x.right()), true);
                break;
            case ExprKind::times:
                out = mk_times(self(self, x.left()), self(self, x.right()), true);
                break;
            case ExprKind::star:
                out = mk_star(self(self, x.body()), true);
                break;
        }
        if (key) memo.emplace(key, out);
        return out;
    };
    return rec(rec, e);
}

QVector solve_system(const LinearSystem& sys, const SolveOptions& opts) {
    const int n = sys.size();
    if (static_cast<int>(sys.matrix.size()) != n)
        throw std::invalid_argument("matrix and vector sizes differ");
    for (const auto& row : sys.matrix)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix is not square");

    std::vector<int> order = opts.pivot_order;
    if (order.empty()) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
    }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("pivot order must mention every state once");
    {
        std::vector<bool> seen(n, false);
        for (int q : order) {
            if (q < 0 || q >= n || seen[q])
                throw std::invalid_argument("pivot order must mention every state once");
            seen[q] = true;
        }
    }

    // permute so the requested elimination order becomes 0,1,2,...
    QMatrix m(n, QVector(n));
    QVector b(n);
    for (int i = 0; i < n; ++i) {
        b[i] = sys.vec[order[i]];
        for (int j = 0; j < n; ++j) m[i][j] = sys.matrix[order[i]][order[j]];
    }

    QVector permuted = solve_rec(m, b, opts);

    QVector out(n);
    for (int i = 0; i < n; ++i) out[order[i]] = permuted[i];
    return out;
}

LinearSystem automaton_to_system(const Nfa& a) {
    const int n = a.num_states();
    LinearSystem sys;
    sys.states = a.labels;
    sys.vec.assign(n, Expr::zero());
    sys.matrix.assign(n, QVector(n, Expr::zero()));
    for (int q : a.finals) sys.vec[q] = Expr::one();
    for (int q = 0; q < n; ++q) {
        std::vector<std::vector<Expr>> letters_to(n);
        for (const auto& [c, succs] : a.delta[q])
            for (int q2 : succs) letters_to[q2].push_back(Expr::atom(c));
        for (int q2 = 0; q2 < n; ++q2)
            if (!letters_to[q2].empty()) sys.matrix[q][q2] = sum_of(letters_to[q2]);
    }
    return sys;
}

QVector solve_automaton(const Nfa& a, const SolveOptions& opts) {
    return solve_system(automaton_to_system(a), opts);
}

Expr soli(const Nfa& a, const SolveOptions& opts) {
    QVector s = solve_automaton(a, opts);
    std::vector<Expr> terms;
    for (int q : a.initials) terms.push_back(s[q]);
    Expr out = sum_of(terms);
    return opts.simplify ? light_simplify(out) : out;
}

QVector scalar_times(const QVector& s, const Expr& e) {
    QVector out;
    out.reserve(s.size());
    for (const Expr& x : s) out.push_back(Expr::times(x, e));
    return out;
}

std::string to_json(const LinearSystem& sys) {
    nlohmann::json j;
    j["states"] = sys.states;
    nlohmann::json m = nlohmann::json::array();
    for (const auto& row : sys.matrix) {
        nlohmann::json r = nlohmann::json::array();
        for (const Expr& e : row) r.push_back(to_string(e));
        m.push_back(std::move(r));
    }
    j["matrix"] = std::move(m);
    nlohmann::json v = nlohmann::json::array();
    for (const Expr& e : sys.vec) v.push_back(to_string(e));
    j["vector"] = std::move(v);
    return j.dump(2);
}

LinearSystem system_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    LinearSystem sys;
    for (const auto& s : j.at("states")) sys.states.push_back(s.get<std::string>());
    for (const auto& row : j.at("matrix")) {
        QVector r;
        for (const auto& cell : row) r.push_back(parse(cell.get<std::string>()));
        sys.matrix.push_back(std::move(r));
    }
    for (const auto& cell : j.at("vector"))
        sys.vec.push_back(parse(cell.get<std::string>()));
    if (sys.states.size() != sys.vec.size())
        throw std::invalid_argument("states and vector sizes differ");
    return sys;
}

}  // namespace kaw
