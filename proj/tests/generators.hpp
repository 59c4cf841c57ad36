#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "kaw/expr.hpp"
#include "kaw/nfa.hpp"
#include "kaw/transform.hpp"

// Deterministic random instances shared by the unit and acceptance suites.
namespace kaw::testgen {

inline Expr random_expr(std::mt19937_64& gen, int budget,
                        const std::vector<Letter>& alpha) {
    auto chance = [&](int percent) {
        return std::uniform_int_distribution<int>(0, 99)(gen) < percent;
    };
    if (budget <= 1) {
        int roll = std::uniform_int_distribution<int>(0, 99)(gen);
        if (roll < 70 && !alpha.empty()) {
            std::uniform_int_distribution<size_t> pick(0, alpha.size() - 1);
            return Expr::atom(alpha[pick(gen)]);
        }
        return roll < 85 ? Expr::one() : Expr::zero();
    }
    if (chance(20)) return random_expr(gen, 1, alpha);
    int roll = std::uniform_int_distribution<int>(0, 99)(gen);
    if (roll < 20) return Expr::star(random_expr(gen, budget - 1, alpha));
    int left_budget = std::uniform_int_distribution<int>(1, budget - 1)(gen);
    Expr l = random_expr(gen, left_budget, alpha);
    Expr r = random_expr(gen, budget - left_budget, alpha);
    return roll < 55 ? Expr::plus(l, r) : Expr::times(l, r);
}

inline Nfa random_nfa(std::mt19937_64& gen, int max_states,
                      const std::vector<Letter>& alpha, double density = 0.3) {
    std::uniform_int_distribution<int> state_count(1, max_states);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int n = state_count(gen);
    Nfa a;
    for (int q = 0; q < n; ++q) a.add_state("q" + std::to_string(q));
    for (int q = 0; q < n; ++q)
        for (Letter c : alpha)
            for (int q2 = 0; q2 < n; ++q2)
                if (coin(gen) < density) a.add_transition(q, c, q2);
    for (int q = 0; q < n; ++q) {
        if (coin(gen) < 0.4) a.initials.insert(q);
        if (coin(gen) < 0.4) a.finals.insert(q);
    }
    if (a.initials.empty())
        a.initials.insert(std::uniform_int_distribution<int>(0, n - 1)(gen));
    return a;
}

/// Redraws until the transition monoid fits under the cap; keeps the
/// transformation suites inside symbolic-solver territory.
inline std::pair<Nfa, TransitionMonoid> random_nfa_with_small_monoid(
    std::mt19937_64& gen, int max_states, const std::vector<Letter>& alpha,
    size_t monoid_cap) {
    while (true) {
        Nfa a = random_nfa(gen, max_states, alpha, 0.25);
        try {
            TransitionMonoid m = transition_monoid(a, {}, monoid_cap);
            return {std::move(a), std::move(m)};
        } catch (const ResourceError&) {
            continue;
        }
    }
}

// --- language-preserving rewriting -----------------------------------------

namespace detail {

using Path = std::vector<int>;  // 0 descends left/body, 1 descends right

inline void collect_paths(const Expr& e, Path& cur, std::vector<Path>& out) {
    out.push_back(cur);
    switch (e.kind()) {
        case ExprKind::plus:
        case ExprKind::times:
            cur.push_back(0);
            collect_paths(e.left(), cur, out);
            cur.back() = 1;
            collect_paths(e.right(), cur, out);
            cur.pop_back();
            break;
        case ExprKind::star:
            cur.push_back(0);
            collect_paths(e.body(), cur, out);
            cur.pop_back();
            break;
        default:
            break;
    }
}

inline Expr get_at(const Expr& e, const Path& path, size_t depth = 0) {
    if (depth == path.size()) return e;
    if (e.kind() == ExprKind::star) return get_at(e.body(), path, depth + 1);
    return get_at(path[depth] == 0 ? e.left() : e.right(), path, depth + 1);
}

inline Expr replace_at(const Expr& e, const Path& path, const Expr& repl,
                       size_t depth = 0) {
    if (depth == path.size()) return repl;
    switch (e.kind()) {
        case ExprKind::star:
            return Expr::star(replace_at(e.body(), path, repl, depth + 1));
        case ExprKind::plus:
            return path[depth] == 0
                       ? Expr::plus(replace_at(e.left(), path, repl, depth + 1), e.right())
                       : Expr::plus(e.left(), replace_at(e.right(), path, repl, depth + 1));
        case ExprKind::times:
            return path[depth] == 0
                       ? Expr::times(replace_at(e.left(), path, repl, depth + 1), e.right())
                       : Expr::times(e.left(), replace_at(e.right(), path, repl, depth + 1));
        default:
            return repl;  // unreachable for well-formed paths
    }
}

/// Equational rewrites at one node; every result denotes the same language.
inline std::vector<Expr> rewrites_at(const Expr& e) {
    std::vector<Expr> out;
    // introductions applicable anywhere
    out.push_back(Expr::plus(e, e));
    out.push_back(Expr::plus(e, Expr::zero()));
    out.push_back(Expr::times(e, Expr::one()));
    out.push_back(Expr::times(Expr::one(), e));

    switch (e.kind()) {
        case ExprKind::plus: {
            const Expr& l = e.left();
            const Expr& r = e.right();
            out.push_back(Expr::plus(r, l));
            if (l == r) out.push_back(l);
            if (r.kind() == ExprKind::zero) out.push_back(l);
            if (l.kind() == ExprKind::zero) out.push_back(r);
            if (r.kind() == ExprKind::plus)
                out.push_back(Expr::plus(Expr::plus(l, r.left()), r.right()));
            if (l.kind() == ExprKind::plus)
                out.push_back(Expr::plus(l.left(), Expr::plus(l.right(), r)));
            // x.y + x.z -> x.(y+z) and (x.z + y.z) -> (x+y).z
            if (l.kind() == ExprKind::times && r.kind() == ExprKind::times) {
                if (l.left() == r.left())
                    out.push_back(Expr::times(l.left(), Expr::plus(l.right(), r.right())));
                if (l.right() == r.right())
                    out.push_back(Expr::times(Expr::plus(l.left(), r.left()), l.right()));
            }
            // 1 + x.x* -> x*
            if (l.kind() == ExprKind::one && r.kind() == ExprKind::times &&
                r.right().kind() == ExprKind::star && r.right().body() == r.left())
                out.push_back(r.right());
            break;
        }
        case ExprKind::times: {
            const Expr& l = e.left();
            const Expr& r = e.right();
            if (l.kind() == ExprKind::zero || r.kind() == ExprKind::zero)
                out.push_back(Expr::zero());
            if (l.kind() == ExprKind::one) out.push_back(r);
            if (r.kind() == ExprKind::one) out.push_back(l);
            if (r.kind() == ExprKind::times)
                out.push_back(Expr::times(Expr::times(l, r.left()), r.right()));
            if (l.kind() == ExprKind::times)
                out.push_back(Expr::times(l.left(), Expr::times(l.right(), r)));
            if (r.kind() == ExprKind::plus) {
                out.push_back(Expr::plus(Expr::times(l, r.left()),
                                         Expr::times(l, r.right())));
            }
            if (l.kind() == ExprKind::plus) {
                out.push_back(Expr::plus(Expr::times(l.left(), r),
                                         Expr::times(l.right(), r)));
            }
            break;
        }
        case ExprKind::star:
            // x* -> 1 + x.x*
            out.push_back(Expr::plus(Expr::one(),
                                     Expr::times(e.body(), Expr::star(e.body()))));
            if (e.body().kind() == ExprKind::zero) out.push_back(Expr::one());
            break;
        case ExprKind::zero:
            break;
        default:
            break;
    }
    return out;
}

}  // namespace detail

/// Applies `steps` random language-preserving rewrites at random positions.
inline Expr random_rewrite(std::mt19937_64& gen, Expr e, int steps) {
    for (int i = 0; i < steps; ++i) {
        std::vector<detail::Path> paths;
        detail::Path cur;
        detail::collect_paths(e, cur, paths);
        std::uniform_int_distribution<size_t> pick_path(0, paths.size() - 1);
        const detail::Path& path = paths[pick_path(gen)];
        std::vector<Expr> options = detail::rewrites_at(detail::get_at(e, path));
        std::uniform_int_distribution<size_t> pick_opt(0, options.size() - 1);
        e = detail::replace_at(e, path, options[pick_opt(gen)]);
    }
    return e;
}

/// A random expression and a rewritten twin with the same language.
inline std::pair<Expr, Expr> random_equiv_pair(std::mt19937_64& gen,
                                               const std::vector<Letter>& alpha,
                                               int budget, int steps) {
    Expr e = random_expr(gen, budget, alpha);
    return {e, random_rewrite(gen, e, steps)};
}

}  // namespace kaw::testgen
