#pragma once

#include <string>
#include <vector>

#include "kaw/expr.hpp"
#include "kaw/nfa.hpp"

namespace kaw {

/// Assignment of an expression to each state index.
using QVector = std::vector<Expr>;

/// Expression matrix indexed by state pairs.
using QMatrix = std::vector<std::vector<Expr>>;

struct LinearSystem {
    std::vector<std::string> states;
    QMatrix matrix;
    QVector vec;

    int size() const { return static_cast<int>(vec.size()); }
};

struct SolveOptions {
    /// Apply the light rewrites (x+0, 0+x, x.1, 1.x, x.0, 0.x, 0*) while
    /// building intermediate expressions. Off by default; the checks that
    /// care about output shape rely on the untouched elimination formula.
    bool simplify = false;

    /// Elimination order over state indices; empty means ascending. Results
    /// for different orders differ syntactically but denote the same
    /// languages.
    std::vector<int> pivot_order;
};

/// One bottom-up pass of the light rewrites over an expression.
Expr light_simplify(const Expr& e);

/// Least-solution vector of the system by pivot elimination: the pivot row
/// is folded into the rest using the star of the diagonal entry, the smaller
/// system is solved, and the pivot entry is recovered by back-substitution.
QVector solve_system(const LinearSystem& sys, const SolveOptions& opts = {});

/// The system whose least solution describes state languages: vec is 1 on
/// final states and 0 elsewhere, matrix entries sum the letters that step
/// between the two states (in alphabet order; no edge gives 0).
LinearSystem automaton_to_system(const Nfa& a);

/// solve_system of automaton_to_system; entry q denotes L(a, q).
QVector solve_automaton(const Nfa& a, const SolveOptions& opts = {});

/// Sum of solution entries over initial states; denotes L(a).
Expr soli(const Nfa& a, const SolveOptions& opts = {});

/// Scalar post-multiplication (entrywise s(q).e).
QVector scalar_times(const QVector& s, const Expr& e);

std::string to_json(const LinearSystem& sys);
LinearSystem system_from_json(const std::string& text);

}  // namespace kaw
