#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kaw/models.hpp"
#include "kaw/solver.hpp"

namespace kaw {

struct FmpBudgets {
    size_t max_rho = 10;       // Antimirov state count per expression
    size_t max_monoid = 4096;  // transition monoid elements
};

struct UpperCheckItem {
    StateRelation relation;
    Expr soli_expr;
    bool holds = false;
    Word counterexample;  // valid when !holds
};

/// For every relation in the canonical interpretation of e, the language of
/// the solved transformation automaton must fall inside the language of e.
std::vector<UpperCheckItem> interp_upper_check(const Expr& e, const FmpBudgets& budgets = {});

struct InclusionVerdict {
    std::string name;
    bool holds = false;
    Word counterexample;
};

/// The language of f must fall inside the summed solutions of the
/// transformation automata picked out by interpreting f in e's canonical
/// model (f approximated from above by expressions obtained from e).
InclusionVerdict interp_lower_check(const Expr& e, const Expr& f,
                                    const FmpBudgets& budgets = {});

/// Evidence assembled by the sandwich check: the canonical interpretations on
/// both sides, the two middle expressions, and the four language inclusions
/// chaining f through e's middle up to e and back through f's middle.
struct FmpReport {
    Expr e, f;

    bool precondition_holds = false;  // both canonical models equate e and f
    std::vector<StateRelation> he_of_e, he_of_f;  // interpretations in K[e]
    std::vector<StateRelation> hf_of_e, hf_of_f;  // interpretations in K[f]

    // per-relation solved transformation automata and their sums, in
    // canonical relation order; meaningful when the precondition holds
    std::vector<std::pair<StateRelation, Expr>> middle_terms_e, middle_terms_f;
    Expr middle_e, middle_f;
    std::vector<InclusionVerdict> inclusions;
    bool certified = false;

    size_t rho_e = 0, rho_f = 0, monoid_e = 0, monoid_f = 0;
    double elapsed_seconds = 0.0;
};

/// Runs the full pipeline on the pair. A failing precondition is itself a
/// countermodel (one of the canonical models distinguishes the two
/// expressions); a certified pair is provably equivalent.
FmpReport fmp_sandwich(const Expr& e, const Expr& f, const FmpBudgets& budgets = {});

std::string to_json(const FmpReport& report);

enum class LemmaStatus { pass, fail, skip };

struct LemmaResult {
    std::string lemma;
    std::string instance;
    LemmaStatus status = LemmaStatus::pass;
    std::string detail;
};

struct SuiteReport {
    std::vector<LemmaResult> results;

    size_t failures() const;
    size_t skipped() const;
};

/// Runs the per-module invariant batteries plus the interpretation checks on
/// every corpus expression. Randomized pieces (words, relation picks) draw
/// from the given seed; corpus order fixes the output order.
SuiteReport lemma_suite(const std::vector<Expr>& corpus, uint64_t seed = 0,
                        const FmpBudgets& budgets = {});

/// The running examples used as the default corpus.
std::vector<Expr> default_corpus();

}  // namespace kaw
