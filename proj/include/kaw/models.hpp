#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kaw/expr.hpp"
#include "kaw/transform.hpp"

namespace kaw {

/// Index into a FiniteKa carrier. Only meaningful together with the algebra
/// that produced it.
struct KaElement {
    int index = -1;
    bool operator==(const KaElement& other) const = default;
};

/// A finite Kleene algebra with an explicit carrier, materialized on demand.
/// Two families are provided: powersets of a transition monoid (union,
/// pointwise composition, iterated product closure) and relations on a finite
/// point set (union, relational composition, reflexive-transitive closure).
///
/// Element values are canonical sorted code vectors: monoid element indices
/// for the powerset family, pair codes i*points+j for the relational one.
/// Operation results are memoized; the memo tables are mutex-guarded so
/// concurrent readers are safe.
class FiniteKa {
public:
    enum class Kind { powerset_of_monoid, relational };
    using Value = std::vector<int>;

    static std::shared_ptr<FiniteKa> powerset_of_monoid(TransitionMonoid m,
                                                        std::string name = {});
    /// Relations on {0, ..., points-1}.
    static std::shared_ptr<FiniteKa> relational(int points, std::string name = {});

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const TransitionMonoid& monoid() const;  // powerset family only
    int points() const { return points_; }   // relational family only

    KaElement zero() const;
    KaElement one() const;
    KaElement plus(KaElement x, KaElement y) const;
    KaElement times(KaElement x, KaElement y) const;
    KaElement star(KaElement x) const;
    bool leq(KaElement x, KaElement y) const;

    Value value(KaElement x) const;
    KaElement intern(Value v) const;
    std::string display(KaElement x) const;

    /// Carrier cardinality when it fits in 63 bits.
    std::optional<uint64_t> carrier_size() const;
    size_t materialized() const;
    /// Materializes every carrier element; throws ResourceError beyond the cap.
    void materialize_all(uint64_t cap = 1u << 16) const;

    KaElement random_element(std::mt19937_64& gen, int max_codes = 6) const;

    int base_count() const;  // monoid size resp. number of pair codes
    std::string code_name(int code) const;
    /// Product of two singleton base codes, as a code list (empty or singleton
    /// for relations, always a singleton for monoid elements).
    Value base_product_codes(int i, int j) const;

private:
    FiniteKa() = default;

    Kind kind_ = Kind::relational;
    std::string name_;
    TransitionMonoid monoid_;
    int points_ = 0;

    mutable std::recursive_mutex mu_;
    mutable std::vector<Value> elems_;
    mutable std::map<Value, int> elem_index_;
    mutable std::map<std::pair<int, int>, int> plus_memo_;
    mutable std::map<std::pair<int, int>, int> times_memo_;
    mutable std::map<int, int> star_memo_;
    mutable std::map<std::pair<int, int>, int> base_prod_memo_;
    int zero_ = -1;
    int one_ = -1;

    int intern_locked(Value v) const;
    Value times_value(const Value& a, const Value& b) const;
    Value star_value(const Value& a) const;
    Value base_product(int i, int j) const;  // product of two base codes
    void validate(const Value& v) const;
    void verify_axioms_on_construction() const;
};

/// Powerset lifting of a transition monoid to a star-continuous KA.
std::shared_ptr<FiniteKa> monoid_to_ka(TransitionMonoid m);

/// K_n: the KA of relations on {0..n}.
std::shared_ptr<FiniteKa> relational_ka(int n);

/// Letter assignment into a finite KA. Letters outside the assignment are an
/// error unless absent_letters_are_zero (word models map them to 0).
struct Interpretation {
    std::shared_ptr<FiniteKa> ka;
    std::map<Letter, KaElement> assignment;
    bool absent_letters_are_zero = false;
};

/// Homomorphic extension of the assignment to expressions.
KaElement interpret(const Interpretation& h, const Expr& e);

/// The canonical finite model of e: the powerset KA over the transition
/// monoid of e's Antimirov automaton, with each letter mapped to the
/// singleton of its step relation. The alphabet defaults to letters(e); pass
/// a larger one when interpreting expressions over more letters.
struct CanonicalModel {
    Nfa automaton;
    std::shared_ptr<FiniteKa> ka;
    Interpretation h;

    const TransitionMonoid& monoid() const { return ka->monoid(); }
};

CanonicalModel canonical_model(const Expr& e, std::set<Letter> alphabet = {},
                               size_t monoid_budget = kDefaultMonoidBudget);

/// h_w into K_|w|: letter a maps to {(i, i+1) : w[i] = a}; other letters are 0.
Interpretation word_interpretation(const Word& w);

/// The relations named by a powerset-family element.
std::vector<StateRelation> relations_of(const FiniteKa& ka, KaElement x);

struct Countermodel {
    int n = 0;
    Word word;
    std::pair<int, int> point{0, 0};
    bool in_left = false;  // point lies in the interpretation of the first expr
    Interpretation h;
};

/// Decides language equality; on failure returns the word-model countermodel
/// built from a shortest separating word. The returned point is checked to
/// lie in exactly one of the two interpretations.
std::optional<Countermodel> countermodel_search(const Expr& e, const Expr& f);

std::string to_json(const Countermodel& c);

struct AxiomCheckResult {
    bool ok = true;
    bool exhaustive = false;
    uint64_t checked = 0;
    std::string failure;
};

/// Runs the Kleene-algebra axiom battery, including the left-fixpoint
/// implication: exhaustively when the carrier is at most exhaustive_limit,
/// otherwise on sampled sparse triples.
AxiomCheckResult check_ka_axioms(const FiniteKa& ka, uint64_t samples = 1000,
                                 uint64_t seed = 0, uint64_t exhaustive_limit = 64);

}  // namespace kaw
