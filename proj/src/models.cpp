#include "kaw/models.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace kaw {

namespace {

FiniteKa::Value value_union(const FiniteKa::Value& a, const FiniteKa::Value& b) {
    FiniteKa::Value out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void sort_unique(FiniteKa::Value& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::shared_ptr<FiniteKa> FiniteKa::powerset_of_monoid(TransitionMonoid m,
                                                       std::string name) {
    auto ka = std::shared_ptr<FiniteKa>(new FiniteKa());
    ka->kind_ = Kind::powerset_of_monoid;
    ka->name_ = name.empty() ? "P(M)" : std::move(name);
    ka->monoid_ = std::move(m);
    ka->zero_ = ka->intern_locked({});
    ka->one_ = ka->intern_locked({0});  // monoid element 0 is the identity
    ka->verify_axioms_on_construction();
    return ka;
}

std::shared_ptr<FiniteKa> FiniteKa::relational(int points, std::string name) {
    if (points < 1) throw std::invalid_argument("relational model needs at least one point");
    auto ka = std::shared_ptr<FiniteKa>(new FiniteKa());
    ka->kind_ = Kind::relational;
    ka->points_ = points;
    ka->name_ = name.empty() ? "R(" + std::to_string(points) + ")" : std::move(name);
    ka->zero_ = ka->intern_locked({});
    Value id;
    for (int i = 0; i < points; ++i) id.push_back(i * points + i);
    ka->one_ = ka->intern_locked(std::move(id));
    ka->verify_axioms_on_construction();
    return ka;
}

const TransitionMonoid& FiniteKa::monoid() const {
    if (kind_ != Kind::powerset_of_monoid)
        throw std::logic_error("not a powerset-of-monoid algebra");
    return monoid_;
}

int FiniteKa::base_count() const {
    return kind_ == Kind::powerset_of_monoid ? static_cast<int>(monoid_.size())
                                             : points_ * points_;
}

std::string FiniteKa::code_name(int code) const {
    if (kind_ == Kind::powerset_of_monoid) {
        const Word& w = monoid_.elements[code].witness;
        return w.empty() ? "id" : "d:" + w;
    }
    return "(" + std::to_string(code / points_) + "," + std::to_string(code % points_) + ")";
}

void FiniteKa::validate(const Value& v) const {
    int limit = base_count();
    int prev = -1;
    for (int code : v) {
        if (code < 0 || code >= limit)
            throw std::invalid_argument("element code out of range");
        if (code <= prev) throw std::invalid_argument("element codes must be sorted");
        prev = code;
    }
}

int FiniteKa::intern_locked(Value v) const {
    auto it = elem_index_.find(v);
    if (it != elem_index_.end()) return it->second;
    int idx = static_cast<int>(elems_.size());
    elem_index_.emplace(v, idx);
    elems_.push_back(std::move(v));
    return idx;
}

KaElement FiniteKa::intern(Value v) const {
    sort_unique(v);
    validate(v);
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return {intern_locked(std::move(v))};
}

KaElement FiniteKa::zero() const { return {zero_}; }
KaElement FiniteKa::one() const { return {one_}; }

FiniteKa::Value FiniteKa::value(KaElement x) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (x.index < 0 || x.index >= static_cast<int>(elems_.size()))
        throw std::invalid_argument("element does not belong to this algebra");
    return elems_[x.index];
}

// Product of two base codes: composition in the monoid, or composition of
// two single pairs (at most one resulting pair) in the relational family.
// Relational results are encoded as a mask-style value with 0 or 1 codes.
FiniteKa::Value FiniteKa::base_product(int i, int j) const {
    if (kind_ == Kind::powerset_of_monoid)
        return {monoid_.compose_elements(i, j)};
    int from1 = i / points_, to1 = i % points_;
    int from2 = j / points_, to2 = j % points_;
    if (to1 != from2) return {};
    return {from1 * points_ + to2};
}

FiniteKa::Value FiniteKa::times_value(const Value& a, const Value& b) const {
    Value out;
    for (int i : a)
        for (int j : b) {
            Value p = base_product(i, j);
            out.insert(out.end(), p.begin(), p.end());
        }
    sort_unique(out);
    return out;
}

FiniteKa::Value FiniteKa::star_value(const Value& a) const {
    // iterated products, grown to a fixpoint from the unit
    Value closure = elems_[one_];
    Value frontier = closure;
    while (!frontier.empty()) {
        Value extended = times_value(frontier, a);
        Value fresh;
        std::set_difference(extended.begin(), extended.end(), closure.begin(),
                            closure.end(), std::back_inserter(fresh));
        closure = value_union(closure, fresh);
        frontier = std::move(fresh);
    }
    return closure;
}

KaElement FiniteKa::plus(KaElement x, KaElement y) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::minmax(x.index, y.index);
    auto it = plus_memo_.find(key);
    if (it != plus_memo_.end()) return {it->second};
    int res = intern_locked(value_union(elems_[x.index], elems_[y.index]));
    plus_memo_.emplace(key, res);
    return {res};
}

KaElement FiniteKa::times(KaElement x, KaElement y) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(x.index, y.index);
    auto it = times_memo_.find(key);
    if (it != times_memo_.end()) return {it->second};
    int res = intern_locked(times_value(elems_[x.index], elems_[y.index]));
    times_memo_.emplace(key, res);
    return {res};
}

KaElement FiniteKa::star(KaElement x) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = star_memo_.find(x.index);
    if (it != star_memo_.end()) return {it->second};
    int res = intern_locked(star_value(elems_[x.index]));
    star_memo_.emplace(x.index, res);
    return {res};
}

bool FiniteKa::leq(KaElement x, KaElement y) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const Value& a = elems_[x.index];
    const Value& b = elems_[y.index];
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string FiniteKa::display(KaElement x) const {
    Value v = value(x);
    std::string out = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += code_name(v[i]);
    }
    out += "}";
    return out;
}

std::optional<uint64_t> FiniteKa::carrier_size() const {
    int bases = base_count();
    if (bases > 62) return std::nullopt;
    return uint64_t{1} << bases;
}

size_t FiniteKa::materialized() const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return elems_.size();
}

void FiniteKa::materialize_all(uint64_t cap) const {
    auto size = carrier_size();
    if (!size || *size > cap)
        throw ResourceError("carrier too large to materialize");
    std::lock_guard<std::recursive_mutex> lock(mu_);
    int bases = base_count();
    for (uint64_t mask = 0; mask < *size; ++mask) {
        Value v;
        for (int b = 0; b < bases; ++b)
            if (mask & (uint64_t{1} << b)) v.push_back(b);
        intern_locked(std::move(v));
    }
}

KaElement FiniteKa::random_element(std::mt19937_64& gen, int max_codes) const {
    int bases = base_count();
    std::uniform_int_distribution<int> size_dist(0, std::min(bases, max_codes));
    int want = size_dist(gen);
    Value v;
    if (bases > 0) {
        std::uniform_int_distribution<int> code_dist(0, bases - 1);
        for (int i = 0; i < want; ++i) v.push_back(code_dist(gen));
    }
    sort_unique(v);
    return intern(std::move(v));
}

void FiniteKa::verify_axioms_on_construction() const {
    auto size = carrier_size();
    AxiomCheckResult res = (size && *size <= 64)
                               ? check_ka_axioms(*this, 0, 0, 64)
                               : check_ka_axioms(*this, 200, 0, 0);
    if (!res.ok)
        throw std::logic_error("constructed algebra violates the axioms: " + res.failure);
}

std::shared_ptr<FiniteKa> monoid_to_ka(TransitionMonoid m) {
    return FiniteKa::powerset_of_monoid(std::move(m));
}

std::shared_ptr<FiniteKa> relational_ka(int n) {
    if (n < 0) throw std::invalid_argument("relational model index must be non-negative");
    return FiniteKa::relational(n + 1, "K" + std::to_string(n));
}

KaElement interpret(const Interpretation& h, const Expr& e) {
    switch (e.kind()) {
        case ExprKind::zero:
            return h.ka->zero();
        case ExprKind::one:
            return h.ka->one();
        case ExprKind::atom: {
            auto it = h.assignment.find(e.letter());
            if (it != h.assignment.end()) return it->second;
            if (h.absent_letters_are_zero) return h.ka->zero();
            throw std::invalid_argument(std::string("letter '") + e.letter() +
                                        "' has no assignment");
        }
        case ExprKind::plus:
            return h.ka->plus(interpret(h, e.left()), interpret(h, e.right()));
        case ExprKind::times:
            return h.ka->times(interpret(h, e.left()), interpret(h, e.right()));
        case ExprKind::star:
            return h.ka->star(interpret(h, e.body()));
    }
    return h.ka->zero();
}

CanonicalModel canonical_model(const Expr& e, std::set<Letter> alphabet,
                               size_t monoid_budget) {
    if (alphabet.empty()) alphabet = letters(e);
    Nfa a = antimirov_automaton(e);
    TransitionMonoid m = transition_monoid(a, alphabet, monoid_budget);
    std::map<Letter, int> generators = m.generators;
    auto ka = FiniteKa::powerset_of_monoid(std::move(m), "K[" + to_string(e) + "]");
    Interpretation h;
    h.ka = ka;
    for (const auto& [c, idx] : generators) h.assignment[c] = ka->intern({idx});
    return {std::move(a), std::move(ka), std::move(h)};
}

Interpretation word_interpretation(const Word& w) {
    int n = static_cast<int>(w.size());
    Interpretation h;
    h.ka = relational_ka(n);
    h.absent_letters_are_zero = true;
    int points = n + 1;
    std::map<Letter, FiniteKa::Value> values;
    for (int i = 0; i < n; ++i) values[w[i]].push_back(i * points + (i + 1));
    for (auto& [c, v] : values) h.assignment[c] = h.ka->intern(std::move(v));
    return h;
}

std::vector<StateRelation> relations_of(const FiniteKa& ka, KaElement x) {
    const TransitionMonoid& m = ka.monoid();
    std::vector<StateRelation> out;
    for (int code : ka.value(x)) out.push_back(m.elements[code].relation);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Countermodel> countermodel_search(const Expr& e, const Expr& f) {
    EquivVerdict verdict = language_equiv(antimirov_automaton(e), antimirov_automaton(f));
    if (verdict.holds) return std::nullopt;

    const Word& w = verdict.counterexample;
    int n = static_cast<int>(w.size());
    Interpretation h = word_interpretation(w);

    int point_code = 0 * (n + 1) + n;
    FiniteKa::Value left = h.ka->value(interpret(h, e));
    FiniteKa::Value right = h.ka->value(interpret(h, f));
    bool in_left = std::binary_search(left.begin(), left.end(), point_code);
    bool in_right = std::binary_search(right.begin(), right.end(), point_code);
    if (in_left == in_right)
        throw std::logic_error("countermodel point fails to separate the interpretations");

    Countermodel c;
    c.n = n;
    c.word = w;
    c.point = {0, n};
    c.in_left = in_left;
    c.h = std::move(h);
    return c;
}

std::string to_json(const Countermodel& c) {
    nlohmann::json j;
    j["n"] = c.n;
    j["word"] = c.word;
    j["point"] = {c.point.first, c.point.second};
    j["in"] = c.in_left ? "left" : "right";
    nlohmann::json assignment = nlohmann::json::object();
    int points = c.n + 1;
    for (const auto& [letter, elem] : c.h.assignment) {
        nlohmann::json pairs = nlohmann::json::array();
        for (int code : c.h.ka->value(elem))
            pairs.push_back({code / points, code % points});
        assignment[std::string(1, letter)] = std::move(pairs);
    }
    j["assignment"] = std::move(assignment);
    return j.dump(2);
}

// --- axiom battery ----------------------------------------------------------

namespace {

// Mask arithmetic for carriers of at most 64 elements: subsets of base codes
// are bitmasks, union is OR and products expand through a base-pair table.
struct MaskOps {
    int bases;
    std::vector<uint64_t> prod;  // bases*bases table of result masks

    explicit MaskOps(const FiniteKa& ka) : bases(ka.base_count()), prod(bases * bases) {
        for (int i = 0; i < bases; ++i)
            for (int j = 0; j < bases; ++j) {
                uint64_t mask = 0;
                for (int code : ka.base_product_codes(i, j)) mask |= uint64_t{1} << code;
                prod[i * bases + j] = mask;
            }
    }

    uint64_t times(uint64_t a, uint64_t b) const {
        uint64_t out = 0;
        for (int i = 0; i < bases; ++i) {
            if (!(a & (uint64_t{1} << i))) continue;
            for (int j = 0; j < bases; ++j)
                if (b & (uint64_t{1} << j)) out |= prod[i * bases + j];
        }
        return out;
    }

    uint64_t star(uint64_t a, uint64_t unit) const {
        uint64_t closure = unit;
        while (true) {
            uint64_t next = closure | times(closure, a);
            if (next == closure) return closure;
            closure = next;
        }
    }
};

std::string mask_failure(const char* law, uint64_t x, uint64_t y, uint64_t z) {
    std::ostringstream out;
    out << law << " (masks x=" << x << " y=" << y << " z=" << z << ")";
    return out.str();
}

}  // namespace

FiniteKa::Value FiniteKa::base_product_codes(int i, int j) const {
    return base_product(i, j);
}

AxiomCheckResult check_ka_axioms(const FiniteKa& ka, uint64_t samples, uint64_t seed,
                                 uint64_t exhaustive_limit) {
    AxiomCheckResult res;
    auto size = ka.carrier_size();

    if (size && *size <= exhaustive_limit) {
        res.exhaustive = true;
        MaskOps ops(ka);
        uint64_t unit = 0;
        for (int code : ka.value(ka.one())) unit |= uint64_t{1} << code;
        const uint64_t count = *size;

        std::vector<uint64_t> stars(count);
        for (uint64_t x = 0; x < count; ++x) stars[x] = ops.star(x, unit);

        auto fail = [&](std::string what) {
            res.ok = false;
            res.failure = std::move(what);
        };

        for (uint64_t x = 0; x < count && res.ok; ++x) {
            uint64_t with_zero = x | 0;
            uint64_t doubled = x | x;
            if (with_zero != x) fail(mask_failure("x+0=x", x, 0, 0));
            if (doubled != x) fail(mask_failure("x+x=x", x, 0, 0));
            if (ops.times(x, unit) != x) fail(mask_failure("x.1=x", x, 0, 0));
            if (ops.times(unit, x) != x) fail(mask_failure("1.x=x", x, 0, 0));
            if (ops.times(x, 0) != 0) fail(mask_failure("x.0=0", x, 0, 0));
            if (ops.times(0, x) != 0) fail(mask_failure("0.x=0", x, 0, 0));
            if ((unit | ops.times(x, stars[x])) != stars[x])
                fail(mask_failure("1+x.x*=x*", x, 0, 0));
            ++res.checked;
        }
        for (uint64_t x = 0; x < count && res.ok; ++x)
            for (uint64_t y = 0; y < count && res.ok; ++y) {
                uint64_t xy = x | y;
                uint64_t yx = y | x;
                if (xy != yx) fail(mask_failure("x+y=y+x", x, y, 0));
                ++res.checked;
            }
        for (uint64_t x = 0; x < count && res.ok; ++x)
            for (uint64_t y = 0; y < count && res.ok; ++y) {
                uint64_t xy = ops.times(x, y);
                for (uint64_t z = 0; z < count && res.ok; ++z) {
                    if ((x | (y | z)) != ((x | y) | z))
                        fail(mask_failure("assoc+", x, y, z));
                    if (ops.times(xy, z) != ops.times(x, ops.times(y, z)))
                        fail(mask_failure("assoc.", x, y, z));
                    if (ops.times(x, y | z) != (xy | ops.times(x, z)))
                        fail(mask_failure("left distributivity", x, y, z));
                    if (ops.times(x | y, z) != (ops.times(x, z) | ops.times(y, z)))
                        fail(mask_failure("right distributivity", x, y, z));
                    // x + y.z <= z implies y*.x <= z
                    if (((x | ops.times(y, z) | z) == z) &&
                        ((ops.times(stars[y], x) | z) != z))
                        fail(mask_failure("left fixpoint rule", x, y, z));
                    ++res.checked;
                }
            }
        return res;
    }

    // Sampled mode: sparse random triples keep the set operations small even
    // when the carrier is astronomically large.
    std::mt19937_64 gen(seed);
    auto eq = [&](KaElement a, KaElement b) { return a.index == b.index; };
    auto fail = [&](const char* law, KaElement x, KaElement y, KaElement z) {
        res.ok = false;
        std::ostringstream out;
        out << law << " (x=" << ka.display(x) << " y=" << ka.display(y)
            << " z=" << ka.display(z) << ")";
        res.failure = out.str();
    };
    KaElement zero = ka.zero(), one = ka.one();
    for (uint64_t i = 0; i < samples && res.ok; ++i) {
        KaElement x = ka.random_element(gen);
        KaElement y = ka.random_element(gen);
        KaElement z = ka.random_element(gen);
        ++res.checked;
        if (!eq(ka.plus(x, zero), x)) { fail("x+0=x", x, y, z); break; }
        if (!eq(ka.plus(x, x), x)) { fail("x+x=x", x, y, z); break; }
        if (!eq(ka.plus(x, y), ka.plus(y, x))) { fail("x+y=y+x", x, y, z); break; }
        if (!eq(ka.plus(x, ka.plus(y, z)), ka.plus(ka.plus(x, y), z))) {
            fail("assoc+", x, y, z);
            break;
        }
        if (!eq(ka.times(x, ka.times(y, z)), ka.times(ka.times(x, y), z))) {
            fail("assoc.", x, y, z);
            break;
        }
        if (!eq(ka.times(x, ka.plus(y, z)), ka.plus(ka.times(x, y), ka.times(x, z)))) {
            fail("left distributivity", x, y, z);
            break;
        }
        if (!eq(ka.times(ka.plus(x, y), z), ka.plus(ka.times(x, z), ka.times(y, z)))) {
            fail("right distributivity", x, y, z);
            break;
        }
        if (!eq(ka.times(x, one), x) || !eq(ka.times(one, x), x)) {
            fail("unit laws", x, y, z);
            break;
        }
        if (!eq(ka.times(x, zero), zero) || !eq(ka.times(zero, x), zero)) {
            fail("annihilation", x, y, z);
            break;
        }
        KaElement xs = ka.star(x);
        if (!eq(ka.plus(one, ka.times(x, xs)), xs)) { fail("1+x.x*=x*", x, y, z); break; }
        if (ka.leq(ka.plus(x, ka.times(y, z)), z) &&
            !ka.leq(ka.times(ka.star(y), x), z)) {
            fail("left fixpoint rule", x, y, z);
            break;
        }
        // non-vacuous fixpoint instance: y*.x satisfies the premise, so it
        // must also satisfy the conclusion
        KaElement fixed = ka.times(ka.star(y), x);
        if (!ka.leq(ka.plus(x, ka.times(y, fixed)), fixed) ||
            !ka.leq(ka.times(ka.star(y), x), fixed)) {
            fail("left fixpoint rule at y*.x", x, y, fixed);
            break;
        }
    }
    return res;
}

}  // namespace kaw
