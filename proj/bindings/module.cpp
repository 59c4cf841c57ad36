#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kaw/cli.hpp"
#include "kaw/fmp.hpp"

namespace py = pybind11;
using namespace kaw;

namespace {

std::vector<std::pair<int, int>> relation_pairs(const StateRelation& r) {
    return {r.pairs.begin(), r.pairs.end()};
}

py::object subset_result(const SubsetVerdict& v) {
    if (v.holds) return py::make_tuple(true, py::none());
    return py::make_tuple(false, py::cast(v.counterexample));
}

py::object equiv_result(const EquivVerdict& v) {
    if (v.holds) return py::make_tuple(true, py::none(), py::none());
    return py::make_tuple(false, py::cast(v.counterexample),
                          py::cast(std::string(v.side == Side::left ? "left" : "right")));
}

}  // namespace

PYBIND11_MODULE(kaw, m) {
    m.doc() = "Kleene algebra workbench: regular expressions, derivative automata, "
              "symbolic least solutions, transformation monoids and finite models";

    py::register_exception<ParseError>(m, "KawParseError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "KawResourceError", PyExc_RuntimeError);

    py::class_<Expr>(m, "Expr")
        .def_static("parse", &parse, py::arg("text"))
        .def_static("zero", &Expr::zero)
        .def_static("one", &Expr::one)
        .def_static("atom", &Expr::atom)
        .def_static("plus", &Expr::plus)
        .def_static("times", &Expr::times)
        .def_static("star", &Expr::star)
        .def("__str__", [](const Expr& e) { return to_string(e); })
        .def("__repr__",
             [](const Expr& e) { return "Expr.parse('" + to_string(e) + "')"; })
        .def("__eq__", [](const Expr& a, const Expr& b) { return a == b; })
        .def("__hash__",
             [](const Expr& e) { return py::hash(py::cast(to_string(e))); });

    m.def("nullable", &nullable, py::arg("e"));
    m.def(
        "derive",
        [](const Expr& e, char a) { return derive(e, a).items(); },
        py::arg("e"), py::arg("letter"));
    m.def(
        "initials", [](const Expr& e) { return initials(e).items(); }, py::arg("e"));
    m.def(
        "reachset", [](const Expr& e) { return reachset(e).items(); }, py::arg("e"));
    m.def("member", &member, py::arg("word"), py::arg("e"));
    m.def(
        "enumerate_words",
        [](const Expr& e, int maxlen) {
            auto words = enumerate_words(e, maxlen);
            return std::vector<Word>(words.begin(), words.end());
        },
        py::arg("e"), py::arg("maxlen"));
    m.def(
        "letters",
        [](const Expr& e) {
            std::string out;
            for (Letter c : letters(e)) out += c;
            return out;
        },
        py::arg("e"));
    m.def("word_to_expr", &word_to_expr, py::arg("word"));
    m.def("light_simplify", &light_simplify, py::arg("e"));

    py::class_<StateRelation>(m, "StateRelation")
        .def(py::init([](int num_states, const std::vector<std::pair<int, int>>& pairs) {
                 StateRelation r;
                 r.num_states = num_states;
                 r.pairs.insert(pairs.begin(), pairs.end());
                 return r;
             }),
             py::arg("num_states"), py::arg("pairs"))
        .def_property_readonly("num_states",
                               [](const StateRelation& r) { return r.num_states; })
        .def_property_readonly("pairs", &relation_pairs)
        .def("__eq__", [](const StateRelation& a, const StateRelation& b) { return a == b; })
        .def("__repr__", &relation_label);

    m.def("identity_relation", &identity_relation, py::arg("num_states"));
    m.def("compose", &compose, py::arg("r1"), py::arg("r2"));

    py::class_<Nfa>(m, "Nfa")
        .def(py::init<>())
        .def("add_state", &Nfa::add_state, py::arg("label"))
        .def("add_transition", &Nfa::add_transition, py::arg("src"), py::arg("letter"),
             py::arg("dst"))
        .def_property_readonly("num_states", &Nfa::num_states)
        .def_property_readonly("labels", [](const Nfa& a) { return a.labels; })
        .def_property_readonly(
            "initials",
            [](const Nfa& a) { return std::vector<int>(a.initials.begin(), a.initials.end()); })
        .def_property_readonly(
            "finals",
            [](const Nfa& a) { return std::vector<int>(a.finals.begin(), a.finals.end()); })
        .def("set_initial", [](Nfa& a, int q) { a.initials.insert(q); })
        .def("set_final", [](Nfa& a, int q) { a.finals.insert(q); })
        .def("accepts", &accepts, py::arg("word"))
        .def("to_json", [](const Nfa& a) { return to_json(a); })
        .def("to_dot", [](const Nfa& a) { return to_dot(a); })
        .def_static("from_json", &nfa_from_json, py::arg("text"))
        .def("__eq__", [](const Nfa& a, const Nfa& b) { return a == b; });

    m.def("antimirov_automaton", &antimirov_automaton, py::arg("e"));
    m.def("step_relation", &step_relation, py::arg("a"), py::arg("letter"));
    m.def("word_relation", &word_relation, py::arg("a"), py::arg("word"));
    m.def(
        "language_subset",
        [](const Nfa& a, const Nfa& b) { return subset_result(language_subset(a, b)); },
        py::arg("a1"), py::arg("a2"),
        "Returns (holds, counterexample); the counterexample is the shortest "
        "word in L(a1) \\ L(a2)");
    m.def(
        "language_equiv",
        [](const Nfa& a, const Nfa& b) { return equiv_result(language_equiv(a, b)); },
        py::arg("a1"), py::arg("a2"),
        "Returns (holds, counterexample, side)");

    m.def(
        "solve_automaton",
        [](const Nfa& a, bool simplify) {
            SolveOptions opts;
            opts.simplify = simplify;
            return solve_automaton(a, opts);
        },
        py::arg("a"), py::arg("simplify") = true);
    m.def(
        "soli",
        [](const Nfa& a, bool simplify) {
            SolveOptions opts;
            opts.simplify = simplify;
            return soli(a, opts);
        },
        py::arg("a"), py::arg("simplify") = true);

    py::class_<MonoidElement>(m, "MonoidElement")
        .def_readonly("relation", &MonoidElement::relation)
        .def_readonly("witness", &MonoidElement::witness);

    py::class_<TransitionMonoid>(m, "TransitionMonoid")
        .def_property_readonly("size", &TransitionMonoid::size)
        .def_property_readonly("elements",
                               [](const TransitionMonoid& m) { return m.elements; })
        .def_property_readonly("generators",
                               [](const TransitionMonoid& m) {
                                   std::map<std::string, int> out;
                                   for (const auto& [c, idx] : m.generators)
                                       out[std::string(1, c)] = idx;
                                   return out;
                               })
        .def("index_of", &TransitionMonoid::index_of, py::arg("relation"))
        .def("compose_elements", &TransitionMonoid::compose_elements, py::arg("i"),
             py::arg("j"));

    m.def(
        "transition_monoid",
        [](const Nfa& a, size_t budget) { return transition_monoid(a, {}, budget); },
        py::arg("a"), py::arg("budget") = kDefaultMonoidBudget);
    m.def(
        "transformation_automaton",
        [](const TransitionMonoid& m, const StateRelation& target) {
            return transformation_automaton(m, target);
        },
        py::arg("monoid"), py::arg("target"));

    py::class_<KaElement>(m, "KaElement")
        .def_readonly("index", &KaElement::index)
        .def("__eq__", [](const KaElement& a, const KaElement& b) { return a == b; });

    py::class_<FiniteKa, std::shared_ptr<FiniteKa>>(m, "FiniteKa")
        .def_property_readonly("name", &FiniteKa::name)
        .def("zero", &FiniteKa::zero)
        .def("one", &FiniteKa::one)
        .def("plus", &FiniteKa::plus)
        .def("times", &FiniteKa::times)
        .def("star", &FiniteKa::star)
        .def("leq", &FiniteKa::leq)
        .def("display", &FiniteKa::display)
        .def("value", &FiniteKa::value)
        .def("intern", &FiniteKa::intern)
        .def("carrier_size",
             [](const FiniteKa& ka) -> py::object {
                 auto size = ka.carrier_size();
                 if (!size) return py::none();
                 return py::cast(*size);
             });

    m.def("monoid_to_ka", &monoid_to_ka, py::arg("monoid"));
    m.def("relational_ka", &relational_ka, py::arg("n"));

    py::class_<Interpretation>(m, "Interpretation")
        .def_property_readonly("ka", [](const Interpretation& h) { return h.ka; })
        .def_property_readonly("assignment", [](const Interpretation& h) {
            std::map<std::string, KaElement> out;
            for (const auto& [c, el] : h.assignment) out[std::string(1, c)] = el;
            return out;
        });

    m.def("interpret", &interpret, py::arg("h"), py::arg("e"));
    m.def("word_interpretation", &word_interpretation, py::arg("word"));

    py::class_<CanonicalModel>(m, "CanonicalModel")
        .def_readonly("automaton", &CanonicalModel::automaton)
        .def_property_readonly("ka", [](const CanonicalModel& cm) { return cm.ka; })
        .def_readonly("h", &CanonicalModel::h)
        .def_property_readonly("monoid", &CanonicalModel::monoid);

    m.def(
        "canonical_model",
        [](const Expr& e, size_t budget) { return canonical_model(e, {}, budget); },
        py::arg("e"), py::arg("budget") = kDefaultMonoidBudget);

    py::class_<Countermodel>(m, "Countermodel")
        .def_readonly("n", &Countermodel::n)
        .def_readonly("word", &Countermodel::word)
        .def_readonly("point", &Countermodel::point)
        .def_readonly("in_left", &Countermodel::in_left)
        .def_readonly("h", &Countermodel::h)
        .def("to_json", [](const Countermodel& c) { return to_json(c); });

    m.def(
        "countermodel_search",
        [](const Expr& e, const Expr& f) -> py::object {
            auto c = countermodel_search(e, f);
            if (!c) return py::none();
            return py::cast(*c);
        },
        py::arg("e"), py::arg("f"));

    py::class_<InclusionVerdict>(m, "InclusionVerdict")
        .def_readonly("name", &InclusionVerdict::name)
        .def_readonly("holds", &InclusionVerdict::holds)
        .def_readonly("counterexample", &InclusionVerdict::counterexample);

    py::class_<FmpReport>(m, "FmpReport")
        .def_readonly("e", &FmpReport::e)
        .def_readonly("f", &FmpReport::f)
        .def_readonly("precondition_holds", &FmpReport::precondition_holds)
        .def_readonly("middle_e", &FmpReport::middle_e)
        .def_readonly("middle_f", &FmpReport::middle_f)
        .def_readonly("middle_terms_e", &FmpReport::middle_terms_e)
        .def_readonly("middle_terms_f", &FmpReport::middle_terms_f)
        .def_readonly("inclusions", &FmpReport::inclusions)
        .def_readonly("certified", &FmpReport::certified)
        .def("to_json", [](const FmpReport& r) { return to_json(r); });

    m.def(
        "fmp_sandwich",
        [](const Expr& e, const Expr& f, size_t max_rho, size_t max_monoid) {
            FmpBudgets budgets;
            budgets.max_rho = max_rho;
            budgets.max_monoid = max_monoid;
            return fmp_sandwich(e, f, budgets);
        },
        py::arg("e"), py::arg("f"), py::arg("max_rho") = FmpBudgets{}.max_rho,
        py::arg("max_monoid") = FmpBudgets{}.max_monoid);

    py::enum_<LemmaStatus>(m, "LemmaStatus")
        .value("PASS", LemmaStatus::pass)
        .value("FAIL", LemmaStatus::fail)
        .value("SKIP", LemmaStatus::skip);

    py::class_<LemmaResult>(m, "LemmaResult")
        .def_readonly("lemma", &LemmaResult::lemma)
        .def_readonly("instance", &LemmaResult::instance)
        .def_readonly("status", &LemmaResult::status)
        .def_readonly("detail", &LemmaResult::detail);

    py::class_<SuiteReport>(m, "SuiteReport")
        .def_readonly("results", &SuiteReport::results)
        .def_property_readonly("failures", &SuiteReport::failures)
        .def_property_readonly("skipped", &SuiteReport::skipped);

    m.def(
        "lemma_suite",
        [](const std::vector<Expr>& corpus, uint64_t seed) {
            return lemma_suite(corpus, seed);
        },
        py::arg("corpus"), py::arg("seed") = 0);
    m.def("default_corpus", &default_corpus);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI invocation; returns (exit_code, stdout, stderr)");
}
