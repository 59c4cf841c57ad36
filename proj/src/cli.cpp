#include "kaw/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kaw/fmp.hpp"

namespace kaw {

namespace {

// words on the command line: "aba", or "eps" / "" for the empty word
Word parse_word(const std::string& text) {
    if (text.empty() || text == "eps") return {};
    for (char c : text)
        if (!is_letter(c))
            throw ParseError(std::string("invalid letter '") + c + "' in word", 0);
    return text;
}

std::string show_word(const Word& w) { return w.empty() ? "eps" : w; }

// expression argument, or a path to an automaton in JSON form
Nfa load_automaton(const std::string& arg) {
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") {
        std::ifstream in(arg);
        if (!in) throw std::runtime_error("cannot open " + arg);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return nfa_from_json(buffer.str());
    }
    return antimirov_automaton(parse(arg));
}

StateRelation parse_relation(const std::string& text, const Nfa& a) {
    if (text == "id") return identity_relation(a.num_states());
    if (text.rfind("w:", 0) == 0) return word_relation(a, parse_word(text.substr(2)));
    return relation_from_json(text, a.num_states());
}

void print_automaton(const Nfa& a, std::ostream& out) {
    out << "states: " << a.num_states() << "\n";
    for (int q = 0; q < a.num_states(); ++q) {
        out << "  " << q << ": " << a.labels[q];
        if (a.initials.count(q)) out << "  (initial)";
        if (a.finals.count(q)) out << "  (final)";
        out << "\n";
    }
    out << "transitions:\n";
    for (int q = 0; q < a.num_states(); ++q)
        for (const auto& [c, succs] : a.delta[q])
            for (int q2 : succs)
                out << "  " << q << " -" << c << "-> " << q2 << "\n";
}

struct Options {
    bool json = false;
    bool dot = false;
    bool simplify = false;
    int maxlen = 6;
    uint64_t seed = 0;
    size_t monoid_budget = kDefaultMonoidBudget;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kleene algebra workbench: expressions, automata, solutions, "
                 "finite models"};
    app.require_subcommand(1);

    Options opt;
    int exit_code = 0;

    std::string expr_arg, expr_arg2, word_arg, aut_arg, relation_arg, model_arg,
        corpus_arg;

    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", opt.seed, "random seed (default 0)");
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", opt.monoid_budget,
                        "transition monoid element budget");
    };

    // parse
    auto* cmd_parse = app.add_subcommand("parse", "parse an expression and reprint it");
    cmd_parse->add_option("expr", expr_arg)->required();
    cmd_parse->callback([&] { out << to_string(parse(expr_arg)) << "\n"; });

    // member
    auto* cmd_member = app.add_subcommand("member", "test word membership");
    cmd_member->add_option("word", word_arg)->required();
    cmd_member->add_option("expr", expr_arg)->required();
    cmd_member->callback([&] {
        bool yes = member(parse_word(word_arg), parse(expr_arg));
        out << (yes ? "true" : "false") << "\n";
        exit_code = yes ? 0 : 1;
    });

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "list language words up to a length");
    cmd_enum->add_option("expr", expr_arg)->required();
    cmd_enum->add_option("--maxlen", opt.maxlen, "maximum word length (default 6)");
    cmd_enum->add_flag("--json", opt.json);
    cmd_enum->callback([&] {
        auto words = enumerate_words(parse(expr_arg), opt.maxlen);
        if (opt.json) {
            nlohmann::json j = nlohmann::json::array();
            for (const Word& w : words) j.push_back(w);
            out << j.dump() << "\n";
        } else {
            for (const Word& w : words) out << show_word(w) << "\n";
        }
    });

    // antimirov
    auto* cmd_anti = app.add_subcommand("antimirov", "build the derivative automaton");
    cmd_anti->add_option("expr", expr_arg)->required();
    cmd_anti->add_flag("--dot", opt.dot);
    cmd_anti->add_flag("--json", opt.json);
    cmd_anti->callback([&] {
        Nfa a = antimirov_automaton(parse(expr_arg));
        if (opt.dot)
            out << to_dot(a);
        else if (opt.json)
            out << to_json(a) << "\n";
        else
            print_automaton(a, out);
    });

    // solve
    auto* cmd_solve = app.add_subcommand("solve", "least solution of an automaton");
    cmd_solve->add_option("input", aut_arg, "expression or automaton .json")->required();
    cmd_solve->add_flag("--simplify", opt.simplify);
    cmd_solve->add_flag("--json", opt.json);
    cmd_solve->callback([&] {
        Nfa a = load_automaton(aut_arg);
        SolveOptions sopts;
        sopts.simplify = opt.simplify;
        QVector sol = solve_automaton(a, sopts);
        Expr language = soli(a, sopts);
        if (opt.json) {
            nlohmann::json j;
            nlohmann::json entries = nlohmann::json::array();
            for (int q = 0; q < a.num_states(); ++q)
                entries.push_back({{"state", a.labels[q]}, {"sol", to_string(sol[q])}});
            j["sol"] = std::move(entries);
            j["soli"] = to_string(language);
            out << j.dump(2) << "\n";
        } else {
            for (int q = 0; q < a.num_states(); ++q)
                out << "sol(" << a.labels[q] << ") = " << to_string(sol[q]) << "\n";
            out << "soli = " << to_string(language) << "\n";
        }
    });

    // transform
    auto* cmd_trans = app.add_subcommand(
        "transform", "transition monoid / transformation automaton");
    cmd_trans->add_option("input", aut_arg, "expression or automaton .json")->required();
    cmd_trans->add_option("--relation", relation_arg,
                          "target relation: id, w:<word>, or JSON pairs");
    cmd_trans->add_flag("--dot", opt.dot);
    cmd_trans->add_flag("--json", opt.json);
    cmd_trans->add_flag("--simplify", opt.simplify);
    add_budget(cmd_trans);
    cmd_trans->callback([&] {
        Nfa a = load_automaton(aut_arg);
        TransitionMonoid monoid = transition_monoid(a, {}, opt.monoid_budget);
        if (relation_arg.empty()) {
            if (opt.json) {
                nlohmann::json j = nlohmann::json::array();
                for (const MonoidElement& el : monoid.elements)
                    j.push_back({{"witness", el.witness},
                                 {"relation", nlohmann::json::parse(to_json(el.relation))}});
                out << j.dump(2) << "\n";
            } else {
                out << "elements: " << monoid.size() << "\n";
                for (const MonoidElement& el : monoid.elements)
                    out << "  " << (el.witness.empty() ? "id" : "d:" + el.witness)
                        << "  " << relation_label(el.relation) << "\n";
            }
            return;
        }
        StateRelation target = parse_relation(relation_arg, a);
        Nfa ta = transformation_automaton(monoid, target);
        if (opt.dot)
            out << to_dot(ta);
        else if (opt.json)
            out << to_json(ta) << "\n";
        else {
            print_automaton(ta, out);
            SolveOptions sopts;
            sopts.simplify = opt.simplify;
            out << "soli = " << to_string(soli(ta, sopts)) << "\n";
        }
    });

    // interp
    auto* cmd_interp = app.add_subcommand("interp", "interpret in a finite model");
    cmd_interp->add_option("expr", expr_arg)->required();
    cmd_interp
        ->add_option("--model", model_arg,
                     "canonical:<expr> | word:<w> | rel:<n> (random assignment)")
        ->required();
    cmd_interp->add_flag("--json", opt.json);
    add_seed(cmd_interp);
    add_budget(cmd_interp);
    cmd_interp->callback([&] {
        Expr e = parse(expr_arg);
        Interpretation h;
        if (model_arg.rfind("canonical:", 0) == 0) {
            Expr base = parse(model_arg.substr(10));
            std::set<Letter> alphabet = letters(base);
            std::set<Letter> le = letters(e);
            alphabet.insert(le.begin(), le.end());
            h = canonical_model(base, alphabet, opt.monoid_budget).h;
        } else if (model_arg.rfind("word:", 0) == 0) {
            h = word_interpretation(parse_word(model_arg.substr(5)));
        } else if (model_arg.rfind("rel:", 0) == 0) {
            int n = std::stoi(model_arg.substr(4));
            h.ka = relational_ka(n);
            h.absent_letters_are_zero = true;
            std::mt19937_64 gen(opt.seed);
            for (Letter c : letters(e)) h.assignment[c] = h.ka->random_element(gen);
        } else {
            throw CLI::ValidationError("--model", "expected canonical:, word: or rel:");
        }
        KaElement x = interpret(h, e);
        if (opt.json) {
            nlohmann::json j;
            j["model"] = h.ka->name();
            j["element"] = h.ka->display(x);
            nlohmann::json assignment = nlohmann::json::object();
            for (const auto& [c, el] : h.assignment)
                assignment[std::string(1, c)] = h.ka->display(el);
            j["assignment"] = std::move(assignment);
            out << j.dump(2) << "\n";
        } else {
            for (const auto& [c, el] : h.assignment)
                out << "h(" << c << ") = " << h.ka->display(el) << "\n";
            out << "interp = " << h.ka->display(x) << "\n";
        }
    });

    // equiv
    auto* cmd_equiv = app.add_subcommand("equiv", "decide language equivalence");
    cmd_equiv->add_option("e", expr_arg)->required();
    cmd_equiv->add_option("f", expr_arg2)->required();
    cmd_equiv->callback([&] {
        EquivVerdict v = language_equiv(antimirov_automaton(parse(expr_arg)),
                                        antimirov_automaton(parse(expr_arg2)));
        if (v.holds) {
            out << "equivalent\n";
        } else {
            out << "inequivalent: '" << show_word(v.counterexample) << "' only in "
                << (v.side == Side::left ? "left" : "right") << "\n";
            exit_code = 1;
        }
    });

    // countermodel
    auto* cmd_counter = app.add_subcommand(
        "countermodel", "finite relational countermodel for an inequivalence");
    cmd_counter->add_option("e", expr_arg)->required();
    cmd_counter->add_option("f", expr_arg2)->required();
    cmd_counter->callback([&] {
        auto c = countermodel_search(parse(expr_arg), parse(expr_arg2));
        if (!c) {
            out << "equivalent\n";
        } else {
            out << to_json(*c) << "\n";
            exit_code = 1;
        }
    });

    // fmp-check
    size_t rho_budget = FmpBudgets{}.max_rho;
    auto* cmd_fmp = app.add_subcommand("fmp-check", "run the sandwich pipeline");
    cmd_fmp->add_option("e", expr_arg)->required();
    cmd_fmp->add_option("f", expr_arg2)->required();
    cmd_fmp->add_flag("--json", opt.json);
    cmd_fmp->add_option("--rho-budget", rho_budget,
                        "derivative automaton size budget per expression");
    add_budget(cmd_fmp);
    cmd_fmp->callback([&] {
        FmpBudgets budgets;
        budgets.max_rho = rho_budget;
        budgets.max_monoid = opt.monoid_budget;
        FmpReport r = fmp_sandwich(parse(expr_arg), parse(expr_arg2), budgets);
        if (opt.json) {
            out << to_json(r) << "\n";
        } else {
            out << "precondition (canonical interpretations agree): "
                << (r.precondition_holds ? "holds" : "fails") << "\n";
            if (r.precondition_holds) {
                out << "middle(e) = " << to_string(r.middle_e) << "\n";
                out << "middle(f) = " << to_string(r.middle_f) << "\n";
                for (const InclusionVerdict& v : r.inclusions)
                    out << "  " << v.name << ": " << (v.holds ? "holds" : "fails") << "\n";
            }
            out << (r.certified
                        ? "certified: equivalent (language completeness + finite "
                          "model pipeline)"
                        : "not certified")
                << "\n";
        }
        exit_code = r.certified ? 0 : 1;
    });

    // lemma-suite
    auto* cmd_suite = app.add_subcommand("lemma-suite", "run the lemma batteries");
    cmd_suite->add_option("--corpus", corpus_arg,
                          "file with one expression per line (# comments)");
    add_seed(cmd_suite);
    add_budget(cmd_suite);
    cmd_suite->callback([&] {
        std::vector<Expr> corpus;
        if (corpus_arg.empty()) {
            corpus = default_corpus();
        } else {
            std::ifstream in(corpus_arg);
            if (!in) throw std::runtime_error("cannot open " + corpus_arg);
            std::string line;
            while (std::getline(in, line)) {
                size_t hash = line.find('#');
                if (hash != std::string::npos) line.erase(hash);
                size_t begin = line.find_first_not_of(" \t");
                if (begin == std::string::npos) continue;
                size_t last = line.find_last_not_of(" \t");
                corpus.push_back(parse(line.substr(begin, last - begin + 1)));
            }
        }
        FmpBudgets budgets;
        budgets.max_monoid = opt.monoid_budget;
        SuiteReport report = lemma_suite(corpus, opt.seed, budgets);
        for (const LemmaResult& r : report.results) {
            const char* status = r.status == LemmaStatus::pass  ? "PASS"
                                 : r.status == LemmaStatus::fail ? "FAIL"
                                                                 : "SKIP";
            out << status << " " << r.lemma << " " << r.instance;
            if (!r.detail.empty()) out << "  (" << r.detail << ")";
            out << "\n";
        }
        out << report.results.size() << " checks, " << report.failures()
            << " failures, " << report.skipped() << " skipped\n";
        exit_code = report.failures() == 0 ? 0 : 1;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& ex) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << ex.what() << "\n";
        return 2;
    } catch (const ParseError& ex) {
        err << "parse error: " << ex.what() << "\n";
        return 2;
    } catch (const ResourceError& ex) {
        err << "resource error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace kaw
