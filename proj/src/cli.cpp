#include "finpart/cli.hpp"

#include <charconv>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "finpart/circles.hpp"
#include "finpart/closed_forms.hpp"
#include "finpart/counting.hpp"
#include "finpart/selfcheck.hpp"
#include "finpart/verification.hpp"

namespace finpart::cli {

namespace {

using nlohmann::ordered_json;

// Usage mistakes that CLI11 cannot see (bad numbers, wrong arity for a
// formula id). Mapped to exit code 2 like CLI11's own parse errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::int64_t to_int(const std::string& s, const char* what) {
    std::int64_t v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw UsageError(std::string(what) + " must be an integer, got '" + s + "'");
    }
    return v;
}

std::int64_t to_nonneg(const std::string& s, const char* what) {
    std::int64_t v = to_int(s, what);
    if (v < 0) throw UsageError(std::string(what) + " must be >= 0, got '" + s + "'");
    return v;
}

std::string tuple_text(const std::vector<std::int64_t>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out + ")";
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump() << '\n'; }

int run_pi(const std::string& n_text, const std::string& k_text, bool as_json,
           std::ostream& out) {
    std::int64_t n = to_nonneg(n_text, "n");
    std::int64_t k = to_nonneg(k_text, "k");
    CountingEngine engine;
    Count value = engine.pi(n, k);
    if (as_json) {
        emit(out, {{"op", "pi"}, {"n", n}, {"k", k}, {"count", value.str()}});
    } else {
        out << value.str() << '\n';
    }
    return 0;
}

int run_restricted_count(const std::string& op, const std::string& n_text,
                         const std::string& a_text, bool list, bool as_json,
                         std::ostream& out) {
    std::int64_t n = to_nonneg(n_text, "n");
    Multiset a = Multiset::parse(a_text);
    CountingEngine engine;

    Count value;
    if (op == "d") value = engine.d(n, a);
    else if (op == "d0") value = engine.d0(n, a);
    else if (op == "delta") value = engine.delta(n, a);
    else value = engine.delta0(n, a);

    bool shifted = op == "d0" || op == "delta0";
    std::vector<SolutionTuple> solutions;
    if (list) {
        SolutionMode mode =
            (op == "d" || op == "d0") ? SolutionMode::natural : SolutionMode::distinct;
        solutions = engine.enumerate_solutions(shifted ? n + a.sigma() : n, a, mode);
        if (shifted) {
            // x >= 0 solutions are the x >= 1 solutions of n + sigma(A),
            // every coordinate dropped by one
            for (auto& s : solutions) {
                for (auto& x : s.values) --x;
            }
        }
    }

    if (as_json) {
        ordered_json doc{{"op", op}, {"n", n}, {"A", a.to_string()}, {"count", value.str()}};
        if (list) {
            ordered_json sols = ordered_json::array();
            for (const auto& s : solutions) sols.push_back(s.values);
            doc["solutions"] = std::move(sols);
        }
        emit(out, doc);
    } else {
        out << value.str() << '\n';
        for (const auto& s : solutions) out << tuple_text(s.values) << '\n';
    }
    return 0;
}

int run_multisets(const std::string& n_text, const std::string& k_text, bool as_json,
                  std::ostream& out) {
    std::int64_t n = to_nonneg(n_text, "n");
    std::int64_t k = to_nonneg(k_text, "k");
    CountingEngine engine;
    auto families = engine.enumerate_coefficient_multisets(n, k);
    if (as_json) {
        ordered_json names = ordered_json::array();
        for (const auto& a : families) names.push_back(a.to_string());
        emit(out, {{"op", "multisets"},
                   {"n", n},
                   {"k", k},
                   {"count", std::ssize(families)},
                   {"multisets", std::move(names)}});
    } else {
        for (const auto& a : families) out << a.to_string() << '\n';
    }
    return 0;
}

int run_circles(const std::string& n_text, bool with_terms, bool as_json, std::ostream& out) {
    std::int64_t n = to_nonneg(n_text, "n");
    circles::CircleCounter counter;
    Count value = counter.count(n);
    std::vector<circles::Term> terms;
    if (with_terms && n >= 1) terms = counter.terms(n);

    if (as_json) {
        ordered_json doc{{"n", n}, {"count", value.str()}};
        if (with_terms) {
            ordered_json list = ordered_json::array();
            for (const auto& t : terms) {
                list.push_back({{"A", t.A.to_string()}, {"x", t.x}, {"term", t.value.str()}});
            }
            doc["terms"] = std::move(list);
        }
        emit(out, doc);
    } else if (with_terms) {
        for (const auto& t : terms) {
            out << "A=" << t.A.to_string() << " x=" << tuple_text(t.x)
                << " term=" << t.value.str() << '\n';
        }
        out << "C_" << n << " = " << value.str() << '\n';
    } else {
        out << value.str() << '\n';
    }
    return 0;
}

int run_forest_parse(const std::string& text, bool as_json, std::ostream& out) {
    circles::Forest f = circles::parse_forest(text);
    std::string canon = circles::canonical_form(f);
    if (as_json) {
        emit(out, {{"op", "forest_parse"},
                   {"input", text},
                   {"canonical", canon},
                   {"trees", std::ssize(f.trees)},
                   {"nodes", node_count(f)}});
    } else {
        out << canon << '\n';
    }
    return 0;
}

int run_forest_enum(const std::string& n_text, bool as_json, std::ostream& out) {
    std::int64_t n = to_nonneg(n_text, "n");
    auto forests = verification::enumerate_canonical_forests(n);
    if (as_json) {
        emit(out, {{"op", "forest_enum"},
                   {"n", n},
                   {"count", std::ssize(forests)},
                   {"forests", forests}});
    } else {
        for (const auto& s : forests) out << s << '\n';
    }
    return 0;
}

bool is_pair_formula(closed_forms::FormulaId f) {
    return f == closed_forms::FormulaId::D_pair_equal ||
           f == closed_forms::FormulaId::D_pair_distinct;
}

closed_forms::FormulaId parse_formula_id(const std::string& name) {
    auto fid = closed_forms::formula_from_string(name);
    if (!fid) throw UsageError("unknown formula id '" + name + "'");
    return *fid;
}

int run_closed_eval(const std::string& id_text, const std::vector<std::string>& rest,
                    bool as_json, std::ostream& out) {
    auto fid = parse_formula_id(id_text);
    std::string name = closed_forms::to_string(fid);

    if (is_pair_formula(fid)) {
        if (rest.size() != 3) throw UsageError(name + " takes <n> <a1> <a2>");
        std::int64_t n = to_int(rest[0], "n");
        std::int64_t a1 = to_int(rest[1], "a1");
        std::int64_t a2 = to_int(rest[2], "a2");
        if (n < 1) throw UsageError("n must be >= 1");
        if (a1 < 1 || a2 < 1) throw UsageError("coefficients must be >= 1");
        bool equal = fid == closed_forms::FormulaId::D_pair_equal;
        if (equal != (a1 == a2)) {
            throw UsageError(name + (equal ? " needs a1 == a2" : " needs a1 != a2"));
        }
        Count value = closed_forms::d_pair_closed(n, a1, a2);
        if (as_json) {
            emit(out, {{"op", "closed"},
                       {"formula", name},
                       {"n", n},
                       {"a1", a1},
                       {"a2", a2},
                       {"value", value.str()}});
        } else {
            out << value.str() << '\n';
        }
        return 0;
    }

    if (rest.size() != 1) throw UsageError(name + " takes <n>");
    std::int64_t n = to_int(rest[0], "n");
    if (n < 1) throw UsageError("n must be >= 1");
    bool is_delta = fid == closed_forms::FormulaId::DELTA_11 ||
                    fid == closed_forms::FormulaId::DELTA_12;
    Count value = is_delta ? closed_forms::delta_closed(n, fid) : closed_forms::d_closed(n, fid);
    if (as_json) {
        emit(out, {{"op", "closed"}, {"formula", name}, {"n", n}, {"value", value.str()}});
    } else {
        out << value.str() << '\n';
    }
    return 0;
}

int run_closed_validate(const std::string& id_text, std::int64_t n_max, bool as_json,
                        std::ostream& out) {
    auto fid = parse_formula_id(id_text);
    CountingEngine engine;
    auto report = closed_forms::validate_formula(fid, n_max, engine);
    std::string name = closed_forms::to_string(report.formula);

    if (as_json) {
        ordered_json mismatches = ordered_json::array();
        for (const auto& m : report.mismatches) {
            mismatches.push_back({{"n", m.n},
                                  {"multiset", m.multiset.to_string()},
                                  {"closed", m.closed.str()},
                                  {"recursion", m.recursion.str()}});
        }
        emit(out, {{"formula", name},
                   {"range", {report.lo, report.hi}},
                   {"mismatches", std::move(mismatches)}});
    } else {
        out << name << " on n=" << report.lo << ".." << report.hi << ": "
            << report.mismatches.size() << " mismatches\n";
        for (const auto& m : report.mismatches) {
            out << "n=" << m.n << " A={" << m.multiset.to_string()
                << "} closed=" << m.closed.str() << " recursion=" << m.recursion.str() << '\n';
        }
    }
    return 0;
}

int run_verify(const selfcheck::CheckOptions& options, bool as_json, std::ostream& out) {
    auto results = selfcheck::run_acceptance_checks(options);
    bool ok = selfcheck::all_passed(results);
    if (as_json) {
        ordered_json checks = ordered_json::array();
        for (const auto& r : results) {
            checks.push_back({{"id", r.id},
                              {"name", r.name},
                              {"ok", r.ok},
                              {"seconds", r.seconds},
                              {"budget_seconds", r.budget_seconds},
                              {"passed", r.passed()},
                              {"detail", r.detail}});
        }
        emit(out, {{"op", "verify"}, {"checks", std::move(checks)}, {"all_pass", ok}});
    } else {
        for (const auto& r : results) out << selfcheck::one_line(r) << '\n';
        out << (ok ? "all criteria passed" : "some criteria failed") << '\n';
    }
    return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"restricted partition counts, circle arrangements, closed-form validity",
                 "finpart"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format (text or json)")
        ->check(CLI::IsMember({"text", "json"}));

    std::string n_text, k_text, a_text, raw_text, id_text;
    bool list = false;
    bool with_terms = false;

    auto* pi_cmd = app.add_subcommand("pi", "partitions of n into exactly k positive parts");
    pi_cmd->add_option("n", n_text)->required();
    pi_cmd->add_option("k", k_text)->required();

    const char* count_help[] = {
        "solutions of n = sum a_i x_i with x_i >= 1",
        "solutions with x_i >= 0",
        "solutions with pairwise distinct x_i >= 1",
        "solutions with pairwise distinct x_i >= 0",
    };
    std::vector<CLI::App*> count_cmds;
    int help_index = 0;
    for (const char* op : {"d", "d0", "delta", "delta0"}) {
        auto* cmd = app.add_subcommand(op, count_help[help_index++]);
        cmd->add_option("n", n_text)->required();
        cmd->add_option("A", a_text)->required();
        cmd->add_flag("--list", list, "also print the solution tuples");
        count_cmds.push_back(cmd);
    }

    auto* multisets_cmd =
        app.add_subcommand("multisets", "size-k coefficient multisets admitting a distinct solution");
    multisets_cmd->add_option("n", n_text)->required();
    multisets_cmd->add_option("k", k_text)->required();

    auto* circles_cmd = app.add_subcommand("circles", "arrangements of n non-intersecting circles");
    circles_cmd->add_option("n", n_text)->required();
    circles_cmd->add_flag("--terms", with_terms, "print the term expansion over (A, x)");

    auto* forest_cmd = app.add_subcommand("forest", "nested-parentheses forests");
    forest_cmd->require_subcommand(1);
    auto* forest_parse_cmd = forest_cmd->add_subcommand("parse", "canonicalize one forest");
    forest_parse_cmd->add_option("text", raw_text)->required();
    auto* forest_enum_cmd = forest_cmd->add_subcommand("enum", "all canonical forests with n nodes");
    forest_enum_cmd->add_option("n", n_text)->required();

    auto* closed_cmd = app.add_subcommand("closed", "closed-form evaluation and validation");
    closed_cmd->add_option("id", id_text);
    std::vector<std::string> closed_rest;
    closed_cmd->add_option("args", closed_rest);
    std::int64_t validate_max = 500;
    auto* validate_cmd =
        closed_cmd->add_subcommand("validate", "sweep a formula against the recursion");
    validate_cmd->add_option("id", id_text)->required();
    validate_cmd->add_option("--max", validate_max, "upper end of the n sweep")
        ->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
    bool verify_all = false;
    verify_cmd->add_flag("--all", verify_all, "run every check");
    selfcheck::CheckOptions check_options;
    verify_cmd->add_option("--max-sigma", check_options.sweep.max_sigma, "oracle sweep sigma cap")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-n", check_options.sweep.max_n, "oracle sweep n cap")
        ->check(CLI::NonNegativeNumber);
    verify_cmd
        ->add_option("--max-forest", check_options.sweep.max_forest_nodes,
                     "forest enumeration node cap")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-circles", check_options.max_circles, "recurrence comparison cap")
        ->check(CLI::NonNegativeNumber);

    // --format may trail the subcommand, so unmatched options bubble up
    std::vector<CLI::App*> all_cmds{pi_cmd,        multisets_cmd,    circles_cmd,
                                    forest_cmd,    forest_parse_cmd, forest_enum_cmd,
                                    closed_cmd,    validate_cmd,     verify_cmd};
    all_cmds.insert(all_cmds.end(), count_cmds.begin(), count_cmds.end());
    for (auto* sub : all_cmds) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    bool as_json = format == "json";
    try {
        if (pi_cmd->parsed()) return run_pi(n_text, k_text, as_json, out);
        for (auto* cmd : count_cmds) {
            if (cmd->parsed()) {
                return run_restricted_count(cmd->get_name(), n_text, a_text, list, as_json, out);
            }
        }
        if (multisets_cmd->parsed()) return run_multisets(n_text, k_text, as_json, out);
        if (circles_cmd->parsed()) return run_circles(n_text, with_terms, as_json, out);
        if (forest_cmd->parsed()) {
            if (forest_parse_cmd->parsed()) return run_forest_parse(raw_text, as_json, out);
            return run_forest_enum(n_text, as_json, out);
        }
        if (closed_cmd->parsed()) {
            if (validate_cmd->parsed()) {
                return run_closed_validate(id_text, validate_max, as_json, out);
            }
            if (id_text.empty()) throw UsageError("closed needs a formula id");
            return run_closed_eval(id_text, closed_rest, as_json, out);
        }
        if (verify_cmd->parsed()) {
            if (!verify_all) throw UsageError("verify requires --all");
            return run_verify(check_options, as_json, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const circles::ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace finpart::cli
