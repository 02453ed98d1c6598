#ifndef IMMACULATA_TOOLS_CLI_HPP
#define IMMACULATA_TOOLS_CLI_HPP

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <immaculata/immaculata.hpp>

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or parse error.

namespace immaculata::cli {

enum exit_code : int { ok = 0, verification_failed = 1, usage_error = 2 };

class usage_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class family { nsym, qsym, schur, homogeneous };

struct operand {
    std::string text;
    std::string tag;
    family fam;
    int_tuple index;
};

inline operand parse_operand(const std::string &text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw usage_failure("operand '" + text + "' must look like <Basis>:<index>");
    }
    operand op{text, text.substr(0, colon), family::nsym, {}};
    try {
        op.index = parse_int_tuple(std::string_view(text).substr(colon + 1));
    } catch (const std::invalid_argument &e) {
        throw usage_failure("cannot parse index of '" + text + "': " + e.what());
    }
    if (op.tag == "H" || op.tag == "R" || op.tag == "Psi" || op.tag == "S") {
        op.fam = family::nsym;
    } else if (op.tag == "M" || op.tag == "F" || op.tag == "Sstar") {
        op.fam = family::qsym;
    } else if (op.tag == "s") {
        op.fam = family::schur;
    } else if (op.tag == "h") {
        op.fam = family::homogeneous;
    } else {
        throw usage_failure("unknown basis '" + op.tag + "' (expected H, R, Psi, S, M, F, Sstar, s or h)");
    }
    if (op.fam != family::schur && !(op.tag == "S")) {
        if (!op.index.all_positive()) {
            throw usage_failure("index of '" + text + "' must be a composition (positive parts)");
        }
    }
    return op;
}

inline composition require_composition(const operand &op)
{
    if (auto c = to_composition(op.index)) {
        return *c;
    }
    throw usage_failure("index of '" + op.text + "' must be a composition (positive parts)");
}

// Any element of the four families, rendered uniformly.
struct rendered {
    nlohmann::json element;
    std::string text;
    std::string latex;
};

template <class Element>
rendered render(const Element &e)
{
    return {to_json(e), render_text(e), render_latex(e)};
}

inline rendered render(const tuple_sum &s, std::string_view basis)
{
    return {terms_to_json(basis, s), render_text(basis, s), render_latex(basis, s)};
}

inline nsym_element nsym_of(const operand &op)
{
    if (op.tag == "S") {
        if (auto c = to_composition(op.index)) {
            return nsym_element::monomial(nsym_basis::S, *c);
        }
        return immaculate_to_h(op.index);
    }
    return nsym_element::monomial(parse_nsym_basis(op.tag), require_composition(op));
}

inline qsym_element qsym_of(const operand &op)
{
    return qsym_element::monomial(parse_qsym_basis(op.tag), require_composition(op));
}

inline bool is_nsym_tag(std::string_view t) { return t == "H" || t == "R" || t == "Psi" || t == "S"; }
inline bool is_qsym_tag(std::string_view t) { return t == "M" || t == "F" || t == "Sstar"; }

inline qsym_element schur_in_dual_immaculate(const int_tuple &alpha)
{
    const auto st = schur_straighten(alpha);
    if (!st) {
        return qsym_element(qsym_basis::Sstar);
    }
    return integer(st->sign) * schur_to_dual_immaculate(st->shape);
}

inline qsym_element embed_monomial_symmetric(const sym_element &m)
{
    qsym_element out(qsym_basis::M);
    for (const auto &[lam, k] : m.terms()) {
        out += k * monomial_symmetric_embed(lam);
    }
    return out;
}

inline rendered expand(const operand &op, const std::string &target)
{
    const auto no_path = [&]() { return usage_failure("no conversion path from " + op.tag + " to " + target); };
    switch (op.fam) {
    case family::nsym: {
        const auto f = nsym_of(op);
        if (target == "h") {
            return render(forgetful(f));
        }
        if (!is_nsym_tag(target)) {
            throw no_path();
        }
        try {
            return render(change_basis(f, parse_nsym_basis(target)));
        } catch (const no_conversion_path &) {
            throw no_path();
        }
    }
    case family::qsym: {
        if (!is_qsym_tag(target)) {
            throw no_path();
        }
        return render(change_basis(qsym_of(op), parse_qsym_basis(target)));
    }
    case family::schur: {
        const auto st = schur_straighten(op.index);
        if (target == "s") {
            sym_element out(sym_basis::s);
            if (st) {
                out = sym_element::monomial(sym_basis::s, st->shape, st->sign);
            }
            return render(out);
        }
        if (target == "h") {
            return render(schur_to_h(op.index));
        }
        if (target == "m") {
            return render(st ? integer(st->sign) * schur_to_m(st->shape) : sym_element(sym_basis::m));
        }
        if (is_qsym_tag(target)) {
            return render(change_basis(schur_in_dual_immaculate(op.index), parse_qsym_basis(target)));
        }
        throw no_path();
    }
    case family::homogeneous: {
        const auto h = sym_element::monomial(sym_basis::h, sorted(require_composition(op)));
        if (target == "h") {
            return render(h);
        }
        if (target == "m") {
            return render(h_to_m(h));
        }
        if (is_qsym_tag(target)) {
            return render(change_basis(embed_monomial_symmetric(h_to_m(h)), parse_qsym_basis(target)));
        }
        if (target == "p") {
            if (auto p = integral_p(h_to_p(h))) {
                return render(*p);
            }
            throw usage_failure("p-expansion of " + op.text + " is not integral");
        }
        throw no_path();
    }
    }
    throw no_path();
}

struct product_result {
    rendered value;
    std::string rule;
    std::optional<std::string> warning;
};

inline product_result product(const operand &left, const operand &right, std::optional<std::string> out,
                              bool normalize)
{
    if (left.fam == family::nsym && right.fam == family::nsym) {
        const std::string target = out.value_or("S");
        if (!is_nsym_tag(target) || target == "Psi") {
            throw usage_failure("no conversion path from S to " + target);
        }
        const auto target_basis = parse_nsym_basis(target);
        const auto alpha = left.tag == "S" ? to_composition(left.index) : std::nullopt;
        if (alpha && right.tag == "H" && right.index.length() == 1) {
            return {render(change_basis(pieri_multiply(*alpha, right.index[0]), target_basis)), "pieri", {}};
        }
        if (alpha && right.tag == "S" && is_partition(right.index.entries())) {
            return {render(change_basis(lr_multiply(*alpha, partition(right.index.entries())), target_basis)),
                    "littlewood-richardson", {}};
        }
        if (alpha && right.tag == "Psi" && right.index.length() == 1) {
            const int k = right.index[0];
            if (!normalize && target_basis == nsym_basis::S) {
                return {render(mn_multiply(*alpha, k), "S"), "murnaghan-nakayama", {}};
            }
            return {render(change_basis(mn_multiply_normalized(*alpha, k), target_basis)), "murnaghan-nakayama", {}};
        }
        const auto prod = h_multiply(to_h(nsym_of(left)), to_h(nsym_of(right)));
        return {render(change_basis(prod, target_basis)), "h-basis",
                "warning: no positive product rule applies to " + left.text + " * " + right.text
                    + "; computed through the H basis"};
    }
    if (left.fam == family::qsym && right.fam == family::qsym) {
        const std::string target = out.value_or("M");
        if (!is_qsym_tag(target)) {
            throw usage_failure("no conversion path from M to " + target);
        }
        const auto prod = monomial_multiply(to_monomial(qsym_of(left)), to_monomial(qsym_of(right)));
        return {render(change_basis(prod, parse_qsym_basis(target))), "quasi-shuffle", {}};
    }
    throw usage_failure("unsupported operand combination " + left.text + " * " + right.text);
}

inline std::string render_latex_tableau(const tableau_rows &rows)
{
    std::string out = "\\begin{ytableau}\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out += "  " + join_ints(rows[r], " & ");
        out += r + 1 < rows.size() ? " \\\\\n" : "\n";
    }
    return out + "\\end{ytableau}";
}

inline long long elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

inline int default_max_n()
{
    if (const char *env = std::getenv("IMMACULATA_MAX_N")) {
        try {
            const int v = std::stoi(env);
            if (v >= 0) {
                return v;
            }
        } catch (const std::exception &) {
        }
    }
    return 6;
}

/// Entry point shared by the binary and the tests.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Immaculate basis of NSym and the dual immaculate basis of QSym"};
    app.require_subcommand(1);
    std::string format = "text";
    const auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    };

    auto *expand_cmd = app.add_subcommand("expand", "Expand a basis element in another basis");
    std::string expand_expr;
    std::string expand_to;
    expand_cmd->add_option("expr", expand_expr, "<Basis>:<index>, e.g. S:2,3")->required();
    expand_cmd->add_option("--to", expand_to, "Target basis")->required();
    add_format(expand_cmd);

    auto *product_cmd = app.add_subcommand("product", "Multiply two basis elements");
    std::string left_expr;
    std::string right_expr;
    std::string out_basis;
    bool no_normalize = false;
    product_cmd->add_option("left", left_expr, "<Basis>:<index>")->required();
    product_cmd->add_option("right", right_expr, "<Basis>:<index>")->required();
    product_cmd->add_option("--out", out_basis, "Output basis (default S for NSym, M for QSym)");
    product_cmd->add_flag("--no-normalize", no_normalize, "Keep zero-padded indices of the Murnaghan-Nakayama rule");
    add_format(product_cmd);

    auto *tableaux_cmd = app.add_subcommand("tableaux", "List immaculate tableaux");
    std::string shape_text;
    std::string content_text;
    bool standard = false;
    bool descents = false;
    tableaux_cmd->add_option("--shape", shape_text, "Composition, e.g. 4,2,3")->required();
    auto *content_opt = tableaux_cmd->add_option("--content", content_text, "Content vector, e.g. 3,1,2,3");
    auto *standard_opt = tableaux_cmd->add_flag("--standard", standard, "Standard tableaux (content 1^n)");
    content_opt->excludes(standard_opt);
    tableaux_cmd->add_flag("--descents", descents, "Print descent compositions (standard only)")->needs(standard_opt);
    add_format(tableaux_cmd);

    auto *verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification suite");
    std::string suite;
    int max_n = default_max_n();
    verify_cmd->add_option("suite", suite, "pieri, jacobi-trudi, kostka, ribbon, duality, lr, mn, projection, all")
        ->required();
    verify_cmd->add_option("--max-n", max_n, "Largest degree checked")->check(CLI::NonNegativeNumber);
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (*expand_cmd) {
            const auto op = parse_operand(expand_expr);
            const auto r = expand(op, expand_to);
            if (format == "json") {
                nlohmann::json report = {{"command", "expand"},     {"input", nlohmann::json::array({expand_expr})},
                                         {"target", expand_to},     {"result", r.element},
                                         {"elapsed_ms", elapsed_ms(start)}};
                out << report.dump() << '\n';
            } else {
                out << (format == "latex" ? r.latex : r.text) << '\n';
            }
            return ok;
        }
        if (*product_cmd) {
            const auto l = parse_operand(left_expr);
            const auto r = parse_operand(right_expr);
            const auto res = product(l, r, out_basis.empty() ? std::nullopt : std::optional(out_basis), !no_normalize);
            if (res.warning) {
                err << *res.warning << '\n';
            }
            if (format == "json") {
                nlohmann::json report = {{"command", "product"},
                                         {"input", nlohmann::json::array({left_expr, right_expr})},
                                         {"rule", res.rule},
                                         {"result", res.value.element},
                                         {"elapsed_ms", elapsed_ms(start)}};
                out << report.dump() << '\n';
            } else {
                out << (format == "latex" ? res.value.latex : res.value.text) << '\n';
                out << "rule: " << res.rule << '\n';
            }
            return ok;
        }
        if (*tableaux_cmd) {
            composition shape;
            std::vector<int> content;
            try {
                shape = parse_composition(shape_text);
                content = standard ? std::vector<int>(static_cast<std::size_t>(shape.size()), 1)
                                   : parse_int_list(content_text);
            } catch (const std::invalid_argument &e) {
                throw usage_failure(e.what());
            }
            if (!standard && content_opt->count() == 0) {
                throw usage_failure("tableaux: pass either --content or --standard");
            }
            std::vector<immaculate_tableau> list;
            try {
                list = enumerate_immaculate_tableaux(shape, content);
            } catch (const std::invalid_argument &e) {
                throw usage_failure(e.what());
            }
            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto &t : list) {
                    nlohmann::json entry = {{"rows", to_json(t)}};
                    if (descents) {
                        entry["descent"] = descent_composition(t).parts();
                    }
                    arr.push_back(std::move(entry));
                }
                nlohmann::json report = {{"command", "tableaux"}, {"shape", shape.parts()},
                                         {"content", content},    {"tableaux", std::move(arr)},
                                         {"count", list.size()},  {"elapsed_ms", elapsed_ms(start)}};
                out << report.dump() << '\n';
            } else {
                for (const auto &t : list) {
                    out << (format == "latex" ? render_latex_tableau(t.rows) + "\n" : render_text(t.rows));
                    if (descents) {
                        out << "descent composition: [" << to_string(descent_composition(t)) << "]\n";
                    }
                    out << '\n';
                }
                out << "count: " << list.size() << '\n';
            }
            return ok;
        }
        if (*verify_cmd) {
            if (!verify::is_suite(suite)) {
                throw usage_failure("unknown suite '" + suite + "'");
            }
            const auto reports = verify::run(suite, max_n);
            std::vector<std::string> first_failures;
            bool passed = true;
            for (const auto &r : reports) {
                passed = passed && r.passed();
                for (const auto &f : r.failures) {
                    if (first_failures.size() < 10) {
                        first_failures.push_back(r.suite + ": " + f);
                    }
                }
            }
            if (format == "json") {
                nlohmann::json suites = nlohmann::json::array();
                for (const auto &r : reports) {
                    suites.push_back({{"suite", r.suite}, {"instances", r.instances}, {"failures", r.failures.size()}});
                }
                nlohmann::json report = {{"command", "verify"},  {"suite", suite},
                                         {"max_n", max_n},       {"suites", std::move(suites)},
                                         {"failures", first_failures}, {"elapsed_ms", elapsed_ms(start)}};
                out << report.dump() << '\n';
            } else {
                for (const auto &r : reports) {
                    out << r.suite << ": " << r.instances << " instances, "
                        << (r.passed() ? std::string("pass") : "FAIL (" + std::to_string(r.failures.size()) + ")")
                        << '\n';
                }
                for (const auto &f : first_failures) {
                    out << "  " << f << '\n';
                }
                out << (passed ? "pass" : "FAIL") << " (max-n " << max_n << ")\n";
            }
            return passed ? ok : verification_failed;
        }
    } catch (const usage_failure &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace immaculata::cli

#endif
