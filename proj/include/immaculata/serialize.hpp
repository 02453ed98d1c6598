#ifndef IMMACULATA_SERIALIZE_HPP
#define IMMACULATA_SERIALIZE_HPP

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include <immaculata/compositions.hpp>
#include <immaculata/integer.hpp>
#include <immaculata/linear_combination.hpp>
#include <immaculata/nsym.hpp>
#include <immaculata/qsym.hpp>
#include <immaculata/sym.hpp>
#include <immaculata/tableaux.hpp>

namespace immaculata {

// JSON element schema:
//   {"basis": "<tag>", "terms": [{"index": [...], "coeff": "<decimal>"}]}
// terms in increasing lexicographic index order, coefficients as strings.

inline const std::vector<int> &index_entries(const composition &c) { return c.parts(); }
inline const std::vector<int> &index_entries(const partition &p) { return p.parts(); }
inline const std::vector<int> &index_entries(const int_tuple &t) { return t.entries(); }

template <class Index>
nlohmann::json terms_to_json(std::string_view basis, const linear_combination<Index> &terms)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &[idx, c] : terms) {
        arr.push_back({{"index", index_entries(idx)}, {"coeff", to_decimal(c)}});
    }
    return {{"basis", std::string(basis)}, {"terms", std::move(arr)}};
}

inline nlohmann::json to_json(const nsym_element &f) { return terms_to_json(to_string(f.basis()), f.terms()); }
inline nlohmann::json to_json(const qsym_element &g) { return terms_to_json(to_string(g.basis()), g.terms()); }
inline nlohmann::json to_json(const sym_element &g) { return terms_to_json(to_string(g.basis()), g.terms()); }

inline nsym_basis parse_nsym_basis(std::string_view s)
{
    if (s == "H") return nsym_basis::H;
    if (s == "R") return nsym_basis::R;
    if (s == "Psi") return nsym_basis::Psi;
    if (s == "S") return nsym_basis::S;
    throw std::invalid_argument("unknown NSym basis '" + std::string(s) + "'");
}

inline qsym_basis parse_qsym_basis(std::string_view s)
{
    if (s == "M") return qsym_basis::M;
    if (s == "F") return qsym_basis::F;
    if (s == "Sstar") return qsym_basis::Sstar;
    throw std::invalid_argument("unknown QSym basis '" + std::string(s) + "'");
}

inline sym_basis parse_sym_basis(std::string_view s)
{
    if (s == "h") return sym_basis::h;
    if (s == "s") return sym_basis::s;
    if (s == "p") return sym_basis::p;
    if (s == "m") return sym_basis::m;
    throw std::invalid_argument("unknown Sym basis '" + std::string(s) + "'");
}

template <class Index>
linear_combination<Index> terms_from_json(const nlohmann::json &j)
{
    linear_combination<Index> out;
    for (const auto &t : j.at("terms")) {
        out.add(Index(t.at("index").get<std::vector<int>>()), parse_integer(t.at("coeff").get<std::string>()));
    }
    return out;
}

inline nsym_element nsym_from_json(const nlohmann::json &j)
{
    return nsym_element(parse_nsym_basis(j.at("basis").get<std::string>()), terms_from_json<composition>(j));
}

inline qsym_element qsym_from_json(const nlohmann::json &j)
{
    return qsym_element(parse_qsym_basis(j.at("basis").get<std::string>()), terms_from_json<composition>(j));
}

inline sym_element sym_from_json(const nlohmann::json &j)
{
    return sym_element(parse_sym_basis(j.at("basis").get<std::string>()), terms_from_json<partition>(j));
}

// ---------------------------------------------------------------------------
// Text and LaTeX rendering

/// "H[2,3] - H[3,2]", "2*S[3,2,1]", "0" for the zero element.
template <class Index>
std::string render_text(std::string_view symbol, const linear_combination<Index> &terms)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[idx, c] : terms) {
        const bool negative = c < 0;
        const integer mag = negative ? integer(-c) : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1) {
            out += to_decimal(mag) + "*";
        }
        out += std::string(symbol) + "[" + join_ints(index_entries(idx)) + "]";
        first = false;
    }
    return out;
}

inline std::string latex_symbol(std::string_view basis)
{
    if (basis == "S") return "\\mathfrak{S}";
    if (basis == "Sstar") return "\\mathfrak{S}^*";
    if (basis == "Psi") return "\\Psi";
    return std::string(basis);
}

template <class Index>
std::string render_latex(std::string_view basis, const linear_combination<Index> &terms)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    const std::string symbol = latex_symbol(basis);
    for (const auto &[idx, c] : terms) {
        const bool negative = c < 0;
        const integer mag = negative ? integer(-c) : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1) {
            out += to_decimal(mag) + "\\,";
        }
        const auto &e = index_entries(idx);
        out += symbol + "_{" + (e.empty() ? std::string("\\varnothing") : join_ints(e)) + "}";
        first = false;
    }
    return out;
}

inline std::string render_text(const nsym_element &f) { return render_text(to_string(f.basis()), f.terms()); }
inline std::string render_text(const qsym_element &g) { return render_text(to_string(g.basis()), g.terms()); }
inline std::string render_text(const sym_element &g) { return render_text(to_string(g.basis()), g.terms()); }
inline std::string render_latex(const nsym_element &f) { return render_latex(to_string(f.basis()), f.terms()); }
inline std::string render_latex(const qsym_element &g) { return render_latex(to_string(g.basis()), g.terms()); }
inline std::string render_latex(const sym_element &g) { return render_latex(to_string(g.basis()), g.terms()); }

// Tableaux: JSON array of rows, e.g. [[1,1,1,3],[2,3],[4,4,4]].
inline nlohmann::json to_json(const tableau_rows &rows) { return nlohmann::json(rows); }
inline nlohmann::json to_json(const immaculate_tableau &t) { return to_json(t.rows); }

inline immaculate_tableau tableau_from_json(const nlohmann::json &j)
{
    immaculate_tableau t;
    t.rows = j.get<tableau_rows>();
    std::vector<int> shape;
    for (const auto &row : t.rows) {
        shape.push_back(static_cast<int>(row.size()));
    }
    t.shape = composition(std::move(shape));
    if (!is_immaculate(t.shape, t.rows)) {
        throw std::invalid_argument("tableau_from_json: not an immaculate tableau");
    }
    return t;
}

/// Left-justified rows, first row on top, entries separated by spaces.
inline std::string render_text(const tableau_rows &rows)
{
    std::string out;
    for (const auto &row : rows) {
        out += join_ints(row, " ");
        out += '\n';
    }
    return out;
}

} // namespace immaculata

#endif
