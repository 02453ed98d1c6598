#ifndef IMMACULATA_TABLEAUX_HPP
#define IMMACULATA_TABLEAUX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <immaculata/compositions.hpp>
#include <immaculata/integer.hpp>

namespace immaculata {

using tableau_rows = std::vector<std::vector<int>>;

// Filling of a composition diagram: rows weakly increase left to right, the
// first column strictly increases top to bottom. No other column condition.
struct immaculate_tableau {
    composition shape;
    tableau_rows rows;

    friend bool operator==(const immaculate_tableau &, const immaculate_tableau &) = default;
    friend auto operator<=>(const immaculate_tableau &a, const immaculate_tableau &b) { return a.rows <=> b.rows; }
};

// Cells of `outer` not in `inner`, rows matched by index from the top. Rows
// with index >= l(inner) start in the first column.
class skew_shape {
public:
    skew_shape() = default;
    skew_shape(composition inner, composition outer) : inner_(std::move(inner)), outer_(std::move(outer))
    {
        if (!contains(inner_, outer_)) {
            throw std::invalid_argument("skew_shape: inner [" + to_string(inner_) + "] not contained in outer ["
                                        + to_string(outer_) + "]");
        }
    }

    static bool contains(const composition &inner, const composition &outer)
    {
        if (inner.length() > outer.length()) {
            return false;
        }
        for (std::size_t i = 0; i < inner.length(); ++i) {
            if (inner[i] > outer[i]) {
                return false;
            }
        }
        return true;
    }

    const composition &inner() const { return inner_; }
    const composition &outer() const { return outer_; }
    std::size_t rows() const { return outer_.length(); }
    int row_start(std::size_t r) const { return r < inner_.length() ? inner_[r] : 0; }
    int row_length(std::size_t r) const { return outer_[r] - row_start(r); }
    int cell_count() const { return outer_.size() - inner_.size(); }
    // Rows whose leftmost skew cell sits in the first column.
    bool starts_first_column(std::size_t r) const { return r >= inner_.length(); }

    friend bool operator==(const skew_shape &, const skew_shape &) = default;

private:
    composition inner_;
    composition outer_;
};

struct skew_immaculate_tableau {
    skew_shape shape;
    tableau_rows rows; // skew cells only, row r has shape.row_length(r) entries

    friend bool operator==(const skew_immaculate_tableau &, const skew_immaculate_tableau &) = default;
};

namespace detail {

inline void check_content(int cells, std::span<const int> content)
{
    int total = 0;
    for (int c : content) {
        if (c < 0) {
            throw std::invalid_argument("content entries must be non-negative");
        }
        total += c;
    }
    if (total != cells) {
        throw std::invalid_argument("content size " + std::to_string(total) + " does not match shape size "
                                    + std::to_string(cells));
    }
}

// Row-by-row, cell-by-cell backtracking over fillings with weakly increasing
// rows, given content, and strictly increasing first entries on the rows
// flagged in `strict_first`. Visits fillings in row-reading lexicographic order.
template <class Visitor>
class row_filler {
public:
    row_filler(std::vector<int> lengths, std::vector<bool> strict_first, std::span<const int> content, Visitor &visit)
        : lengths_(std::move(lengths)), strict_(std::move(strict_first)), remaining_(content.begin(), content.end()),
          visit_(visit)
    {
        rows_.resize(lengths_.size());
        for (std::size_t r = 0; r < lengths_.size(); ++r) {
            rows_[r].assign(static_cast<std::size_t>(lengths_[r]), 0);
        }
        max_value_ = static_cast<int>(remaining_.size());
        // strict rows still to come after row r, for pruning first-column choices
        strict_after_.assign(lengths_.size() + 1, 0);
        for (std::size_t r = lengths_.size(); r-- > 0;) {
            strict_after_[r] = strict_after_[r + 1] + ((strict_[r] && lengths_[r] > 0) ? 1 : 0);
        }
    }

    void run() { fill(0, 0, 0); }

private:
    void fill(std::size_t r, int c, int last_strict_first)
    {
        while (r < rows_.size() && c == lengths_[r]) {
            ++r;
            c = 0;
        }
        if (r == rows_.size()) {
            visit_(static_cast<const tableau_rows &>(rows_));
            return;
        }
        const bool first_strict = (c == 0 && strict_[r]);
        int lo = 1;
        int hi = max_value_;
        if (c > 0) {
            lo = rows_[r][c - 1];
        }
        if (first_strict) {
            lo = std::max(lo, last_strict_first + 1);
            // leave room for the strict rows below
            hi -= strict_after_[r + 1];
        }
        for (int v = lo; v <= hi; ++v) {
            int &left = remaining_[static_cast<std::size_t>(v - 1)];
            if (left == 0) {
                continue;
            }
            --left;
            rows_[r][c] = v;
            fill(r, c + 1, first_strict ? v : last_strict_first);
            ++left;
        }
    }

    std::vector<int> lengths_;
    std::vector<bool> strict_;
    std::vector<int> remaining_;
    std::vector<int> strict_after_;
    tableau_rows rows_;
    int max_value_ = 0;
    Visitor &visit_;
};

inline std::vector<int> ones(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

} // namespace detail

/// Calls `visit(rows)` for every immaculate tableau of the given shape and
/// content (content may contain zeros).
template <class Visitor>
void for_each_immaculate_tableau(const composition &shape, std::span<const int> content, Visitor &&visit)
{
    detail::check_content(shape.size(), content);
    std::vector<bool> strict(shape.length(), true);
    detail::row_filler<std::remove_reference_t<Visitor>> filler(shape.parts(), std::move(strict), content, visit);
    filler.run();
}

inline std::vector<immaculate_tableau> enumerate_immaculate_tableaux(const composition &shape,
                                                                     std::span<const int> content)
{
    std::vector<immaculate_tableau> out;
    for_each_immaculate_tableau(shape, content, [&](const tableau_rows &rows) { out.push_back({shape, rows}); });
    return out;
}

/// K_{shape,content}: the number of immaculate tableaux of the given shape and content.
inline integer kostka_immaculate(const composition &shape, std::span<const int> content)
{
    std::uint64_t count = 0;
    for_each_immaculate_tableau(shape, content, [&](const tableau_rows &) { ++count; });
    return integer(count);
}

inline integer kostka_immaculate(const composition &shape, const composition &content)
{
    return kostka_immaculate(shape, std::span<const int>(content.parts()));
}

inline std::vector<immaculate_tableau> standard_immaculate_tableaux(const composition &shape)
{
    const auto content = detail::ones(shape.size());
    return enumerate_immaculate_tableaux(shape, content);
}

inline bool is_immaculate(const composition &shape, const tableau_rows &rows)
{
    if (rows.size() != shape.length()) {
        return false;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != static_cast<std::size_t>(shape[r])) {
            return false;
        }
        if (!std::is_sorted(rows[r].begin(), rows[r].end())) {
            return false;
        }
        if (std::any_of(rows[r].begin(), rows[r].end(), [](int v) { return v < 1; })) {
            return false;
        }
        if (r > 0 && rows[r].front() <= rows[r - 1].front()) {
            return false;
        }
    }
    return true;
}

/// Occurrence counts of 1, 2, ..., max entry.
inline std::vector<int> word_content(std::span<const int> word)
{
    std::vector<int> counts;
    for (int v : word) {
        if (v < 1) {
            throw std::invalid_argument("word entries must be positive");
        }
        if (static_cast<std::size_t>(v) > counts.size()) {
            counts.resize(static_cast<std::size_t>(v), 0);
        }
        ++counts[static_cast<std::size_t>(v - 1)];
    }
    return counts;
}

inline std::vector<int> tableau_content(const tableau_rows &rows)
{
    std::vector<int> word;
    for (const auto &row : rows) {
        word.insert(word.end(), row.begin(), row.end());
    }
    return word_content(word);
}

/// Every prefix has at least as many i's as (i+1)'s, for all i >= 1.
inline bool is_yamanouchi(std::span<const int> word)
{
    std::vector<int> counts;
    for (int v : word) {
        if (v < 1) {
            return false;
        }
        if (static_cast<std::size_t>(v) > counts.size()) {
            counts.resize(static_cast<std::size_t>(v), 0);
        }
        const auto i = static_cast<std::size_t>(v - 1);
        ++counts[i];
        if (i > 0 && counts[i] > counts[i - 1]) {
            return false;
        }
    }
    return true;
}

/// Rows read right to left, top row first.
inline std::vector<int> reading_word(const tableau_rows &rows)
{
    std::vector<int> word;
    for (const auto &row : rows) {
        word.insert(word.end(), row.rbegin(), row.rend());
    }
    return word;
}

inline std::vector<int> reading_word(const skew_immaculate_tableau &t) { return reading_word(t.rows); }
inline std::vector<int> reading_word(const immaculate_tableau &t) { return reading_word(t.rows); }

/// Descent composition of a standard immaculate tableau: i is a descent when
/// i+1 sits in a strictly lower row than i.
inline composition descent_composition(const immaculate_tableau &t)
{
    const int n = t.shape.size();
    std::vector<int> row_of(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        for (int v : t.rows[r]) {
            if (v < 1 || v > n || row_of[static_cast<std::size_t>(v)] != -1) {
                throw std::invalid_argument("descent_composition: tableau is not standard");
            }
            row_of[static_cast<std::size_t>(v)] = static_cast<int>(r);
        }
    }
    std::vector<int> descents;
    for (int i = 1; i < n; ++i) {
        if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) {
            descents.push_back(i);
        }
    }
    return composition_of_subset(descents, n);
}

/// L_{shape, .}: descent composition -> number of standard immaculate
/// tableaux of `shape` with that descent composition.
inline std::map<composition, integer> descent_distribution(const composition &shape)
{
    std::map<composition, integer> out;
    const auto content = detail::ones(shape.size());
    for_each_immaculate_tableau(shape, content, [&](const tableau_rows &rows) {
        out[descent_composition(immaculate_tableau{shape, rows})] += 1;
    });
    return out;
}

/// Skew immaculate tableaux: weakly increasing rows, strictly increasing first
/// entries on the rows that start in the first column.
template <class Visitor>
void for_each_skew_immaculate_tableau(const skew_shape &shape, std::span<const int> content, Visitor &&visit)
{
    detail::check_content(shape.cell_count(), content);
    std::vector<int> lengths;
    std::vector<bool> strict;
    for (std::size_t r = 0; r < shape.rows(); ++r) {
        lengths.push_back(shape.row_length(r));
        strict.push_back(shape.starts_first_column(r));
    }
    detail::row_filler<std::remove_reference_t<Visitor>> filler(std::move(lengths), std::move(strict), content, visit);
    filler.run();
}

inline std::vector<skew_immaculate_tableau> enumerate_skew_immaculate_tableaux(const skew_shape &shape,
                                                                               std::span<const int> content)
{
    std::vector<skew_immaculate_tableau> out;
    for_each_skew_immaculate_tableau(shape, content, [&](const tableau_rows &rows) { out.push_back({shape, rows}); });
    return out;
}

/// c^beta_{alpha,lambda}: skew immaculate tableaux of shape beta minus alpha
/// whose reading word is Yamanouchi of content lambda. Zero when alpha does
/// not fit inside beta.
inline integer lr_coefficient(const composition &alpha, const partition &lambda, const composition &beta)
{
    if (beta.size() != alpha.size() + lambda.size()) {
        throw std::invalid_argument("lr_coefficient: |beta| must equal |alpha| + |lambda|");
    }
    if (!skew_shape::contains(alpha, beta)) {
        return 0;
    }
    std::uint64_t count = 0;
    for_each_skew_immaculate_tableau(skew_shape(alpha, beta), std::span<const int>(lambda.parts()),
                                     [&](const tableau_rows &rows) {
                                         if (is_yamanouchi(reading_word(rows))) {
                                             ++count;
                                         }
                                     });
    return integer(count);
}

} // namespace immaculata

#endif
