#ifndef IMMACULATA_COMPOSITIONS_HPP
#define IMMACULATA_COMPOSITIONS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace immaculata {

// Finite list of arbitrary integers. Generalized index for immaculate and
// Schur functions; zero and negative entries are allowed.
class int_tuple {
public:
    int_tuple() = default;
    explicit int_tuple(std::vector<int> entries) : entries_(std::move(entries)) {}
    int_tuple(std::initializer_list<int> entries) : entries_(entries) {}

    std::size_t length() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int> &entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool all_positive() const
    {
        return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v > 0; });
    }

    friend auto operator<=>(const int_tuple &, const int_tuple &) = default;
    friend bool operator==(const int_tuple &, const int_tuple &) = default;

private:
    std::vector<int> entries_;
};

// Ordered list of positive integers. The empty composition is a valid value
// (the unique composition of 0).
class composition {
public:
    composition() = default;
    explicit composition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_) {
            if (p < 1) {
                throw std::invalid_argument("composition parts must be positive");
            }
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }
    composition(std::initializer_list<int> parts) : composition(std::vector<int>(parts)) {}

    /// |alpha|, the sum of the parts.
    int size() const { return size_; }
    /// l(alpha), the number of parts.
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    int operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<int> &parts() const { return parts_; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    int_tuple to_tuple() const { return int_tuple(parts_); }

    // Lexicographic on the part lists.
    friend std::strong_ordering operator<=>(const composition &a, const composition &b)
    {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const composition &a, const composition &b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Weakly decreasing list of positive integers.
class partition {
public:
    partition() = default;
    explicit partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) {
                throw std::invalid_argument("partition parts must be positive");
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw std::invalid_argument("partition parts must be weakly decreasing");
            }
        }
    }
    partition(std::initializer_list<int> parts) : partition(std::vector<int>(parts)) {}

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    int operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<int> &parts() const { return parts_; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    composition to_composition() const { return composition(parts_); }
    int_tuple to_tuple() const { return int_tuple(parts_); }

    friend std::strong_ordering operator<=>(const partition &a, const partition &b)
    {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const partition &a, const partition &b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
};

inline std::optional<composition> to_composition(const int_tuple &t)
{
    if (!t.all_positive()) {
        return std::nullopt;
    }
    return composition(t.entries());
}

inline bool is_partition(std::span<const int> parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1 || (i > 0 && parts[i] > parts[i - 1])) {
            return false;
        }
    }
    return true;
}

inline std::optional<partition> to_partition(const composition &c)
{
    if (!is_partition(c.parts())) {
        return std::nullopt;
    }
    return partition(c.parts());
}

// Parts sorted into weakly decreasing order.
inline partition sorted(const composition &c)
{
    std::vector<int> parts = c.parts();
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return partition(std::move(parts));
}

inline composition concat(const composition &a, const composition &b)
{
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.begin(), b.end());
    return composition(std::move(parts));
}

inline composition prepend(int first, const composition &rest)
{
    std::vector<int> parts;
    parts.reserve(rest.length() + 1);
    parts.push_back(first);
    parts.insert(parts.end(), rest.begin(), rest.end());
    return composition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

inline void compositions_rec(int remaining, std::vector<int> &prefix, std::vector<composition> &out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = 1; p <= remaining; ++p) {
        prefix.push_back(p);
        compositions_rec(remaining - p, prefix, out);
        prefix.pop_back();
    }
}

inline void partitions_rec(int remaining, int max_part, std::vector<int> &prefix, std::vector<partition> &out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All 2^(n-1) compositions of n (one, the empty composition, for n = 0),
/// in lexicographically increasing order.
inline std::vector<composition> compositions_of(int n)
{
    if (n < 0) {
        throw std::invalid_argument("compositions_of: n must be non-negative");
    }
    std::vector<composition> out;
    out.reserve(n == 0 ? 1 : std::size_t{1} << (n - 1));
    std::vector<int> prefix;
    detail::compositions_rec(n, prefix, out);
    return out;
}

/// Partitions of n in lexicographically increasing order.
inline std::vector<partition> partitions_of(int n)
{
    if (n < 0) {
        throw std::invalid_argument("partitions_of: n must be non-negative");
    }
    std::vector<partition> out;
    std::vector<int> prefix;
    detail::partitions_rec(n, n, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Descent sets and orders

/// D(alpha): the partial sums alpha_1, alpha_1 + alpha_2, ..., excluding |alpha|.
inline std::vector<int> descent_set(const composition &c)
{
    std::vector<int> out;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < c.length(); ++i) {
        acc += c[i];
        out.push_back(acc);
    }
    return out;
}

/// Inverse of descent_set for compositions of n.
inline composition composition_of_subset(std::span<const int> subset, int n)
{
    if (n < 0) {
        throw std::invalid_argument("composition_of_subset: n must be non-negative");
    }
    std::vector<int> s(subset.begin(), subset.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s) {
        if (v < 1 || v > n - 1) {
            throw std::invalid_argument("composition_of_subset: element " + std::to_string(v)
                                        + " outside {1,...," + std::to_string(n - 1) + "}");
        }
    }
    if (n == 0) {
        return composition{};
    }
    std::vector<int> parts;
    int prev = 0;
    for (int v : s) {
        parts.push_back(v - prev);
        prev = v;
    }
    parts.push_back(n - prev);
    return composition(std::move(parts));
}

/// Refinement order: a <= b iff D(b) is a subset of D(a), i.e. b is obtained
/// from a by merging adjacent parts.
inline bool refinement_leq(const composition &a, const composition &b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("refinement_leq: compositions of different sizes");
    }
    const auto da = descent_set(a);
    const auto db = descent_set(b);
    return std::includes(da.begin(), da.end(), db.begin(), db.end());
}

inline bool lex_leq(const composition &a, const composition &b) { return a <= b; }

namespace detail {

template <class Fn>
void for_each_subset(const std::vector<int> &base, Fn &&fn)
{
    const std::size_t k = base.size();
    std::vector<int> chosen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        chosen.clear();
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::size_t{1} << i)) {
                chosen.push_back(base[i]);
            }
        }
        fn(chosen);
    }
}

} // namespace detail

/// Every b with a <= b in refinement order (b coarser than a), lex order.
inline std::vector<composition> coarsenings(const composition &a)
{
    std::vector<composition> out;
    detail::for_each_subset(descent_set(a), [&](const std::vector<int> &s) {
        out.push_back(composition_of_subset(s, a.size()));
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Every b with b <= a in refinement order (b finer than a), lex order.
inline std::vector<composition> refinements(const composition &a)
{
    const int n = a.size();
    const auto da = descent_set(a);
    std::vector<int> free;
    for (int i = 1; i < n; ++i) {
        if (!std::binary_search(da.begin(), da.end(), i)) {
            free.push_back(i);
        }
    }
    std::vector<composition> out;
    detail::for_each_subset(free, [&](const std::vector<int> &s) {
        std::vector<int> d = da;
        d.insert(d.end(), s.begin(), s.end());
        out.push_back(composition_of_subset(d, n));
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// All b with a subset_s b: |b| = |a| + s, a_j <= b_j for j <= l(a), and
/// l(b) <= l(a) + 1. Lexicographic order, no repeats.
inline std::vector<composition> pieri_successors(const composition &a, int s)
{
    if (s < 1) {
        throw std::invalid_argument("pieri_successors: s must be positive");
    }
    std::vector<composition> out;
    std::vector<int> parts = a.parts();
    // distribute `left` among the existing rows starting at row `j`, the rest
    // (if any) becomes a new final row.
    auto rec = [&](auto &&self, std::size_t j, int left) -> void {
        if (j == parts.size()) {
            if (left == 0) {
                out.emplace_back(parts);
            } else {
                parts.push_back(left);
                out.emplace_back(parts);
                parts.pop_back();
            }
            return;
        }
        for (int d = 0; d <= left; ++d) {
            parts[j] += d;
            self(self, j + 1, left - d);
            parts[j] -= d;
        }
    };
    rec(rec, 0, s);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Text form: "2,3" for compositions, "" for the empty one, "{4,8,10}" for subsets.

inline std::string join_ints(std::span<const int> v, std::string_view sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            out += sep;
        }
        out += std::to_string(v[i]);
    }
    return out;
}

inline std::string to_string(const composition &c) { return join_ints(c.parts()); }
inline std::string to_string(const partition &p) { return join_ints(p.parts()); }
inline std::string to_string(const int_tuple &t) { return join_ints(t.entries()); }

inline std::string subset_to_string(std::span<const int> s) { return "{" + join_ints(s) + "}"; }

inline std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto field = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (field.empty()) {
            throw std::invalid_argument("empty field in integer list '" + std::string(text) + "'");
        }
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(std::string(field), &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad integer '" + std::string(field) + "'");
        }
        if (used != field.size()) {
            throw std::invalid_argument("bad integer '" + std::string(field) + "'");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

inline composition parse_composition(std::string_view text) { return composition(parse_int_list(text)); }
inline partition parse_partition(std::string_view text) { return partition(parse_int_list(text)); }
inline int_tuple parse_int_tuple(std::string_view text) { return int_tuple(parse_int_list(text)); }

} // namespace immaculata

#endif
