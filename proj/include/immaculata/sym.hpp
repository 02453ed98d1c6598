#ifndef IMMACULATA_SYM_HPP
#define IMMACULATA_SYM_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <immaculata/compositions.hpp>
#include <immaculata/error.hpp>
#include <immaculata/integer.hpp>
#include <immaculata/linear_combination.hpp>
#include <immaculata/nsym.hpp>

namespace immaculata {

enum class sym_basis { h, s, p, m };

inline std::string to_string(sym_basis b)
{
    switch (b) {
    case sym_basis::h:
        return "h";
    case sym_basis::s:
        return "s";
    case sym_basis::p:
        return "p";
    case sym_basis::m:
        return "m";
    }
    return "?";
}

using partition_sum = linear_combination<partition>;
using rational_partition_sum = linear_combination<partition, rational>;

class sym_element {
public:
    explicit sym_element(sym_basis basis = sym_basis::h, partition_sum terms = {})
        : basis_(basis), terms_(std::move(terms))
    {
    }

    static sym_element monomial(sym_basis basis, const partition &index, const integer &coeff = 1)
    {
        return sym_element(basis, partition_sum(index, coeff));
    }

    sym_basis basis() const { return basis_; }
    const partition_sum &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    integer coefficient(const partition &p) const { return terms_.coefficient(p); }

    sym_element &operator+=(const sym_element &o)
    {
        check_same(o);
        terms_ += o.terms_;
        return *this;
    }
    sym_element &operator-=(const sym_element &o)
    {
        check_same(o);
        terms_ -= o.terms_;
        return *this;
    }
    friend sym_element operator+(sym_element a, const sym_element &b) { return a += b; }
    friend sym_element operator-(sym_element a, const sym_element &b) { return a -= b; }
    friend sym_element operator*(const integer &s, sym_element a)
    {
        a.terms_ *= s;
        return a;
    }
    friend bool operator==(const sym_element &, const sym_element &) = default;

private:
    void check_same(const sym_element &o) const
    {
        if (o.basis_ != basis_) {
            throw basis_mismatch("cannot add Sym elements in bases " + to_string(basis_) + " and "
                                 + to_string(o.basis_));
        }
    }

    sym_basis basis_;
    partition_sum terms_;
};

/// Multiset union of parts (product in any multiplicative basis h, p, e).
inline partition merge_parts(const partition &a, const partition &b)
{
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.begin(), b.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return partition(std::move(parts));
}

/// Sorts h-indices into a partition: zeros dropped (h_0 = 1), a negative
/// entry kills the term (h_{-m} = 0).
inline std::optional<partition> normalize_sym_index(std::vector<int> entries)
{
    std::vector<int> parts;
    for (int v : entries) {
        if (v < 0) {
            return std::nullopt;
        }
        if (v > 0) {
            parts.push_back(v);
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return partition(std::move(parts));
}

struct straightened_schur {
    int sign;
    partition shape;

    friend bool operator==(const straightened_schur &, const straightened_schur &) = default;
};

/// s_alpha = 0, or (-1)^sigma s_lambda with lambda_i = alpha_{sigma_i} + i - sigma_i
/// a partition. Trailing zero parts are dropped; a negative part makes it 0.
inline std::optional<straightened_schur> schur_straighten(const int_tuple &alpha)
{
    const std::size_t k = alpha.length();
    std::vector<int> shifted(k);
    for (std::size_t i = 0; i < k; ++i) {
        shifted[i] = alpha[i] - static_cast<int>(i + 1);
    }
    // insertion sort into strictly decreasing order, counting transpositions
    bool odd = false;
    for (std::size_t i = 1; i < k; ++i) {
        for (std::size_t j = i; j > 0 && shifted[j - 1] <= shifted[j]; --j) {
            if (shifted[j - 1] == shifted[j]) {
                return std::nullopt;
            }
            std::swap(shifted[j - 1], shifted[j]);
            odd = !odd;
        }
    }
    std::vector<int> parts;
    for (std::size_t i = 0; i < k; ++i) {
        const int part = shifted[i] + static_cast<int>(i + 1);
        if (part < 0) {
            return std::nullopt;
        }
        if (part > 0) {
            parts.push_back(part);
        }
    }
    return straightened_schur{sign_of_parity(odd), partition(std::move(parts))};
}

/// Jacobi-Trudi determinant det(h_{alpha_i + j - i}) in the h basis.
inline sym_element schur_to_h(const int_tuple &alpha)
{
    const std::size_t k = alpha.length();
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 1);
    partition_sum out;
    std::vector<int> entries(k);
    do {
        for (std::size_t i = 0; i < k; ++i) {
            entries[i] = alpha[i] + sigma[i] - static_cast<int>(i + 1);
        }
        if (auto idx = normalize_sym_index(entries)) {
            out.add(*idx, integer(detail::permutation_sign(sigma)));
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return sym_element(sym_basis::h, std::move(out));
}

inline sym_element schur_to_h(const partition &lambda) { return schur_to_h(lambda.to_tuple()); }

/// Forgetful map chi: H_alpha -> h_{alpha_1} ... h_{alpha_l}. Non-H inputs
/// are converted to H first.
inline sym_element forgetful(const nsym_element &f)
{
    partition_sum out;
    const nsym_element h = to_h(f);
    for (const auto &[c, k] : h.terms()) {
        out.add(sorted(c), k);
    }
    return sym_element(sym_basis::h, std::move(out));
}

/// h_1, ..., h_n in the power sum basis over the rationals, from the Newton
/// recurrence n h_n = sum_{k=1}^n p_k h_{n-k}.
inline std::vector<rational_partition_sum> h_generators_in_p(int n)
{
    std::vector<rational_partition_sum> h(static_cast<std::size_t>(n) + 1);
    h[0] = rational_partition_sum(partition{}, rational(1));
    for (int m = 1; m <= n; ++m) {
        rational_partition_sum cur;
        for (int k = 1; k <= m; ++k) {
            for (const auto &[lam, c] : h[static_cast<std::size_t>(m - k)]) {
                cur.add(merge_parts(lam, partition{k}), c);
            }
        }
        cur *= rational(1, m);
        h[static_cast<std::size_t>(m)] = std::move(cur);
    }
    return h;
}

inline rational_partition_sum h_to_p(const sym_element &f)
{
    if (f.basis() != sym_basis::h) {
        throw basis_mismatch("h_to_p: expected h basis");
    }
    int top = 0;
    for (const auto &[lam, c] : f.terms()) {
        if (!lam.empty()) {
            top = std::max(top, lam[0]);
        }
    }
    const auto gens = h_generators_in_p(top);
    rational_partition_sum out;
    for (const auto &[lam, c] : f.terms()) {
        rational_partition_sum prod(partition{}, rational(1));
        for (int part : lam) {
            rational_partition_sum next;
            for (const auto &[a, ca] : prod) {
                for (const auto &[b, cb] : gens[static_cast<std::size_t>(part)]) {
                    next.add(merge_parts(a, b), ca * cb);
                }
            }
            prod = std::move(next);
        }
        out.add(prod, rational(c));
    }
    return out;
}

/// Integral view of a rational p-expansion, nullopt when some coefficient is
/// not an integer.
inline std::optional<sym_element> integral_p(const rational_partition_sum &f)
{
    partition_sum out;
    for (const auto &[lam, c] : f) {
        if (denominator(c) != 1) {
            return std::nullopt;
        }
        out.add(lam, numerator(c));
    }
    return sym_element(sym_basis::p, std::move(out));
}

namespace detail {

// Non-negative integer matrices with row sums `rows` and column sums `cols`.
inline integer count_contingency(const std::vector<int> &rows, std::vector<int> &cols, std::size_t r,
                                 std::size_t c, int row_left)
{
    if (r == rows.size()) {
        return std::all_of(cols.begin(), cols.end(), [](int v) { return v == 0; }) ? 1 : 0;
    }
    if (c + 1 == cols.size()) {
        if (row_left > cols[c]) {
            return 0;
        }
        cols[c] -= row_left;
        integer n = r + 1 == rows.size() ? count_contingency(rows, cols, r + 1, 0, 0)
                                         : count_contingency(rows, cols, r + 1, 0, rows[r + 1]);
        cols[c] += row_left;
        return n;
    }
    integer total = 0;
    for (int v = 0; v <= std::min(row_left, cols[c]); ++v) {
        cols[c] -= v;
        total += count_contingency(rows, cols, r, c + 1, row_left - v);
        cols[c] += v;
    }
    return total;
}

} // namespace detail

/// h_mu = sum_nu N_{mu,nu} m_nu, N counting non-negative integer matrices
/// with row sums mu and column sums nu.
inline sym_element h_to_m(const sym_element &f)
{
    if (f.basis() != sym_basis::h) {
        throw basis_mismatch("h_to_m: expected h basis");
    }
    partition_sum out;
    for (const auto &[mu, k] : f.terms()) {
        for (const auto &nu : partitions_of(mu.size())) {
            integer n;
            if (mu.empty()) {
                n = 1;
            } else {
                std::vector<int> cols = nu.parts();
                n = detail::count_contingency(mu.parts(), cols, 0, 0, mu[0]);
            }
            out.add(nu, n * k);
        }
    }
    return sym_element(sym_basis::m, std::move(out));
}

inline sym_element schur_to_m(const partition &lambda) { return h_to_m(schur_to_h(lambda)); }

} // namespace immaculata

#endif
