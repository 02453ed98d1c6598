#ifndef IMMACULATA_NSYM_HPP
#define IMMACULATA_NSYM_HPP

#include <algorithm>
#include <cstddef>
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
#include <immaculata/tableaux.hpp>

namespace immaculata {

// H: complete homogeneous, R: ribbon, Psi: power sums of the first kind,
// S: immaculate.
enum class nsym_basis { H, R, Psi, S };

inline std::string to_string(nsym_basis b)
{
    switch (b) {
    case nsym_basis::H:
        return "H";
    case nsym_basis::R:
        return "R";
    case nsym_basis::Psi:
        return "Psi";
    case nsym_basis::S:
        return "S";
    }
    return "?";
}

using composition_sum = linear_combination<composition>;
// Immaculate terms indexed by arbitrary integer tuples (zero padded indices
// of the Murnaghan-Nakayama rule).
using tuple_sum = linear_combination<int_tuple>;

class nsym_element {
public:
    explicit nsym_element(nsym_basis basis = nsym_basis::H, composition_sum terms = {})
        : basis_(basis), terms_(std::move(terms))
    {
    }

    static nsym_element monomial(nsym_basis basis, const composition &index, const integer &coeff = 1)
    {
        return nsym_element(basis, composition_sum(index, coeff));
    }
    static nsym_element one(nsym_basis basis = nsym_basis::H) { return monomial(basis, composition{}); }

    nsym_basis basis() const { return basis_; }
    const composition_sum &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    integer coefficient(const composition &c) const { return terms_.coefficient(c); }

    /// Common degree of all terms; nullopt when mixed or zero.
    std::optional<int> degree() const
    {
        return common_degree(terms_, [](const composition &c) { return c.size(); });
    }
    bool is_homogeneous() const { return is_zero() || degree().has_value(); }
    int max_degree() const
    {
        int d = 0;
        for (const auto &[c, k] : terms_) {
            d = std::max(d, c.size());
        }
        return d;
    }

    nsym_element &operator+=(const nsym_element &o)
    {
        check_same(o);
        terms_ += o.terms_;
        return *this;
    }
    nsym_element &operator-=(const nsym_element &o)
    {
        check_same(o);
        terms_ -= o.terms_;
        return *this;
    }
    friend nsym_element operator+(nsym_element a, const nsym_element &b) { return a += b; }
    friend nsym_element operator-(nsym_element a, const nsym_element &b) { return a -= b; }
    friend nsym_element operator*(const integer &s, nsym_element a)
    {
        a.terms_ *= s;
        return a;
    }
    friend bool operator==(const nsym_element &, const nsym_element &) = default;

private:
    void check_same(const nsym_element &o) const
    {
        if (o.basis_ != basis_) {
            throw basis_mismatch("cannot add NSym elements in bases " + to_string(basis_) + " and "
                                 + to_string(o.basis_));
        }
    }

    nsym_basis basis_;
    composition_sum terms_;
};

namespace detail {

inline void require_basis(const nsym_element &f, nsym_basis b, const char *what)
{
    if (f.basis() != b) {
        throw basis_mismatch(std::string(what) + ": expected basis " + to_string(b) + ", got "
                             + to_string(f.basis()));
    }
}

// H_r * H_alpha with H_0 = 1 and H_{-r} = 0.
inline composition_sum left_multiply_h(int r, const composition_sum &f)
{
    if (r < 0) {
        return {};
    }
    if (r == 0) {
        return f;
    }
    composition_sum out;
    for (const auto &[c, k] : f) {
        out.add(prepend(r, c), k);
    }
    return out;
}

inline int permutation_sign(const std::vector<int> &perm)
{
    bool odd = false;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) {
                odd = !odd;
            }
        }
    }
    return odd ? -1 : 1;
}

} // namespace detail

/// H-index normalization: zero entries are deleted (H_0 = 1) and any negative
/// entry annihilates the term (H_{-r} = 0).
inline std::optional<composition> normalize_h_index(const int_tuple &t)
{
    std::vector<int> parts;
    parts.reserve(t.length());
    for (int v : t) {
        if (v < 0) {
            return std::nullopt;
        }
        if (v > 0) {
            parts.push_back(v);
        }
    }
    return composition(std::move(parts));
}

/// Product in the H basis: bilinear extension of H_a H_b = H_{a.b}.
inline nsym_element h_multiply(const nsym_element &a, const nsym_element &b)
{
    detail::require_basis(a, nsym_basis::H, "h_multiply");
    detail::require_basis(b, nsym_basis::H, "h_multiply");
    composition_sum out;
    for (const auto &[ca, ka] : a.terms()) {
        for (const auto &[cb, kb] : b.terms()) {
            out.add(concat(ca, cb), ka * kb);
        }
    }
    return nsym_element(nsym_basis::H, std::move(out));
}

/// R_alpha = sum over coarsenings beta of alpha of (-1)^{l(alpha)-l(beta)} H_beta.
inline nsym_element ribbon_to_h(const composition &alpha)
{
    composition_sum out;
    for (const auto &beta : coarsenings(alpha)) {
        out.add(beta, integer(sign_of_parity((alpha.length() - beta.length()) % 2 == 1)));
    }
    return nsym_element(nsym_basis::H, std::move(out));
}

/// H_alpha = sum over coarsenings beta of alpha of R_beta.
inline nsym_element h_to_ribbon(const composition &alpha)
{
    composition_sum out;
    for (const auto &beta : coarsenings(alpha)) {
        out.add(beta, 1);
    }
    return nsym_element(nsym_basis::R, std::move(out));
}

/// Psi_1, ..., Psi_n in the H basis from n H_n = sum_{j=0}^{n-1} H_j Psi_{n-j}.
inline std::vector<composition_sum> psi_generators_in_h(int n)
{
    std::vector<composition_sum> psi(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        composition_sum cur(composition{m}, integer(m));
        for (int j = 1; j < m; ++j) {
            cur -= detail::left_multiply_h(j, psi[static_cast<std::size_t>(m - j)]);
        }
        psi[static_cast<std::size_t>(m)] = std::move(cur);
    }
    return psi;
}

inline nsym_element psi_to_h(int k)
{
    if (k < 1) {
        throw std::invalid_argument("psi_to_h: k must be positive");
    }
    return nsym_element(nsym_basis::H, psi_generators_in_h(k)[static_cast<std::size_t>(k)]);
}

/// Psi_alpha = Psi_{alpha_1} ... Psi_{alpha_m}.
inline nsym_element psi_to_h(const composition &alpha)
{
    int top = 0;
    for (int p : alpha) {
        top = std::max(top, p);
    }
    const auto gens = psi_generators_in_h(top);
    nsym_element out = nsym_element::one();
    for (int p : alpha) {
        out = h_multiply(out, nsym_element(nsym_basis::H, gens[static_cast<std::size_t>(p)]));
    }
    return out;
}

namespace detail {

// M_gamma^perp(H_beta): choose positions j_1 < ... < j_k of beta with
// beta_{j_i} >= gamma_i, subtract, drop zero parts.
inline void perp_rec(const composition &gamma, const composition &beta, std::size_t j, std::size_t g,
                     std::vector<int> &parts, const integer &coeff, composition_sum &out)
{
    if (beta.length() - j < gamma.length() - g) {
        return;
    }
    if (j == beta.length()) {
        out.add(composition(parts), coeff);
        return;
    }
    parts.push_back(beta[j]);
    perp_rec(gamma, beta, j + 1, g, parts, coeff, out);
    parts.pop_back();
    if (g < gamma.length() && beta[j] >= gamma[g]) {
        const int left = beta[j] - gamma[g];
        if (left > 0) {
            parts.push_back(left);
        }
        perp_rec(gamma, beta, j + 1, g + 1, parts, coeff, out);
        if (left > 0) {
            parts.pop_back();
        }
    }
}

inline composition_sum monomial_perp_terms(const composition &gamma, const composition_sum &f)
{
    composition_sum out;
    std::vector<int> parts;
    for (const auto &[beta, k] : f) {
        perp_rec(gamma, beta, 0, 0, parts, k, out);
    }
    return out;
}

} // namespace detail

/// M_gamma^perp acting on an element in the H basis: the adjoint of left
/// multiplication by M_gamma under <H_a, M_b> = delta.
inline nsym_element monomial_perp(const composition &gamma, const nsym_element &f)
{
    detail::require_basis(f, nsym_basis::H, "monomial_perp");
    return nsym_element(nsym_basis::H, detail::monomial_perp_terms(gamma, f.terms()));
}

/// Noncommutative Bernstein creation operator
///   B_m = sum_{i>=0} (-1)^i H_{m+i} F_{1^i}^perp,
/// with F_{1^i} = M_{1^i}. The sum stops at the top degree of f.
inline nsym_element bernstein_apply(int m, const nsym_element &f)
{
    detail::require_basis(f, nsym_basis::H, "bernstein_apply");
    composition_sum out;
    const int d = f.max_degree();
    for (int i = 0; i <= d; ++i) {
        const composition ones_i(std::vector<int>(static_cast<std::size_t>(i), 1));
        const auto perp = detail::monomial_perp_terms(ones_i, f.terms());
        out.add(detail::left_multiply_h(m + i, perp), integer(sign_of_parity(i % 2 == 1)));
    }
    return nsym_element(nsym_basis::H, std::move(out));
}

/// S_alpha = B_{alpha_1} ... B_{alpha_m}(1), for any integer tuple.
inline nsym_element immaculate_to_h(const int_tuple &alpha)
{
    nsym_element out = nsym_element::one();
    for (std::size_t i = alpha.length(); i-- > 0;) {
        out = bernstein_apply(alpha[i], out);
    }
    return out;
}

inline nsym_element immaculate_to_h(const composition &alpha) { return immaculate_to_h(alpha.to_tuple()); }

/// Noncommutative Jacobi-Trudi expansion: signed sum over sigma in S_m of
/// H_{alpha_1+sigma_1-1, ..., alpha_m+sigma_m-m}.
inline nsym_element jacobi_trudi_h(const composition &alpha)
{
    const std::size_t m = alpha.length();
    std::vector<int> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 1);
    composition_sum out;
    std::vector<int> entries(m);
    do {
        for (std::size_t i = 0; i < m; ++i) {
            entries[i] = alpha[i] + sigma[i] - static_cast<int>(i + 1);
        }
        if (auto idx = normalize_h_index(int_tuple(entries))) {
            out.add(*idx, integer(detail::permutation_sign(sigma)));
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return nsym_element(nsym_basis::H, std::move(out));
}

/// H_beta = sum_{alpha >=lex beta} K_{alpha,beta} S_alpha, coefficients from
/// immaculate tableau counts.
inline nsym_element h_to_immaculate(const composition &beta)
{
    composition_sum out;
    for (const auto &alpha : compositions_of(beta.size())) {
        if (alpha < beta) {
            continue;
        }
        out.add(alpha, kostka_immaculate(alpha, beta));
    }
    return nsym_element(nsym_basis::S, std::move(out));
}

/// R_beta = sum_alpha L_{alpha,beta} S_alpha, L counting standard immaculate
/// tableaux of shape alpha with descent composition beta.
inline nsym_element ribbon_to_immaculate(const composition &beta)
{
    composition_sum out;
    const auto content = detail::ones(beta.size());
    for (const auto &alpha : compositions_of(beta.size())) {
        integer count = 0;
        for_each_immaculate_tableau(alpha, content, [&](const tableau_rows &rows) {
            if (descent_composition(immaculate_tableau{alpha, rows}) == beta) {
                ++count;
            }
        });
        out.add(alpha, count);
    }
    return nsym_element(nsym_basis::S, std::move(out));
}

/// Right Pieri rule: S_alpha H_s = sum over alpha subset_s beta of S_beta.
inline nsym_element pieri_multiply(const composition &alpha, int s)
{
    composition_sum out;
    for (const auto &beta : pieri_successors(alpha, s)) {
        out.add(beta, 1);
    }
    return nsym_element(nsym_basis::S, std::move(out));
}

/// S_alpha S_lambda = sum_beta c^beta_{alpha,lambda} S_beta for a partition lambda.
inline nsym_element lr_multiply(const composition &alpha, const partition &lambda)
{
    composition_sum out;
    for (const auto &beta : compositions_of(alpha.size() + lambda.size())) {
        if (!skew_shape::contains(alpha, beta)) {
            continue;
        }
        out.add(beta, lr_coefficient(alpha, lambda, beta));
    }
    return nsym_element(nsym_basis::S, std::move(out));
}

inline nsym_element lr_multiply(const composition &alpha, const composition &lambda)
{
    auto p = to_partition(lambda);
    if (!p) {
        throw std::invalid_argument("lr_multiply: right factor [" + to_string(lambda) + "] is not a partition");
    }
    return lr_multiply(alpha, *p);
}

/// Murnaghan-Nakayama rule S_alpha Psi_k: add k to one part of alpha padded
/// with k zeros. Indices are reported as integer tuples, zero padding kept.
inline tuple_sum mn_multiply(const composition &alpha, int k)
{
    if (k < 1) {
        throw std::invalid_argument("mn_multiply: k must be positive");
    }
    tuple_sum out;
    std::vector<int> base = alpha.parts();
    for (std::size_t j = 0; j < base.size(); ++j) {
        auto e = base;
        e[j] += k;
        out.add(int_tuple(std::move(e)), 1);
    }
    for (int zeros = 0; zeros < k; ++zeros) {
        auto e = base;
        e.insert(e.end(), static_cast<std::size_t>(zeros), 0);
        e.push_back(k);
        out.add(int_tuple(std::move(e)), 1);
    }
    return out;
}

/// Re-express immaculate terms with arbitrary integer indices in the
/// composition-indexed immaculate basis (through H).
inline nsym_element normalize_immaculate(const tuple_sum &terms)
{
    composition_sum out;
    for (const auto &[t, k] : terms) {
        if (auto c = to_composition(t)) {
            out.add(*c, k);
            continue;
        }
        const nsym_element in_h = immaculate_to_h(t);
        for (const auto &[beta, kh] : in_h.terms()) {
            out.add(h_to_immaculate(beta).terms(), k * kh);
        }
    }
    return nsym_element(nsym_basis::S, std::move(out));
}

inline nsym_element mn_multiply_normalized(const composition &alpha, int k)
{
    return normalize_immaculate(mn_multiply(alpha, k));
}

/// Any element into the H basis.
inline nsym_element to_h(const nsym_element &f)
{
    switch (f.basis()) {
    case nsym_basis::H:
        return f;
    case nsym_basis::R:
        return nsym_element(nsym_basis::H,
                            f.terms().map_linear([](const composition &c) { return ribbon_to_h(c).terms(); }));
    case nsym_basis::Psi:
        return nsym_element(nsym_basis::H,
                            f.terms().map_linear([](const composition &c) { return psi_to_h(c).terms(); }));
    case nsym_basis::S:
        return nsym_element(nsym_basis::H,
                            f.terms().map_linear([](const composition &c) { return immaculate_to_h(c).terms(); }));
    }
    throw std::logic_error("unreachable");
}

/// Basis change along the graph H <-> R, Psi -> H, S <-> H. Nothing converts into Psi.
inline nsym_element change_basis(const nsym_element &f, nsym_basis target)
{
    if (f.basis() == target) {
        return f;
    }
    if (target == nsym_basis::Psi) {
        throw no_conversion_path(to_string(f.basis()), to_string(target));
    }
    const nsym_element h = to_h(f);
    switch (target) {
    case nsym_basis::H:
        return h;
    case nsym_basis::R:
        return nsym_element(nsym_basis::R,
                            h.terms().map_linear([](const composition &c) { return h_to_ribbon(c).terms(); }));
    case nsym_basis::S:
        return nsym_element(nsym_basis::S,
                            h.terms().map_linear([](const composition &c) { return h_to_immaculate(c).terms(); }));
    case nsym_basis::Psi:
        break;
    }
    throw no_conversion_path(to_string(f.basis()), to_string(target));
}

} // namespace immaculata

#endif
