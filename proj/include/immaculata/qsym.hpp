#ifndef IMMACULATA_QSYM_HPP
#define IMMACULATA_QSYM_HPP

#include <algorithm>
#include <cstddef>
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
#include <immaculata/tableaux.hpp>

namespace immaculata {

// M: monomial, F: fundamental, Sstar: dual immaculate. Sstar is a formal tag;
// arithmetic happens in M.
enum class qsym_basis { M, F, Sstar };

inline std::string to_string(qsym_basis b)
{
    switch (b) {
    case qsym_basis::M:
        return "M";
    case qsym_basis::F:
        return "F";
    case qsym_basis::Sstar:
        return "Sstar";
    }
    return "?";
}

class qsym_element {
public:
    explicit qsym_element(qsym_basis basis = qsym_basis::M, composition_sum terms = {})
        : basis_(basis), terms_(std::move(terms))
    {
    }

    static qsym_element monomial(qsym_basis basis, const composition &index, const integer &coeff = 1)
    {
        return qsym_element(basis, composition_sum(index, coeff));
    }

    qsym_basis basis() const { return basis_; }
    const composition_sum &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    integer coefficient(const composition &c) const { return terms_.coefficient(c); }
    std::optional<int> degree() const
    {
        return common_degree(terms_, [](const composition &c) { return c.size(); });
    }
    bool is_homogeneous() const { return is_zero() || degree().has_value(); }

    qsym_element &operator+=(const qsym_element &o)
    {
        check_same(o);
        terms_ += o.terms_;
        return *this;
    }
    qsym_element &operator-=(const qsym_element &o)
    {
        check_same(o);
        terms_ -= o.terms_;
        return *this;
    }
    friend qsym_element operator+(qsym_element a, const qsym_element &b) { return a += b; }
    friend qsym_element operator-(qsym_element a, const qsym_element &b) { return a -= b; }
    friend qsym_element operator*(const integer &s, qsym_element a)
    {
        a.terms_ *= s;
        return a;
    }
    friend bool operator==(const qsym_element &, const qsym_element &) = default;

private:
    void check_same(const qsym_element &o) const
    {
        if (o.basis_ != basis_) {
            throw basis_mismatch("cannot add QSym elements in bases " + to_string(basis_) + " and "
                                 + to_string(o.basis_));
        }
    }

    qsym_basis basis_;
    composition_sum terms_;
};

/// F_alpha = sum over refinements beta of alpha of M_beta.
inline qsym_element fundamental_to_monomial(const composition &alpha)
{
    composition_sum out;
    for (const auto &beta : refinements(alpha)) {
        out.add(beta, 1);
    }
    return qsym_element(qsym_basis::M, std::move(out));
}

/// M_alpha = sum over refinements beta of alpha of (-1)^{l(beta)-l(alpha)} F_beta.
inline qsym_element monomial_to_fundamental(const composition &alpha)
{
    composition_sum out;
    for (const auto &beta : refinements(alpha)) {
        out.add(beta, integer(sign_of_parity((beta.length() - alpha.length()) % 2 == 1)));
    }
    return qsym_element(qsym_basis::F, std::move(out));
}

namespace detail {

inline void quasi_shuffle_rec(const composition &a, std::size_t i, const composition &b, std::size_t j,
                              std::vector<int> &prefix, composition_sum &out)
{
    if (i == a.length() || j == b.length()) {
        auto parts = prefix;
        parts.insert(parts.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
        parts.insert(parts.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
        out.add(composition(std::move(parts)), 1);
        return;
    }
    prefix.push_back(a[i]);
    quasi_shuffle_rec(a, i + 1, b, j, prefix, out);
    prefix.back() = b[j];
    quasi_shuffle_rec(a, i, b, j + 1, prefix, out);
    prefix.back() = a[i] + b[j];
    quasi_shuffle_rec(a, i + 1, b, j + 1, prefix, out);
    prefix.pop_back();
}

} // namespace detail

/// M_a M_b: sum over overlapping shuffles of a and b.
inline qsym_element quasi_shuffle(const composition &a, const composition &b)
{
    composition_sum out;
    std::vector<int> prefix;
    detail::quasi_shuffle_rec(a, 0, b, 0, prefix, out);
    return qsym_element(qsym_basis::M, std::move(out));
}

/// Product of two elements given in the M basis.
inline qsym_element monomial_multiply(const qsym_element &f, const qsym_element &g)
{
    if (f.basis() != qsym_basis::M || g.basis() != qsym_basis::M) {
        throw basis_mismatch("monomial_multiply: both factors must be in the M basis");
    }
    composition_sum out;
    for (const auto &[a, ka] : f.terms()) {
        for (const auto &[b, kb] : g.terms()) {
            out.add(quasi_shuffle(a, b).terms(), ka * kb);
        }
    }
    return qsym_element(qsym_basis::M, std::move(out));
}

/// S*_alpha = sum_beta K_{alpha,beta} M_beta.
inline qsym_element dual_immaculate_to_monomial(const composition &alpha)
{
    composition_sum out;
    for (const auto &beta : compositions_of(alpha.size())) {
        if (beta > alpha) {
            continue;
        }
        out.add(beta, kostka_immaculate(alpha, beta));
    }
    return qsym_element(qsym_basis::M, std::move(out));
}

/// S*_alpha = sum_beta L_{alpha,beta} F_beta.
inline qsym_element dual_immaculate_to_fundamental(const composition &alpha)
{
    composition_sum out;
    for (const auto &[beta, count] : descent_distribution(alpha)) {
        out.add(beta, count);
    }
    return qsym_element(qsym_basis::F, std::move(out));
}

/// Inverse of dual_immaculate_to_monomial by uni-triangular elimination: the
/// lex-largest M_alpha of S*_alpha is M_alpha with coefficient 1.
inline qsym_element monomial_to_dual_immaculate(const qsym_element &g)
{
    if (g.basis() != qsym_basis::M) {
        throw basis_mismatch("monomial_to_dual_immaculate: expected M basis");
    }
    composition_sum rest = g.terms();
    composition_sum out;
    while (!rest.empty()) {
        const auto top = std::prev(rest.end());
        const composition alpha = top->first;
        const integer c = top->second;
        out.add(alpha, c);
        rest.add(dual_immaculate_to_monomial(alpha).terms(), -c);
    }
    return qsym_element(qsym_basis::Sstar, std::move(out));
}

inline qsym_element to_monomial(const qsym_element &g)
{
    switch (g.basis()) {
    case qsym_basis::M:
        return g;
    case qsym_basis::F:
        return qsym_element(qsym_basis::M, g.terms().map_linear([](const composition &c) {
            return fundamental_to_monomial(c).terms();
        }));
    case qsym_basis::Sstar:
        return qsym_element(qsym_basis::M, g.terms().map_linear([](const composition &c) {
            return dual_immaculate_to_monomial(c).terms();
        }));
    }
    throw std::logic_error("unreachable");
}

inline qsym_element change_basis(const qsym_element &g, qsym_basis target)
{
    if (g.basis() == target) {
        return g;
    }
    if (g.basis() == qsym_basis::Sstar && target == qsym_basis::F) {
        return qsym_element(qsym_basis::F, g.terms().map_linear([](const composition &c) {
            return dual_immaculate_to_fundamental(c).terms();
        }));
    }
    const qsym_element m = to_monomial(g);
    switch (target) {
    case qsym_basis::M:
        return m;
    case qsym_basis::F:
        return qsym_element(qsym_basis::F, m.terms().map_linear([](const composition &c) {
            return monomial_to_fundamental(c).terms();
        }));
    case qsym_basis::Sstar:
        return monomial_to_dual_immaculate(m);
    }
    throw std::logic_error("unreachable");
}

namespace detail {

inline integer pair_terms(const composition_sum &a, const composition_sum &b)
{
    integer total = 0;
    for (const auto &[c, k] : a) {
        total += k * b.coefficient(c);
    }
    return total;
}

} // namespace detail

/// <f, g> with <H_a, M_b> = delta_{a,b}: f taken to H, g taken to M.
inline integer pairing(const nsym_element &f, const qsym_element &g)
{
    return detail::pair_terms(to_h(f).terms(), to_monomial(g).terms());
}

/// Same pairing through <R_a, F_b> = delta_{a,b}.
inline integer pairing_via_ribbon(const nsym_element &f, const qsym_element &g)
{
    return detail::pair_terms(change_basis(f, nsym_basis::R).terms(), change_basis(g, qsym_basis::F).terms());
}

/// Signed dual immaculate expansion of the Schur function s_lambda: sum over
/// sigma in S_k with every lambda_{sigma_i} + i - sigma_i > 0.
inline qsym_element schur_to_dual_immaculate(const partition &lambda)
{
    const std::size_t k = lambda.length();
    composition_sum out;
    std::vector<int> sigma;
    std::vector<bool> used(k + 1, false);
    std::vector<int> index;
    // position-wise positivity prunes most of S_k before it is generated
    auto rec = [&](auto &&self, std::size_t i) -> void {
        if (i == k) {
            out.add(composition(index), integer(detail::permutation_sign(sigma)));
            return;
        }
        for (int s = 1; s <= static_cast<int>(k); ++s) {
            if (used[static_cast<std::size_t>(s)]) {
                continue;
            }
            const int part = lambda[static_cast<std::size_t>(s - 1)] + static_cast<int>(i + 1) - s;
            if (part <= 0) {
                continue;
            }
            used[static_cast<std::size_t>(s)] = true;
            sigma.push_back(s);
            index.push_back(part);
            self(self, i + 1);
            index.pop_back();
            sigma.pop_back();
            used[static_cast<std::size_t>(s)] = false;
        }
    };
    rec(rec, 0);
    return qsym_element(qsym_basis::Sstar, std::move(out));
}

/// m_lambda = sum of M_alpha over the distinct rearrangements alpha of lambda.
inline qsym_element monomial_symmetric_embed(const partition &lambda)
{
    std::vector<int> parts = lambda.parts();
    std::sort(parts.begin(), parts.end());
    composition_sum out;
    do {
        out.add(composition(parts), 1);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return qsym_element(qsym_basis::M, std::move(out));
}

} // namespace immaculata

#endif
