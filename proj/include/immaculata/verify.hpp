#ifndef IMMACULATA_VERIFY_HPP
#define IMMACULATA_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <immaculata/compositions.hpp>
#include <immaculata/nsym.hpp>
#include <immaculata/qsym.hpp>
#include <immaculata/serialize.hpp>
#include <immaculata/sym.hpp>
#include <immaculata/tableaux.hpp>

// Exhaustive identity checks up to a given degree. Each instance compares a
// combinatorial rule against an independent route (usually the H-basis
// product followed by a basis change).

namespace immaculata::verify {

struct suite_report {
    std::string suite;
    std::size_t instances = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

using instance = std::function<std::optional<std::string>()>;

/// Runs instances on up to `threads` workers; failures are reported in
/// instance order regardless of scheduling.
inline suite_report run_instances(std::string suite, const std::vector<instance> &work, unsigned threads = 0)
{
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    std::vector<std::optional<std::string>> results(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            try {
                results[i] = work[i]();
            } catch (const std::exception &e) {
                results[i] = std::string("exception: ") + e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, work.size())));
    for (unsigned t = 1; t < n; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    suite_report report{std::move(suite), work.size(), {}};
    for (auto &r : results) {
        if (r) {
            report.failures.push_back(std::move(*r));
        }
    }
    return report;
}

namespace detail {

inline std::string bracket(const composition &c) { return "[" + to_string(c) + "]"; }

inline std::optional<std::string> compare(const std::string &what, const nsym_element &got,
                                          const nsym_element &expected)
{
    if (got == expected) {
        return std::nullopt;
    }
    return what + ": rule gives " + render_text(got) + ", oracle gives " + render_text(expected);
}

inline std::optional<std::string> check_nonnegative(const std::string &what, const nsym_element &f)
{
    for (const auto &[c, k] : f.terms()) {
        if (k < 0) {
            return what + ": negative coefficient on " + bracket(c);
        }
    }
    return std::nullopt;
}

// S_alpha * g computed in H and converted back to the immaculate basis.
inline nsym_element product_oracle(const composition &alpha, const nsym_element &right_in_h)
{
    return change_basis(h_multiply(immaculate_to_h(alpha), right_in_h), nsym_basis::S);
}

} // namespace detail

inline suite_report pieri(int max_n)
{
    std::vector<instance> work;
    for (int n = 0; n < max_n; ++n) {
        for (const auto &alpha : compositions_of(n)) {
            for (int s = 1; n + s <= max_n; ++s) {
                work.emplace_back([alpha, s]() {
                    const auto what = "S" + detail::bracket(alpha) + " * H[" + std::to_string(s) + "]";
                    return detail::compare(what, pieri_multiply(alpha, s),
                                           detail::product_oracle(alpha, nsym_element::monomial(nsym_basis::H, {s})));
                });
            }
        }
    }
    return run_instances("pieri", work);
}

inline suite_report jacobi_trudi(int max_n)
{
    std::vector<instance> work;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto &alpha : compositions_of(n)) {
            work.emplace_back([alpha]() {
                return detail::compare("S" + detail::bracket(alpha) + " Bernstein vs Jacobi-Trudi",
                                       immaculate_to_h(alpha), jacobi_trudi_h(alpha));
            });
        }
    }
    return run_instances("jacobi-trudi", work);
}

/// K_{a,b} >= 0, K_{a,a} = 1, K_{a,b} = 0 unless a >=lex b, and the H -> S
/// transform inverts the S -> H transform.
inline suite_report kostka(int max_n)
{
    std::vector<instance> work;
    for (int n = 1; n <= max_n; ++n) {
        const auto comps = compositions_of(n);
        for (const auto &alpha : comps) {
            work.emplace_back([alpha, comps]() -> std::optional<std::string> {
                for (const auto &beta : comps) {
                    const integer k = kostka_immaculate(alpha, beta);
                    if (k < 0) {
                        return "K" + detail::bracket(alpha) + detail::bracket(beta) + " negative";
                    }
                    if (alpha == beta && k != 1) {
                        return "K" + detail::bracket(alpha) + detail::bracket(beta) + " = " + to_decimal(k)
                               + " on the diagonal";
                    }
                    if (alpha < beta && k != 0) {
                        return "K" + detail::bracket(alpha) + detail::bracket(beta) + " = " + to_decimal(k)
                               + " outside lex triangularity";
                    }
                }
                return detail::compare("S" + detail::bracket(alpha) + " -> H -> S",
                                       change_basis(immaculate_to_h(alpha), nsym_basis::S),
                                       nsym_element::monomial(nsym_basis::S, alpha));
            });
        }
    }
    return run_instances("kostka", work);
}

/// R_b through standard immaculate tableau descents against R -> H -> S.
inline suite_report ribbon(int max_n)
{
    std::vector<instance> work;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto &beta : compositions_of(n)) {
            work.emplace_back([beta]() -> std::optional<std::string> {
                const auto rule = ribbon_to_immaculate(beta);
                if (auto bad = detail::check_nonnegative("R" + detail::bracket(beta), rule)) {
                    return bad;
                }
                return detail::compare("R" + detail::bracket(beta), rule,
                                       change_basis(ribbon_to_h(beta), nsym_basis::S));
            });
        }
    }
    return run_instances("ribbon", work);
}

/// <S_a, S*_b> = delta_{a,b} through the H/M route.
inline suite_report duality(int max_n)
{
    std::vector<instance> work;
    for (int n = 1; n <= max_n; ++n) {
        const auto comps = compositions_of(n);
        for (const auto &alpha : comps) {
            work.emplace_back([alpha, comps]() -> std::optional<std::string> {
                const auto s = nsym_element::monomial(nsym_basis::S, alpha);
                for (const auto &beta : comps) {
                    const integer got = pairing(s, qsym_element::monomial(qsym_basis::Sstar, beta));
                    if (got != (alpha == beta ? 1 : 0)) {
                        return "<S" + detail::bracket(alpha) + ", S*" + detail::bracket(beta) + "> = "
                               + to_decimal(got);
                    }
                }
                return std::nullopt;
            });
        }
    }
    return run_instances("duality", work);
}

inline suite_report littlewood_richardson(int max_n)
{
    std::vector<instance> work;
    for (int n = 0; n < max_n; ++n) {
        for (const auto &alpha : compositions_of(n)) {
            for (int m = 1; n + m <= max_n; ++m) {
                for (const auto &lambda : partitions_of(m)) {
                    work.emplace_back([alpha, lambda]() -> std::optional<std::string> {
                        const auto what = "S" + detail::bracket(alpha) + " * S[" + to_string(lambda) + "]";
                        const auto rule = lr_multiply(alpha, lambda);
                        if (auto bad = detail::check_nonnegative(what, rule)) {
                            return bad;
                        }
                        return detail::compare(what, rule,
                                               detail::product_oracle(alpha, immaculate_to_h(lambda.to_composition())));
                    });
                }
            }
        }
    }
    return run_instances("lr", work);
}

inline suite_report murnaghan_nakayama(int max_n)
{
    std::vector<instance> work;
    for (int n = 0; n < max_n; ++n) {
        for (const auto &alpha : compositions_of(n)) {
            for (int k = 1; n + k <= max_n; ++k) {
                work.emplace_back([alpha, k]() {
                    const auto what = "S" + detail::bracket(alpha) + " * Psi[" + std::to_string(k) + "]";
                    return detail::compare(what, mn_multiply_normalized(alpha, k),
                                           detail::product_oracle(alpha, psi_to_h(k)));
                });
            }
        }
    }
    return run_instances("mn", work);
}

/// chi(S_alpha) = s_alpha in the h basis for all alpha |= n <= max_n, and
/// chi(Psi_n) = p_n for n <= psi_max_n.
inline suite_report projection(int max_n, int psi_max_n)
{
    std::vector<instance> work;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto &alpha : compositions_of(n)) {
            work.emplace_back([alpha]() -> std::optional<std::string> {
                const auto got = forgetful(immaculate_to_h(alpha));
                const auto expected = schur_to_h(alpha.to_tuple());
                if (got == expected) {
                    return std::nullopt;
                }
                return "chi(S" + detail::bracket(alpha) + ") = " + render_text(got) + ", s_alpha = "
                       + render_text(expected);
            });
        }
    }
    for (int n = 1; n <= psi_max_n; ++n) {
        work.emplace_back([n]() -> std::optional<std::string> {
            const auto p = integral_p(h_to_p(forgetful(psi_to_h(n))));
            if (p && *p == sym_element::monomial(sym_basis::p, partition{n})) {
                return std::nullopt;
            }
            return "chi(Psi_" + std::to_string(n) + ") != p_" + std::to_string(n);
        });
    }
    return run_instances("projection", work);
}

inline const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = {"pieri", "jacobi-trudi", "kostka", "ribbon",
                                                   "duality", "lr", "mn", "projection"};
    return names;
}

inline bool is_suite(std::string_view name)
{
    if (name == "all") {
        return true;
    }
    const auto &names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

inline suite_report run_suite(std::string_view name, int max_n)
{
    if (name == "pieri") return pieri(max_n);
    if (name == "jacobi-trudi") return jacobi_trudi(max_n);
    if (name == "kostka") return kostka(max_n);
    if (name == "ribbon") return ribbon(max_n);
    if (name == "duality") return duality(max_n);
    if (name == "lr") return littlewood_richardson(max_n);
    if (name == "mn") return murnaghan_nakayama(max_n);
    if (name == "projection") return projection(max_n, max_n + 1);
    throw std::invalid_argument("unknown verification suite '" + std::string(name) + "'");
}

/// Runs one suite, or every suite for "all" (one report per suite).
inline std::vector<suite_report> run(std::string_view name, int max_n)
{
    std::vector<suite_report> out;
    if (name == "all") {
        for (const auto &s : suite_names()) {
            out.push_back(run_suite(s, max_n));
        }
    } else {
        out.push_back(run_suite(name, max_n));
    }
    return out;
}

} // namespace immaculata::verify

#endif
