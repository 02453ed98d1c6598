#ifndef IMMACULATA_LINEAR_COMBINATION_HPP
#define IMMACULATA_LINEAR_COMBINATION_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>

#include <immaculata/integer.hpp>

namespace immaculata {

// Sparse formal sum of indices with exact coefficients. Zero coefficients are
// never stored; iteration is in increasing (lexicographic) index order.
template <class Index, class Coeff = integer>
class linear_combination {
public:
    using index_type = Index;
    using coeff_type = Coeff;
    using map_type = std::map<Index, Coeff>;

    linear_combination() = default;
    explicit linear_combination(const Index &idx, Coeff c = Coeff(1)) { add(idx, std::move(c)); }
    linear_combination(std::initializer_list<std::pair<Index, Coeff>> terms)
    {
        for (const auto &[idx, c] : terms) {
            add(idx, c);
        }
    }

    void add(const Index &idx, const Coeff &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    void add(const linear_combination &other, const Coeff &scale = Coeff(1))
    {
        if (scale == 0) {
            return;
        }
        for (const auto &[idx, c] : other.terms_) {
            add(idx, c * scale);
        }
    }

    Coeff coefficient(const Index &idx) const
    {
        auto it = terms_.find(idx);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    const map_type &terms() const { return terms_; }

    // Linear extension of `fn : Index -> linear_combination<OutIndex, Coeff>`.
    template <class Fn>
    auto map_linear(Fn &&fn) const
    {
        using result_t = std::decay_t<decltype(fn(std::declval<const Index &>()))>;
        result_t out;
        for (const auto &[idx, c] : terms_) {
            out.add(fn(idx), c);
        }
        return out;
    }

    linear_combination &operator+=(const linear_combination &o)
    {
        add(o);
        return *this;
    }
    linear_combination &operator-=(const linear_combination &o)
    {
        add(o, Coeff(-1));
        return *this;
    }
    linear_combination &operator*=(const Coeff &s)
    {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto &[idx, c] : terms_) {
                c *= s;
            }
        }
        return *this;
    }

    friend linear_combination operator+(linear_combination a, const linear_combination &b) { return a += b; }
    friend linear_combination operator-(linear_combination a, const linear_combination &b) { return a -= b; }
    friend linear_combination operator-(linear_combination a) { return a *= Coeff(-1); }
    friend linear_combination operator*(linear_combination a, const Coeff &s) { return a *= s; }
    friend linear_combination operator*(const Coeff &s, linear_combination a) { return a *= s; }
    friend bool operator==(const linear_combination &, const linear_combination &) = default;

private:
    map_type terms_;
};

// Common size of all indices (via `size_of`), or nullopt when the terms have
// mixed sizes or there are none.
template <class Index, class Coeff, class SizeFn>
std::optional<int> common_degree(const linear_combination<Index, Coeff> &lc, SizeFn &&size_of)
{
    std::optional<int> deg;
    for (const auto &[idx, c] : lc) {
        const int d = size_of(idx);
        if (deg && *deg != d) {
            return std::nullopt;
        }
        deg = d;
    }
    return deg;
}

} // namespace immaculata

#endif
