#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "error.hpp"
#include "rootsys.hpp"

namespace weightvar {

using elem_id = std::uint32_t;
using word_t = std::vector<int>;

struct weyl_element {
    elem_id id = 0;
    word_t word;     // lexicographically least reduced word
    int length = 0;
    int_matrix action; // on t* in simple-root coordinates
};

/// The Weyl group as a dense table.
///
/// Elements are ordered by length, then by their lexicographically least
/// reduced word; id 0 is the identity and ids 1..l are s_1..s_l. Products,
/// inverses and Bruhat order are precomputed.
class weyl_group {
public:
    static weyl_group generate(const root_system& rs, int max_rank = default_max_rank) {
        if (rs.rank() > max_rank)
            throw error(errc::rank_limit_exceeded, "Weyl group of rank " + std::to_string(rs.rank()) +
                                                       " exceeds configured maximum " + std::to_string(max_rank));
        return weyl_group(rs);
    }

    int rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const weyl_element& element(elem_id w) const { return elements_[w]; }
    const std::vector<weyl_element>& elements() const noexcept { return elements_; }
    const word_t& word(elem_id w) const { return elements_[w].word; }
    int length(elem_id w) const { return elements_[w].length; }
    elem_id identity() const noexcept { return 0; }
    elem_id longest() const noexcept { return w0_; }
    elem_id simple(int i) const { return static_cast<elem_id>(i + 1); }

    elem_id multiply(elem_id a, elem_id b) const { return mult_[static_cast<std::size_t>(a) * size() + b]; }
    elem_id inverse(elem_id a) const { return inverse_[a]; }
    elem_id right_simple(elem_id a, int i) const { return rmul_[static_cast<std::size_t>(a) * rank_ + i]; }

    /// v <= w in Bruhat order.
    bool bruhat_leq(elem_id v, elem_id w) const {
        return (below_[w][v >> 6] >> (v & 63)) & 1u;
    }

    std::vector<int> right_descents(elem_id w) const {
        std::vector<int> d;
        for (int i = 0; i < rank_; ++i)
            if (length(right_simple(w, i)) < length(w))
                d.push_back(i);
        return d;
    }

    tvector act(elem_id w, const tvector& x) const {
        if (x.size() != static_cast<std::size_t>(rank_))
            throw error(errc::dimension_mismatch, "act: vector length does not match rank");
        const auto& m = elements_[w].action;
        tvector y(x.size());
        for (int i = 0; i < rank_; ++i)
            for (int k = 0; k < rank_; ++k)
                if (m[i][k] != 0)
                    y[i] += m[i][k] * x[k];
        return y;
    }

    std::optional<elem_id> find(const int_matrix& action) const {
        auto it = index_.find(flatten(action));
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    /// Element acting as the reflection s_beta for a root beta.
    elem_id reflection(const root_system& rs, const tvector& beta) const {
        int_matrix m(rank_, std::vector<int>(rank_, 0));
        for (int k = 0; k < rank_; ++k) {
            tvector img = rs.reflect(rs.simple_root(k), beta);
            for (int i = 0; i < rank_; ++i) {
                if (!is_integral(img[i]))
                    throw error(errc::dimension_mismatch, "reflection in a non-root vector");
                m[i][k] = static_cast<int>(numerator(img[i]));
            }
        }
        auto id = find(m);
        if (!id)
            throw error(errc::dimension_mismatch, "reflection is not in the Weyl group");
        return *id;
    }

    elem_id from_word(const word_t& w) const {
        elem_id x = identity();
        for (int i : w)
            x = right_simple(x, i);
        return x;
    }

    /// All reduced words of w, lexicographically sorted (canonical word first).
    std::vector<word_t> reduced_words(elem_id w) const {
        std::map<elem_id, std::vector<word_t>> memo;
        std::function<const std::vector<word_t>&(elem_id)> rec = [&](elem_id x) -> const std::vector<word_t>& {
            if (auto it = memo.find(x); it != memo.end())
                return it->second;
            std::vector<word_t> out;
            if (x == identity()) {
                out.push_back({});
            } else {
                for (int i : right_descents(x))
                    for (auto word : rec(right_simple(x, i))) {
                        word.push_back(i);
                        out.push_back(std::move(word));
                    }
                std::sort(out.begin(), out.end());
            }
            return memo.emplace(x, std::move(out)).first->second;
        };
        return rec(w);
    }

private:
    explicit weyl_group(const root_system& rs) : rank_(rs.rank()) {
        const int l = rank_;
        const auto& c = rs.cartan();
        std::vector<int_matrix> simple(l);
        for (int i = 0; i < l; ++i) {
            int_matrix s(l, std::vector<int>(l, 0));
            for (int k = 0; k < l; ++k)
                s[k][k] = 1;
            for (int k = 0; k < l; ++k)
                s[i][k] -= c[i][k];
            simple[i] = std::move(s);
        }
        auto times = [l](const int_matrix& a, const int_matrix& b) {
            int_matrix r(l, std::vector<int>(l, 0));
            for (int i = 0; i < l; ++i)
                for (int k = 0; k < l; ++k)
                    if (a[i][k] != 0)
                        for (int j = 0; j < l; ++j)
                            r[i][j] += a[i][k] * b[k][j];
            return r;
        };

        int_matrix ident(l, std::vector<int>(l, 0));
        for (int k = 0; k < l; ++k)
            ident[k][k] = 1;
        elements_.push_back({0, {}, 0, ident});
        index_.emplace(flatten(ident), 0);

        // Level k+1 from level k; iterating level k in canonical order with
        // ascending generator index visits candidate words lexicographically.
        std::size_t level_begin = 0, level_end = 1;
        int length = 0;
        while (level_begin < level_end) {
            for (std::size_t a = level_begin; a < level_end; ++a)
                for (int i = 0; i < l; ++i) {
                    auto m = times(elements_[a].action, simple[i]);
                    auto key = flatten(m);
                    if (index_.count(key))
                        continue;
                    auto id = static_cast<elem_id>(elements_.size());
                    auto word = elements_[a].word;
                    word.push_back(i);
                    index_.emplace(std::move(key), id);
                    elements_.push_back({id, std::move(word), length + 1, std::move(m)});
                }
            level_begin = level_end;
            level_end = elements_.size();
            ++length;
        }
        w0_ = static_cast<elem_id>(elements_.size() - 1);

        const std::size_t n = elements_.size();
        rmul_.resize(n * l);
        for (std::size_t a = 0; a < n; ++a)
            for (int i = 0; i < l; ++i)
                rmul_[a * l + i] = index_.at(flatten(times(elements_[a].action, simple[i])));

        mult_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a) {
            mult_[a * n] = static_cast<elem_id>(a);
            for (std::size_t b = 1; b < n; ++b) {
                const auto& w = elements_[b].word;
                elem_id prefix = parent(static_cast<elem_id>(b));
                mult_[a * n + b] = rmul_[static_cast<std::size_t>(mult_[a * n + prefix]) * l + w.back()];
            }
        }
        inverse_.resize(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (mult_[a * n + b] == 0) {
                    inverse_[a] = static_cast<elem_id>(b);
                    break;
                }

        // Subword property: products of subwords of a1..ak are those of
        // a1..a(k-1), with and without s_ak appended on the right.
        const std::size_t blocks = (n + 63) / 64;
        below_.assign(n, std::vector<std::uint64_t>(blocks, 0));
        below_[0][0] = 1;
        for (std::size_t w = 1; w < n; ++w) {
            elem_id prefix = parent(static_cast<elem_id>(w));
            int last = elements_[w].word.back();
            below_[w] = below_[prefix];
            for (std::size_t u = 0; u < n; ++u)
                if ((below_[prefix][u >> 6] >> (u & 63)) & 1u) {
                    auto us = rmul_[u * l + last];
                    below_[w][us >> 6] |= std::uint64_t{1} << (us & 63);
                }
        }
    }

    // Element whose canonical word is the canonical word of w minus its last letter.
    elem_id parent(elem_id w) const {
        const auto& word = elements_[w].word;
        return rmul_[static_cast<std::size_t>(w) * rank_ + word.back()];
    }

    static std::vector<int> flatten(const int_matrix& m) {
        std::vector<int> f;
        for (const auto& r : m)
            f.insert(f.end(), r.begin(), r.end());
        return f;
    }

    int rank_;
    std::vector<weyl_element> elements_;
    std::map<std::vector<int>, elem_id> index_;
    std::vector<elem_id> rmul_;
    std::vector<elem_id> mult_;
    std::vector<elem_id> inverse_;
    std::vector<std::vector<std::uint64_t>> below_;
    elem_id w0_ = 0;
};

} // namespace weightvar
