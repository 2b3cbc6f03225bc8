#pragma once

#include <map>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"
#include "schubert.hpp"

namespace weightvar {

/// Coordinates for the half-degree-d slice of H_T^*(K/T) inside the
/// restriction space: (fixed point, monomial of degree d) pairs, fixed point
/// major, monomials in monomial_basis order.
class graded_layout {
public:
    graded_layout(int nvars, std::size_t points) : nvars_(nvars), points_(points) {}

    int nvars() const noexcept { return nvars_; }
    std::size_t points() const noexcept { return points_; }

    const std::vector<exponent>& monomials(int d) {
        ensure(d);
        return monomials_[d];
    }

    std::size_t monomial_count(int d) { return monomials(d).size(); }
    std::size_t width(int d) { return points_ * monomial_count(d); }

    std::size_t monomial_index(int d, const exponent& e) {
        ensure(d);
        return index_[d].at(e);
    }

    /// Index in degree d of (monomial a of degree d-1) * a_k.
    std::size_t shifted_index(int d, std::size_t a, int k) {
        ensure(d);
        return shift_[d][a * nvars_ + k];
    }

    std::vector<rational> coordinates(const equivariant_class& c) {
        const int d = c.half_degree();
        const std::size_t m = monomial_count(d);
        std::vector<rational> row(points_ * m);
        for (std::size_t v = 0; v < points_; ++v)
            for (const auto& [e, q] : c.at(static_cast<elem_id>(v)).terms()) {
                if (total_degree(e) != d)
                    throw error(errc::inhomogeneous_input, "restriction of degree other than " + std::to_string(d));
                row[v * m + index_[d].at(e)] = q;
            }
        return row;
    }

private:
    void ensure(int d) {
        if (d < 0)
            throw error(errc::degree_overflow, "negative half degree");
        while (static_cast<int>(monomials_.size()) <= d) {
            const int k = static_cast<int>(monomials_.size());
            monomials_.push_back(monomial_basis(nvars_, k));
            std::map<exponent, std::size_t> idx;
            for (std::size_t i = 0; i < monomials_[k].size(); ++i)
                idx.emplace(monomials_[k][i], i);
            index_.push_back(std::move(idx));
            std::vector<std::size_t> shift;
            if (k > 0)
                for (const auto& e : monomials_[k - 1])
                    for (int j = 0; j < nvars_; ++j) {
                        auto f = e;
                        ++f[j];
                        shift.push_back(index_[k].at(f));
                    }
            shift_.push_back(std::move(shift));
        }
    }

    int nvars_;
    std::size_t points_;
    std::vector<std::vector<exponent>> monomials_;
    std::vector<std::map<exponent, std::size_t>> index_;
    std::vector<std::vector<std::size_t>> shift_;
};

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// dim of the half-degree-d slice: sum_w #monomials of degree d - codim(w).
inline std::size_t slice_dimension(const schubert_basis& b, int d) {
    std::size_t total = 0;
    const auto l = static_cast<std::size_t>(b.rank());
    for (std::size_t w = 0; w < b.points(); ++w) {
        int k = d - b.codim(static_cast<elem_id>(w));
        if (k >= 0)
            total += binomial(static_cast<std::size_t>(k) + l - 1, l - 1);
    }
    return total;
}

/// The module basis {x_w * m : codim(w) + deg m = d} of the half-degree-d slice.
inline std::vector<equivariant_class> slice_basis(const schubert_basis& b, int d) {
    std::vector<equivariant_class> out;
    for (std::size_t w = 0; w < b.points(); ++w) {
        int k = d - b.codim(static_cast<elem_id>(w));
        if (k < 0)
            continue;
        for (const auto& e : monomial_basis(b.rank(), k)) {
            auto c = polynomial::monomial(e) * b.schubert(static_cast<elem_id>(w));
            c.set_label(b.schubert(static_cast<elem_id>(w)).label());
            out.push_back(std::move(c));
        }
    }
    return out;
}

/// A basis of the half-degree-1 slice: x_w with codim(w) = 1 and a_i * 1.
/// Over Q the ring H_T^*(K/T) is generated by this slice.
inline std::vector<equivariant_class> degree_one_generators(const schubert_basis& b) {
    std::vector<equivariant_class> out;
    for (std::size_t w = 0; w < b.points(); ++w)
        if (b.codim(static_cast<elem_id>(w)) == 1)
            out.push_back(b.schubert(static_cast<elem_id>(w)));
    for (int i = 0; i < b.rank(); ++i)
        out.push_back(polynomial::variable(b.rank(), i) * b.unit());
    return out;
}

namespace detail {

template <class T>
std::vector<T> to_exact_row(const std::vector<rational>& row) {
    std::vector<T> out;
    out.reserve(row.size());
    for (const auto& x : clear_denominators(row))
        out.push_back(exact_ops<T>::from(x));
    return out;
}

// Per fixed point, the integer coefficients of a linear restriction.
inline std::vector<std::vector<std::int64_t>> linear_table(const equivariant_class& h, int nvars) {
    std::vector<std::vector<std::int64_t>> t(h.points(), std::vector<std::int64_t>(nvars, 0));
    for (std::size_t v = 0; v < h.points(); ++v)
        for (const auto& [e, q] : h.at(static_cast<elem_id>(v)).terms()) {
            int k = 0;
            while (e[k] == 0)
                ++k;
            t[v][k] = static_cast<std::int64_t>(numerator(q));
        }
    return t;
}

template <class T>
std::vector<std::size_t> ideal_dims(const schubert_basis& b, const std::vector<equivariant_class>& generators,
                                    int dmax) {
    using ops = exact_ops<T>;
    const int l = b.rank();
    const std::size_t n = b.points();
    graded_layout layout(l, n);
    std::vector<std::vector<std::vector<std::int64_t>>> h1;
    for (const auto& h : degree_one_generators(b))
        h1.push_back(linear_table(h, l));

    std::vector<std::size_t> dims;
    std::vector<std::vector<T>> previous;
    for (int d = 0; d <= dmax; ++d) {
        const std::size_t target = slice_dimension(b, d);
        const std::size_t width = layout.width(d);
        row_space<T> space(width);
        for (const auto& gen : generators) {
            if (space.rank() == target)
                break;
            if (gen.half_degree() == d && !gen.is_zero())
                space.insert(to_exact_row<T>(layout.coordinates(gen)));
        }
        if (d > 0) {
            const std::size_t m_prev = layout.monomial_count(d - 1);
            const std::size_t m = layout.monomial_count(d);
            for (const auto& row : previous) {
                for (const auto& h : h1) {
                    if (space.rank() == target)
                        break;
                    std::vector<T> product(width, T(0));
                    bool any = false;
                    for (std::size_t v = 0; v < n; ++v)
                        for (std::size_t a = 0; a < m_prev; ++a) {
                            const T& c = row[v * m_prev + a];
                            if (c == 0)
                                continue;
                            for (int k = 0; k < l; ++k) {
                                if (h[v][k] == 0)
                                    continue;
                                auto& slot = product[v * m + layout.shifted_index(d, a, k)];
                                slot = ops::sub(slot, ops::mul(c, T(-h[v][k])));
                                any = true;
                            }
                        }
                    if (any)
                        space.insert(std::move(product));
                }
                if (space.rank() == target)
                    break;
            }
        }
        dims.push_back(space.rank());
        previous = space.rows();
    }
    return dims;
}

} // namespace detail

/// dim over Q of the half-degree-d part of the ideal generated by
/// `generators`, for d = 0..dmax. Uses I_d = H_1 * I_{d-1} + span(generators
/// of degree d), valid because H_1 generates the ring.
inline std::vector<std::size_t> ideal_graded_dims(const schubert_basis& b,
                                                  const std::vector<equivariant_class>& generators, int dmax) {
    try {
        return detail::ideal_dims<std::int64_t>(b, generators, dmax);
    } catch (const arithmetic_overflow&) {
        return detail::ideal_dims<integer>(b, generators, dmax);
    }
}

/// Rows spanning {c in slice d : c|_v = 0 for every v not in `allowed`},
/// in layout coordinates. Elimination with the forbidden columns first
/// leaves that intersection as the rows pivoting past them.
inline std::vector<std::vector<integer>> vanishing_subspace(const schubert_basis& b, int d,
                                                            const std::vector<char>& allowed) {
    graded_layout layout(b.rank(), b.points());
    const std::size_t m = layout.monomial_count(d);
    std::vector<std::size_t> perm; // new column -> old column
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t v = 0; v < b.points(); ++v)
            if ((allowed[v] != 0) == (pass == 1))
                for (std::size_t a = 0; a < m; ++a)
                    perm.push_back(v * m + a);
    std::size_t forbidden_width = 0;
    for (std::size_t v = 0; v < b.points(); ++v)
        if (!allowed[v])
            forbidden_width += m;
    row_space<integer> space(layout.width(d));
    for (const auto& c : slice_basis(b, d)) {
        auto row = clear_denominators(layout.coordinates(c));
        std::vector<integer> permuted(row.size());
        for (std::size_t j = 0; j < perm.size(); ++j)
            permuted[j] = row[perm[j]];
        space.insert(std::move(permuted));
    }
    std::vector<std::vector<integer>> out;
    for (std::size_t k = 0; k < space.rank(); ++k) {
        if (space.pivots()[k] < forbidden_width)
            continue;
        std::vector<integer> row(perm.size());
        for (std::size_t j = 0; j < perm.size(); ++j)
            row[perm[j]] = space.rows()[k][j];
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace weightvar
