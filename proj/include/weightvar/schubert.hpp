#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "parallel.hpp"
#include "poly.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"

namespace weightvar {

inline polynomial weyl_apply(const weyl_group& g, elem_id w, const polynomial& p) {
    if (w == g.identity())
        return p;
    return p.weyl_apply(g.element(w).action);
}

/// The roots r_k = s_{a1}...s_{a(k-1)}(alpha_{ak}) along a reduced word
/// a1..am; for a reduced word these are exactly the positive roots
/// inverted by the element, each appearing once.
inline std::vector<tvector> inversion_roots(const root_system& rs, const weyl_group& g, const word_t& word) {
    std::vector<tvector> roots;
    elem_id prefix = g.identity();
    for (int a : word) {
        roots.push_back(g.act(prefix, rs.simple_root(a)));
        prefix = g.right_simple(prefix, a);
    }
    return roots;
}

namespace detail {

// Billey sums for every w at once, along the given reduced word of v:
// out[w] = sum over reduced subwords with product w of prod r_k.
inline std::vector<polynomial> billey_column(const root_system& rs, const weyl_group& g, const word_t& word) {
    const int l = rs.rank();
    const std::size_t n = g.size();
    auto roots = inversion_roots(rs, g, word);
    std::vector<polynomial> linear;
    for (const auto& r : roots) {
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] < 0 || !is_integral(r[i]))
                throw error(errc::non_exact_division, "Billey factor " + r.str() + " is not a positive root");
        linear.push_back(polynomial::linear(r));
    }
    std::vector<polynomial> dp(n, polynomial(l));
    std::vector<char> live(n, 0);
    dp[g.identity()] = polynomial::constant(l, 1);
    live[g.identity()] = 1;
    for (std::size_t k = 0; k < word.size(); ++k) {
        // Descending length order so each position is used at most once per subword.
        for (std::size_t idx = n; idx-- > 0;) {
            if (!live[idx])
                continue;
            auto u = static_cast<elem_id>(idx);
            elem_id us = g.right_simple(u, word[k]);
            if (g.length(us) != g.length(u) + 1)
                continue;
            dp[us] += dp[u] * linear[k];
            live[us] = 1;
        }
    }
    return dp;
}

} // namespace detail

/// xi^w|_v by Billey's subword formula on the canonical reduced word of v.
inline polynomial billey_restriction(const root_system& rs, const weyl_group& g, elem_id w, elem_id v) {
    return detail::billey_column(rs, g, g.word(v))[w];
}

/// Same sum evaluated along an arbitrary reduced word of v.
inline polynomial billey_restriction_along(const root_system& rs, const weyl_group& g, elem_id w, const word_t& word) {
    return detail::billey_column(rs, g, word)[w];
}

/// xi^w|_v for all pairs. Depends only on the Cartan data.
class billey_table {
public:
    billey_table() = default;

    static billey_table compute(const root_system& rs, const weyl_group& g, int threads = 1) {
        billey_table t(g.size(), rs.rank());
        parallel_for(g.size(), threads, [&](std::size_t v) {
            auto column = detail::billey_column(rs, g, g.word(static_cast<elem_id>(v)));
            for (std::size_t w = 0; w < g.size(); ++w)
                t.values_[w * t.n_ + v] = std::move(column[w]);
        });
        return t;
    }

    static billey_table from_values(std::size_t n, int nvars, std::vector<polynomial> values) {
        if (values.size() != n * n)
            throw error(errc::dimension_mismatch, "Billey table has the wrong number of entries");
        billey_table t(n, nvars);
        t.values_ = std::move(values);
        return t;
    }

    std::size_t size() const noexcept { return n_; }
    const polynomial& at(elem_id w, elem_id v) const { return values_[static_cast<std::size_t>(w) * n_ + v]; }
    const std::vector<polynomial>& values() const noexcept { return values_; }
    friend bool operator==(const billey_table&, const billey_table&) = default;

private:
    billey_table(std::size_t n, int nvars) : n_(n), values_(n * n, polynomial(nvars)) {}
    std::size_t n_ = 0;
    std::vector<polynomial> values_;
};

/// An element of H_T^*(K/T), stored as its restrictions to the fixed points
/// (indexed by Weyl group element id). Cohomological degree is 2 * half_degree.
class equivariant_class {
public:
    equivariant_class() = default;
    equivariant_class(std::vector<polynomial> restrictions, int half_degree, std::string label = {})
        : restrictions_(std::move(restrictions)), half_degree_(half_degree), label_(std::move(label)) {}

    static equivariant_class zero(std::size_t points, int nvars, int half_degree) {
        return {std::vector<polynomial>(points, polynomial(nvars)), half_degree};
    }

    /// The pullback of a polynomial on a point: the same value at every fixed point.
    static equivariant_class constant(std::size_t points, const polynomial& p, int half_degree) {
        return {std::vector<polynomial>(points, p), half_degree};
    }

    std::size_t points() const noexcept { return restrictions_.size(); }
    int half_degree() const noexcept { return half_degree_; }
    const std::string& label() const noexcept { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }
    const polynomial& at(elem_id v) const { return restrictions_[v]; }
    polynomial& at(elem_id v) { return restrictions_[v]; }
    const std::vector<polynomial>& restrictions() const noexcept { return restrictions_; }

    bool is_zero() const {
        for (const auto& p : restrictions_)
            if (!p.is_zero())
                return false;
        return true;
    }

    bool is_homogeneous() const {
        for (const auto& p : restrictions_)
            if (!p.is_homogeneous_of_degree(half_degree_))
                return false;
        return true;
    }

    void require_homogeneous() const {
        if (!is_homogeneous())
            throw error(errc::inhomogeneous_input,
                        "class '" + label_ + "' has a restriction not of degree " + std::to_string(half_degree_));
    }

    std::vector<elem_id> support() const {
        std::vector<elem_id> s;
        for (std::size_t v = 0; v < restrictions_.size(); ++v)
            if (!restrictions_[v].is_zero())
                s.push_back(static_cast<elem_id>(v));
        return s;
    }

    equivariant_class& operator+=(const equivariant_class& o) {
        check(o);
        if (half_degree_ != o.half_degree_ && !o.is_zero() && !is_zero())
            throw error(errc::inhomogeneous_input, "sum of classes of different degrees");
        if (is_zero())
            half_degree_ = o.half_degree_;
        for (std::size_t v = 0; v < points(); ++v)
            restrictions_[v] += o.restrictions_[v];
        return *this;
    }
    equivariant_class& operator-=(const equivariant_class& o) {
        equivariant_class neg = o;
        for (auto& p : neg.restrictions_)
            p *= rational(-1);
        return *this += neg;
    }
    friend equivariant_class operator+(equivariant_class a, const equivariant_class& b) { return a += b; }
    friend equivariant_class operator-(equivariant_class a, const equivariant_class& b) { return a -= b; }

    friend equivariant_class operator*(const equivariant_class& a, const equivariant_class& b) {
        a.check(b);
        std::vector<polynomial> r;
        r.reserve(a.points());
        for (std::size_t v = 0; v < a.points(); ++v)
            r.push_back(a.restrictions_[v].is_zero() || b.restrictions_[v].is_zero()
                            ? polynomial(a.restrictions_[v].nvars())
                            : a.restrictions_[v] * b.restrictions_[v]);
        return {std::move(r), a.half_degree_ + b.half_degree_};
    }

    /// Multiplication by a homogeneous coefficient from H_T^*(pt).
    friend equivariant_class operator*(const polynomial& q, const equivariant_class& a) {
        std::vector<polynomial> r;
        r.reserve(a.points());
        for (const auto& p : a.restrictions_)
            r.push_back(p * q);
        return {std::move(r), a.half_degree_ + q.degree().value_or(0)};
    }

    /// Equality of classes is equality of restriction vectors.
    friend bool operator==(const equivariant_class& a, const equivariant_class& b) {
        if (a.restrictions_ != b.restrictions_)
            return false;
        return a.half_degree_ == b.half_degree_ || a.is_zero();
    }

private:
    void check(const equivariant_class& o) const {
        if (o.points() != points())
            throw error(errc::dimension_mismatch, "classes on different fixed point sets");
    }

    std::vector<polynomial> restrictions_;
    int half_degree_ = 0;
    std::string label_;
};

/// (tau . c)|_v = tau . (c|_{tau^-1 v}).
inline equivariant_class weyl_twist(const weyl_group& g, const equivariant_class& c, elem_id tau) {
    if (tau == g.identity())
        return c;
    const elem_id tau_inv = g.inverse(tau);
    std::vector<polynomial> r(c.points());
    for (std::size_t v = 0; v < c.points(); ++v)
        r[v] = weyl_apply(g, tau, c.at(g.multiply(tau_inv, static_cast<elem_id>(v))));
    return {std::move(r), c.half_degree(), c.label()};
}

/// Coefficients a_w^tau of a class in the twisted basis {x_w^tau}.
struct schubert_coefficients {
    elem_id tau = 0;
    std::vector<polynomial> coeffs;

    std::vector<elem_id> nonzero() const {
        std::vector<elem_id> s;
        for (std::size_t w = 0; w < coeffs.size(); ++w)
            if (!coeffs[w].is_zero())
                s.push_back(static_cast<elem_id>(w));
        return s;
    }
};

/// The equivariant Schubert basis of H_T^*(K/T) together with the root and
/// Weyl data it was built from.
///
/// x_w = w0 . xi^{w0 w}, so x_w|_v = w0 . xi^{w0 w}|_{w0 v}; x_w has half
/// degree l(w0) - l(w) and is supported on {v : v <= w}. The Euler classes
/// of the fixed points carry a global sign chosen so that integrate(x_e) = 1.
class schubert_basis {
public:
    schubert_basis(root_system rs, int threads = 1, std::optional<billey_table> table = std::nullopt,
                   int max_rank = default_max_rank)
        : rs_(std::move(rs)), g_(weyl_group::generate(rs_, max_rank)) {
        init(threads, std::move(table));
    }

    const root_system& roots() const noexcept { return rs_; }
    const weyl_group& group() const noexcept { return g_; }
    const billey_table& table() const noexcept { return table_; }
    int rank() const noexcept { return rs_.rank(); }
    std::size_t points() const noexcept { return g_.size(); }
    int top_degree() const noexcept { return g_.length(g_.longest()); }

    /// Half degree of x_w.
    int codim(elem_id w) const { return top_degree() - g_.length(w); }

    const equivariant_class& schubert(elem_id w) const { return classes_[w]; }

    equivariant_class unit() const {
        return equivariant_class::constant(points(), polynomial::constant(rank(), 1), 0);
    }

    /// x_w^tau = tau . x_{tau^-1 w}.
    equivariant_class twisted(elem_id w, elem_id tau) const {
        auto c = weyl_twist(g_, classes_[g_.multiply(g_.inverse(tau), w)], tau);
        c.set_label("x_" + word_label(w) + "^" + word_label(tau));
        return c;
    }

    std::vector<equivariant_class> twisted_basis(elem_id tau) const {
        std::vector<equivariant_class> out;
        out.reserve(points());
        for (std::size_t w = 0; w < points(); ++w)
            out.push_back(twisted(static_cast<elem_id>(w), tau));
        return out;
    }

    const polynomial& positive_root_product() const noexcept { return root_product_; }

    /// Euler class of the tangent space at fixed point v, with the global sign convention.
    polynomial euler_class(elem_id v) const {
        polynomial e = polynomial::constant(rank(), euler_sign_);
        for (const auto& alpha : rs_.positive_roots())
            e *= polynomial::linear(g_.act(v, alpha));
        return e;
    }

    /// e_v = sign(v) * prod_{alpha > 0} alpha.
    int euler_sign(elem_id v) const { return (g_.length(v) % 2 == 0) ? euler_sign_ : -euler_sign_; }

    /// Localization sum over fixed points: sum_v c|_v / e_v.
    polynomial integrate(const equivariant_class& c) const {
        polynomial numer(rank());
        for (std::size_t v = 0; v < points(); ++v) {
            if (c.at(static_cast<elem_id>(v)).is_zero())
                continue;
            if (euler_sign(static_cast<elem_id>(v)) > 0)
                numer += c.at(static_cast<elem_id>(v));
            else
                numer -= c.at(static_cast<elem_id>(v));
        }
        if (c.half_degree() < top_degree()) {
            if (!numer.is_zero())
                throw error(errc::localization_not_polynomial,
                            "localization sum of a class below top degree is nonzero: " + numer.str());
            return polynomial(rank());
        }
        try {
            return divide_exact(numer, root_product_);
        } catch (const error&) {
            throw error(errc::localization_not_polynomial, "denominators do not cancel for " + numer.str());
        }
    }

    /// Triangular solve for c = sum_w a_w^tau x_w^tau, visiting v in
    /// decreasing length of tau^-1 v so every class that can be nonzero at v
    /// has already been solved.
    schubert_coefficients decompose(const equivariant_class& c, elem_id tau) const {
        c.require_homogeneous();
        if (c.points() != points())
            throw error(errc::dimension_mismatch, "class lives on a different fixed point set");
        const std::size_t n = points();
        const elem_id tau_inv = g_.inverse(tau);
        auto basis = twisted_basis(tau);
        std::vector<elem_id> order(n);
        for (std::size_t v = 0; v < n; ++v)
            order[v] = static_cast<elem_id>(v);
        auto key = [&](elem_id v) { return g_.multiply(tau_inv, v); };
        std::stable_sort(order.begin(), order.end(), [&](elem_id a, elem_id b) {
            return g_.length(key(a)) > g_.length(key(b));
        });
        schubert_coefficients out{tau, std::vector<polynomial>(n, polynomial(rank()))};
        std::vector<elem_id> solved;
        for (elem_id v : order) {
            polynomial residual = c.at(v);
            for (elem_id w : solved)
                if (g_.bruhat_leq(key(v), key(w)) && !basis[w].at(v).is_zero())
                    residual -= out.coeffs[w] * basis[w].at(v);
            const int target = c.half_degree() - basis[v].half_degree();
            if (target < 0) {
                if (!residual.is_zero())
                    throw error(errc::non_exact_division,
                                "nonzero residual " + residual.str() + " in negative coefficient degree");
            } else if (!residual.is_zero()) {
                out.coeffs[v] = divide_exact(residual, basis[v].at(v));
            }
            if (!out.coeffs[v].is_zero())
                solved.push_back(v);
        }
        return out;
    }

    equivariant_class reassemble(const schubert_coefficients& a, int half_degree) const {
        auto total = equivariant_class::zero(points(), rank(), half_degree);
        for (elem_id w : a.nonzero())
            total += a.coeffs[w] * twisted(w, a.tau);
        return total;
    }

    std::string word_label(elem_id w) const {
        if (w == g_.identity())
            return "e";
        std::string s;
        for (int i : g_.word(w))
            s += "s" + std::to_string(i + 1);
        return s;
    }

private:
    void init(int threads, std::optional<billey_table> table) {
        if (table && table->size() == g_.size())
            table_ = std::move(*table);
        else
            table_ = billey_table::compute(rs_, g_, threads);

        const std::size_t n = g_.size();
        const elem_id w0 = g_.longest();
        classes_.resize(n);
        parallel_for(n, threads, [&](std::size_t wi) {
            auto w = static_cast<elem_id>(wi);
            std::vector<polynomial> r(n, polynomial(rank()));
            const elem_id u = g_.multiply(w0, w);
            for (std::size_t v = 0; v < n; ++v) {
                const auto& xi = table_.at(u, g_.multiply(w0, static_cast<elem_id>(v)));
                if (!xi.is_zero())
                    r[v] = weyl_apply(g_, w0, xi);
            }
            classes_[w] = equivariant_class(std::move(r), codim(w), "x_" + word_label(w));
        });

        root_product_ = polynomial::constant(rank(), 1);
        for (const auto& alpha : rs_.positive_roots())
            root_product_ *= polynomial::linear(alpha);
        // Fix the sign so that x_e|_e / e_e = 1.
        auto ratio = divide_exact(classes_[g_.identity()].at(g_.identity()), root_product_);
        euler_sign_ = ratio.coefficient(exponent(rank(), 0)) > 0 ? 1 : -1;
    }

    root_system rs_;
    weyl_group g_;
    billey_table table_;
    std::vector<equivariant_class> classes_;
    polynomial root_product_;
    int euler_sign_ = 1;
};

} // namespace weightvar
