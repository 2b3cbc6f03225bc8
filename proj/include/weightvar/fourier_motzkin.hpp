#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace weightvar {

/// sum_i coeffs[i] * x_i <= bound.
struct linear_constraint {
    std::vector<rational> coeffs;
    rational bound;

    friend bool operator<(const linear_constraint& a, const linear_constraint& b) {
        if (a.coeffs != b.coeffs)
            return a.coeffs < b.coeffs;
        return a.bound < b.bound;
    }
    friend bool operator==(const linear_constraint&, const linear_constraint&) = default;
};

namespace detail {

// Scales so the first nonzero coefficient has absolute value 1; constraints
// that differ by a positive factor then compare equal.
inline linear_constraint normalized(linear_constraint c) {
    for (const auto& a : c.coeffs)
        if (a != 0) {
            rational s = a < 0 ? rational(-a) : a;
            for (auto& x : c.coeffs)
                x /= s;
            c.bound /= s;
            break;
        }
    return c;
}

inline bool trivially_true(const linear_constraint& c) {
    return std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const rational& a) { return a == 0; }) && c.bound >= 0;
}

inline bool trivially_false(const linear_constraint& c) {
    return std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const rational& a) { return a == 0; }) && c.bound < 0;
}

// Among constraints with identical coefficient vectors only the tightest bound matters.
inline std::vector<linear_constraint> prune(std::vector<linear_constraint> cs) {
    std::vector<linear_constraint> out;
    std::set<linear_constraint> sorted;
    for (auto& c : cs)
        if (!trivially_true(c))
            sorted.insert(normalized(std::move(c)));
    for (const auto& c : sorted)
        if (out.empty() || out.back().coeffs != c.coeffs)
            out.push_back(c);
    return out;
}

} // namespace detail

/// Exact feasibility of a system of weak linear inequalities in `vars`
/// unknowns by Fourier-Motzkin elimination. Returns a feasible point, or
/// nullopt when the system is infeasible.
inline std::optional<std::vector<rational>> fourier_motzkin(std::vector<linear_constraint> system, std::size_t vars) {
    for (const auto& c : system)
        if (c.coeffs.size() != vars)
            throw error(errc::dimension_mismatch, "constraint arity does not match variable count");
    // stages[k] holds the system in unknowns x_0..x_(vars-1-k)
    std::vector<std::vector<linear_constraint>> stages;
    stages.push_back(detail::prune(std::move(system)));
    for (std::size_t k = vars; k-- > 0;) {
        const auto& cur = stages.back();
        std::vector<linear_constraint> lower, upper, next;
        for (const auto& c : cur) {
            if (c.coeffs[k] > 0)
                upper.push_back(c);
            else if (c.coeffs[k] < 0)
                lower.push_back(c);
            else
                next.push_back(c);
        }
        for (const auto& u : upper)
            for (const auto& lo : lower) {
                // u: a x_k + ... <= b (a > 0); lo: -c x_k + ... <= d (c > 0)
                const rational a = u.coeffs[k], c = -lo.coeffs[k];
                linear_constraint comb{std::vector<rational>(vars), c * u.bound + a * lo.bound};
                for (std::size_t j = 0; j < vars; ++j)
                    comb.coeffs[j] = c * u.coeffs[j] + a * lo.coeffs[j];
                comb.coeffs[k] = 0;
                next.push_back(std::move(comb));
            }
        for (const auto& c : next)
            if (detail::trivially_false(c))
                return std::nullopt;
        stages.push_back(detail::prune(std::move(next)));
    }
    for (const auto& c : stages.back())
        if (detail::trivially_false(c))
            return std::nullopt;

    // Back substitution: stage vars-k constrains x_k given x_0..x_(k-1).
    std::vector<rational> x(vars, 0);
    for (std::size_t k = 0; k < vars; ++k) {
        const auto& cs = stages[vars - 1 - k];
        std::optional<rational> lo, hi;
        for (const auto& c : cs) {
            if (c.coeffs[k] == 0)
                continue;
            rational rest = c.bound;
            for (std::size_t j = 0; j < k; ++j)
                rest -= c.coeffs[j] * x[j];
            rational v = rest / c.coeffs[k];
            if (c.coeffs[k] > 0)
                hi = hi ? std::min(*hi, v) : v;
            else
                lo = lo ? std::max(*lo, v) : v;
        }
        if (lo && hi)
            x[k] = (*lo + *hi) / 2;
        else if (lo)
            x[k] = *lo;
        else if (hi)
            x[k] = *hi;
    }
    return x;
}

} // namespace weightvar
