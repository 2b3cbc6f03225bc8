#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "rootsys.hpp"

namespace weightvar {

using exponent = std::vector<int>;

inline int total_degree(const exponent& e) {
    int d = 0;
    for (int x : e)
        d += x;
    return d;
}

/// Graded lexicographic order: by total degree, then lexicographically
/// with a higher power of the first variable counting as larger.
struct graded_lex_less {
    bool operator()(const exponent& a, const exponent& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db)
            return da < db;
        return a < b;
    }
};

/// All monomials of total degree d in l variables, largest first in graded-lex order.
inline std::vector<exponent> monomial_basis(int l, int d) {
    std::vector<exponent> out;
    if (d < 0 || l <= 0)
        return out;
    exponent e(l, 0);
    // Enumerate compositions of d into l parts, first coordinate descending.
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == l - 1) {
            e[pos] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

/// Sparse multivariate polynomial over Q in the simple-root coordinates
/// a1..al of t*. No zero coefficient is ever stored.
class polynomial {
public:
    using term_map = std::map<exponent, rational, graded_lex_less>;

    explicit polynomial(int nvars = 0) : nvars_(nvars) {}

    static polynomial constant(int nvars, const rational& c) {
        polynomial p(nvars);
        if (c != 0)
            p.terms_.emplace(exponent(nvars, 0), c);
        return p;
    }

    static polynomial variable(int nvars, int i) {
        polynomial p(nvars);
        exponent e(nvars, 0);
        e[i] = 1;
        p.terms_.emplace(std::move(e), 1);
        return p;
    }

    static polynomial monomial(const exponent& e, const rational& c = 1) {
        polynomial p(static_cast<int>(e.size()));
        if (c != 0)
            p.terms_.emplace(e, c);
        return p;
    }

    /// The linear form sum_i coords[i] * a_i.
    static polynomial linear(const tvector& v) {
        const int n = static_cast<int>(v.size());
        polynomial p(n);
        for (int i = 0; i < n; ++i)
            if (v[i] != 0) {
                exponent e(n, 0);
                e[i] = 1;
                p.terms_.emplace(std::move(e), v[i]);
            }
        return p;
    }

    int nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const term_map& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Total degree if homogeneous; nullopt for zero or mixed degrees.
    std::optional<int> degree() const {
        if (terms_.empty())
            return std::nullopt;
        int d = total_degree(terms_.begin()->first);
        if (total_degree(terms_.rbegin()->first) != d)
            return std::nullopt;
        return d;
    }

    bool is_homogeneous() const { return terms_.empty() || degree().has_value(); }

    bool is_homogeneous_of_degree(int d) const {
        return terms_.empty() || (degree() && *degree() == d);
    }

    rational coefficient(const exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? rational(0) : it->second;
    }

    void add_term(const exponent& e, const rational& c) {
        if (c == 0)
            return;
        check_exponent(e);
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    polynomial& operator+=(const polynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }
    polynomial& operator-=(const polynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }
    polynomial& operator*=(const rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_)
            v *= c;
        return *this;
    }

    friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
    friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }
    friend polynomial operator-(polynomial a) { return a *= rational(-1); }
    friend polynomial operator*(const rational& c, polynomial a) { return a *= c; }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        a.check(b);
        polynomial r(a.nvars_);
        if (a.is_zero() || b.is_zero())
            return r;
        exponent e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i)
                    e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

    friend bool operator==(const polynomial& a, const polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Substitutes a_i by the linear form act(w, alpha_i) (column i of the action matrix).
    polynomial weyl_apply(const int_matrix& action) const {
        if (static_cast<int>(action.size()) != nvars_)
            throw error(errc::dimension_mismatch, "weyl_apply: action matrix size does not match variable count");
        std::vector<polynomial> images;
        for (int i = 0; i < nvars_; ++i) {
            polynomial li(nvars_);
            for (int k = 0; k < nvars_; ++k)
                if (action[k][i] != 0)
                    li.add_term(unit_exponent(k), action[k][i]);
            images.push_back(std::move(li));
        }
        std::vector<std::vector<polynomial>> powers(nvars_);
        polynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            polynomial t = constant(nvars_, c);
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0)
                    continue;
                auto& pw = powers[i];
                if (pw.empty())
                    pw.push_back(constant(nvars_, 1));
                while (static_cast<int>(pw.size()) <= e[i])
                    pw.push_back(pw.back() * images[i]);
                t = t * pw[e[i]];
            }
            out += t;
        }
        return out;
    }

    /// Returns r with p = q * r; throws non_exact_division otherwise.
    friend polynomial divide_exact(const polynomial& p, const polynomial& q) {
        p.check(q);
        if (q.is_zero())
            throw error(errc::non_exact_division, "division by the zero polynomial");
        polynomial rem = p;
        polynomial quot(p.nvars_);
        const auto& [lq_e, lq_c] = *q.terms_.rbegin();
        exponent e(p.nvars_);
        while (!rem.is_zero()) {
            const auto [lr_e, lr_c] = *rem.terms_.rbegin();
            for (int i = 0; i < p.nvars_; ++i) {
                e[i] = lr_e[i] - lq_e[i];
                if (e[i] < 0)
                    throw error(errc::non_exact_division, rem.str() + " is not divisible by " + q.str());
            }
            rational c = lr_c / lq_c;
            quot.add_term(e, c);
            for (const auto& [eq, cq] : q.terms_) {
                exponent f(p.nvars_);
                for (int i = 0; i < p.nvars_; ++i)
                    f[i] = eq[i] + e[i];
                rem.add_term(f, -c * cq);
            }
        }
        return quot;
    }

    /// Human-readable form, leading term first, e.g. "a1^2 + 2*a1*a2 - 1/3".
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            rational mag = c < 0 ? rational(-c) : c;
            if (first)
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            first = false;
            std::string mono;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += "a" + std::to_string(i + 1);
                if (e[i] > 1)
                    mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                s += to_string(mag);
            else if (mag == 1)
                s += mono;
            else
                s += to_string(mag) + "*" + mono;
        }
        return s;
    }

private:
    exponent unit_exponent(int k) const {
        exponent e(nvars_, 0);
        e[k] = 1;
        return e;
    }
    void check(const polynomial& o) const {
        if (o.nvars_ != nvars_)
            throw error(errc::dimension_mismatch, "polynomials in different variable counts");
    }
    void check_exponent(const exponent& e) const {
        if (static_cast<int>(e.size()) != nvars_)
            throw error(errc::dimension_mismatch, "exponent length does not match variable count");
    }

    int nvars_;
    term_map terms_;
};

} // namespace weightvar
