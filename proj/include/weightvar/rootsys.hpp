#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace weightvar {

/// An element of t*, in coordinates with respect to the simple roots.
class tvector {
public:
    tvector() = default;
    explicit tvector(std::size_t dim) : coords_(dim) {}
    explicit tvector(std::vector<rational> coords) : coords_(std::move(coords)) {}
    tvector(std::initializer_list<rational> coords) : coords_(coords) {}

    static tvector unit(std::size_t dim, std::size_t i) {
        tvector v(dim);
        v.coords_[i] = 1;
        return v;
    }

    std::size_t size() const noexcept { return coords_.size(); }
    const rational& operator[](std::size_t i) const { return coords_[i]; }
    rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<rational>& coords() const noexcept { return coords_; }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const rational& q) { return q == 0; });
    }

    tvector& operator+=(const tvector& o) {
        check(o);
        for (std::size_t i = 0; i < size(); ++i)
            coords_[i] += o.coords_[i];
        return *this;
    }
    tvector& operator-=(const tvector& o) {
        check(o);
        for (std::size_t i = 0; i < size(); ++i)
            coords_[i] -= o.coords_[i];
        return *this;
    }
    tvector& operator*=(const rational& c) {
        for (auto& x : coords_)
            x *= c;
        return *this;
    }
    friend tvector operator+(tvector a, const tvector& b) { return a += b; }
    friend tvector operator-(tvector a, const tvector& b) { return a -= b; }
    friend tvector operator*(const rational& c, tvector a) { return a *= c; }
    friend tvector operator-(tvector a) { return a *= rational(-1); }

    friend bool operator==(const tvector&, const tvector&) = default;
    friend bool operator<(const tvector& a, const tvector& b) { return a.coords_ < b.coords_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < size(); ++i)
            s += (i ? ", " : "") + to_string(coords_[i]);
        return s + ")";
    }

private:
    void check(const tvector& o) const {
        if (o.size() != size())
            throw error(errc::dimension_mismatch, "tvector dimensions differ");
    }
    std::vector<rational> coords_;
};

using int_matrix = std::vector<std::vector<int>>;

inline constexpr int default_max_rank = 5;

/// Cartan data of an irreducible finite crystallographic root system.
///
/// Cartan convention: cartan[i][j] = <alpha_i^vee, alpha_j>, so the Gram
/// matrix is D * cartan with D = diag(<alpha_i, alpha_i> / 2). Long roots
/// have squared norm 2 unless the system was produced by rescaled().
class root_system {
public:
    static root_system build(char type_label, int rank, int max_rank = default_max_rank) {
        if (rank > max_rank)
            throw error(errc::rank_limit_exceeded,
                        "rank " + std::to_string(rank) + " exceeds configured maximum " + std::to_string(max_rank));
        return root_system(type_label, rank);
    }

    char type_label() const noexcept { return type_; }
    int rank() const noexcept { return rank_; }
    std::string name() const { return std::string(1, type_) + std::to_string(rank_); }
    const int_matrix& cartan() const noexcept { return cartan_; }
    const rational_matrix& gram() const noexcept { return gram_; }
    const std::vector<tvector>& positive_roots() const noexcept { return positive_; }
    /// Positive roots with their (nonnegative integer) simple-root coordinates.
    const std::vector<std::vector<int>>& positive_root_coords() const noexcept { return positive_int_; }
    const std::vector<tvector>& fundamental_weights() const noexcept { return fundamental_; }
    tvector simple_root(int i) const { return tvector::unit(static_cast<std::size_t>(rank_), static_cast<std::size_t>(i)); }

    rational inner(const tvector& x, const tvector& y) const {
        check(x);
        check(y);
        rational s = 0;
        for (int i = 0; i < rank_; ++i) {
            if (x[i] == 0)
                continue;
            for (int j = 0; j < rank_; ++j)
                if (y[j] != 0)
                    s += x[i] * gram_(i, j) * y[j];
        }
        return s;
    }

    /// <x, alpha_i^vee>.
    rational coroot_pairing(const tvector& x, int i) const {
        check(x);
        rational s = 0;
        for (int k = 0; k < rank_; ++k)
            s += cartan_[i][k] * x[k];
        return s;
    }

    /// (r_1, ..., r_l) with x = sum r_j lambda_j; x is in the closed
    /// fundamental chamber iff every r_j >= 0.
    std::vector<rational> chamber_coefficients(const tvector& x) const {
        std::vector<rational> r;
        for (int j = 0; j < rank_; ++j)
            r.push_back(coroot_pairing(x, j));
        return r;
    }

    tvector from_fundamental_coords(const std::vector<rational>& r) const {
        if (r.size() != static_cast<std::size_t>(rank_))
            throw error(errc::dimension_mismatch, "expected " + std::to_string(rank_) + " fundamental-weight coordinates");
        tvector x(static_cast<std::size_t>(rank_));
        for (int j = 0; j < rank_; ++j)
            x += r[j] * fundamental_[j];
        return x;
    }

    tvector reflect_simple(const tvector& x, int i) const {
        tvector y = x;
        y[i] -= coroot_pairing(x, i);
        return y;
    }

    /// s_beta(x) = x - 2<x, beta>/<beta, beta> beta.
    tvector reflect(const tvector& x, const tvector& beta) const {
        return x - (2 * inner(x, beta) / inner(beta, beta)) * beta;
    }

    /// Same Cartan data with every inner product multiplied by c > 0.
    root_system rescaled(const rational& c) const {
        if (c <= 0)
            throw error(errc::invalid_config, "inner product rescaling must be positive");
        root_system r = *this;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                r.gram_(i, j) *= c;
        return r;
    }

    static std::size_t classical_positive_root_count(char type, int l) {
        const auto n = static_cast<std::size_t>(l);
        switch (type) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return l == 6 ? 36 : l == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
        }
        return 0;
    }

private:
    root_system(char type, int rank) : type_(type), rank_(rank) {
        build_cartan();
        build_gram();
        build_roots();
        build_weights();
    }

    void check(const tvector& x) const {
        if (x.size() != static_cast<std::size_t>(rank_))
            throw error(errc::dimension_mismatch,
                        "vector of length " + std::to_string(x.size()) + " in a rank " + std::to_string(rank_) + " system");
    }

    void build_cartan() {
        const int l = rank_;
        auto bad = [&] {
            return error(errc::invalid_rank, std::string("no root system of type ") + type_ + " and rank " + std::to_string(l));
        };
        if (l < 1)
            throw bad();
        switch (type_) {
        case 'A': break;
        case 'B':
        case 'C': if (l < 2) throw bad(); break;
        case 'D': if (l < 3) throw bad(); break;
        case 'E': if (l < 6 || l > 8) throw bad(); break;
        case 'F': if (l != 4) throw bad(); break;
        case 'G': if (l != 2) throw bad(); break;
        default: throw error(errc::invalid_rank, std::string("unknown root system type '") + type_ + "'");
        }
        cartan_.assign(l, std::vector<int>(l, 0));
        for (int i = 0; i < l; ++i)
            cartan_[i][i] = 2;
        auto link = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };
        switch (type_) {
        case 'A':
            for (int i = 0; i + 1 < l; ++i)
                link(i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 1 < l; ++i)
                link(i, i + 1);
            cartan_[l - 1][l - 2] = -2; // alpha_l short
            break;
        case 'C':
            for (int i = 0; i + 1 < l; ++i)
                link(i, i + 1);
            cartan_[l - 2][l - 1] = -2; // alpha_l long
            break;
        case 'D':
            for (int i = 0; i + 2 < l; ++i)
                link(i, i + 1);
            link(l - 3, l - 1);
            break;
        case 'E':
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < l; ++i)
                link(i, i + 1);
            break;
        case 'F':
            link(0, 1);
            link(1, 2);
            link(2, 3);
            cartan_[2][1] = -2; // alpha_3, alpha_4 short
            break;
        case 'G':
            link(0, 1);
            cartan_[0][1] = -3; // alpha_1 short
            break;
        }
    }

    void build_gram() {
        // d_i C_ij = d_j C_ji, propagated along the Dynkin diagram.
        const int l = rank_;
        std::vector<rational> d(l, 0);
        d[0] = 1;
        std::vector<int> stack{0};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < l; ++j)
                if (j != i && cartan_[i][j] != 0 && d[j] == 0) {
                    d[j] = d[i] * cartan_[i][j] / cartan_[j][i];
                    stack.push_back(j);
                }
        }
        rational dmax = *std::max_element(d.begin(), d.end());
        gram_ = rational_matrix(l, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                gram_(i, j) = d[i] / dmax * cartan_[i][j];
    }

    void build_roots() {
        const int l = rank_;
        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> frontier;
        for (int i = 0; i < l; ++i) {
            std::vector<int> e(l, 0);
            e[i] = 1;
            seen.insert(e);
            frontier.push_back(e);
        }
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& r : frontier)
                for (int i = 0; i < l; ++i) {
                    int pairing = 0;
                    for (int k = 0; k < l; ++k)
                        pairing += cartan_[i][k] * r[k];
                    auto s = r;
                    s[i] -= pairing;
                    if (seen.insert(s).second)
                        next.push_back(s);
                }
            frontier = std::move(next);
        }
        for (const auto& r : seen)
            if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; }))
                positive_int_.push_back(r);
        std::sort(positive_int_.begin(), positive_int_.end(), [](const auto& a, const auto& b) {
            int ha = 0, hb = 0;
            for (int c : a)
                ha += c;
            for (int c : b)
                hb += c;
            if (ha != hb)
                return ha < hb;
            return a > b;
        });
        for (const auto& r : positive_int_) {
            tvector v(static_cast<std::size_t>(l));
            for (int k = 0; k < l; ++k)
                v[k] = r[k];
            positive_.push_back(std::move(v));
        }
    }

    void build_weights() {
        // <alpha_j^vee, lambda_i> = delta_ij  <=>  M C^T = I.
        const int l = rank_;
        rational_matrix ct(l, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                ct(i, j) = cartan_[j][i];
        auto m = inverse(ct);
        for (int i = 0; i < l; ++i)
            fundamental_.emplace_back(m.row(i));
    }

    char type_;
    int rank_;
    int_matrix cartan_;
    rational_matrix gram_;
    std::vector<std::vector<int>> positive_int_;
    std::vector<tvector> positive_;
    std::vector<tvector> fundamental_;
};

} // namespace weightvar
