#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "fourier_motzkin.hpp"
#include "graded.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "rootsys.hpp"
#include "schubert.hpp"
#include "weyl.hpp"

namespace weightvar {

/// A generic orbit O_lambda. The user supplies positive coefficients c_j;
/// the orbit point is stored antidominant, lambda = -sum_j c_j lambda_j,
/// so that heights <xi, v lambda> increase along Bruhat order for xi in
/// the closed fundamental chamber.
struct orbit_parameter {
    std::vector<rational> coeffs;
    tvector lambda;
    std::vector<tvector> images; // images[v] = v lambda, the moment image of fixed point v

    static orbit_parameter make(const root_system& rs, const weyl_group& g, std::vector<rational> coeffs) {
        if (coeffs.size() != static_cast<std::size_t>(rs.rank()))
            throw error(errc::invalid_config, "expected " + std::to_string(rs.rank()) + " orbit coefficients, got " +
                                                  std::to_string(coeffs.size()));
        for (const auto& c : coeffs)
            if (c <= 0)
                throw error(errc::invalid_config, "orbit coefficients must be positive (generic orbit)");
        orbit_parameter o;
        o.coeffs = std::move(coeffs);
        o.lambda = -rs.from_fundamental_coords(o.coeffs);
        for (std::size_t v = 0; v < g.size(); ++v)
            o.images.push_back(g.act(static_cast<elem_id>(v), o.lambda));
        return o;
    }
};

inline const std::vector<tvector>& moment_vertices(const orbit_parameter& orbit) { return orbit.images; }

/// The height function f_xi(p) = <xi, p>.
inline rational height(const root_system& rs, const tvector& xi, const tvector& p) { return rs.inner(xi, p); }

/// Distinct vectors w lambda_j: the outward facet normals of the moment polytope.
struct facet_normal {
    tvector normal;
    elem_id w;
    int j;
};

inline std::vector<facet_normal> facet_normals(const root_system& rs, const weyl_group& g) {
    std::vector<facet_normal> out;
    std::set<tvector> seen;
    for (std::size_t w = 0; w < g.size(); ++w)
        for (int j = 0; j < rs.rank(); ++j) {
            auto n = g.act(static_cast<elem_id>(w), rs.fundamental_weights()[j]);
            if (seen.insert(n).second)
                out.push_back({std::move(n), static_cast<elem_id>(w), j});
        }
    return out;
}

/// Image under the moment map of a fixed component of a codimension-one
/// subtorus: the convex hull of W_U v lambda, where W_U is generated by the
/// reflections in the roots lying in a hyperplane U spanned by roots. At
/// rank 2 these are the segments [v lambda, s_alpha v lambda]; at rank 1
/// the single vertices.
struct critical_wall {
    tvector plane_normal;              // spans U^perp
    rational offset;                   // <plane_normal, x> = offset on the wall
    std::vector<elem_id> fixed_points; // the coset W_U v
    std::vector<tvector> in_plane_normals; // facet normals of the wall inside U
};

namespace detail {

inline tvector primitive(tvector v) {
    integer l = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            l = boost::multiprecision::lcm(l, denominator(v[i]));
    v *= rational(l);
    integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            g = boost::multiprecision::gcd(g, numerator(v[i]));
    if (g != 0)
        v *= rational(1, g);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            if (v[i] < 0)
                v *= rational(-1);
            break;
        }
    return v;
}

struct root_hyperplane {
    tvector normal;
    std::vector<tvector> roots; // positive roots in U
};

inline std::vector<root_hyperplane> root_hyperplanes(const root_system& rs) {
    const int l = rs.rank();
    const auto& pos = rs.positive_roots();
    std::map<tvector, root_hyperplane> planes;
    std::vector<std::size_t> pick;
    auto consider = [&] {
        rational_matrix m(pick.size(), static_cast<std::size_t>(l));
        for (std::size_t r = 0; r < pick.size(); ++r)
            for (int c = 0; c < l; ++c) {
                rational s = 0;
                for (int k = 0; k < l; ++k)
                    s += pos[pick[r]][k] * rs.gram()(k, c);
                m(r, c) = s;
            }
        auto ns = nullspace(m);
        if (ns.size() != 1)
            return;
        auto n = primitive(tvector(ns[0]));
        if (planes.count(n))
            return;
        root_hyperplane h{n, {}};
        for (const auto& beta : pos)
            if (rs.inner(n, beta) == 0)
                h.roots.push_back(beta);
        planes.emplace(n, std::move(h));
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (pick.size() == static_cast<std::size_t>(l - 1)) {
            consider();
            return;
        }
        for (std::size_t i = start; i < pos.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    std::vector<root_hyperplane> out;
    for (auto& [k, h] : planes)
        out.push_back(std::move(h));
    return out;
}

} // namespace detail

inline std::vector<critical_wall> critical_walls(const root_system& rs, const weyl_group& g,
                                                 const orbit_parameter& orbit) {
    std::vector<critical_wall> walls;
    for (const auto& plane : detail::root_hyperplanes(rs)) {
        // W_U as a subset of W, closed under the reflections in U.
        std::vector<elem_id> gens;
        for (const auto& beta : plane.roots)
            gens.push_back(g.reflection(rs, beta));
        std::vector<char> in_sub(g.size(), 0);
        std::vector<elem_id> sub{g.identity()};
        in_sub[g.identity()] = 1;
        for (std::size_t i = 0; i < sub.size(); ++i)
            for (elem_id s : gens) {
                elem_id x = g.multiply(s, sub[i]);
                if (!in_sub[x]) {
                    in_sub[x] = 1;
                    sub.push_back(x);
                }
            }
        std::sort(sub.begin(), sub.end());

        // Simple roots of the subsystem and its fundamental coweights in U.
        std::vector<tvector> simple;
        for (const auto& beta : plane.roots) {
            bool decomposable = false;
            for (const auto& a : plane.roots)
                for (const auto& b : plane.roots)
                    if (a + b == beta)
                        decomposable = true;
            if (!decomposable)
                simple.push_back(beta);
        }
        std::vector<tvector> normals;
        if (!simple.empty()) {
            const std::size_t k = simple.size();
            rational_matrix a(k, k); // a(m, i) = <beta_m, beta_i^vee>
            for (std::size_t m = 0; m < k; ++m)
                for (std::size_t i = 0; i < k; ++i)
                    a(m, i) = 2 * rs.inner(simple[m], simple[i]) / rs.inner(simple[i], simple[i]);
            auto c = inverse(a);
            std::set<tvector> seen;
            for (std::size_t i = 0; i < k; ++i) {
                tvector omega(static_cast<std::size_t>(rs.rank()));
                for (std::size_t m = 0; m < k; ++m)
                    omega += c(i, m) * simple[m];
                for (elem_id u : sub) {
                    auto n = g.act(u, omega);
                    if (seen.insert(n).second)
                        normals.push_back(std::move(n));
                }
            }
        }

        std::vector<char> covered(g.size(), 0);
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (covered[v])
                continue;
            critical_wall wall{plane.normal, rs.inner(plane.normal, orbit.images[v]), {}, normals};
            for (elem_id u : sub) {
                elem_id x = g.multiply(u, static_cast<elem_id>(v));
                covered[x] = 1;
                wall.fixed_points.push_back(x);
            }
            std::sort(wall.fixed_points.begin(), wall.fixed_points.end());
            walls.push_back(std::move(wall));
        }
    }
    return walls;
}

/// Whether a point of the wall's affine plane lies in the wall (closed).
inline bool wall_contains(const root_system& rs, const orbit_parameter& orbit, const critical_wall& wall,
                          const tvector& p) {
    if (rs.inner(wall.plane_normal, p) != wall.offset)
        return false;
    if (wall.in_plane_normals.empty())
        return p == orbit.images[wall.fixed_points.front()];
    for (const auto& n : wall.in_plane_normals) {
        std::optional<rational> best;
        for (elem_id v : wall.fixed_points) {
            rational h = rs.inner(n, orbit.images[v]);
            if (!best || h > *best)
                best = h;
        }
        if (rs.inner(n, p) > *best)
            return false;
    }
    return true;
}

struct regularity_report {
    bool regular = true;
    std::string diagnostic;
};

namespace detail {

inline std::string describe_points(const schubert_basis& b, const orbit_parameter& orbit,
                                   const std::vector<elem_id>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i)
            s += ", ";
        s += b.word_label(pts[i]) + " -> " + orbit.images[pts[i]].str();
    }
    return s;
}

} // namespace detail

/// Regular value test: mu must be interior to conv(W lambda) and lie on no
/// critical wall. Coordinates are simple-root coordinates.
inline regularity_report is_regular(const schubert_basis& b, const orbit_parameter& orbit, const tvector& mu) {
    const auto& rs = b.roots();
    const auto& g = b.group();
    if (mu.size() != static_cast<std::size_t>(rs.rank()))
        throw error(errc::dimension_mismatch, "mu has the wrong dimension");
    for (const auto& f : facet_normals(rs, g)) {
        std::optional<rational> best;
        for (const auto& p : orbit.images) {
            rational h = rs.inner(f.normal, p);
            if (!best || h > *best)
                best = h;
        }
        if (rs.inner(f.normal, mu) >= *best)
            return {false, "mu is not interior to the moment polytope: facet with normal " + b.word_label(f.w) +
                               "(lambda_" + std::to_string(f.j + 1) + ") = " + f.normal.str()};
    }
    for (const auto& wall : critical_walls(rs, g, orbit))
        if (wall_contains(rs, orbit, wall, mu)) {
            const char* kind = wall.fixed_points.size() == 2 ? "segment" : "critical wall";
            return {false, std::string("mu lies on the ") + kind + " through fixed points [" +
                               detail::describe_points(b, orbit, wall.fixed_points) + "]"};
        }
    return {};
}

/// is_regular plus the no-tie condition <lambda_j, tau^-1 v lambda> != <lambda_j, tau^-1 mu>.
inline void require_regular(const schubert_basis& b, const orbit_parameter& orbit, const tvector& mu) {
    auto report = is_regular(b, orbit, mu);
    if (!report.regular)
        throw error(errc::mu_not_regular_value, report.diagnostic);
    const auto& rs = b.roots();
    for (const auto& f : facet_normals(rs, b.group())) {
        rational hm = rs.inner(f.normal, mu);
        for (std::size_t v = 0; v < orbit.images.size(); ++v)
            if (rs.inner(f.normal, orbit.images[v]) == hm)
                throw error(errc::mu_not_regular_value,
                            "wall coincidence: mu and fixed point " + b.word_label(static_cast<elem_id>(v)) +
                                " have equal height along " + b.word_label(f.w) + "(lambda_" +
                                std::to_string(f.j + 1) + ")");
    }
}

/// A generator x_v^tau of the Kirwan kernel. `witnesses` are the j (0-based)
/// with <lambda_j, tau^-1 v lambda> <= <lambda_j, tau^-1 mu>; `direction`
/// holds the chamber coefficients r of the separating xi = tau sum r_j lambda_j
/// when produced by the feasibility oracle.
struct kernel_generator_spec {
    elem_id tau = 0;
    elem_id v = 0;
    std::vector<int> witnesses;
    std::vector<rational> direction;
    int half_degree = 0;
};

struct generator_set {
    std::vector<kernel_generator_spec> specs;
    std::vector<equivariant_class> classes;
};

namespace detail {

inline std::string class_key(const equivariant_class& c) {
    std::string key = std::to_string(c.half_degree()) + "|";
    for (const auto& p : c.restrictions())
        key += p.str() + ";";
    return key;
}

// Heights <lambda_j, u lambda> and <lambda_j, tau^-1 mu>.
struct height_tables {
    std::vector<std::vector<rational>> vertex; // [u][j]
    std::vector<std::vector<rational>> level;  // [tau][j]
};

inline height_tables heights(const schubert_basis& b, const orbit_parameter& orbit, const tvector& mu) {
    const auto& rs = b.roots();
    const auto& g = b.group();
    height_tables t;
    for (std::size_t u = 0; u < g.size(); ++u) {
        std::vector<rational> row;
        tvector m = g.act(g.inverse(static_cast<elem_id>(u)), mu);
        std::vector<rational> lev;
        for (int j = 0; j < rs.rank(); ++j) {
            row.push_back(rs.inner(rs.fundamental_weights()[j], orbit.images[u]));
            lev.push_back(rs.inner(rs.fundamental_weights()[j], m));
        }
        t.vertex.push_back(std::move(row));
        t.level.push_back(std::move(lev));
    }
    return t;
}

inline generator_set deduplicate(const schubert_basis& b, std::vector<kernel_generator_spec> candidates, int threads) {
    std::vector<equivariant_class> classes(candidates.size());
    parallel_for(candidates.size(), threads,
                 [&](std::size_t i) { classes[i] = b.twisted(candidates[i].v, candidates[i].tau); });
    generator_set out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!seen.insert(class_key(classes[i])).second)
            continue;
        candidates[i].half_degree = classes[i].half_degree();
        out.specs.push_back(std::move(candidates[i]));
        out.classes.push_back(std::move(classes[i]));
    }
    return out;
}

} // namespace detail

/// All x_v^tau with some j such that <lambda_j, tau^-1 v lambda> <= <lambda_j, tau^-1 mu>,
/// deduplicated by class, in (tau, v) order.
inline generator_set theorem_generators(const schubert_basis& b, const orbit_parameter& orbit, const tvector& mu,
                                        int threads = 1) {
    require_regular(b, orbit, mu);
    const auto& g = b.group();
    auto h = detail::heights(b, orbit, mu);
    std::vector<kernel_generator_spec> candidates;
    for (std::size_t tau = 0; tau < g.size(); ++tau) {
        const elem_id tau_inv = g.inverse(static_cast<elem_id>(tau));
        for (std::size_t v = 0; v < g.size(); ++v) {
            const elem_id u = g.multiply(tau_inv, static_cast<elem_id>(v));
            kernel_generator_spec spec{static_cast<elem_id>(tau), static_cast<elem_id>(v), {}, {}, 0};
            for (int j = 0; j < b.rank(); ++j)
                if (h.vertex[u][j] <= h.level[tau][j])
                    spec.witnesses.push_back(j);
            if (!spec.witnesses.empty())
                candidates.push_back(std::move(spec));
        }
    }
    return detail::deduplicate(b, std::move(candidates), threads);
}

inline std::vector<kernel_generator_spec> kernel_generators(const schubert_basis& b, const orbit_parameter& orbit,
                                                            const tvector& mu, int threads = 1) {
    return theorem_generators(b, orbit, mu, threads).specs;
}

/// Feasibility oracle: x_v^tau qualifies when some xi = tau sum_j r_j lambda_j,
/// r >= 0, sum r = 1, puts every point of its support weakly below mu. Each
/// support is read off the class itself and each system solved exactly.
inline generator_set oracle_generators(const schubert_basis& b, const orbit_parameter& orbit, const tvector& mu,
                                       int threads = 1) {
    require_regular(b, orbit, mu);
    const auto& g = b.group();
    const int l = b.rank();
    const std::size_t n = g.size();
    auto h = detail::heights(b, orbit, mu);
    std::vector<std::optional<kernel_generator_spec>> found(n * n);
    parallel_for(n * n, threads, [&](std::size_t idx) {
        const auto tau = static_cast<elem_id>(idx / n);
        const auto v = static_cast<elem_id>(idx % n);
        const elem_id tau_inv = g.inverse(tau);
        auto support = b.twisted(v, tau).support();
        // Unknowns r_0..r_(l-2); r_(l-1) = 1 - sum of the others.
        const std::size_t vars = static_cast<std::size_t>(l - 1);
        std::vector<linear_constraint> system;
        std::vector<std::vector<rational>> offsets; // per support point, h_j(w) - level_j
        for (elem_id w : support) {
            const elem_id u = g.multiply(tau_inv, w);
            std::vector<rational> d;
            for (int j = 0; j < l; ++j)
                d.push_back(h.vertex[u][j] - h.level[tau][j]);
            linear_constraint c{std::vector<rational>(vars), -d[l - 1]};
            for (std::size_t j = 0; j < vars; ++j)
                c.coeffs[j] = d[j] - d[l - 1];
            system.push_back(std::move(c));
            offsets.push_back(std::move(d));
        }
        for (std::size_t j = 0; j < vars; ++j) {
            linear_constraint nonneg{std::vector<rational>(vars), 0};
            nonneg.coeffs[j] = -1;
            system.push_back(std::move(nonneg));
        }
        system.push_back({std::vector<rational>(vars, rational(1)), 1});
        auto point = fourier_motzkin(std::move(system), vars);
        if (!point)
            return;
        kernel_generator_spec spec{tau, v, {}, *point, 0};
        rational last = 1;
        for (const auto& r : *point)
            last -= r;
        spec.direction.push_back(last);
        for (int j = 0; j < l; ++j) {
            bool ok = true;
            for (const auto& d : offsets)
                ok = ok && d[j] <= 0;
            if (ok)
                spec.witnesses.push_back(j);
        }
        found[idx] = std::move(spec);
    });
    std::vector<kernel_generator_spec> candidates;
    for (auto& f : found)
        if (f)
            candidates.push_back(std::move(*f));
    return detail::deduplicate(b, std::move(candidates), threads);
}

inline std::vector<kernel_generator_spec> tw_oracle_generators(const schubert_basis& b, const orbit_parameter& orbit,
                                                               const tvector& mu, int threads = 1) {
    return oracle_generators(b, orbit, mu, threads).specs;
}

/// Distinct directions tau lambda_j named by the witnesses of a generator list.
inline std::set<tvector> generator_directions(const schubert_basis& b, const std::vector<kernel_generator_spec>& specs) {
    std::set<tvector> dirs;
    for (const auto& s : specs)
        for (int j : s.witnesses)
            dirs.insert(b.group().act(s.tau, b.roots().fundamental_weights()[j]));
    return dirs;
}

struct graded_dims {
    std::vector<std::size_t> betti;       // b_0, b_2, ..., b_2D (truncated at dmax)
    std::vector<std::size_t> guard;       // b_2d for D < d <= dmax; all zero
    std::vector<std::size_t> slice_dims;  // dim H_T^{2d}(K/T) for d = 0..dmax
    std::vector<std::size_t> ideal_dims;  // dim of the kernel in each degree
    std::string poincare;
};

/// 1 + 2t^2 + t^4 style rendering of sum_d b_2d t^{2d}.
inline std::string poincare_string(const std::vector<std::size_t>& betti) {
    std::string s;
    for (std::size_t d = 0; d < betti.size(); ++d) {
        if (betti[d] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (d == 0) {
            s += std::to_string(betti[d]);
            continue;
        }
        if (betti[d] != 1)
            s += std::to_string(betti[d]);
        s += "t^" + std::to_string(2 * d);
    }
    return s.empty() ? "0" : s;
}

/// Real dimension of the reduction divided by two: l(w0) - rank.
inline int quotient_half_dimension(const schubert_basis& b) { return b.top_degree() - b.rank(); }

inline int default_dmax(const schubert_basis& b) {
    return std::min(quotient_half_dimension(b) + 2, b.top_degree());
}

inline graded_dims graded_quotient(const schubert_basis& b, const std::vector<equivariant_class>& generators,
                                   int dmax) {
    graded_dims out;
    out.ideal_dims = ideal_graded_dims(b, generators, dmax);
    const int top = quotient_half_dimension(b);
    for (int d = 0; d <= dmax; ++d) {
        const std::size_t slice = slice_dimension(b, d);
        out.slice_dims.push_back(slice);
        if (out.ideal_dims[d] > slice)
            throw error(errc::consistency_failure, "ideal slice larger than the full slice");
        const std::size_t quotient = slice - out.ideal_dims[d];
        if (d <= top)
            out.betti.push_back(quotient);
        else
            out.guard.push_back(quotient);
    }
    for (std::size_t d = 0; d < out.guard.size(); ++d)
        if (out.guard[d] != 0)
            throw error(errc::consistency_failure,
                        "quotient is nonzero in half degree " + std::to_string(top + 1 + static_cast<int>(d)) +
                            " beyond its dimension");
    out.poincare = poincare_string(out.betti);
    return out;
}

/// Graded Betti numbers of the weight variety O_lambda // T(mu).
inline graded_dims quotient_betti(const schubert_basis& b, const orbit_parameter& orbit, const tvector& mu,
                                  std::optional<int> dmax = std::nullopt, int threads = 1) {
    const int top = b.top_degree();
    if (dmax && (*dmax > top || *dmax < 0))
        throw error(errc::degree_overflow,
                    "dmax " + std::to_string(*dmax) + " outside 0.." + std::to_string(top));
    auto gens = theorem_generators(b, orbit, mu, threads);
    return graded_quotient(b, gens.classes, dmax.value_or(default_dmax(b)));
}

namespace detail {

// Exact angular comparison of nonzero plane vectors.
inline bool angle_less(const tvector& a, const tvector& b) {
    auto half = [](const tvector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb)
        return ha < hb;
    return a[0] * b[1] - a[1] * b[0] > 0;
}

} // namespace detail

/// Directions xi != 0 representing every face of the central arrangement
/// {xi : <xi, v lambda - mu> = 0} (rank <= 2 only).
inline std::vector<tvector> separating_directions(const schubert_basis& b, const orbit_parameter& orbit,
                                                  const tvector& mu) {
    const auto& rs = b.roots();
    if (rs.rank() == 1)
        return {tvector{rational(1)}, tvector{rational(-1)}};
    if (rs.rank() != 2)
        throw error(errc::rank_limit_exceeded, "half-space enumeration is implemented for rank <= 2");
    std::set<tvector> rays;
    for (const auto& p : orbit.images) {
        tvector d = p - mu;
        // covector G d; xi orthogonal to it in coordinates
        rational c0 = rs.gram()(0, 0) * d[0] + rs.gram()(0, 1) * d[1];
        rational c1 = rs.gram()(1, 0) * d[0] + rs.gram()(1, 1) * d[1];
        tvector r{-c1, c0};
        if (r.is_zero())
            continue;
        r = detail::primitive(r);
        rays.insert(r);
        rays.insert(-r);
    }
    std::vector<tvector> sorted(rays.begin(), rays.end());
    std::sort(sorted.begin(), sorted.end(), detail::angle_less);
    std::vector<tvector> out = sorted;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        tvector mid = sorted[i] + sorted[(i + 1) % sorted.size()];
        if (mid.is_zero())
            mid = tvector{-sorted[i][1], sorted[i][0]};
        out.push_back(mid);
    }
    return out;
}

/// dims of sum_xi K_xi, K_xi = {c : c|_v = 0 whenever <xi, v lambda> > <xi, mu>},
/// over every direction xi, for d = 0..dmax. Independent of the Schubert
/// generator description; rank <= 2.
inline std::vector<std::size_t> half_space_kernel_dims(const schubert_basis& b, const orbit_parameter& orbit,
                                                       const tvector& mu, int dmax) {
    require_regular(b, orbit, mu);
    const auto& rs = b.roots();
    std::set<std::vector<char>> patterns;
    for (const auto& xi : separating_directions(b, orbit, mu)) {
        std::vector<char> allowed(b.points());
        const rational level = rs.inner(xi, mu);
        for (std::size_t v = 0; v < b.points(); ++v)
            allowed[v] = rs.inner(xi, orbit.images[v]) <= level;
        patterns.insert(std::move(allowed));
    }
    std::vector<std::size_t> dims;
    graded_layout layout(b.rank(), b.points());
    for (int d = 0; d <= dmax; ++d) {
        row_space<integer> space(layout.width(d));
        for (const auto& allowed : patterns)
            for (auto& row : vanishing_subspace(b, d, allowed))
                space.insert(std::move(row));
        dims.push_back(space.rank());
    }
    return dims;
}

/// Whether the straight path between two regular values meets no critical
/// wall. False when a wall plane contains the whole path (not decided).
inline bool same_chamber(const schubert_basis& b, const orbit_parameter& orbit, const tvector& mu1,
                         const tvector& mu2) {
    const auto& rs = b.roots();
    const tvector step = mu2 - mu1;
    for (const auto& wall : critical_walls(rs, b.group(), orbit)) {
        rational f0 = rs.inner(wall.plane_normal, mu1) - wall.offset;
        rational f1 = rs.inner(wall.plane_normal, mu2) - wall.offset;
        if (f0 == 0 && f1 == 0)
            return false;
        if ((f0 > 0 && f1 > 0) || (f0 < 0 && f1 < 0))
            continue;
        rational t = f0 / (f0 - f1);
        if (wall_contains(rs, orbit, wall, mu1 + t * step))
            return false;
    }
    return true;
}

} // namespace weightvar
