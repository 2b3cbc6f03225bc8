#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <weightvar/kirwan.hpp>

using namespace weightvar;

namespace {

rational q(long n, long d = 1) { return rational(integer(n), integer(d)); }

const schubert_basis& basis(char t, int r) {
    static std::map<std::pair<char, int>, schubert_basis> cache;
    auto key = std::pair{t, r};
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, schubert_basis(root_system::build(t, r))).first;
    return it->second;
}

orbit_parameter orbit(const schubert_basis& b, std::vector<rational> c) {
    return orbit_parameter::make(b.roots(), b.group(), std::move(c));
}

tvector level(const schubert_basis& b, std::vector<rational> coords) {
    return b.roots().from_fundamental_coords(coords);
}

std::vector<rational> ones(int r) { return std::vector<rational>(static_cast<std::size_t>(r), rational(1)); }

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    return errc::consistency_failure;
}

} // namespace

TEST(Orbit, MomentVertices) {
    const auto& b1 = basis('A', 1);
    auto o1 = orbit(b1, {1});
    const auto& lam1 = b1.roots().fundamental_weights()[0];
    EXPECT_EQ(moment_vertices(o1)[0], -lam1);
    EXPECT_EQ(moment_vertices(o1)[1], lam1);

    const auto& b = basis('A', 2);
    auto o = orbit(b, ones(2));
    EXPECT_EQ(o.images[0], o.lambda);
    std::set<tvector> distinct(o.images.begin(), o.images.end());
    EXPECT_EQ(distinct.size(), 6u);
    for (const auto& p : o.images)
        EXPECT_EQ(b.roots().inner(p, p), b.roots().inner(o.lambda, o.lambda));

    EXPECT_EQ(code_of([&] { orbit(b, {1, 0}); }), errc::invalid_config);
    EXPECT_EQ(code_of([&] { orbit(b, {1}); }), errc::invalid_config);
}

TEST(Orbit, Height) {
    const auto& b = basis('A', 1);
    const auto& rs = b.roots();
    const auto& lam = rs.fundamental_weights()[0];
    EXPECT_EQ(height(rs, lam, -lam), q(-1, 2));
    EXPECT_EQ(height(rs, tvector(1), lam), 0);
    const auto& b2 = basis('B', 2);
    tvector x{q(1, 3), q(2)}, y{q(-1), q(1, 5)}, p{q(3, 2), q(-7)};
    EXPECT_EQ(height(b2.roots(), x + y, p), height(b2.roots(), x, p) + height(b2.roots(), y, p));
}

// Lemma: tau^-1 v <= tau^-1 w implies <tau lambda_j, v lambda> <= <tau lambda_j, w lambda>.
TEST(Orbit, HeightMonotoneAlongTwistedBruhat) {
    for (auto [t, r] : {std::pair{'A', 2}, std::pair{'B', 2}, std::pair{'A', 3}, std::pair{'G', 2}}) {
        const auto& b = basis(t, r);
        const auto& g = b.group();
        const auto& rs = b.roots();
        std::vector<rational> c;
        for (int j = 0; j < r; ++j)
            c.push_back(q(j + 1, 2));
        for (const auto& coeffs : {ones(r), c}) {
            auto o = orbit(b, coeffs);
            std::size_t violations = 0;
            for (std::size_t tau = 0; tau < g.size(); ++tau) {
                const elem_id ti = g.inverse(static_cast<elem_id>(tau));
                for (int j = 0; j < r; ++j) {
                    auto xi = g.act(static_cast<elem_id>(tau), rs.fundamental_weights()[j]);
                    for (std::size_t v = 0; v < g.size(); ++v)
                        for (std::size_t w = 0; w < g.size(); ++w)
                            if (g.bruhat_leq(g.multiply(ti, static_cast<elem_id>(v)), g.multiply(ti, static_cast<elem_id>(w))) &&
                                rs.inner(xi, o.images[v]) > rs.inner(xi, o.images[w]))
                                ++violations;
                }
            }
            EXPECT_EQ(violations, 0u);
        }
    }
}

TEST(Regularity, Examples) {
    const auto& b1 = basis('A', 1);
    auto o1 = orbit(b1, {1});
    EXPECT_TRUE(is_regular(b1, o1, level(b1, {0})).regular);
    EXPECT_FALSE(is_regular(b1, o1, level(b1, {-1})).regular);
    EXPECT_FALSE(is_regular(b1, o1, level(b1, {1})).regular);
    EXPECT_FALSE(is_regular(b1, o1, level(b1, {2})).regular);

    const auto& b = basis('A', 2);
    auto o = orbit(b, ones(2));
    const auto& g = b.group();
    const auto& rs = b.roots();
    for (const auto& alpha : rs.positive_roots()) {
        auto other = g.act(g.reflection(rs, alpha), o.lambda);
        auto mid = q(1, 2) * (o.lambda + other);
        auto rep = is_regular(b, o, mid);
        EXPECT_FALSE(rep.regular) << alpha.str();
        EXPECT_FALSE(rep.diagnostic.empty());
    }
    // the long-root segment passes through the centre
    auto center = is_regular(b, o, tvector(2));
    EXPECT_FALSE(center.regular);
    EXPECT_NE(center.diagnostic.find("segment"), std::string::npos);
    EXPECT_TRUE(is_regular(b, o, level(b, {q(1, 3), q(1, 5)})).regular);
}

TEST(Regularity, RequireRegularRaises) {
    const auto& b = basis('A', 2);
    auto o = orbit(b, ones(2));
    EXPECT_EQ(code_of([&] { require_regular(b, o, tvector(2)); }), errc::mu_not_regular_value);
    EXPECT_EQ(code_of([&] { kernel_generators(b, o, tvector(2)); }), errc::mu_not_regular_value);
    EXPECT_EQ(code_of([&] { quotient_betti(b, o, tvector(2)); }), errc::mu_not_regular_value);
    EXPECT_EQ(code_of([&] { tw_oracle_generators(b, o, tvector(2)); }), errc::mu_not_regular_value);
}

// Rank-3 walls are polygons conv(W_U v lambda), not just segments.
TEST(Regularity, RankThreeWallsIncludePolygons) {
    const auto& b = basis('A', 3);
    auto o = orbit(b, ones(3));
    const auto& g = b.group();
    auto walls = critical_walls(b.roots(), g, o);
    std::size_t polygons = 0;
    for (const auto& w : walls)
        if (w.fixed_points.size() > 2) {
            ++polygons;
            tvector centroid(3);
            for (elem_id v : w.fixed_points)
                centroid += o.images[v];
            centroid *= rational(1, static_cast<long>(w.fixed_points.size()));
            EXPECT_FALSE(is_regular(b, o, centroid).regular);
        }
    EXPECT_GT(polygons, 0u);
}

TEST(Kernel, A1Generators) {
    const auto& b = basis('A', 1);
    auto o = orbit(b, {1});
    auto gens = theorem_generators(b, o, level(b, {0}));
    ASSERT_EQ(gens.specs.size(), 2u);
    const auto s1 = b.group().simple(0);
    EXPECT_EQ(gens.specs[0].tau, b.group().identity());
    EXPECT_EQ(gens.specs[0].v, b.group().identity());
    EXPECT_EQ(gens.specs[1].tau, s1);
    EXPECT_EQ(gens.specs[1].v, s1);
    EXPECT_EQ(gens.classes[0], b.schubert(0));
    EXPECT_EQ(gens.classes[1], weyl_twist(b.group(), b.schubert(0), s1));
    for (const auto& c : gens.classes)
        EXPECT_EQ(c.support().size(), 1u);
    EXPECT_EQ(ideal_graded_dims(b, gens.classes, 1), (std::vector<std::size_t>{0, 2}));
    auto oracle = oracle_generators(b, o, level(b, {0}));
    EXPECT_EQ(oracle.classes, gens.classes);
}

// With an antidominant lambda, tau^-1 v = e gives the lowest vertex along every
// tau lambda_j, so the point classes always qualify; tau^-1 v = w0 gives the
// highest vertex and never qualifies at an interior level.
TEST(Kernel, ExtremeTwistsQualifyAsExpected) {
    for (auto [t, r] : {std::pair{'A', 2}, std::pair{'B', 2}, std::pair{'G', 2}}) {
        const auto& b = basis(t, r);
        const auto& g = b.group();
        auto o = orbit(b, ones(r));
        auto mu = level(b, std::vector<rational>(static_cast<std::size_t>(r), q(1, 7)));
        mu[0] += q(1, 11);
        auto gens = theorem_generators(b, o, mu);
        const auto& rs = b.roots();
        const auto top = g.act(g.longest(), o.lambda);
        for (std::size_t tau = 0; tau < g.size(); ++tau) {
            const auto T = static_cast<elem_id>(tau);
            auto point = b.twisted(T, T);
            EXPECT_EQ(point.support(), std::vector<elem_id>{T});
            EXPECT_NE(std::find(gens.classes.begin(), gens.classes.end(), point), gens.classes.end());
            const auto m = g.act(g.inverse(T), mu);
            for (int j = 0; j < r; ++j) {
                const auto& lam = rs.fundamental_weights()[j];
                EXPECT_LT(rs.inner(lam, o.lambda), rs.inner(lam, m));
                EXPECT_GT(rs.inner(lam, top), rs.inner(lam, m));
            }
        }
    }
}

TEST(Kernel, OneSidednessAndWitnesses) {
    for (auto [t, r] : {std::pair{'A', 2}, std::pair{'B', 2}, std::pair{'A', 3}}) {
        const auto& b = basis(t, r);
        const auto& g = b.group();
        const auto& rs = b.roots();
        auto o = orbit(b, ones(r));
        std::vector<rational> m(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j)
            m[j] = q(1, 3 + 2 * j);
        auto mu = level(b, m);
        auto gens = theorem_generators(b, o, mu);
        for (std::size_t k = 0; k < gens.specs.size(); ++k) {
            const auto& s = gens.specs[k];
            ASSERT_FALSE(s.witnesses.empty());
            EXPECT_EQ(s.half_degree, gens.classes[k].half_degree());
            EXPECT_EQ(gens.classes[k], b.twisted(s.v, s.tau));
            const elem_id ti = g.inverse(s.tau);
            for (int j : s.witnesses) {
                EXPECT_LE(rs.inner(rs.fundamental_weights()[j], g.act(ti, o.images[s.v])),
                          rs.inner(rs.fundamental_weights()[j], g.act(ti, mu)));
                auto xi = g.act(s.tau, rs.fundamental_weights()[j]);
                for (elem_id w : gens.classes[k].support())
                    EXPECT_LE(height(rs, xi, o.images[w]), height(rs, xi, mu));
            }
        }
        // no two emitted classes coincide
        for (std::size_t i = 0; i < gens.classes.size(); ++i)
            for (std::size_t j = i + 1; j < gens.classes.size(); ++j)
                EXPECT_FALSE(gens.classes[i] == gens.classes[j]);
    }
}

TEST(Kernel, DirectionsAreFacetNormals) {
    for (auto [t, r] : {std::pair{'A', 2}, std::pair{'B', 2}, std::pair{'A', 3}}) {
        const auto& b = basis(t, r);
        auto o = orbit(b, ones(r));
        std::vector<rational> m(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j)
            m[j] = q(1, 5 + j);
        auto specs = kernel_generators(b, o, level(b, m));
        std::set<tvector> normals;
        for (const auto& f : facet_normals(b.roots(), b.group()))
            normals.insert(f.normal);
        EXPECT_EQ(generator_directions(b, specs), normals);
    }
}

TEST(Kernel, OracleContainsTheoremGenerators) {
    for (auto [t, r] : {std::pair{'A', 2}, std::pair{'B', 2}}) {
        const auto& b = basis(t, r);
        auto o = orbit(b, {1, 2});
        auto mu = level(b, {q(1, 3), q(1, 5)});
        auto thm = theorem_generators(b, o, mu);
        auto orc = oracle_generators(b, o, mu);
        EXPECT_GE(orc.classes.size(), thm.classes.size());
        for (const auto& c : thm.classes)
            EXPECT_NE(std::find(orc.classes.begin(), orc.classes.end(), c), orc.classes.end());
        for (std::size_t k = 0; k < orc.specs.size(); ++k) {
            const auto& s = orc.specs[k];
            ASSERT_EQ(s.direction.size(), static_cast<std::size_t>(r));
            rational total = 0;
            tvector xi(static_cast<std::size_t>(r));
            for (int j = 0; j < r; ++j) {
                EXPECT_GE(s.direction[j], 0);
                total += s.direction[j];
                xi += s.direction[j] * b.roots().fundamental_weights()[j];
            }
            EXPECT_EQ(total, 1);
            xi = b.group().act(s.tau, xi);
            for (elem_id w : orc.classes[k].support())
                EXPECT_LE(height(b.roots(), xi, o.images[w]), height(b.roots(), xi, mu));
        }
    }
}

TEST(IdealDims, Examples) {
    const auto& b = basis('A', 2);
    EXPECT_EQ(ideal_graded_dims(b, {}, 3), (std::vector<std::size_t>{0, 0, 0, 0}));
    auto full = ideal_graded_dims(b, {b.unit()}, 4);
    for (int d = 0; d <= 4; ++d)
        EXPECT_EQ(full[d], slice_dimension(b, d));
}

TEST(Betti, A1) {
    const auto& b = basis('A', 1);
    auto o = orbit(b, {1});
    for (auto m : {q(0), q(1, 4), q(-1, 4), q(1, 3), q(-7, 9)}) {
        auto dims = quotient_betti(b, o, level(b, {m}));
        EXPECT_EQ(dims.betti, std::vector<std::size_t>{1});
        EXPECT_EQ(dims.poincare, "1");
    }
}

TEST(Betti, A2AndB2) {
    const auto& a2 = basis('A', 2);
    auto da = quotient_betti(a2, orbit(a2, ones(2)), level(a2, {q(1, 3), q(1, 5)}));
    EXPECT_EQ(da.betti, (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(da.poincare, "1 + t^2");
    EXPECT_EQ(da.guard, (std::vector<std::size_t>{0, 0}));

    const auto& b2 = basis('B', 2);
    auto db = quotient_betti(b2, orbit(b2, {1, 2}), level(b2, {q(1, 3), q(1, 5)}));
    ASSERT_EQ(db.betti.size(), 3u);
    EXPECT_EQ(db.betti[0], 1u);
    EXPECT_EQ(db.betti[2], db.betti[0]);
}

TEST(Betti, DmaxLimits) {
    const auto& b = basis('A', 2);
    auto o = orbit(b, ones(2));
    auto mu = level(b, {q(1, 3), q(1, 5)});
    EXPECT_EQ(code_of([&] { quotient_betti(b, o, mu, 4); }), errc::degree_overflow);
    EXPECT_EQ(quotient_betti(b, o, mu, 1).betti, (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(quotient_betti(b, o, mu, 0).betti, (std::vector<std::size_t>{1}));
}

TEST(Betti, ChamberDependenceA3) {
    const auto& b = basis('A', 3);
    auto o = orbit(b, {1, 2, 3});
    auto near_centre = quotient_betti(b, o, level(b, {q(1, 3), q(1, 5), q(1, 7)}));
    EXPECT_EQ(near_centre.betti, (std::vector<std::size_t>{1, 6, 6, 1}));
}

TEST(Chambers, SameChamber) {
    const auto& b = basis('A', 2);
    auto o = orbit(b, ones(2));
    auto m1 = level(b, {q(1, 3), q(1, 5)});
    auto m2 = level(b, {q(1, 3) + q(1, 100), q(1, 5)});
    EXPECT_TRUE(same_chamber(b, o, m1, m2));
    EXPECT_FALSE(same_chamber(b, o, m1, -m1));
}

TEST(Chambers, HalfSpaceKernelMatchesTheorem) {
    for (auto [t, r] : {std::pair{'A', 2}, std::pair{'B', 2}}) {
        const auto& b = basis(t, r);
        auto o = orbit(b, {1, 2});
        auto mu = level(b, {q(1, 3), q(1, 5)});
        auto thm = theorem_generators(b, o, mu);
        EXPECT_EQ(half_space_kernel_dims(b, o, mu, b.top_degree()), ideal_graded_dims(b, thm.classes, b.top_degree()));
    }
}

TEST(Scaling, GeneratorsInvariantUnderInnerProductRescaling) {
    const auto& b = basis('B', 2);
    auto o = orbit(b, {1, 2});
    auto mu = level(b, {q(1, 3), q(1, 5)});
    auto base = kernel_generators(b, o, mu);
    for (auto c : {q(3), q(1, 7)}) {
        schubert_basis scaled(b.roots().rescaled(c));
        auto so = orbit(scaled, {1, 2});
        auto specs = kernel_generators(scaled, so, scaled.roots().from_fundamental_coords({q(1, 3), q(1, 5)}));
        ASSERT_EQ(specs.size(), base.size());
        for (std::size_t k = 0; k < specs.size(); ++k) {
            EXPECT_EQ(specs[k].tau, base[k].tau);
            EXPECT_EQ(specs[k].v, base[k].v);
            EXPECT_EQ(specs[k].witnesses, base[k].witnesses);
        }
    }
    // lambda and mu scaled together
    auto so = orbit(b, {5, 10});
    auto specs = kernel_generators(b, so, level(b, {q(5, 3), q(1)}));
    ASSERT_EQ(specs.size(), base.size());
    for (std::size_t k = 0; k < specs.size(); ++k)
        EXPECT_EQ(std::pair(specs[k].tau, specs[k].v), std::pair(base[k].tau, base[k].v));
}

TEST(Determinism, ThreadCountDoesNotChangeResults) {
    const auto& b = basis('A', 3);
    auto o = orbit(b, {1, 2, 3});
    auto mu = level(b, {q(1, 3), q(1, 5), q(1, 7)});
    auto one = theorem_generators(b, o, mu, 1);
    for (int threads : {2, 8}) {
        auto many = theorem_generators(b, o, mu, threads);
        ASSERT_EQ(many.specs.size(), one.specs.size());
        for (std::size_t k = 0; k < one.specs.size(); ++k)
            EXPECT_EQ(std::pair(many.specs[k].tau, many.specs[k].v), std::pair(one.specs[k].tau, one.specs[k].v));
        EXPECT_EQ(many.classes, one.classes);
    }
}

TEST(Poincare, Rendering) {
    EXPECT_EQ(poincare_string({1}), "1");
    EXPECT_EQ(poincare_string({1, 4, 1}), "1 + 4t^2 + t^4");
    EXPECT_EQ(poincare_string({1, 0, 2}), "1 + 2t^4");
}
