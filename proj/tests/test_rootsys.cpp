#include <gtest/gtest.h>

#include <weightvar/rootsys.hpp>
#include <weightvar/weyl.hpp>

using namespace weightvar;

namespace {

rational q(long n, long d = 1) { return rational(integer(n), integer(d)); }

struct case_t {
    char type;
    int rank;
};

const case_t all_small[] = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'C', 2}, {'C', 3},
                            {'D', 4}, {'G', 2}, {'F', 4}, {'E', 6}, {'A', 5}, {'D', 5}, {'B', 5}};

} // namespace

TEST(RootSystem, A1) {
    auto rs = root_system::build('A', 1);
    ASSERT_EQ(rs.positive_roots().size(), 1u);
    EXPECT_EQ(rs.positive_roots()[0], tvector{q(1)});
    EXPECT_EQ(rs.fundamental_weights()[0], tvector{q(1, 2)});
    EXPECT_EQ(rs.inner(rs.simple_root(0), rs.simple_root(0)), 2);
}

TEST(RootSystem, A2) {
    auto rs = root_system::build('A', 2);
    ASSERT_EQ(rs.positive_roots().size(), 3u);
    std::set<tvector> roots(rs.positive_roots().begin(), rs.positive_roots().end());
    EXPECT_EQ(roots, (std::set<tvector>{{q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}}));
    const auto& l1 = rs.fundamental_weights()[0];
    const auto& l2 = rs.fundamental_weights()[1];
    EXPECT_EQ(l1, (tvector{q(2, 3), q(1, 3)}));
    EXPECT_EQ(rs.inner(l1, l1), q(2, 3));
    EXPECT_EQ(rs.inner(l1, l2), q(1, 3));
    EXPECT_EQ(rs.inner(rs.simple_root(0), rs.simple_root(1)), -1);
    EXPECT_EQ(rs.inner(l1, rs.simple_root(1)), 0);
}

TEST(RootSystem, G2ShortRootNorm) {
    auto rs = root_system::build('G', 2);
    ASSERT_EQ(rs.positive_roots().size(), 6u);
    rational longest = 0, shortest = 100;
    for (const auto& a : rs.positive_roots()) {
        rational n = rs.inner(a, a);
        longest = std::max(longest, n);
        shortest = std::min(shortest, n);
    }
    EXPECT_EQ(longest, 2);
    EXPECT_EQ(shortest, q(2, 3));
}

TEST(RootSystem, ChamberCoefficients) {
    auto rs = root_system::build('A', 2);
    EXPECT_EQ(rs.chamber_coefficients(rs.fundamental_weights()[0]), (std::vector<rational>{1, 0}));
    EXPECT_EQ(rs.chamber_coefficients(rs.simple_root(0)), (std::vector<rational>{2, -1}));
    EXPECT_EQ(rs.chamber_coefficients(tvector(2)), (std::vector<rational>{0, 0}));
    auto x = tvector{q(3, 7), q(-2, 5)};
    EXPECT_EQ(rs.from_fundamental_coords(rs.chamber_coefficients(x)), x);
}

TEST(RootSystem, Invariants) {
    for (auto [type, rank] : all_small) {
        SCOPED_TRACE(std::string(1, type) + std::to_string(rank));
        auto rs = root_system::build(type, rank, 8);
        EXPECT_EQ(rs.positive_roots().size(), root_system::classical_positive_root_count(type, rank));
        for (const auto& c : rs.positive_root_coords())
            for (int x : c)
                EXPECT_GE(x, 0);
        rational longest = 0;
        for (const auto& a : rs.positive_roots())
            longest = std::max(longest, rs.inner(a, a));
        EXPECT_EQ(longest, 2);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                EXPECT_EQ(rs.coroot_pairing(rs.fundamental_weights()[i], j), i == j ? 1 : 0);
                EXPECT_EQ(rs.coroot_pairing(rs.simple_root(j), i), rs.cartan()[i][j]);
                EXPECT_EQ(rs.gram()(i, j), rs.gram()(j, i));
            }
    }
}

TEST(RootSystem, InnerProductIsWeylInvariantAndPositive) {
    for (auto [type, rank] : {case_t{'A', 2}, case_t{'B', 2}, case_t{'G', 2}, case_t{'A', 3}, case_t{'C', 3}}) {
        auto rs = root_system::build(type, rank);
        auto g = weyl_group::generate(rs);
        std::vector<tvector> probes;
        for (int i = 0; i < rank; ++i)
            probes.push_back(rs.simple_root(i) + q(1, 3) * rs.fundamental_weights()[(i + 1) % rank]);
        for (std::size_t w = 0; w < g.size(); ++w)
            for (const auto& x : probes) {
                EXPECT_GT(rs.inner(x, x), 0);
                for (const auto& y : probes)
                    EXPECT_EQ(rs.inner(g.act(static_cast<elem_id>(w), x), g.act(static_cast<elem_id>(w), y)),
                              rs.inner(x, y));
            }
    }
}

TEST(RootSystem, Rescaling) {
    auto rs = root_system::build('B', 2);
    auto big = rs.rescaled(3);
    auto x = tvector{q(1), q(2)}, y = tvector{q(-1, 2), q(5)};
    EXPECT_EQ(big.inner(x, y), 3 * rs.inner(x, y));
    EXPECT_EQ(big.fundamental_weights(), rs.fundamental_weights());
}

TEST(RootSystem, Errors) {
    auto code = [](auto f) {
        try {
            f();
        } catch (const error& e) {
            return e.code();
        }
        return errc::consistency_failure;
    };
    EXPECT_EQ(code([] { root_system::build('G', 3); }), errc::invalid_rank);
    EXPECT_EQ(code([] { root_system::build('E', 5); }), errc::invalid_rank);
    EXPECT_EQ(code([] { root_system::build('D', 2); }), errc::invalid_rank);
    EXPECT_EQ(code([] { root_system::build('A', 0); }), errc::invalid_rank);
    EXPECT_EQ(code([] { root_system::build('E', 8); }), errc::rank_limit_exceeded);
    EXPECT_EQ(code([] { root_system::build('A', 6); }), errc::rank_limit_exceeded);
    EXPECT_NO_THROW(root_system::build('A', 6, 6));
    auto rs = root_system::build('A', 2);
    EXPECT_EQ(code([&] { rs.inner(tvector{q(1)}, tvector{q(1), q(1)}); }), errc::dimension_mismatch);
}
