#include <doctest.h>

#include "partition.hpp"
#include "test_util.hpp"

using namespace schurid;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}

TEST_CASE("make_partition canonicalizes") {
    CHECK(P({2, 1, 1, 0, 0}) == P({2, 1, 1}));
    CHECK(P({8, 7, 4, 4, 4, 2, 2}).parts() == std::vector<int>{8, 7, 4, 4, 4, 2, 2});
    CHECK(P({}).empty());
    CHECK_THROWS_AS(P({1, 2}), schur_error);
    CHECK_THROWS_AS(P({2, 0, 1}), schur_error);
    CHECK_THROWS_AS(P({2, -1}), schur_error);
}

TEST_CASE("weight and height") {
    CHECK(P({4, 2, 1}).weight() == 7);
    CHECK(P({4, 2, 1}).height() == 3);
    CHECK(P({}).weight() == 0);
}

TEST_CASE("conjugate examples") {
    CHECK(conjugate(P({2, 1, 1})) == P({3, 1}));
    CHECK(conjugate(P({})) == P({}));
    CHECK(conjugate(P({3, 3})) == P({2, 2, 2}));
}

TEST_CASE("to_mu / from_mu examples") {
    CHECK(to_mu(P({2, 1, 1}), 3).entries == std::vector<int>{2, 0, -1});
    CHECK(to_mu(P({2, 1, 1}), 5).entries == std::vector<int>{2, 0, -1, -3, -4});
    CHECK(to_mu(P({}), 2).entries == std::vector<int>{0, -1});
    CHECK_THROWS_AS(to_mu(P({2, 1, 1}), 2), schur_error);

    CHECK(from_mu(MuVector{{2, 0, -1}}) == P({2, 1, 1}));
    CHECK(from_mu(MuVector{{5, 4, 3}}) == P({5, 5, 5}));
    CHECK_THROWS_AS(from_mu(MuVector{{2, 2, 0}}), schur_error);
    CHECK_THROWS_AS(from_mu(MuVector{{0, -2}}), schur_error); // lambda_2 = -1
}

TEST_CASE("distinct_parts examples") {
    using Runs = std::vector<std::pair<int, int>>;
    CHECK(distinct_parts(P({6, 5, 2, 2, 1})) == Runs{{6, 1}, {5, 1}, {2, 2}, {1, 1}});
    CHECK(distinct_parts(P({3, 3})) == Runs{{3, 2}});
    CHECK(distinct_parts(P({})).empty());
}

TEST_CASE("inner_corners examples") {
    auto xy = [](const Partition& p) {
        std::vector<std::pair<int, int>> out;
        for (const auto& c : inner_corners(p)) out.emplace_back(c.x, c.y);
        return out;
    };
    using XY = std::vector<std::pair<int, int>>;
    CHECK(xy(P({6, 5, 2, 2, 1})) == XY{{6, 0}, {5, 1}, {2, 2}, {1, 4}, {0, 5}});
    CHECK(xy(P({3, 3})) == XY{{3, 0}, {0, 2}});
    CHECK(xy(P({})) == XY{{0, 0}});
}

TEST_CASE("conjugation is an involution and preserves weight") {
    for (const auto& p : testutil::all_partitions_up_to(12)) {
        CHECK(conjugate(conjugate(p)) == p);
        CHECK(conjugate(p).weight() == p.weight());
        if (!p.empty()) {
            CHECK(static_cast<int>(conjugate(p).height()) == p.parts()[0]);
        }
    }
}

TEST_CASE("mu round trip over a range of N") {
    for (const auto& p : testutil::all_partitions_up_to(10)) {
        const int h = static_cast<int>(p.height());
        for (int n = std::max(h, 1); n <= h + 3; ++n) {
            CHECK(from_mu(to_mu(p, n)) == p);
        }
    }
}

TEST_CASE("corner list determines the diagram") {
    for (const auto& p : testutil::all_partitions_up_to(12)) {
        if (p.empty()) continue;
        CHECK(partition_from_corners(inner_corners(p)) == p);
    }
}
