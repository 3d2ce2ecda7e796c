#include <doctest.h>

#include <random>

#include "identity_gen.hpp"
#include "plucker.hpp"
#include "test_util.hpp"

using namespace schurid;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<std::vector<Rational>> mat(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
    return out;
}

} // namespace

TEST_CASE("plucker_expand on identity matrices") {
    auto id2 = mat({{1, 0}, {0, 1}});
    auto ex = plucker_expand(id2, id2, ExchangeData{{1}});
    CHECK(ex.holds);
    CHECK(ex.lhs == 1);
    Rational sum = 0;
    for (const auto& t : ex.terms) sum += t.det_a * t.det_b;
    CHECK(sum == 1);
}

TEST_CASE("exchanging every row swaps the determinants") {
    auto a = mat({{1, 2}, {3, 5}});
    auto b = mat({{2, 7}, {1, 4}});
    auto ex = plucker_expand(a, b, ExchangeData{{1, 2}});
    CHECK(ex.holds);
    REQUIRE(ex.terms.size() == 1);
    CHECK(ex.terms[0].det_a * ex.terms[0].det_b == ex.lhs);
}

TEST_CASE("plucker_expand on random 3x3 pairs") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<Rational>> a(3, std::vector<Rational>(3));
        std::vector<std::vector<Rational>> b(3, std::vector<Rational>(3));
        for (auto* m : {&a, &b}) {
            for (auto& row : *m) {
                for (auto& x : row) x = static_cast<int>(gen() % 19) - 9;
            }
        }
        CHECK(plucker_expand(a, b, ExchangeData{{2}}).holds);
        CHECK(plucker_expand(a, b, ExchangeData{{1, 3}}).holds);
    }
}

TEST_CASE("plucker_expand input validation") {
    auto id2 = mat({{1, 0}, {0, 1}});
    auto id3 = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(plucker_expand(id2, id3, ExchangeData{{1}}), schur_error);
    CHECK_THROWS_AS(plucker_expand(mat({{1, 0}}), mat({{1, 0}}), ExchangeData{{1}}),
                    schur_error);
    CHECK_THROWS_AS(plucker_expand(id2, id2, ExchangeData{{2, 1}}), schur_error);
    CHECK_THROWS_AS(plucker_expand(id2, id2, ExchangeData{{0}}), schur_error);
    CHECK_THROWS_AS(plucker_expand(id2, id2, ExchangeData{{3}}), schur_error);
    CHECK_THROWS_AS(plucker_expand(id2, id2, ExchangeData{{}}), schur_error);
}

TEST_CASE("derive_main_identity examples") {
    CHECK(derive_main_identity(P({2, 1, 1}), {{2, 1, 1}}, 4) ==
          main_identity(P({2, 1, 1}), {{2, 1, 1}}));
    CHECK(derive_main_identity(P({4, 2, 1}), {{2, 2, 1}}, 4) ==
          main_identity(P({4, 2, 1}), {{2, 2, 1}}));

    Identity d = derive_main_identity(P({3, 2, 1}), {{2, 1, 1}, {3, 1, 1}}, 4);
    CHECK(d.rhs().size() == 3);
    CHECK(d == main_identity(P({3, 2, 1}), {{2, 1, 1}, {3, 1, 1}}));

    CHECK_THROWS_AS(derive_main_identity(P({2, 1, 1}), {{2, 1, 1}}, 3), schur_error);
    CHECK_THROWS_AS(derive_main_identity(P({2, 1}), {{1, 1, 1}}, 4), schur_error);
}

TEST_CASE("derivation matches the direct construction exhaustively") {
    for (const auto& p : testutil::all_partitions_up_to(8)) {
        const int n = static_cast<int>(p.height());
        for (const auto& specs : enumerate_specs(p, 3)) {
            Identity direct = main_identity(p, specs);
            for (int big_n = n + 1; big_n <= n + 3; ++big_n) {
                Identity derived = derive_main_identity(p, specs, big_n);
                CHECK(derived == direct);
                CHECK(derived.rhs().size() == specs.size() + 1);
                for (const auto& t : derived.rhs()) CHECK(t.coeff == 1);
            }
        }
    }
}

TEST_CASE("plucker_selftest runs clean") {
    auto rep = plucker_selftest(5, 40, 123);
    CHECK(rep.trials == 40);
    CHECK(rep.failures == 0);
}
