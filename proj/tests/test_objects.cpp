#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "crankshaft/objects.hpp"
#include "crankshaft/qseries.hpp"
#include "oracle.hpp"

using namespace crankshaft;

namespace {

std::vector<std::vector<int>> vecs(const std::vector<Partition> &ps)
{
    std::vector<std::vector<int>> out;
    for (const auto &p : ps)
        out.push_back(p.vec());
    return out;
}

std::vector<std::vector<int>> vecs(const std::vector<Composition> &cs)
{
    std::vector<std::vector<int>> out;
    for (const auto &c : cs)
        out.push_back(c.vec());
    return out;
}

} // namespace

TEST_CASE("partition validation and accessors")
{
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    const Partition p({5, 4, 4, 1, 1, 1});
    CHECK(p.sum() == 16);
    CHECK(p.length() == 6);
    CHECK(p.largest() == 5);
    CHECK(p.smallest() == 1);
    CHECK(p.multiplicity(4) == 2);
    CHECK(p.multiplicity(2) == 0);
    CHECK(p.first_part_above(1) == 4);
    CHECK(!p.first_part_above(5));
    CHECK(!p.has_distinct_parts());
    CHECK(p.with_parts(3, 2).vec() == std::vector<int>{5, 4, 4, 3, 3, 1, 1, 1});
    CHECK(p.without_parts(1, 3).vec() == std::vector<int>{5, 4, 4});
    CHECK_THROWS_AS(p.without_parts(4, 3), std::domain_error);
    CHECK(Partition::from_multiset({1, 3, 2, 3}).vec() == std::vector<int>{3, 3, 2, 1});
    CHECK(p.to_string() == "(5,4,4,1,1,1)");
    CHECK(Partition().to_string() == "()");
}

TEST_CASE("composition accessors")
{
    CHECK_THROWS_AS(Composition({1, 0}), std::invalid_argument);
    const Composition c({1, 3, 3, 2});
    CHECK(c.sum() == 9);
    CHECK(c.max_part() == 3);
    CHECK(c.max_multiplicity() == 2);
    CHECK(c.first_max_index() == 1);
    CHECK(c.last_max_index() == 2);
    CHECK(Composition().first_max_index() == -1);
}

TEST_CASE("vector partitions")
{
    CHECK_THROWS_AS(VectorPartition(Partition({2, 2}), {}, {}), std::invalid_argument);
    const VectorPartition v(Partition({3, 1}), Partition({2, 2, 1}), Partition({4}));
    CHECK(v.sign() == 1);
    CHECK(v.crank() == 2);
    CHECK(v.sum() == 13);
    const nlohmann::json j = v;
    CHECK(j.dump() == R"({"pi1":[3,1],"pi2":[2,2,1],"pi3":[4]})");
}

TEST_CASE("partitions of 5 in reverse-lex order")
{
    const std::vector<std::vector<int>> expected{{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
    CHECK(vecs(partitions_of(5)) == expected);
    CHECK(vecs(partitions_of(0)) == std::vector<std::vector<int>>{{}});
    CHECK(partitions_of(9).size() == 30);
    CHECK(partitions_of(-1).empty());
    CHECK(vecs(partitions_of(5, 2)) == std::vector<std::vector<int>>{{2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}});
}

TEST_CASE("partition enumeration matches the recursive oracle")
{
    for (int n = 0; n <= 22; ++n) {
        CAPTURE(n);
        const auto ours = vecs(partitions_of(n));
        const auto ref = oracle::partitions(n);
        CHECK(ours == ref);
    }
}

TEST_CASE("distinct partitions")
{
    for (int n = 0; n <= 20; ++n)
        CHECK(vecs(distinct_partitions_of(n)) == oracle::distinct_partitions(n));
}

TEST_CASE("is_unimodal")
{
    CHECK(is_unimodal(Composition({1, 2, 1})));
    CHECK(!is_unimodal(Composition({2, 1, 2})));
    CHECK(is_unimodal(Composition({4})));
    CHECK(is_unimodal(Composition({1, 1, 3, 3, 2, 2})));
    CHECK(!is_unimodal(Composition()));
    for (int n = 1; n <= 12; ++n)
        for (const auto &c : oracle::compositions(n))
            CHECK(is_unimodal(Composition(c)) == oracle::unimodal(c));
}

TEST_CASE("unimodal compositions of 4")
{
    const std::vector<std::vector<int>> expected{{1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 3},
                                                 {2, 1, 1},    {2, 2},    {3, 1},    {4}};
    CHECK(vecs(unimodal_compositions_of(4)) == expected);
    CHECK(vecs(unimodal_compositions_of(1)) == std::vector<std::vector<int>>{{1}});
    CHECK(unimodal_compositions_of(5).size() == 15);
    CHECK(unimodal_compositions_of(0).empty());
}

TEST_CASE("unimodal compositions with prescribed maximal multiplicity")
{
    const auto two = vecs(unimodal_with_max_mult(4, 2));
    const std::set<std::vector<int>> got(two.begin(), two.end());
    CHECK(got == std::set<std::vector<int>>{{1, 1, 2, 2}, {1, 2, 2, 1}, {2, 2, 1, 1}, {3, 3}});
    CHECK(two.size() == 4);
    CHECK(vecs(unimodal_with_max_mult(0, 2)) == std::vector<std::vector<int>>{{1, 1}});
    CHECK(unimodal_with_max_mult(4, 1).size() == 12);
    CHECK(unimodal_with_max_mult(1, 2).empty());
}

TEST_CASE("unimodal enumerators agree with the bitmask oracle as sets")
{
    for (int n = 1; n <= 14; ++n) {
        CAPTURE(n);
        std::set<std::vector<int>> ref0, ours0;
        for (const auto &c : oracle::compositions(n))
            if (oracle::unimodal(c))
                ref0.insert(c);
        for (const auto &c : unimodal_compositions_of(n))
            CHECK(ours0.insert(c.vec()).second);
        CHECK(ours0 == ref0);
        for (int m = 1; m <= 2; ++m) {
            std::set<std::vector<int>> ref, ours;
            for (const auto &c : oracle::compositions(n + m))
                if (oracle::unimodal(c) && oracle::max_mult(c) == m)
                    ref.insert(c);
            for (const auto &c : unimodal_with_max_mult(n, m))
                CHECK(ours.insert(c.vec()).second);
            CHECK(ours == ref);
        }
    }
}

TEST_CASE("unimodal counts match the series for n <= 30")
{
    const auto u0 = u_gf(0, 30), u1 = u_gf(1, 30), u2 = u_gf(2, 30);
    for (int n = 1; n <= 30; ++n) {
        CAPTURE(n);
        std::int64_t c0 = 0, c1 = 0, c2 = 0;
        for_each_unimodal_composition(n, [&](const Composition &) { ++c0; });
        for_each_unimodal_with_max_mult(n, 1, [&](const Composition &) { ++c1; });
        for_each_unimodal_with_max_mult(n, 2, [&](const Composition &) { ++c2; });
        CHECK(u0[static_cast<std::size_t>(n)] == static_cast<long>(c0));
        CHECK(u1[static_cast<std::size_t>(n)] == static_cast<long>(c1));
        CHECK(u2[static_cast<std::size_t>(n)] == static_cast<long>(c2));
    }
}

TEST_CASE("conjugate and rotation")
{
    const Partition p({5, 4, 4, 1, 1, 1});
    CHECK(conjugate(p).vec() == std::vector<int>{6, 3, 3, 3, 1});
    CHECK(rotate_star(p).vec() == std::vector<int>{1, 3, 3, 3, 6});
    CHECK(conjugate(Partition()).empty());
    CHECK(rotate_star(Partition()).empty());
    CHECK(rotate_star(Partition({4})).vec() == std::vector<int>{1, 1, 1, 1});
    for (int n = 0; n <= 16; ++n) {
        for (const auto &q : partitions_of(n)) {
            const auto c = conjugate(q);
            CHECK(conjugate(c) == q);
            CHECK(c.sum() == q.sum());
            CHECK(c.length() == q.largest());
        }
    }
}

TEST_CASE("staircases")
{
    CHECK(staircase(2).vec() == std::vector<int>{3, 2});
    CHECK(staircase(0).empty());
    CHECK(staircase(-2).vec() == std::vector<int>{4, 3});
    for (std::int64_t j = -50; j <= 50; ++j) {
        const auto g = staircase(j);
        CHECK(g.sum() == pentagonal(j));
        if (j != 0)
            CHECK(g.has_distinct_parts());
    }
}

TEST_CASE("crank")
{
    CHECK(crank(Partition({5})) == 5);
    CHECK(crank(Partition({4, 1})) == 0);
    CHECK(crank(Partition({2, 1, 1, 1})) == -3);
    CHECK(crank(Partition({1})) == -1);
    CHECK_THROWS_AS(crank(Partition()), std::domain_error);
    for (int n = 1; n <= 18; ++n)
        for (const auto &p : partitions_of(n))
            CHECK(crank(p) == oracle::crank(p.vec()));
}

TEST_CASE("vector partition enumeration")
{
    int empty_count = 0;
    for_each_vector_partition(0, [&](const VectorPartition &v) {
        ++empty_count;
        CHECK(v.sum() == 0);
    });
    CHECK(empty_count == 1);

    std::int64_t total = 0, crank_zero = 0;
    for_each_vector_partition(5, [&](const VectorPartition &v) {
        total += v.sign();
        if (v.crank() == 0)
            crank_zero += v.sign();
    });
    CHECK(total == 7);
    CHECK(crank_zero == 1);
}

TEST_CASE("signed vector counts equal crank counts for 2 <= n <= 14")
{
    for (int n = 2; n <= 14; ++n) {
        CAPTURE(n);
        std::map<int, std::int64_t> signed_counts;
        for_each_vector_partition(n, [&](const VectorPartition &v) { signed_counts[v.crank()] += v.sign(); });
        std::map<int, std::int64_t> cranks;
        for (const auto &p : partitions_of(n))
            ++cranks[crank(p)];
        for (int k = -n; k <= n; ++k)
            CHECK(signed_counts[k] == cranks[k]);
    }
}

TEST_CASE("JSON for partitions and compositions")
{
    const nlohmann::json j = Partition({3, 1});
    CHECK(j.dump() == "[3,1]");
    CHECK(j.get<Partition>() == Partition({3, 1}));
    const nlohmann::json c = Composition({1, 3, 1});
    CHECK(c.get<Composition>() == Composition({1, 3, 1}));
    CHECK_THROWS_AS(nlohmann::json::parse("[1,2]").get<Partition>(), std::invalid_argument);
}
