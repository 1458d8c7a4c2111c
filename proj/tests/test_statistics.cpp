#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <thread>

#include "crankshaft/objects.hpp"
#include "crankshaft/statistics.hpp"
#include "oracle.hpp"

using namespace crankshaft;

TEST_CASE("partition numbers")
{
    Statistics s;
    CHECK(s.p(5) == 7);
    CHECK(s.p(-3) == 0);
    CHECK(s.p(0) == 1);
    CHECK(s.p(20) == 627);
    CHECK(s.p(100).get_str() == "190569292");
    for (int n = 0; n <= 25; ++n) {
        CHECK(s.p(n, Backend::enumeration) == static_cast<long>(oracle::p(n)));
        CHECK(s.p(n, Backend::series) == s.p(n));
    }
}

TEST_CASE("golden values")
{
    Statistics s;
    CHECK(s.u(0, 4) == 8);
    CHECK(s.u(1, 4) == 12);
    CHECK(s.u(2, 4) == 4);
    CHECK(s.u(0, 5) == 15);
    CHECK(s.u(2, 0) == 1);
    CHECK(s.C(0, 5) == 3);
    CHECK(s.C(1, 5) == 4);
    CHECK(s.M(3, 18) == 3);
    CHECK(s.M(1, 5) == 2);
    CHECK(s.P_tilde(2, 17) == 9);
    CHECK(s.P_tilde(1, 5) == 1);
    CHECK(s.P_tilde(1, 3) == 0);
    CHECK(s.crank_count(0, 5) == 1);
    CHECK(s.N_V(0, 0) == 1);
}

TEST_CASE("boundary conventions hold on both backends")
{
    Statistics s;
    for (auto b : {Backend::enumeration, Backend::series}) {
        CAPTURE(to_string(b));
        CHECK(s.u(0, 0, b) == 0);
        CHECK(s.u(1, 0, b) == 1);
        CHECK(s.u(2, 0, b) == 1);
        CHECK(s.u(1, -2, b) == 0);
        CHECK(s.C(0, 0, b) == 0);
        CHECK(s.C(1, 0, b) == 1);
        CHECK(s.C(2, 0, b) == 1);
        CHECK(s.C(0, 1, b) == 1);
        CHECK(s.C(1, 1, b) == 0);
        CHECK(s.C(2, 1, b) == -1);
        CHECK(s.C(2, -1, b) == 0);
        for (int k = 1; k <= 4; ++k) {
            CHECK(s.M(k, 0, b) == 0);
            CHECK(s.P_tilde(k, 0, b) == 0);
        }
    }
}

TEST_CASE("crank counts and N_V at n = 1")
{
    Statistics s;
    for (auto b : {Backend::enumeration, Backend::series}) {
        CHECK(s.crank_count(-1, 1, b) == 1);
        CHECK(s.crank_count(0, 1, b) == 0);
        CHECK(s.crank_count(1, 1, b) == 0);
        CHECK(s.N_V(-1, 1, b) == 1);
        CHECK(s.N_V(0, 1, b) == -1);
        CHECK(s.N_V(1, 1, b) == 1);
    }
    CHECK_THROWS_AS(s.crank_count(0, 0), std::invalid_argument);
}

TEST_CASE("parameter validation")
{
    Statistics s;
    CHECK_THROWS_AS(s.u(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(s.C(-1, 4), std::invalid_argument);
    CHECK_THROWS_AS(s.M(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(s.P_tilde(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_stat("rank"), std::invalid_argument);
    CHECK_THROWS_AS(parse_backend("fast"), std::invalid_argument);
    CHECK(parse_stat("Ptilde") == Stat::P_tilde);
    CHECK(parse_backend("enum") == Backend::enumeration);
    CHECK(param_name(Stat::u) == "m");
    CHECK(param_name(Stat::N_V) == "k");
    CHECK(param_name(Stat::p).empty());
}

TEST_CASE("enumeration backend agrees with the brute-force oracle")
{
    Statistics s;
    for (int n = 0; n <= 14; ++n) {
        CAPTURE(n);
        for (int m = 0; m <= 2; ++m)
            if (n > 0 || m == 0)
                CHECK(s.u(m, n, Backend::enumeration) == static_cast<long>(n == 0 ? 0 : oracle::u(m, n)));
        for (int k = 1; k <= 4; ++k) {
            CHECK(s.M(k, n, Backend::enumeration) == static_cast<long>(oracle::M(k, n)));
            CHECK(s.P_tilde(k, n, Backend::enumeration) == static_cast<long>(oracle::P_tilde(k, n)));
        }
        if (n >= 2)
            for (int k = -n; k <= n; ++k)
                CHECK(s.crank_count(k, n, Backend::enumeration) == static_cast<long>(oracle::crank_count(k, n)));
    }
    for (int n = 0; n <= 8; ++n)
        for (const auto &[k, v] : oracle::nv_histogram(n))
            CHECK(s.N_V(k, n, Backend::enumeration) == static_cast<long>(v));
}

TEST_CASE("dual backends agree on the overlap range")
{
    Statistics s;
    const auto &cfg = s.config();
    for (int n = 0; n <= cfg.composition_cutoff; ++n)
        for (int m = 0; m <= 2; ++m)
            CHECK(s.u(m, n, Backend::enumeration) == s.u(m, n, Backend::series));
    for (int n = 0; n <= 30; ++n) {
        CAPTURE(n);
        for (int m = 0; m <= 2; ++m)
            CHECK(s.C(m, n, Backend::enumeration) == s.C(m, n, Backend::series));
        for (int k = 1; k <= 4; ++k) {
            CHECK(s.M(k, n, Backend::enumeration) == s.M(k, n, Backend::series));
            CHECK(s.P_tilde(k, n, Backend::enumeration) == s.P_tilde(k, n, Backend::series));
        }
        if (n >= 1)
            for (int k = -n - 1; k <= n + 1; ++k)
                CHECK(s.crank_count(k, n, Backend::enumeration) == s.crank_count(k, n, Backend::series));
    }
    for (int n = 0; n <= cfg.vector_cutoff; ++n)
        for (int k = -n - 1; k <= n + 1; ++k)
            CHECK(s.N_V(k, n, Backend::enumeration) == s.N_V(k, n, Backend::series));
}

TEST_CASE("checked reads cross-validate")
{
    Statistics s;
    CHECK(s.checked(Stat::u, 1, 20) == s.u(1, 20, Backend::enumeration));
    CHECK(s.checked(Stat::u, 1, 200) == s.u(1, 200, Backend::series));
    CHECK(s.enumerable(Stat::u, 30));
    CHECK(!s.enumerable(Stat::u, 31));
    CHECK(!s.enumerable(Stat::N_V, 15));
    StatConfig small;
    small.composition_cutoff = 5;
    Statistics t(small);
    CHECK(!t.enumerable(Stat::u, 6));
}

TEST_CASE("C_2 = C_1 - C_0 and u_0 = u_1 - u_2")
{
    Statistics s;
    for (int n = -2; n <= 150; ++n) {
        CHECK(s.C(2, n) == s.C(1, n) - s.C(0, n));
        CHECK(s.u(0, n) == s.u(1, n) - s.u(2, n));
    }
}

TEST_CASE("u_1 counts maximal parts over unimodal compositions")
{
    Statistics s;
    for (int n = 1; n <= 25; ++n) {
        std::int64_t maxima = 0;
        for_each_unimodal_composition(n, [&](const Composition &c) { maxima += c.max_multiplicity(); });
        CHECK(s.u(1, n) == static_cast<long>(maxima));
    }
}

TEST_CASE("p(n - k(3k+1)/2) = M_k(n) + P~_k(n)")
{
    Statistics s;
    for (int k = 1; k <= 4; ++k)
        for (int n = 0; n <= 60; ++n)
            CHECK(s.p(n - k * (3 * k + 1) / 2) == s.M(k, n) + s.P_tilde(k, n));
}

TEST_CASE("N_V equals crank counts away from n = 1")
{
    Statistics s;
    for (int n = 2; n <= 40; ++n)
        for (int k = -n - 1; k <= n + 1; ++k)
            CHECK(s.N_V(k, n) == s.crank_count(k, n));
}

TEST_CASE("tables")
{
    Statistics s;
    const auto t = s.table(Stat::u, 0, 0, 5);
    CHECK(t.values.at(4) == 8);
    CHECK(t.params.at("m") == 0);
    std::ostringstream csv;
    t.write_csv(csv);
    CHECK(csv.str() == "n,value\n0,0\n1,1\n2,2\n3,4\n4,8\n5,15\n");
    const nlohmann::json j = s.table(Stat::P_tilde, 2, 17, 17, Backend::series);
    CHECK(j.at("values").at(0).at("n") == 17);
    CHECK(j.at("values").at(0).at("value") == "9");
}

TEST_CASE("concurrent readers see consistent values")
{
    Statistics s;
    std::vector<BigInt> results(4);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] { results[static_cast<std::size_t>(t)] = s.u(t % 3, 250) + s.C(t % 3, 240); });
    for (auto &th : pool)
        th.join();
    for (int t = 0; t < 4; ++t)
        CHECK(results[static_cast<std::size_t>(t)] == s.u(t % 3, 250) + s.C(t % 3, 240));
}
