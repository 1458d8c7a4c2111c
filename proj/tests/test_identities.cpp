#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "crankshaft/identities.hpp"
#include "oracle.hpp"

using namespace crankshaft;

namespace {

// Independent evaluation of the thm2 left side with oracle values.
std::int64_t thm2_lhs_oracle(int m, int k, int n)
{
    const auto C = [m](int x) -> std::int64_t {
        if (x < 0)
            return 0;
        if (x == 0)
            return m == 0 ? 0 : 1;
        if (x == 1)
            return m == 0 ? 1 : (m == 1 ? 0 : -1);
        std::int64_t total = 0;
        for (int c = -x; c <= x; ++c)
            if ((m == 0 && c > 0) || (m == 1 && c >= 0) || (m == 2 && c == 0))
                total += oracle::crank_count(c, x);
        return total;
    };
    const auto u = [m](int x) -> std::int64_t { return x <= 0 ? (x == 0 && m > 0 ? 1 : 0) : oracle::u(m, x); };
    std::int64_t partial = 0;
    for (int j = 1 - k; j <= k; ++j)
        partial += (j % 2 == 0 ? 1 : -1) * u(n - j * (3 * j - 1) / 2);
    const std::int64_t v = C(n) - partial;
    return k % 2 == 0 ? v : -v;
}

} // namespace

TEST_CASE("pentagonal window")
{
    CHECK(pentagonal_window(0) == std::vector<std::int64_t>{0});
    CHECK(pentagonal_window(5) == std::vector<std::int64_t>{-1, 0, 1, 2});
    CHECK(pentagonal_window(7) == std::vector<std::int64_t>{-2, -1, 0, 1, 2});
    CHECK(upper_pentagonal(2) == 7);
    CHECK(default_order(100, 4) == 100 + 2 * 26);
}

TEST_CASE("thm1")
{
    Statistics s;
    CHECK(check_thm1(s, 25, Backend::enumeration).passed());
    CHECK(check_thm1(s, 300, Backend::series).passed());
    const auto r = check_thm1(s, 30);
    CHECK(r.passed());
    CHECK(r.cases == 31);
}

TEST_CASE("thm2 left side against the oracle")
{
    Statistics s;
    CHECK(thm2_lhs_oracle(0, 1, 5) == 4);
    for (int m = 0; m <= 2; ++m)
        for (int k = 1; k <= 3; ++k)
            for (int n = 1; n <= 12; ++n) {
                const auto r = check_cor2(s, m, k, n);
                CHECK(r.passed() == (thm2_lhs_oracle(m, k, n) >= 0));
            }
}

TEST_CASE("thm2, thm3 and step")
{
    Statistics s;
    for (int m = 0; m <= 2; ++m)
        for (int k = 1; k <= 4; ++k) {
            CAPTURE(m);
            CAPTURE(k);
            CHECK(check_thm2(s, m, k, 50).passed());
            CHECK(check_thm3(s, m, k, 50).passed());
            CHECK(check_pentagonal_step(s, m, k, 30).passed());
        }
}

TEST_CASE("inequality families")
{
    Statistics s;
    for (int m = 0; m <= 2; ++m)
        for (int k = 1; k <= 4; ++k) {
            CHECK(check_cor2(s, m, k, 60).passed());
            CHECK(check_cor4_ineq(s, m, k, 60).passed());
        }
}

TEST_CASE("strictness fails exactly at the known boundary points")
{
    Statistics s;
    for (int k = 1; k <= 4; ++k) {
        const std::int64_t K = upper_pentagonal(k);
        const auto r0 = check_cor2_strict(s, 0, k, 60);
        REQUIRE(!r0.passed());
        CHECK(r0.violations == 1);
        CHECK(r0.counterexample->at.at("n") == K);
        CHECK(r0.counterexample->lhs == 0);

        const auto r1 = check_cor2_strict(s, 1, k, 60);
        CHECK(r1.passed());

        const auto r2 = check_cor2_strict(s, 2, k, 60);
        REQUIRE(!r2.passed());
        CHECK(r2.violations == 1);
        CHECK(r2.counterexample->at.at("n") == K + 1);
    }
}

TEST_CASE("cor4 and cor5")
{
    Statistics s;
    for (int m = 0; m <= 2; ++m) {
        CHECK(check_cor4(s, m, 80).passed());
        for (int k = 1; k <= 3; ++k)
            CHECK(check_cor5(s, m, k, 25).passed());
    }
}

TEST_CASE("xz, k1/genk and MP")
{
    Statistics s;
    for (int k = 1; k <= 4; ++k) {
        CHECK(check_xz(s, k, 60).passed());
        CHECK(check_k1_genk(s, k, 60).passed());
        CHECK(check_mp(s, k, 60).passed());
    }
}

TEST_CASE("exploratory comparison is report-only")
{
    Statistics s;
    const auto r = explore_mk_ptilde(s, 2, 20);
    CHECK(r.passed());
    CHECK(!r.notes.empty());
    CHECK_THROWS_AS(explore_mk_ptilde(s, 1, 20), std::invalid_argument);
}

TEST_CASE("series identities")
{
    const auto r = check_series_identities(80, 4);
    CHECK(r.passed());
    CHECK(r.cases > 0);
}

TEST_CASE("argument validation")
{
    Statistics s;
    CHECK_THROWS_AS(check_thm2(s, 3, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(check_thm3(s, 0, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(check_series_identities(-1, 2), std::invalid_argument);
}

TEST_CASE("reports keep the first counterexample")
{
    CheckReport r;
    r.fail(Counterexample{{{"n", 3}}, 1, 2, "x"});
    r.fail(Counterexample{{{"n", 4}}, 1, 2, "y"});
    CHECK(!r.passed());
    CHECK(r.violations == 2);
    CHECK(r.counterexample->at.at("n") == 3);
    const nlohmann::json j = r;
    CHECK(j.at("status") == "fail");
    CHECK(j.at("counterexample").at("lhs") == "1");
}

TEST_CASE("parallel runner keeps job order")
{
    std::vector<std::function<CheckReport()>> jobs;
    for (int i = 0; i < 7; ++i)
        jobs.emplace_back([i] {
            CheckReport r;
            r.name = std::to_string(i);
            return r;
        });
    const auto out = run_parallel(jobs, 3);
    REQUIRE(out.size() == 7);
    for (int i = 0; i < 7; ++i)
        CHECK(out[static_cast<std::size_t>(i)].name == std::to_string(i));
    setenv("CRANKSHAFT_THREADS", "2", 1);
    CHECK(thread_budget() == 2);
    setenv("CRANKSHAFT_THREADS", "zero", 1);
    CHECK(thread_budget() >= 1);
    unsetenv("CRANKSHAFT_THREADS");
}
