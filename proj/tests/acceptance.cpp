// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All comparisons are exact integer equality; the only numeric tolerances are
// the wall-clock budgets below.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "crankshaft/bijections.hpp"
#include "crankshaft/identities.hpp"
#include "crankshaft/statistics.hpp"

using namespace crankshaft;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kBudget1Seconds = 1.0;
constexpr double kBudget2Seconds = 60.0;
constexpr double kBudget3Seconds = 120.0;
constexpr double kBudget8Seconds = 120.0;
constexpr double kNoBudget = 0.0;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void require(const CheckReport &r, const std::string &what)
    {
        if (!r.passed() && ok) {
            ok = false;
            std::ostringstream os;
            os << what << ": " << r.violations << " violation(s)";
            if (r.counterexample)
                os << ", first at " << nlohmann::json(r.counterexample->at).dump() << " lhs=" << r.counterexample->lhs.get_str()
                   << " rhs=" << r.counterexample->rhs.get_str();
            detail = os.str();
        }
    }
};

std::string tag(int m, std::int64_t k) { return "m=" + std::to_string(m) + " k=" + std::to_string(k); }

Outcome criterion1(Statistics &s)
{
    Outcome o;
    o.require(s.u(0, 4) == 8, "u_0(4)");
    o.require(s.u(1, 4) == 12, "u_1(4)");
    o.require(s.u(2, 4) == 4, "u_2(4)");
    o.require(s.C(0, 5) == 3, "C_0(5)");
    o.require(s.C(1, 5) == 4, "C_1(5)");
    o.require(s.M(3, 18) == 3, "M_3(18)");
    o.require(s.P_tilde(2, 17) == 9, "P~_2(17)");
    o.require(s.p(5) == 7, "p(5)");
    o.require(s.C(0, 1) == 1, "C_0(1)");
    o.require(s.C(1, 1) == 0, "C_1(1)");
    o.require(s.C(2, 1) == -1, "C_2(1)");
    return o;
}

Outcome criterion2(Statistics &s)
{
    Outcome o;
    o.require(check_thm1(s, 25, Backend::enumeration), "thm1 enumeration");
    o.require(check_thm1(s, 300, Backend::series), "thm1 series");
    for (int n = 0; n <= 25; ++n)
        o.require(verify_thm1(n), "phi/psi n=" + std::to_string(n));
    return o;
}

Outcome criterion3(Statistics &s)
{
    Outcome o;
    for (int m = 0; m <= 2; ++m)
        for (std::int64_t k = 1; k <= 4; ++k) {
            o.require(check_thm2(s, m, k, 100, Backend::series), "thm2 " + tag(m, k));
            o.require(check_thm3(s, m, k, 100, Backend::series), "thm3 " + tag(m, k));
        }
    return o;
}

Outcome criterion4(Statistics &s)
{
    Outcome o;
    for (int m = 0; m <= 2; ++m)
        for (std::int64_t k = 1; k <= 4; ++k) {
            o.require(check_cor2(s, m, k, 100, Backend::series), "cor2 " + tag(m, k));
            o.require(check_cor4_ineq(s, m, k, 100, Backend::series), "cor4_ineq " + tag(m, k));
        }
    std::string zeros;
    for (int m = 0; m <= 2; ++m)
        for (std::int64_t k = 1; k <= 4; ++k) {
            const auto r = check_cor2_strict(s, m, k, 100, Backend::series);
            if (!r.passed())
                zeros += " (m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                         ",n=" + std::to_string(r.counterexample->at.at("n")) + ")x" + std::to_string(r.violations);
        }
    o.require(zeros.empty(), "strict inequality fails with left side 0 at" + zeros);
    return o;
}

Outcome criterion5(Statistics &s)
{
    Outcome o;
    for (int m = 0; m <= 2; ++m)
        o.require(check_cor4(s, m, 100, Backend::series), "cor4 m=" + std::to_string(m));
    for (int n = 0; n <= 18; ++n)
        for (std::int64_t j : pentagonal_window(n))
            for (int m = 0; m <= 2; ++m)
                o.require(verify_sec5_psi(m, j, n),
                          "sec5_psi m=" + std::to_string(m) + " j=" + std::to_string(j) + " n=" + std::to_string(n));
    return o;
}

Outcome criterion6(Statistics &s)
{
    Outcome o;
    for (int m = 0; m <= 2; ++m)
        for (std::int64_t k = 1; k <= 3; ++k)
            o.require(check_cor5(s, m, k, 40), "cor5 " + tag(m, k));
    for (std::int64_t k = 1; k <= 4; ++k)
        o.require(check_mp(s, k, 60), "mp k=" + std::to_string(k));
    return o;
}

Outcome criterion7(Statistics &s)
{
    Outcome o;
    for (std::int64_t k = 1; k <= 4; ++k) {
        o.require(check_xz(s, k, 60), "xz k=" + std::to_string(k));
        o.require(check_k1_genk(s, k, 60), "k1/genk k=" + std::to_string(k));
    }
    for (int n = 0; n <= 40; ++n)
        o.require(verify_sec6_f(n), "sec6_f n=" + std::to_string(n));
    for (int k = 2; k <= 4; ++k)
        for (int n = 0; n <= 40; ++n)
            o.require(verify_sec6_g(k, n), "sec6_g k=" + std::to_string(k) + " n=" + std::to_string(n));
    return o;
}

Outcome criterion8(Statistics &)
{
    Outcome o;
    o.require(check_series_identities(300, 6), "series identities");
    return o;
}

Outcome criterion9(Statistics &s)
{
    Outcome o;
    const auto agree = [&](Stat stat, std::int64_t param, std::int64_t n) {
        const auto e = s.value(stat, param, n, Backend::enumeration);
        const auto v = s.value(stat, param, n, Backend::series);
        o.require(e == v, to_string(stat) + " param=" + std::to_string(param) + " n=" + std::to_string(n) +
                              " enum=" + e.get_str() + " series=" + v.get_str());
    };
    for (std::int64_t n = 0; n <= 30; ++n) {
        agree(Stat::p, 0, n);
        for (int m = 0; m <= 2; ++m) {
            agree(Stat::u, m, n);
            agree(Stat::C, m, n);
        }
        for (std::int64_t k = 1; k <= 4; ++k) {
            agree(Stat::M, k, n);
            agree(Stat::P_tilde, k, n);
        }
        if (n >= 1)
            for (std::int64_t k = -n - 1; k <= n + 1; ++k)
                agree(Stat::crank_count, k, n);
    }
    for (std::int64_t n = 0; n <= 14; ++n)
        for (std::int64_t k = -n - 1; k <= n + 1; ++k)
            agree(Stat::N_V, k, n);
    for (std::int64_t n = 2; n <= 14; ++n)
        for (std::int64_t k = -n - 1; k <= n + 1; ++k)
            o.require(s.N_V(k, n, Backend::enumeration) == s.crank_count(k, n, Backend::enumeration),
                      "N_V vs crank k=" + std::to_string(k) + " n=" + std::to_string(n));
    // n = 1: the single partition has crank -1; N_V adds +1 at k = 1 and -1 at k = 0.
    for (std::int64_t k = -2; k <= 2; ++k) {
        const BigInt diff = s.N_V(k, 1, Backend::enumeration) - s.crank_count(k, 1, Backend::enumeration);
        const long expected = k == 0 ? -1 : (k == 1 ? 1 : 0);
        o.require(diff == expected, "n=1 difference at k=" + std::to_string(k));
    }
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        std::string title;
        double budget;
        std::function<Outcome(Statistics &)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "golden values", kBudget1Seconds, criterion1},
        {2, "thm1 by enumeration, series and bijection", kBudget2Seconds, criterion2},
        {3, "thm2 and thm3, n <= 100", kBudget3Seconds, criterion3},
        {4, "inequality families with strictness", kNoBudget, criterion4},
        {5, "cor4 decomposition and sec5_psi", kNoBudget, criterion5},
        {6, "cor5 and MP cross-check", kNoBudget, criterion6},
        {7, "xz, k1/genk, sec6_f and sec6_g", kNoBudget, criterion7},
        {8, "series identities to order 300, k <= 6", kBudget8Seconds, criterion8},
        {9, "cross-oracle agreement", kNoBudget, criterion9},
    };

    Statistics stats;
    stats.reserve(default_order(100, 4));
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run(stats);
        } catch (const std::exception &e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (o.ok && c.budget > 0 && seconds > c.budget) {
            o.ok = false;
            o.detail = "over time budget of " + std::to_string(c.budget) + " s";
        }
        std::ostringstream line;
        line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << " (" << seconds << " s)";
        if (!o.ok) {
            line << " -- " << o.detail;
            ++failures;
        }
        std::cout << line.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
