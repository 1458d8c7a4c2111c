#include "crankshaft/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "crankshaft/bijections.hpp"
#include "crankshaft/objects.hpp"
#include "crankshaft/qseries.hpp"

namespace crankshaft {

namespace {

// Gaussian binomials [a+b choose b] are compared for 1 <= a, b <= this side.
constexpr int kQbinSide = 12;

class Source {
public:
    Source(Statistics &stats, Backend backend) : stats_(stats), backend_(backend) {}

    BigInt operator()(Stat stat, std::int64_t param, std::int64_t n) const
    {
        if (n < 0)
            return 0;
        return backend_ == Backend::automatic ? stats_.checked(stat, param, n) : stats_.value(stat, param, n, backend_);
    }

    BigInt p(std::int64_t n) const { return (*this)(Stat::p, 0, n); }

private:
    Statistics &stats_;
    Backend backend_;
};

template <class Body>
CheckReport run_check(std::string name, Params range, Body &&body)
{
    CheckReport r;
    r.name = std::move(name);
    r.range = std::move(range);
    {
        ScopedTimer timer(r);
        try {
            body(r);
        } catch (const BackendMismatch &e) {
            r.fail(Counterexample{{{"param", e.param}, {"n", e.n}}, 0, 0, e.what()});
        }
    }
    return r;
}

void compare(CheckReport &r, Params at, const BigInt &lhs, const BigInt &rhs, const std::string &detail = {})
{
    ++r.cases;
    if (lhs != rhs)
        r.fail(Counterexample{std::move(at), lhs, rhs, detail});
}

void require_m(int m)
{
    if (m < 0 || m > 2)
        throw std::invalid_argument("m must be 0, 1 or 2");
}

void require_k(std::int64_t k, std::int64_t least = 1)
{
    if (k < least)
        throw std::invalid_argument("k must be >= " + std::to_string(least));
}

BigInt signed_term(std::int64_t j, BigInt v) { return j % 2 == 0 ? v : BigInt(-v); }

// sign * (C_m(n) - sum_{j=jlo}^{jhi} (-1)^j u_m(n - g(j)))
BigInt truncated_lhs(const Source &src, int m, std::int64_t n, std::int64_t jlo, std::int64_t jhi, int sign)
{
    BigInt partial = 0;
    for (std::int64_t j = jlo; j <= jhi; ++j)
        partial += signed_term(j, src(Stat::u, m, n - pentagonal(j)));
    BigInt v = src(Stat::C, m, n) - partial;
    return sign > 0 ? v : BigInt(-v);
}

int parity_sign(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

BigInt thm2_lhs(const Source &src, int m, std::int64_t k, std::int64_t n)
{
    return truncated_lhs(src, m, n, 1 - k, k, parity_sign(k));
}

BigInt thm3_lhs(const Source &src, int m, std::int64_t k, std::int64_t n)
{
    return truncated_lhs(src, m, n, -k, k, parity_sign(k - 1));
}

// sum_{j=0}^{n} C_m(j) X(n-j)
BigInt crank_convolution(const Source &src, int m, Stat stat, std::int64_t k, std::int64_t n)
{
    BigInt total = 0;
    for (std::int64_t j = 0; j <= n; ++j) {
        const BigInt c = src(Stat::C, m, j);
        if (c != 0)
            total += c * src(stat, k, n - j);
    }
    return total;
}

void compare_series(CheckReport &r, const std::string &identity, Params at, const TruncatedSeries &lhs,
                    const TruncatedSeries &rhs)
{
    ++r.cases;
    for (std::size_t i = 0; i <= lhs.order(); ++i) {
        if (lhs[i] != rhs[i]) {
            at["n"] = static_cast<std::int64_t>(i);
            r.fail(Counterexample{std::move(at), lhs[i], rhs[i], identity});
            return;
        }
    }
}

// Coefficients of [a+b choose b] by counting partitions in an a x b box:
// either no part equals a, or one part a is removed along with one row.
std::vector<std::vector<std::vector<std::int64_t>>> box_counts(int side)
{
    std::vector boxes(static_cast<std::size_t>(side) + 1,
                      std::vector<std::vector<std::int64_t>>(static_cast<std::size_t>(side) + 1));
    for (int a = 0; a <= side; ++a) {
        for (int b = 0; b <= side; ++b) {
            auto &cur = boxes[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            cur.assign(static_cast<std::size_t>(a * b) + 1, 0);
            if (a == 0 || b == 0) {
                cur[0] = 1;
                continue;
            }
            const auto &narrower = boxes[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
            const auto &shorter = boxes[static_cast<std::size_t>(a)][static_cast<std::size_t>(b - 1)];
            for (std::size_t j = 0; j < narrower.size(); ++j)
                cur[j] += narrower[j];
            for (std::size_t j = 0; j < shorter.size(); ++j)
                cur[j + static_cast<std::size_t>(a)] += shorter[j];
        }
    }
    return boxes;
}

} // namespace

std::size_t default_order(std::int64_t n_max, std::int64_t k)
{
    return static_cast<std::size_t>(std::max<std::int64_t>(n_max, 0) + 2 * upper_pentagonal(std::max<std::int64_t>(k, 0)));
}

std::vector<std::int64_t> pentagonal_window(std::int64_t n)
{
    std::vector<std::int64_t> js;
    for (std::int64_t j = -1; pentagonal(j) <= n; --j)
        js.push_back(j);
    std::reverse(js.begin(), js.end());
    for (std::int64_t j = 0; pentagonal(j) <= n; ++j)
        js.push_back(j);
    return js;
}

CheckReport check_thm1(Statistics &stats, std::int64_t n_max, Backend backend)
{
    return run_check("thm1", {{"n_max", n_max}}, [&](CheckReport &r) {
        const Source src(stats, backend);
        for (std::int64_t n = 0; n <= n_max; ++n)
            compare(r, {{"n", n}}, src(Stat::u, 0, n), src(Stat::u, 1, n) - src(Stat::u, 2, n));
        r.notes.push_back("backend " + to_string(backend));
    });
}

CheckReport check_thm2(Statistics &stats, int m, std::int64_t k, std::int64_t n_max, Backend backend)
{
    require_m(m);
    require_k(k);
    return run_check("thm2", {{"m", m}, {"k", k}, {"n_max", n_max}}, [&](CheckReport &r) {
        const Source src(stats, backend);
        for (std::int64_t n = 1; n <= n_max; ++n)
            compare(r, {{"m", m}, {"k", k}, {"n", n}}, thm2_lhs(src, m, k, n),
                    crank_convolution(src, m, Stat::M, k, n));
    });
}

CheckReport check_thm3(Statistics &stats, int m, std::int64_t k, std::int64_t n_max, Backend backend)
{
    require_m(m);
    require_k(k);
    return run_check("thm3", {{"m", m}, {"k", k}, {"n_max", n_max}}, [&](CheckReport &r) {
        const Source src(stats, backend);
        for (std::int64_t n = 1; n <= n_max; ++n)
            compare(r, {{"m", m}, {"k", k}, {"n", n}}, thm3_lhs(src, m, k, n),
                    crank_convolution(src, m, Stat::P_tilde, k, n));
    });
}

CheckReport check_cor2(Statistics &stats, int m, std::int64_t k, std::int64_t n_max, Backend backend)
{
    require_m(m);
    require_k(k);
    return run_check("cor2", {{"m", m}, {"k", k}, {"n_max", n_max}}, [&](CheckReport &r) {
        const Source src(stats, backend);
        const std::int64_t bound = upper_pentagonal(k);
        std::int64_t strict = 0, eligible = 0;
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const BigInt lhs = thm2_lhs(src, m, k, n);
            ++r.cases;
            const Params at{{"m", m}, {"k", k}, {"n", n}};
            if (lhs < 0)
                r.fail(Counterexample{at, lhs, 0, "negative"});
            if (n < bound && lhs != 0)
                r.fail(Counterexample{at, lhs, 0, "nonzero below k(3k+1)/2"});
            if (n >= bound) {
                ++eligible;
                strict += lhs > 0 ? 1 : 0;
            }
        }
        r.notes.push_back("strictly positive at " + std::to_string(strict) + " of " + std::to_string(eligible) +
                          " points with n >= " + std::to_string(bound));
    });
}

CheckReport check_cor2_strict(Statistics &stats, int m, std::int64_t k, std::int64_t n_max, Backend backend)
{
    require_m(m);
    require_k(k);
    return run_check("cor2_strict", {{"m", m}, {"k", k}, {"n_max", n_max}}, [&](CheckReport &r) {
        const Source src(stats, backend);
        for (std::int64_t n = std::max<std::int64_t>(1, upper_pentagonal(k)); n <= n_max; ++n) {
            const BigInt lhs = thm2_lhs(src, m, k, n);
            ++r.cases;
            if (lhs <= 0)
                r.fail(Counterexample{{{"m", m}, {"k", k}, {"n", n}}, lhs, 0, "not strictly positive"});
        }
    });
}

CheckReport check_cor4_ineq(Statistics &stats, int m, std::int64_t k, std::int64_t n_max, Backend backend)
{
    require_m(m);
    require_k(k);
    return run_check("cor4_ineq", {{"m", m}, {"k", k}, {"n_max", n_max}}, [&](CheckReport &r) {
        const Source src(stats, backend);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const BigInt lhs = thm3_lhs(src, m, k, n);
            ++r.cases;
            if (lhs < 0)
                r.fail(Counterexample{{{"m", m}, {"k", k}, {"n", n}}, lhs, 0, "negative"});
        }
    });
}

CheckReport check_cor4(Statistics &stats, int m, std::int64_t n_max, Backend backend)
{
    require_m(m);
    return run_check("cor4", {{"m", m}, {"n_max", n_max}}, [&](CheckReport &r) {
        const Source src(stats, backend);
        for (std::int64_t n = 0; n <= n_max; ++n) {
            BigInt rhs = 0;
            for (std::int64_t j : pentagonal_window(n))
                rhs += signed_term(j, src(Stat::u, m, n - pentagonal(j)));
            compare(r, {{"m", m}, {"n", n}}, src(Stat::C, m, n), rhs);
        }
    });
}

CheckReport check_cor5(Statistics &stats, int m, std::int64_t k, std::int64_t n_max, Backend backend)
{
    require_m(m);
    require_k(k);
    return run_check("cor5", {{"m", m}, {"k", k}, {"n_max", n_max}}, [&](CheckReport &r) {
        const Source src(stats, backend);
        const std::int64_t shift = upper_pentagonal(k);
        for (std::int64_t n = 0; n <= n_max; ++n) {
            // Beyond j = n + K the argument of C_m is negative.
            BigInt rhs = 0, via_p = 0;
            for (std::int64_t j = 0; j <= n + shift; ++j) {
                const BigInt c = src(Stat::C, m, n + shift - j);
                if (c == 0)
                    continue;
                rhs += c * (src(Stat::M, k, j) + src(Stat::P_tilde, k, j));
                via_p += c * src.p(j - shift);
            }
            const BigInt lhs = src(Stat::u, m, n);
            const Params at{{"m", m}, {"k", k}, {"n", n}};
            compare(r, at, lhs, rhs, "M_k + P~_k form");
            compare(r, at, lhs, via_p, "p(j - K) form");
        }
    });
}

CheckReport check_xz(Statistics &stats, std::int64_t k, std::int64_t n_max, Backend backend)
{
    require_k(k);
    return run_check("xz", {{"k", k}, {"n_max", n_max}}, [&](CheckReport &r) {
        const Source src(stats, backend);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            BigInt sum = 0;
            for (std::int64_t j = -k; j <= k; ++j)
                sum += signed_term(j, src.p(n - upper_pentagonal(j)));
            if (k % 2 != 0)
                sum = -sum;
            compare(r, {{"k", k}, {"n", n}}, sum, src(Stat::P_tilde, k, n));
        }
    });
}

CheckReport check_k1_genk(Statistics &stats, std::int64_t k, std::int64_t n_max, Backend backend)
{
    require_k(k);
    return run_check("k1_genk", {{"k", k}, {"n_max", n_max}}, [&](CheckReport &r) {
        const Source src(stats, backend);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const Params at{{"k", k}, {"n", n}};
            if (k == 1)
                compare(r, at, src.p(n - 1) + src.p(n - 2) - src.p(n), src(Stat::P_tilde, 1, n));
            else
                compare(r, at, src.p(n - pentagonal(k)) + src.p(n - upper_pentagonal(k)),
                        src(Stat::P_tilde, k - 1, n) + src(Stat::P_tilde, k, n));
        }
    });
}

CheckReport check_mp(Statistics &stats, std::int64_t k, std::int64_t n_max, Backend backend)
{
    require_k(k);
    return run_check("mp", {{"k", k}, {"n_max", n_max}}, [&](CheckReport &r) {
        const Source src(stats, backend);
        for (std::int64_t n = 0; n <= n_max; ++n)
            compare(r, {{"k", k}, {"n", n}}, src.p(n - upper_pentagonal(k)),
                    src(Stat::M, k, n) + src(Stat::P_tilde, k, n));
    });
}

CheckReport check_pentagonal_step(Statistics &stats, int m, std::int64_t k, std::int64_t n_max, Backend backend)
{
    require_m(m);
    require_k(k);
    return run_check("step", {{"m", m}, {"k", k}, {"n_max", n_max}}, [&](CheckReport &r) {
        const Source src(stats, backend);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const BigInt target = src(Stat::u, m, n - upper_pentagonal(k));
            const Params at{{"m", m}, {"k", k}, {"n", n}};
            compare(r, at, thm2_lhs(src, m, k, n) + thm3_lhs(src, m, k, n), target, "left sides");
            compare(r, at,
                    crank_convolution(src, m, Stat::M, k, n) + crank_convolution(src, m, Stat::P_tilde, k, n),
                    target, "right sides");
        }
    });
}

CheckReport explore_mk_ptilde(Statistics &stats, std::int64_t k, std::int64_t n_max)
{
    require_k(k, 2);
    const std::int64_t limit = std::min<std::int64_t>(n_max, stats.config().partition_cutoff);
    return run_check("mk_ptilde", {{"k", k}, {"n_max", limit}}, [&](CheckReport &r) {
        std::int64_t agree = 0;
        for (std::int64_t n = 0; n <= limit; ++n) {
            std::int64_t count = 0;
            for_each_partition(static_cast<int>(n), [&](const Partition &p) {
                if (in_p_tilde(p, static_cast<int>(k - 1)) && !p.contains(static_cast<int>(k)))
                    ++count;
            });
            ++r.cases;
            const BigInt mk = stats.M(k, n, Backend::enumeration);
            if (mk == count)
                ++agree;
            else
                r.notes.push_back("n=" + std::to_string(n) + ": M_k=" + mk.get_str() +
                                  ", P~_{k-1} without k=" + std::to_string(count));
        }
        r.notes.push_back("agree at " + std::to_string(agree) + " of " + std::to_string(r.cases) + " points");
    });
}

CheckReport check_series_identities(std::int64_t N, std::int64_t k_max)
{
    if (N < 0)
        throw std::invalid_argument("series order must be >= 0");
    require_k(k_max);
    return run_check("series", {{"N", N}, {"k_max", k_max}}, [&](CheckReport &r) {
        const auto order = static_cast<std::size_t>(N);
        const auto P = partition_gf(order);
        const auto one = TruncatedSeries::one(order);
        compare_series(r, "pentagonal theorem", {}, P * pentagonal_sum_all(order), one);

        const auto P2 = P * P;
        const auto u0 = u_gf(0, order), u1 = u_gf(1, order), u2 = u_gf(2, order);
        compare_series(r, "u_0 two-sum form", {}, u0, -(P2 * signed_triangular_sum(1, order)));
        compare_series(r, "u_1 two-sum form", {}, u1, P2 * signed_triangular_sum(0, order));
        compare_series(r, "u_0 = u_1 - u_2", {}, u0, u1 - u2);

        const TruncatedSeries *u[] = {&u0, &u1, &u2};
        std::vector<TruncatedSeries> crank;
        for (int m = 0; m <= 2; ++m) {
            crank.push_back(crank_cumulative_gf(m, order));
            compare_series(r, "u_m = P * C_m", {{"m", m}}, *u[m], P * crank.back());
        }

        TruncatedSeries all(order), positive(order), nonnegative(order);
        for (std::int64_t k = -N; k <= N; ++k) {
            const auto nv = nv_gf(k, order);
            all += nv;
            if (k > 0)
                positive += nv;
            if (k >= 0)
                nonnegative += nv;
            if (k == 0)
                compare_series(r, "N_V(0,.) = C_2", {}, nv, crank[2]);
        }
        compare_series(r, "sum_k N_V = p", {}, all, P);
        compare_series(r, "sum_{k>0} N_V = C_0", {}, positive, crank[0]);
        compare_series(r, "sum_{k>=0} N_V = C_1", {}, nonnegative, crank[1]);

        for (std::int64_t k = 1; k <= k_max; ++k) {
            const BigInt sign = k % 2 == 1 ? 1 : -1; // (-1)^{k-1}
            compare_series(r, "TPNT", {{"k", k}}, P * pentagonal_sum(1 - k, k, order) * sign,
                           one * sign + mk_gf(k, order));
            compare_series(r, "TPNT2", {{"k", k}}, P * pentagonal_sum(-k, k, order),
                           one - pk_tilde_gf(k, order) * sign);
        }

        const auto boxes = box_counts(kQbinSide);
        for (int a = 1; a <= kQbinSide; ++a) {
            for (int b = 1; b <= kQbinSide; ++b) {
                const auto qbin = gaussian_binomial(a + b, b, order);
                std::vector<BigInt> cells(order + 1, 0);
                const auto &box = boxes[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                for (std::size_t j = 0; j < box.size() && j <= order; ++j)
                    cells[j] = box[j];
                const TruncatedSeries counted(order, std::move(cells));
                auto product = TruncatedSeries::one(order);
                for (int i = 1; i <= b; ++i) {
                    product.mul_one_minus_q_pow(a + b + 1 - i);
                    product.div_one_minus_q_pow(i);
                }
                compare_series(r, "qbin vs box count", {{"a", a}, {"b", b}}, qbin, counted);
                compare_series(r, "qbin vs product", {{"a", a}, {"b", b}}, qbin, product);
            }
        }
    });
}

unsigned thread_budget()
{
    if (const char *env = std::getenv("CRANKSHAFT_THREADS")) {
        char *end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CheckReport> run_parallel(const std::vector<std::function<CheckReport()>> &jobs, unsigned threads)
{
    std::vector<CheckReport> out(jobs.size());
    const unsigned workers = std::min<std::size_t>(threads ? threads : thread_budget(), std::max<std::size_t>(jobs.size(), 1));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs.size());
    const auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
            try {
                out[i] = jobs[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(work);
    }
    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace crankshaft
