#pragma once

// Finite-range numerical verification of the crank/unimodal identities.
//
// Every check reads statistics through a Backend. With Backend::automatic the
// series value is used and cross-checked against enumeration wherever the
// enumeration cutoff allows; a disagreement is reported as a failure of the
// check itself. Infinite sums are truncated at bounds where every omitted
// term has a negative argument and therefore vanishes.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "crankshaft/report.hpp"
#include "crankshaft/statistics.hpp"

namespace crankshaft {

/// k(3k+1)/2, the size of the smallest partition counted by M_k or P~_k.
constexpr std::int64_t upper_pentagonal(std::int64_t k) noexcept { return k * (3 * k + 1) / 2; }

/// Series order that keeps every check with parameters (n_max, k) inside truncation.
std::size_t default_order(std::int64_t n_max, std::int64_t k);

/// All j with 0 <= j(3j-1)/2 <= n, in increasing order of j.
std::vector<std::int64_t> pentagonal_window(std::int64_t n);

/// u_0(n) = u_1(n) - u_2(n), 0 <= n <= n_max.
CheckReport check_thm1(Statistics &stats, std::int64_t n_max, Backend backend = Backend::automatic);

/// (-1)^k (C_m(n) - sum_{j=1-k}^{k} (-1)^j u_m(n - g(j))) = sum_{j=0}^{n} C_m(j) M_k(n-j), 1 <= n <= n_max.
CheckReport check_thm2(Statistics &stats, int m, std::int64_t k, std::int64_t n_max,
                       Backend backend = Backend::automatic);

/// (-1)^{k-1} (C_m(n) - sum_{j=-k}^{k} (-1)^j u_m(n - g(j))) = sum_{j=0}^{n} C_m(j) P~_k(n-j), 1 <= n <= n_max.
CheckReport check_thm3(Statistics &stats, int m, std::int64_t k, std::int64_t n_max,
                       Backend backend = Backend::automatic);

/// Sign condition of the M_k family: the left side of check_thm2 is >= 0.
/// Also asserts that it vanishes for n < k(3k+1)/2. Strictness is counted in the notes only.
CheckReport check_cor2(Statistics &stats, int m, std::int64_t k, std::int64_t n_max,
                       Backend backend = Backend::automatic);

/// Strict inequality of the M_k family for k(3k+1)/2 <= n <= n_max.
CheckReport check_cor2_strict(Statistics &stats, int m, std::int64_t k, std::int64_t n_max,
                              Backend backend = Backend::automatic);

/// Sign condition of the P~_k family: the left side of check_thm3 is >= 0.
CheckReport check_cor4_ineq(Statistics &stats, int m, std::int64_t k, std::int64_t n_max,
                            Backend backend = Backend::automatic);

/// C_m(n) = sum_j (-1)^j u_m(n - g(j)) over pentagonal_window(n), 0 <= n <= n_max.
CheckReport check_cor4(Statistics &stats, int m, std::int64_t n_max, Backend backend = Backend::automatic);

/// u_m(n) = sum_{j=0}^{n+K} C_m(n+K-j) (M_k(j) + P~_k(j)) with K = k(3k+1)/2, 0 <= n <= n_max.
/// The same sum with p(j - K) in place of M_k + P~_k is asserted alongside.
CheckReport check_cor5(Statistics &stats, int m, std::int64_t k, std::int64_t n_max,
                       Backend backend = Backend::automatic);

/// (-1)^k sum_{j=-k}^{k} (-1)^j p(n - j(3j+1)/2) = P~_k(n), 1 <= n <= n_max.
CheckReport check_xz(Statistics &stats, std::int64_t k, std::int64_t n_max, Backend backend = Backend::automatic);

/// k = 1: p(n-1) + p(n-2) - p(n) = P~_1(n).
/// k >= 2: p(n - k(3k-1)/2) + p(n - k(3k+1)/2) = P~_{k-1}(n) + P~_k(n). Both for 1 <= n <= n_max.
CheckReport check_k1_genk(Statistics &stats, std::int64_t k, std::int64_t n_max,
                          Backend backend = Backend::automatic);

/// p(n - k(3k+1)/2) = M_k(n) + P~_k(n), 0 <= n <= n_max.
CheckReport check_mp(Statistics &stats, std::int64_t k, std::int64_t n_max, Backend backend = Backend::automatic);

/// check_thm2 and check_thm3 added together: both sides reduce to u_m(n - k(3k+1)/2).
CheckReport check_pentagonal_step(Statistics &stats, int m, std::int64_t k, std::int64_t n_max,
                                  Backend backend = Backend::automatic);

/// Report only: compares M_k(n) with the number of partitions in P~_{k-1}(n)
/// having no part equal to k, for 2 <= k and n within the partition cutoff.
/// Always passes; disagreements are listed in the notes.
CheckReport explore_mk_ptilde(Statistics &stats, std::int64_t k, std::int64_t n_max);

/// Coefficient-wise series identities to order N: pentagonal theorem, the
/// two-sum forms of u_0 and u_1, the relation between u_m and C_m, crank sums
/// of N_V, u_0 = u_1 - u_2, both truncated pentagonal theorems for
/// 1 <= k <= k_max, and Gaussian binomials against a bounded-partition count.
CheckReport check_series_identities(std::int64_t N, std::int64_t k_max);

/// Runs jobs on up to `threads` workers and returns reports in job order.
/// threads == 0 reads CRANKSHAFT_THREADS, falling back to the hardware count.
std::vector<CheckReport> run_parallel(const std::vector<std::function<CheckReport()>> &jobs, unsigned threads = 0);

/// Worker count from CRANKSHAFT_THREADS or the hardware.
unsigned thread_budget();

} // namespace crankshaft
