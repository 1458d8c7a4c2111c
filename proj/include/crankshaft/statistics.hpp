#pragma once

// Memoized partition and composition statistics with two independent
// backends: exhaustive object enumeration and generating-function
// coefficients.
//
// Boundary conventions:
//   u_0(0) = 0, u_1(0) = u_2(0) = 1, u_m(n) = 0 for n < 0
//   C_0(0) = 0, C_1(0) = C_2(0) = 1 (constant terms of the crank generating functions)
//   C_0(1) = 1, C_1(1) = 0, C_2(1) = -1
//   p(0) = 1, and every statistic vanishes at negative n.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "crankshaft/qseries.hpp"
#include "crankshaft/report.hpp"

namespace crankshaft {

enum class Stat { p, u, crank_count, C, M, P_tilde, N_V };

/// `automatic` enumerates while n is within the configured cutoff and reads
/// series coefficients beyond it.
enum class Backend { automatic, enumeration, series };

std::string to_string(Stat s);
std::string to_string(Backend b);
/// Accepts p, u, crank, C, M, Ptilde, NV. Throws std::invalid_argument otherwise.
Stat parse_stat(const std::string &name);
/// Accepts auto, enum, series.
Backend parse_backend(const std::string &name);
/// Name of the statistic's parameter ("m" or "k"), empty for p.
std::string param_name(Stat s);

struct StatConfig {
    int composition_cutoff = 30;
    int vector_cutoff = 14;
    int partition_cutoff = 40;
};

struct StatTable {
    std::string name;
    Params params;
    std::map<std::int64_t, BigInt> values;
    Backend provenance = Backend::automatic;

    /// Header "n,value", one row per n, decimal values.
    void write_csv(std::ostream &out) const;
};

void to_json(nlohmann::json &j, const StatTable &t);

class BackendMismatch : public std::runtime_error {
public:
    BackendMismatch(Stat stat, std::int64_t param, std::int64_t n, const BigInt &enumerated, const BigInt &series);

    Stat stat;
    std::int64_t param;
    std::int64_t n;
};

class Statistics {
public:
    explicit Statistics(StatConfig config = {});

    const StatConfig &config() const noexcept { return config_; }

    /// Partition numbers by Euler's pentagonal recurrence.
    BigInt p(std::int64_t n);
    BigInt p(std::int64_t n, Backend backend);

    /// u_m(n), m in {0,1,2}.
    BigInt u(int m, std::int64_t n, Backend backend = Backend::automatic);
    /// Number of partitions of n >= 1 with crank k. Throws std::invalid_argument for n < 1.
    /// At n = 1 both backends return the direct count (the vector-partition
    /// generating function disagrees there).
    BigInt crank_count(std::int64_t k, std::int64_t n, Backend backend = Backend::automatic);
    /// C_m(n), m in {0,1,2}, with the conventions above.
    BigInt C(int m, std::int64_t n, Backend backend = Backend::automatic);
    /// M_k(n), k >= 1.
    BigInt M(std::int64_t k, std::int64_t n, Backend backend = Backend::automatic);
    /// P~_k(n), k >= 1. A part larger than k is required to exist.
    BigInt P_tilde(std::int64_t k, std::int64_t n, Backend backend = Backend::automatic);
    /// Signed vector-partition count N_V(k, n).
    BigInt N_V(std::int64_t k, std::int64_t n, Backend backend = Backend::automatic);

    /// Dispatch by statistic; `param` is m or k (ignored for p).
    BigInt value(Stat stat, std::int64_t param, std::int64_t n, Backend backend = Backend::automatic);

    /// Series value, compared against the enumeration backend whenever n lies
    /// within that backend's cutoff. Throws BackendMismatch on disagreement.
    BigInt checked(Stat stat, std::int64_t param, std::int64_t n);

    /// Whether the enumeration backend is within budget at n.
    bool enumerable(Stat stat, std::int64_t n) const noexcept;

    /// Precompute series-backed statistics to at least this order.
    void reserve(std::size_t order);

    StatTable table(Stat stat, std::int64_t param, std::int64_t from, std::int64_t to,
                    Backend backend = Backend::automatic);

private:
    using SeriesKey = std::pair<Stat, std::int64_t>;
    using ValueKey = std::tuple<Stat, std::int64_t, std::int64_t>;

    BigInt series_coeff(Stat stat, std::int64_t param, std::int64_t n);
    std::shared_ptr<const TruncatedSeries> series(Stat stat, std::int64_t param, std::size_t min_order);
    TruncatedSeries build_series(Stat stat, std::int64_t param, std::size_t order) const;

    BigInt enumerate(Stat stat, std::int64_t param, std::int64_t n);
    const std::map<std::int64_t, BigInt> &crank_histogram(std::int64_t n);
    const std::map<std::int64_t, BigInt> &vector_histogram(std::int64_t n);

    StatConfig config_;

    std::shared_mutex p_mutex_;
    std::vector<BigInt> p_table_;

    std::shared_mutex series_mutex_;
    std::map<SeriesKey, std::shared_ptr<const TruncatedSeries>> series_;

    std::shared_mutex value_mutex_;
    std::map<ValueKey, BigInt> values_;
    std::map<std::int64_t, std::shared_ptr<const std::map<std::int64_t, BigInt>>> crank_hist_;
    std::map<std::int64_t, std::shared_ptr<const std::map<std::int64_t, BigInt>>> vector_hist_;
};

} // namespace crankshaft
