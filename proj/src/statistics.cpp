#include "crankshaft/statistics.hpp"

#include <algorithm>
#include <sstream>

#include "crankshaft/objects.hpp"

namespace crankshaft {

namespace {

constexpr std::size_t kMinSeriesOrder = 64;

void require_m(int m)
{
    if (m < 0 || m > 2)
        throw std::invalid_argument("m must be 0, 1 or 2");
}

void require_k(std::int64_t k)
{
    if (k < 1)
        throw std::invalid_argument("k must be >= 1");
}

bool counts_for_M(const Partition &p, std::int64_t k)
{
    for (std::int64_t i = 1; i < k; ++i)
        if (!p.contains(static_cast<int>(i)))
            return false;
    if (p.contains(static_cast<int>(k)))
        return false;
    std::int64_t above = 0, below = 0;
    for (int part : p.parts())
        (part > k ? above : below) += 1;
    return above > below;
}

bool counts_for_P_tilde(const Partition &p, std::int64_t k)
{
    for (std::int64_t i = 1; i <= k; ++i)
        if (!p.contains(static_cast<int>(i)))
            return false;
    const auto first = p.first_part_above(static_cast<int>(k));
    return first && p.multiplicity(*first) >= k + 1;
}

} // namespace

std::string to_string(Stat s)
{
    switch (s) {
    case Stat::p: return "p";
    case Stat::u: return "u";
    case Stat::crank_count: return "crank";
    case Stat::C: return "C";
    case Stat::M: return "M";
    case Stat::P_tilde: return "Ptilde";
    case Stat::N_V: return "NV";
    }
    return "?";
}

std::string to_string(Backend b)
{
    switch (b) {
    case Backend::automatic: return "auto";
    case Backend::enumeration: return "enum";
    case Backend::series: return "series";
    }
    return "?";
}

Stat parse_stat(const std::string &name)
{
    for (Stat s : {Stat::p, Stat::u, Stat::crank_count, Stat::C, Stat::M, Stat::P_tilde, Stat::N_V})
        if (to_string(s) == name)
            return s;
    throw std::invalid_argument("unknown statistic '" + name + "' (expected p, u, crank, C, M, Ptilde or NV)");
}

Backend parse_backend(const std::string &name)
{
    for (Backend b : {Backend::automatic, Backend::enumeration, Backend::series})
        if (to_string(b) == name)
            return b;
    throw std::invalid_argument("unknown backend '" + name + "' (expected auto, enum or series)");
}

std::string param_name(Stat s)
{
    switch (s) {
    case Stat::p: return "";
    case Stat::u:
    case Stat::C: return "m";
    default: return "k";
    }
}

void StatTable::write_csv(std::ostream &out) const
{
    out << "n,value\n";
    for (const auto &[n, v] : values)
        out << n << ',' << v.get_str() << '\n';
}

void to_json(nlohmann::json &j, const StatTable &t)
{
    auto values = nlohmann::json::array();
    for (const auto &[n, v] : t.values)
        values.push_back({{"n", n}, {"value", v.get_str()}});
    j = nlohmann::json{{"name", t.name}, {"params", t.params}, {"provenance", to_string(t.provenance)},
                       {"values", std::move(values)}};
}

BackendMismatch::BackendMismatch(Stat s, std::int64_t prm, std::int64_t at, const BigInt &enumerated,
                                 const BigInt &from_series)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg << "backend mismatch for " << to_string(s) << " (param " << prm << ") at n=" << at
              << ": enumeration " << enumerated.get_str() << " vs series " << from_series.get_str();
          return msg.str();
      }()),
      stat(s), param(prm), n(at)
{
}

Statistics::Statistics(StatConfig config) : config_(config) {}

// ---------------------------------------------------------------------------
// p(n)

BigInt Statistics::p(std::int64_t n)
{
    if (n < 0)
        return 0;
    const auto idx = static_cast<std::size_t>(n);
    {
        std::shared_lock lock(p_mutex_);
        if (idx < p_table_.size())
            return p_table_[idx];
    }
    std::unique_lock lock(p_mutex_);
    if (p_table_.empty())
        p_table_.emplace_back(1);
    // p(i) = sum_{j != 0} (-1)^{j+1} p(i - j(3j-1)/2)
    for (std::size_t i = p_table_.size(); i <= idx; ++i) {
        BigInt acc = 0;
        const auto si = static_cast<std::int64_t>(i);
        for (std::int64_t j = 1;; ++j) {
            const std::int64_t a = pentagonal(j), b = pentagonal(-j);
            if (a > si)
                break;
            BigInt term = p_table_[static_cast<std::size_t>(si - a)];
            if (b <= si)
                term += p_table_[static_cast<std::size_t>(si - b)];
            if (j % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p_table_.push_back(acc);
    }
    return p_table_[idx];
}

BigInt Statistics::p(std::int64_t n, Backend backend)
{
    if (backend == Backend::automatic)
        return p(n);
    if (n < 0)
        return 0;
    return backend == Backend::series ? series_coeff(Stat::p, 0, n) : enumerate(Stat::p, 0, n);
}

// ---------------------------------------------------------------------------
// Public statistics

BigInt Statistics::u(int m, std::int64_t n, Backend backend)
{
    require_m(m);
    return value(Stat::u, m, n, backend);
}

BigInt Statistics::crank_count(std::int64_t k, std::int64_t n, Backend backend)
{
    if (n < 1)
        throw std::invalid_argument("crank_count: n must be >= 1");
    return value(Stat::crank_count, k, n, backend);
}

BigInt Statistics::C(int m, std::int64_t n, Backend backend)
{
    require_m(m);
    return value(Stat::C, m, n, backend);
}

BigInt Statistics::M(std::int64_t k, std::int64_t n, Backend backend)
{
    require_k(k);
    return value(Stat::M, k, n, backend);
}

BigInt Statistics::P_tilde(std::int64_t k, std::int64_t n, Backend backend)
{
    require_k(k);
    return value(Stat::P_tilde, k, n, backend);
}

BigInt Statistics::N_V(std::int64_t k, std::int64_t n, Backend backend)
{
    return value(Stat::N_V, k, n, backend);
}

bool Statistics::enumerable(Stat stat, std::int64_t n) const noexcept
{
    switch (stat) {
    case Stat::u: return n <= config_.composition_cutoff;
    case Stat::N_V: return n <= config_.vector_cutoff;
    default: return n <= config_.partition_cutoff;
    }
}

BigInt Statistics::value(Stat stat, std::int64_t param, std::int64_t n, Backend backend)
{
    switch (stat) {
    case Stat::u:
    case Stat::C: require_m(static_cast<int>(param)); break;
    case Stat::M:
    case Stat::P_tilde: require_k(param); break;
    case Stat::crank_count:
        if (n < 1)
            throw std::invalid_argument("crank_count: n must be >= 1");
        break;
    default: break;
    }
    if (stat == Stat::p)
        return p(n, backend);
    if (n < 0)
        return 0;

    if (backend == Backend::automatic)
        backend = enumerable(stat, n) ? Backend::enumeration : Backend::series;

    // C_m is decreed at n = 1 and, having no crank for the empty partition,
    // takes the constant terms of its generating function at n = 0. The series
    // backend produces both on its own.
    if (stat == Stat::C && n <= 1 && backend == Backend::enumeration) {
        static const int at0[] = {0, 1, 1};
        static const int at1[] = {1, 0, -1};
        return n == 0 ? at0[param] : at1[param];
    }
    // The vector-partition series counts (1) differently from the ordinary crank,
    // so n = 1 always takes the direct count: (1) has crank -1.
    if (stat == Stat::crank_count && n == 1)
        return param == -1 ? 1 : 0;

    return backend == Backend::series ? series_coeff(stat, param, n) : enumerate(stat, param, n);
}

BigInt Statistics::checked(Stat stat, std::int64_t param, std::int64_t n)
{
    BigInt from_series = value(stat, param, n, Backend::series);
    if (n >= 0 && enumerable(stat, n)) {
        BigInt enumerated = value(stat, param, n, Backend::enumeration);
        if (enumerated != from_series)
            throw BackendMismatch(stat, param, n, enumerated, from_series);
    }
    return from_series;
}

void Statistics::reserve(std::size_t order)
{
    p(static_cast<std::int64_t>(order));
    for (int m = 0; m <= 2; ++m) {
        series(Stat::u, m, order);
        series(Stat::C, m, order);
    }
}

StatTable Statistics::table(Stat stat, std::int64_t param, std::int64_t from, std::int64_t to, Backend backend)
{
    StatTable t;
    t.name = to_string(stat);
    if (const auto key = param_name(stat); !key.empty())
        t.params[key] = param;
    t.provenance = backend;
    for (std::int64_t n = from; n <= to; ++n)
        t.values[n] = value(stat, param, n, backend);
    return t;
}

// ---------------------------------------------------------------------------
// Series backend

BigInt Statistics::series_coeff(Stat stat, std::int64_t param, std::int64_t n)
{
    const auto s = series(stat, param, static_cast<std::size_t>(n));
    return (*s)[static_cast<std::size_t>(n)];
}

std::shared_ptr<const TruncatedSeries> Statistics::series(Stat stat, std::int64_t param, std::size_t min_order)
{
    // crank_count(k, n) is read from the N_V series (they agree for n != 1).
    const SeriesKey key{stat == Stat::crank_count ? Stat::N_V : stat, stat == Stat::p ? 0 : param};
    std::size_t previous = 0;
    {
        std::shared_lock lock(series_mutex_);
        if (auto it = series_.find(key); it != series_.end()) {
            if (it->second->order() >= min_order)
                return it->second;
            previous = it->second->order();
        }
    }
    // Built outside the lock; concurrent builders produce identical values.
    const std::size_t order = std::max({min_order, 2 * previous, kMinSeriesOrder});
    auto built = std::make_shared<const TruncatedSeries>(build_series(key.first, key.second, order));
    std::unique_lock lock(series_mutex_);
    auto &slot = series_[key];
    if (!slot || slot->order() < built->order())
        slot = std::move(built);
    return slot;
}

TruncatedSeries Statistics::build_series(Stat stat, std::int64_t param, std::size_t order) const
{
    switch (stat) {
    case Stat::p: return partition_gf(order);
    case Stat::u: return u_gf(static_cast<int>(param), order);
    case Stat::C: return crank_cumulative_gf(static_cast<int>(param), order);
    case Stat::M: return mk_gf(param, order);
    case Stat::P_tilde: return pk_tilde_gf(param, order);
    case Stat::N_V:
    case Stat::crank_count: return nv_gf(param, order);
    }
    throw std::logic_error("build_series: unhandled statistic");
}

// ---------------------------------------------------------------------------
// Enumeration backend

BigInt Statistics::enumerate(Stat stat, std::int64_t param, std::int64_t n)
{
    const ValueKey key{stat, param, n};
    {
        std::shared_lock lock(value_mutex_);
        if (auto it = values_.find(key); it != values_.end())
            return it->second;
    }

    BigInt result = 0;
    const int size = static_cast<int>(n);
    switch (stat) {
    case Stat::p: {
        std::int64_t count = 0;
        for_each_partition(size, [&](const Partition &) { ++count; });
        result = static_cast<long>(count);
        break;
    }
    case Stat::u: {
        std::int64_t count = 0;
        if (param == 0)
            for_each_unimodal_composition(size, [&](const Composition &) { ++count; });
        else
            for_each_unimodal_with_max_mult(size, static_cast<int>(param), [&](const Composition &) { ++count; });
        result = static_cast<long>(count);
        break;
    }
    case Stat::crank_count: {
        const auto &hist = crank_histogram(n);
        if (auto it = hist.find(param); it != hist.end())
            result = it->second;
        break;
    }
    case Stat::C: {
        for (const auto &[k, count] : crank_histogram(n))
            if ((param == 0 && k > 0) || (param == 1 && k >= 0) || (param == 2 && k == 0))
                result += count;
        break;
    }
    case Stat::M:
    case Stat::P_tilde: {
        std::int64_t count = 0;
        for_each_partition(size, [&](const Partition &p) {
            if (stat == Stat::M ? counts_for_M(p, param) : counts_for_P_tilde(p, param))
                ++count;
        });
        result = static_cast<long>(count);
        break;
    }
    case Stat::N_V: {
        const auto &hist = vector_histogram(n);
        if (auto it = hist.find(param); it != hist.end())
            result = it->second;
        break;
    }
    }

    std::unique_lock lock(value_mutex_);
    values_.emplace(key, result);
    return result;
}

const std::map<std::int64_t, BigInt> &Statistics::crank_histogram(std::int64_t n)
{
    {
        std::shared_lock lock(value_mutex_);
        if (auto it = crank_hist_.find(n); it != crank_hist_.end())
            return *it->second;
    }
    auto hist = std::make_shared<std::map<std::int64_t, BigInt>>();
    for_each_partition(static_cast<int>(n), [&](const Partition &p) { (*hist)[crank(p)] += 1; });
    std::unique_lock lock(value_mutex_);
    auto &slot = crank_hist_[n];
    if (!slot)
        slot = std::move(hist);
    return *slot;
}

const std::map<std::int64_t, BigInt> &Statistics::vector_histogram(std::int64_t n)
{
    {
        std::shared_lock lock(value_mutex_);
        if (auto it = vector_hist_.find(n); it != vector_hist_.end())
            return *it->second;
    }
    auto hist = std::make_shared<std::map<std::int64_t, BigInt>>();
    for_each_vector_partition(static_cast<int>(n), [&](const VectorPartition &v) { (*hist)[v.crank()] += v.sign(); });
    std::unique_lock lock(value_mutex_);
    auto &slot = vector_hist_[n];
    if (!slot)
        slot = std::move(hist);
    return *slot;
}

} // namespace crankshaft
