#include "crankshaft/cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "crankshaft/bijections.hpp"
#include "crankshaft/identities.hpp"
#include "crankshaft/qseries.hpp"
#include "crankshaft/statistics.hpp"

namespace crankshaft::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string stat, check, map, name, backend = "auto", format, out_path, m_range, k_range;
    long long j = 0, from = 0, to = 20, n = 0, order = 0;
    long long s = 1;
    bool witness = false;
    bool timings = false;
};

long long parse_int(std::string_view text)
{
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    return v;
}

// Single writer for everything a command produces: stdout or --out.
class Sink {
public:
    Sink(const std::string &path, std::ostream &fallback)
    {
        if (path.empty()) {
            stream_ = &fallback;
            return;
        }
        file_.open(path);
        if (!file_)
            throw UsageError("cannot open output file " + path);
        stream_ = &file_;
    }
    std::ostream &operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream *stream_ = nullptr;
};

// ---------------------------------------------------------------------------
// table

int cmd_table(const Options &o, bool has_m, bool has_k, bool has_from, std::ostream &out)
{
    const Stat stat = parse_stat(o.stat);
    const std::string key = param_name(stat);
    std::int64_t param = 0;
    if (key == "m") {
        if (!has_m)
            throw UsageError("statistic " + o.stat + " needs --m");
        param = parse_int(o.m_range);
    } else if (key == "k") {
        if (!has_k)
            throw UsageError("statistic " + o.stat + " needs --k");
        param = parse_int(o.k_range);
    }
    const std::int64_t from = has_from ? o.from : (stat == Stat::crank_count ? 1 : 0);
    if (o.to < from)
        throw UsageError("empty range --from " + std::to_string(from) + " --to " + std::to_string(o.to));
    if (stat == Stat::crank_count && from < 1)
        throw UsageError("crank counts need n >= 1");
    const std::string format = o.format.empty() ? "csv" : o.format;

    Statistics stats;
    Sink sink(o.out_path, out);
    if (o.backend != "both") {
        const StatTable t = stats.table(stat, param, from, o.to, parse_backend(o.backend));
        if (format == "json")
            *sink << nlohmann::json(t).dump() << '\n';
        else
            t.write_csv(*sink);
        return kExitOk;
    }

    const StatTable e = stats.table(stat, param, from, o.to, Backend::enumeration);
    const StatTable s = stats.table(stat, param, from, o.to, Backend::series);
    bool all_match = true;
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream csv;
    csv << "n,enum,series,match\n";
    for (const auto &[n, ev] : e.values) {
        const BigInt &sv = s.values.at(n);
        const bool match = ev == sv;
        all_match = all_match && match;
        csv << n << ',' << ev.get_str() << ',' << sv.get_str() << ',' << (match ? "true" : "false") << '\n';
        rows.push_back({{"n", n}, {"enum", ev.get_str()}, {"series", sv.get_str()}, {"match", match}});
    }
    if (format == "json")
        *sink << nlohmann::json{{"name", e.name}, {"params", e.params}, {"rows", rows}}.dump() << '\n';
    else
        *sink << csv.str();
    return all_match ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// verify

const std::vector<std::string> &check_names()
{
    static const std::vector<std::string> names{"thm1", "thm2", "thm3",   "cor2",      "cor2_strict",
                                                "cor4_ineq", "cor4", "cor5", "xz", "k1_genk",
                                                "mp", "step", "series", "mk_ptilde", "all"};
    return names;
}

int cmd_verify(const Options &o, bool has_m, bool has_k, bool has_order, std::ostream &out)
{
    if (std::find(check_names().begin(), check_names().end(), o.check) == check_names().end())
        throw UsageError("unknown check '" + o.check + "'");
    const auto ms = parse_range(has_m ? o.m_range : "0..2");
    const auto ks = parse_range(has_k ? o.k_range : "1..3");
    for (auto m : ms)
        if (m < 0 || m > 2)
            throw UsageError("--m values must lie in 0..2");
    for (auto k : ks)
        if (k < 1)
            throw UsageError("--k values must be >= 1");
    if (o.to < 0)
        throw UsageError("--to must be >= 0");
    const Backend backend = parse_backend(o.backend);
    const std::int64_t n_max = o.to;
    const std::int64_t k_max = ks.back();
    const std::size_t order = has_order ? static_cast<std::size_t>(o.order) : default_order(n_max, k_max);
    if (has_order && o.order < n_max)
        throw UsageError("--order must be at least --to");

    Statistics stats;
    if (backend != Backend::enumeration)
        stats.reserve(order);

    std::vector<std::function<CheckReport()>> jobs;
    // "all" leaves out cor2_strict, which fails at known boundary points; cor2 reports strictness in its notes.
    const auto wants = [&](const char *name) {
        return o.check == name || (o.check == "all" && std::string_view(name) != "cor2_strict");
    };
    using MK = CheckReport (*)(Statistics &, int, std::int64_t, std::int64_t, Backend);
    const auto per_mk = [&](const char *name, MK fn) {
        if (!wants(name))
            return;
        for (auto m : ms)
            for (auto k : ks)
                jobs.emplace_back([&, fn, m, k] { return fn(stats, static_cast<int>(m), k, n_max, backend); });
    };
    using K = CheckReport (*)(Statistics &, std::int64_t, std::int64_t, Backend);
    const auto per_k = [&](const char *name, K fn) {
        if (!wants(name))
            return;
        for (auto k : ks)
            jobs.emplace_back([&, fn, k] { return fn(stats, k, n_max, backend); });
    };

    if (wants("thm1"))
        jobs.emplace_back([&] { return check_thm1(stats, n_max, backend); });
    per_mk("thm2", check_thm2);
    per_mk("thm3", check_thm3);
    per_mk("cor2", check_cor2);
    per_mk("cor2_strict", check_cor2_strict);
    per_mk("cor4_ineq", check_cor4_ineq);
    if (wants("cor4"))
        for (auto m : ms)
            jobs.emplace_back([&, m] { return check_cor4(stats, static_cast<int>(m), n_max, backend); });
    per_mk("cor5", check_cor5);
    per_k("xz", check_xz);
    per_k("k1_genk", check_k1_genk);
    per_k("mp", check_mp);
    per_mk("step", check_pentagonal_step);
    if (wants("series"))
        jobs.emplace_back([&] { return check_series_identities(static_cast<std::int64_t>(order), k_max); });
    if (wants("mk_ptilde"))
        for (auto k : ks)
            if (k >= 2)
                jobs.emplace_back([&, k] { return explore_mk_ptilde(stats, k, n_max); });

    auto reports = run_parallel(jobs);
    bool ok = true;
    for (auto &r : reports) {
        ok = ok && r.passed();
        r.notes.push_back("series order N=" + std::to_string(order));
    }

    Sink sink(o.out_path, out);
    if (o.format == "json") {
        nlohmann::json array = reports;
        if (!o.timings)
            for (auto &entry : array)
                entry.erase("elapsed_ms");
        *sink << array.dump(2) << '\n';
    } else {
        *sink << "series order N=" << order << '\n';
        for (const auto &r : reports) {
            *sink << summary_line(r) << '\n';
            for (const auto &note : r.notes)
                if (note.rfind("series order", 0) != 0)
                    *sink << "  " << note << '\n';
        }
    }
    return ok ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// biject

int cmd_biject(const Options &o, bool has_m, bool has_k, bool has_j, std::ostream &out, std::ostream &err)
{
    const auto &names = bijection_names();
    if (std::find(names.begin(), names.end(), o.map) == names.end())
        throw UsageError("unknown map '" + o.map + "'");
    if (o.n < 0)
        throw UsageError("--n must be >= 0");
    Params params;
    if (has_m)
        params["m"] = parse_int(o.m_range);
    if (has_k)
        params["k"] = parse_int(o.k_range);
    if (has_j)
        params["j"] = o.j;

    Sink sink(o.out_path, out);
    WitnessSink witness;
    if (o.witness)
        witness = [&](const BijectionWitness &w) { *sink << nlohmann::json(w).dump() << '\n'; };
    const CheckReport r = verify_bijection(o.map, params, static_cast<int>(o.n), witness);
    if (o.witness)
        err << summary_line(r) << '\n';
    else if (o.format == "json")
        *sink << nlohmann::json(r).dump(2) << '\n';
    else {
        *sink << summary_line(r) << '\n';
        for (const auto &note : r.notes)
            *sink << "  " << note << '\n';
    }
    return r.passed() ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// series

int cmd_series(const Options &o, bool has_m, bool has_k, bool has_n, std::ostream &out)
{
    if (o.order < 0)
        throw UsageError("--order must be >= 0");
    const auto N = static_cast<std::size_t>(o.order);
    const auto need = [&](bool given, const char *flag) {
        if (!given)
            throw UsageError("series " + o.name + " needs " + flag);
    };
    const auto m = [&] { need(has_m, "--m"); return static_cast<int>(parse_int(o.m_range)); };
    const auto k = [&] { need(has_k, "--k"); return static_cast<std::int64_t>(parse_int(o.k_range)); };

    std::optional<TruncatedSeries> s;
    if (o.name == "partition_gf")
        s = partition_gf(N);
    else if (o.name == "pentagonal")
        s = pentagonal_sum_all(N);
    else if (o.name == "pochhammer_inf")
        s = pochhammer_inf(o.s, N);
    else if (o.name == "u_gf")
        s = u_gf(m(), N);
    else if (o.name == "crank_gf")
        s = crank_cumulative_gf(m(), N);
    else if (o.name == "nv_gf")
        s = nv_gf(k(), N);
    else if (o.name == "mk_gf")
        s = mk_gf(k(), N);
    else if (o.name == "pk_tilde_gf")
        s = pk_tilde_gf(k(), N);
    else if (o.name == "gaussian_binomial") {
        need(has_n, "--n");
        s = gaussian_binomial(o.n, k(), N);
    } else if (o.name == "signed_triangular_sum")
        s = signed_triangular_sum(o.from, N);
    else
        throw UsageError("unknown series '" + o.name + "'");

    Sink sink(o.out_path, out);
    if (o.format == "json")
        *sink << nlohmann::json(*s).dump() << '\n';
    else
        *sink << to_csv_line(*s) << '\n';
    return kExitOk;
}

} // namespace

std::vector<long long> parse_range(const std::string &text)
{
    const auto dots = text.find("..");
    const long long lo = parse_int(std::string_view(text).substr(0, dots));
    const long long hi = dots == std::string::npos ? lo : parse_int(std::string_view(text).substr(dots + 2));
    if (hi < lo)
        throw std::invalid_argument("empty range '" + text + "'");
    std::vector<long long> out;
    for (long long v = lo; v <= hi; ++v)
        out.push_back(v);
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Exact crank, unimodal-composition and truncated pentagonal identities"};
    app.name("crankshaft");
    app.require_subcommand(1);

    const std::vector<std::string> formats{"csv", "json"};
    const std::vector<std::string> report_formats{"text", "json"};
    const std::vector<std::string> backends{"auto", "enum", "series", "both"};

    auto *table = app.add_subcommand("table", "Tabulate a statistic");
    table->add_option("--stat", o.stat, "p, u, crank, C, M, Ptilde or NV")->required();
    auto *t_m = table->add_option("--m", o.m_range, "m for u and C");
    auto *t_k = table->add_option("--k", o.k_range, "k for crank, M, Ptilde and NV");
    auto *t_from = table->add_option("--from", o.from, "first n");
    table->add_option("--to", o.to, "last n")->capture_default_str();
    table->add_option("--backend", o.backend, "auto, enum, series or both")->check(CLI::IsMember(backends));
    table->add_option("--format", o.format, "csv or json")->check(CLI::IsMember(formats));
    table->add_option("--out", o.out_path, "write to this file");

    auto *verify = app.add_subcommand("verify", "Run identity checks");
    verify->add_option("--check", o.check, "check name or 'all'")->required();
    auto *v_m = verify->add_option("--m", o.m_range, "m or range a..b (default 0..2)");
    auto *v_k = verify->add_option("--k", o.k_range, "k or range a..b (default 1..3)");
    verify->add_option("--to", o.to, "largest n")->capture_default_str();
    auto *v_order = verify->add_option("--order", o.order, "series order (default n_max + 2 k(3k+1)/2)");
    verify->add_option("--backend", o.backend, "auto, enum or series")
        ->check(CLI::IsMember(std::vector<std::string>{"auto", "enum", "series"}));
    verify->add_option("--format", o.format, "text or json")->check(CLI::IsMember(report_formats));
    verify->add_option("--out", o.out_path, "write to this file");
    verify->add_flag("--timings", o.timings, "include elapsed_ms in JSON reports");

    auto *biject = app.add_subcommand("biject", "Verify a bijection exhaustively");
    biject->add_option("--map", o.map, "thm1, franklin, sec5_psi, sec6_split, sec6_f or sec6_g")->required();
    biject->add_option("--n", o.n, "size")->required();
    auto *b_m = biject->add_option("--m", o.m_range, "m for sec5_psi");
    auto *b_j = biject->add_option("--j", o.j, "staircase index for sec5_psi");
    auto *b_k = biject->add_option("--k", o.k_range, "k for sec6_g");
    biject->add_flag("--witness", o.witness, "stream one JSON line per domain object");
    biject->add_option("--format", o.format, "text or json")->check(CLI::IsMember(report_formats));
    biject->add_option("--out", o.out_path, "write to this file");

    auto *series = app.add_subcommand("series", "Expand a generating function");
    series->add_option("--name", o.name,
                       "partition_gf, pentagonal, pochhammer_inf, u_gf, crank_gf, nv_gf, mk_gf, pk_tilde_gf, "
                       "gaussian_binomial or signed_triangular_sum")
        ->required();
    series->add_option("--order", o.order, "truncation order N")->required();
    auto *s_m = series->add_option("--m", o.m_range, "m for u_gf and crank_gf");
    auto *s_k = series->add_option("--k", o.k_range, "k for nv_gf, mk_gf, pk_tilde_gf, gaussian_binomial");
    auto *s_n = series->add_option("--n", o.n, "n for gaussian_binomial");
    series->add_option("--s", o.s, "start s of (q^s;q)_inf")->capture_default_str();
    series->add_option("--from", o.from, "first index of signed_triangular_sum");
    series->add_option("--format", o.format, "csv or json")->check(CLI::IsMember(formats));
    series->add_option("--out", o.out_path, "write to this file");

    std::vector<const char *> argv{"crankshaft"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*table)
            return cmd_table(o, t_m->count() > 0, t_k->count() > 0, t_from->count() > 0, out);
        if (*verify)
            return cmd_verify(o, v_m->count() > 0, v_k->count() > 0, v_order->count() > 0, out);
        if (*biject)
            return cmd_biject(o, b_m->count() > 0, b_k->count() > 0, b_j->count() > 0, out, err);
        return cmd_series(o, s_m->count() > 0, s_k->count() > 0, s_n->count() > 0, out);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace crankshaft::cli
