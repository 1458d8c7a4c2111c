#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crankshaft/qseries.hpp"

namespace crankshaft {

/// Integer parameters of a check, e.g. {"m": 1, "k": 2, "n": 17}.
using Params = std::map<std::string, std::int64_t>;

struct Counterexample {
    Params at;
    BigInt lhs;
    BigInt rhs;
    std::string detail;
};

/// Outcome of one finite-range verification. Failed iff a counterexample is present.
struct CheckReport {
    std::string name;
    Params range;
    std::optional<Counterexample> counterexample;
    /// Total number of failing parameter points (the counterexample is the first).
    std::int64_t violations = 0;
    std::int64_t cases = 0;
    double elapsed_ms = 0.0;
    std::vector<std::string> notes;

    bool passed() const noexcept { return !counterexample.has_value(); }

    /// Records a failing point; keeps the first one as the witness.
    void fail(Counterexample c);
};

void to_json(nlohmann::json &j, const Counterexample &c);
void to_json(nlohmann::json &j, const CheckReport &r);

/// One-line human summary: "PASS thm1 [n_max=25] 26 cases".
std::string summary_line(const CheckReport &r);

/// Times a scope into report.elapsed_ms.
class ScopedTimer {
public:
    explicit ScopedTimer(CheckReport &r) : report_(r), start_(std::chrono::steady_clock::now()) {}
    ~ScopedTimer()
    {
        report_.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }
    ScopedTimer(const ScopedTimer &) = delete;
    ScopedTimer &operator=(const ScopedTimer &) = delete;

private:
    CheckReport &report_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace crankshaft
