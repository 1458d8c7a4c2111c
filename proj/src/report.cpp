#include "crankshaft/report.hpp"

#include <sstream>

namespace crankshaft {

void CheckReport::fail(Counterexample c)
{
    ++violations;
    if (!counterexample)
        counterexample = std::move(c);
}

void to_json(nlohmann::json &j, const Counterexample &c)
{
    j = nlohmann::json{{"at", c.at}, {"lhs", c.lhs.get_str()}, {"rhs", c.rhs.get_str()}};
    if (!c.detail.empty())
        j["detail"] = c.detail;
}

void to_json(nlohmann::json &j, const CheckReport &r)
{
    j = nlohmann::json{{"check", r.name},
                       {"range", r.range},
                       {"status", r.passed() ? "pass" : "fail"},
                       {"cases", r.cases},
                       {"violations", r.violations},
                       {"elapsed_ms", r.elapsed_ms}};
    j["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr);
    if (!r.notes.empty())
        j["notes"] = r.notes;
}

std::string summary_line(const CheckReport &r)
{
    std::ostringstream out;
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " [";
    bool first = true;
    for (const auto &[key, value] : r.range) {
        out << (first ? "" : " ") << key << '=' << value;
        first = false;
    }
    out << "] " << r.cases << " cases";
    if (r.counterexample) {
        out << ", " << r.violations << " violation(s); first at";
        for (const auto &[key, value] : r.counterexample->at)
            out << ' ' << key << '=' << value;
        out << ": lhs=" << r.counterexample->lhs.get_str() << " rhs=" << r.counterexample->rhs.get_str();
        if (!r.counterexample->detail.empty())
            out << " (" << r.counterexample->detail << ')';
    }
    return out.str();
}

} // namespace crankshaft
