#include "crankshaft/objects.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace crankshaft {

namespace {

std::string join_parts(std::span<const int> parts)
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

} // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
    }
}

Partition Partition::from_multiset(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::sum() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int value) const noexcept
{
    const auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), value, std::greater<>());
    return static_cast<int>(hi - lo);
}

bool Partition::has_distinct_parts() const noexcept
{
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::optional<int> Partition::first_part_above(int k) const noexcept
{
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
        if (*it > k)
            return *it;
    return std::nullopt;
}

Partition Partition::with_parts(int value, int count) const
{
    if (value < 1 || count < 0)
        throw std::invalid_argument("Partition::with_parts: bad value or count");
    auto parts = parts_;
    const auto pos = std::upper_bound(parts.begin(), parts.end(), value, std::greater<>());
    parts.insert(pos, static_cast<std::size_t>(count), value);
    Partition out;
    out.parts_ = std::move(parts);
    return out;
}

Partition Partition::without_parts(int value, int count) const
{
    if (count < 0 || multiplicity(value) < count)
        throw std::domain_error("Partition::without_parts: not enough parts equal to " + std::to_string(value));
    auto parts = parts_;
    const auto pos = std::lower_bound(parts.begin(), parts.end(), value, std::greater<>());
    parts.erase(pos, pos + count);
    Partition out;
    out.parts_ = std::move(parts);
    return out;
}

std::string Partition::to_string() const { return join_parts(parts_); }

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int part : parts_)
        if (part < 1)
            throw std::invalid_argument("Composition: parts must be positive");
}

int Composition::sum() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Composition::max_part() const noexcept
{
    return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

int Composition::max_multiplicity() const noexcept
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), max_part()));
}

int Composition::first_max_index() const noexcept
{
    if (parts_.empty())
        return -1;
    return static_cast<int>(std::max_element(parts_.begin(), parts_.end()) - parts_.begin());
}

int Composition::last_max_index() const noexcept
{
    if (parts_.empty())
        return -1;
    const int top = max_part();
    for (std::size_t i = parts_.size(); i-- > 0;)
        if (parts_[i] == top)
            return static_cast<int>(i);
    return -1;
}

std::string Composition::to_string() const { return join_parts(parts_); }

// ---------------------------------------------------------------------------
// VectorPartition

VectorPartition::VectorPartition(Partition distinct, Partition second, Partition third)
    : pi1(std::move(distinct)), pi2(std::move(second)), pi3(std::move(third))
{
    if (!pi1.has_distinct_parts())
        throw std::invalid_argument("VectorPartition: pi1 must have distinct parts");
}

// ---------------------------------------------------------------------------
// JSON

void to_json(nlohmann::json &j, const Partition &p) { j = p.vec(); }
void from_json(const nlohmann::json &j, Partition &p) { p = Partition(j.get<std::vector<int>>()); }
void to_json(nlohmann::json &j, const Composition &c) { j = c.vec(); }
void from_json(const nlohmann::json &j, Composition &c) { c = Composition(j.get<std::vector<int>>()); }

void to_json(nlohmann::json &j, const VectorPartition &v)
{
    j = nlohmann::json{{"pi1", v.pi1.vec()}, {"pi2", v.pi2.vec()}, {"pi3", v.pi3.vec()}};
}

// ---------------------------------------------------------------------------
// Enumeration

PartitionGenerator::PartitionGenerator(int n, std::optional<int> max_part)
    : n_(n), cap_(max_part.value_or(n))
{
    if (n < 0 || (n > 0 && cap_ < 1))
        done_ = true;
}

void PartitionGenerator::fill_from(std::size_t pos, int remaining, int cap)
{
    parts_.resize(pos);
    while (remaining > 0) {
        const int part = std::min(cap, remaining);
        parts_.push_back(part);
        remaining -= part;
    }
}

std::optional<Partition> PartitionGenerator::next()
{
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        fill_from(0, n_, cap_);
        return Partition(parts_);
    }
    // Rightmost part that can be lowered; everything after it is a run of 1s.
    std::size_t i = parts_.size();
    while (i > 0 && parts_[i - 1] == 1)
        --i;
    if (i == 0) {
        done_ = true;
        return std::nullopt;
    }
    --i;
    const int ones = static_cast<int>(parts_.size() - i - 1);
    const int lowered = parts_[i] - 1;
    parts_[i] = lowered;
    fill_from(i + 1, ones + 1, lowered);
    return Partition(parts_);
}

std::vector<Partition> partitions_of(int n, std::optional<int> max_part)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition &p) { out.push_back(p); }, max_part);
    return out;
}

std::vector<Partition> distinct_partitions_of(int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition &p) {
        if (p.has_distinct_parts())
            out.push_back(p);
    });
    return out;
}

bool is_unimodal(std::span<const int> parts)
{
    if (parts.empty())
        return false;
    std::size_t i = 1;
    while (i < parts.size() && parts[i] >= parts[i - 1])
        ++i;
    while (i < parts.size() && parts[i] <= parts[i - 1])
        ++i;
    return i >= parts.size();
}

bool is_unimodal(const Composition &c) { return is_unimodal(c.parts()); }

std::vector<Composition> unimodal_compositions_of(int n)
{
    std::vector<Composition> out;
    for_each_unimodal_composition(n, [&](const Composition &c) { out.push_back(c); });
    return out;
}

std::vector<Composition> unimodal_with_max_mult(int n, int m)
{
    std::vector<Composition> out;
    for_each_unimodal_with_max_mult(n, m, [&](const Composition &c) { out.push_back(c); });
    return out;
}

// ---------------------------------------------------------------------------
// Diagram operations

Partition conjugate(const Partition &p)
{
    std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
    for (int part : p.parts())
        for (int c = 0; c < part; ++c)
            ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
}

Composition rotate_star(const Partition &p)
{
    auto parts = conjugate(p).vec();
    std::reverse(parts.begin(), parts.end());
    return Composition(std::move(parts));
}

Partition staircase(std::int64_t j)
{
    std::vector<int> parts;
    if (j > 0) {
        for (std::int64_t v = 2 * j - 1; v >= j; --v)
            parts.push_back(static_cast<int>(v));
    } else if (j < 0) {
        const std::int64_t t = -j;
        for (std::int64_t v = 2 * t; v >= t + 1; --v)
            parts.push_back(static_cast<int>(v));
    }
    return Partition(std::move(parts));
}

int crank(const Partition &p)
{
    if (p.empty())
        throw std::domain_error("crank: undefined for the empty partition");
    const int ones = p.multiplicity(1);
    if (ones == 0)
        return p.largest();
    const int above = static_cast<int>(std::count_if(p.parts().begin(), p.parts().end(),
                                                     [ones](int part) { return part > ones; }));
    return above - ones;
}

} // namespace crankshaft
