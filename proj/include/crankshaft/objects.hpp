#pragma once

// Partitions, compositions, vector partitions and their exhaustive enumerators.
//
// Enumeration orders are deterministic:
//   - partitions: reverse lexicographic, (5), (4,1), (3,2), (3,1,1), ...
//   - unimodal compositions of n: lexicographic, by recursion on the first part
//   - unimodal compositions with a prescribed maximal multiplicity: by maximal
//     value v, then the rising side, then the falling side (each in reverse-lex)
//   - vector partitions: by |pi1|, then |pi2|, then pi1, pi2, pi3 in reverse-lex
//
// The for_each_* visitors never materialise the whole set.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace crankshaft {

class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and non-increasing.
    explicit Partition(std::vector<int> parts);
    /// Sorts an arbitrary multiset of positive parts into partition order.
    static Partition from_multiset(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int> &vec() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    /// |lambda|
    int sum() const noexcept;
    /// l(lambda)
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// Largest part, 0 for the empty partition.
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    /// Smallest part, 0 for the empty partition.
    int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
    int multiplicity(int value) const noexcept;
    bool contains(int value) const noexcept { return multiplicity(value) > 0; }
    bool has_distinct_parts() const noexcept;
    /// Smallest part strictly greater than k, if any.
    std::optional<int> first_part_above(int k) const noexcept;

    /// Copy with `count` parts equal to `value` added.
    Partition with_parts(int value, int count = 1) const;
    /// Copy with `count` parts equal to `value` removed; throws std::domain_error if absent.
    Partition without_parts(int value, int count = 1) const;

    std::string to_string() const;

    friend auto operator<=>(const Partition &, const Partition &) = default;
    friend bool operator==(const Partition &, const Partition &) = default;

private:
    std::vector<int> parts_;
};

class Composition {
public:
    Composition() = default;
    /// Throws std::invalid_argument if any part is < 1.
    explicit Composition(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int> &vec() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    int sum() const noexcept;
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int max_part() const noexcept;
    /// Number of parts equal to max_part().
    int max_multiplicity() const noexcept;
    /// 0-based index of the first / last part equal to max_part(); -1 when empty.
    int first_max_index() const noexcept;
    int last_max_index() const noexcept;

    std::string to_string() const;

    friend auto operator<=>(const Composition &, const Composition &) = default;
    friend bool operator==(const Composition &, const Composition &) = default;

private:
    std::vector<int> parts_;
};

/// A triple (pi1, pi2, pi3) with pi1 having distinct parts.
struct VectorPartition {
    Partition pi1;
    Partition pi2;
    Partition pi3;

    /// Throws std::invalid_argument if pi1 has a repeated part.
    VectorPartition(Partition distinct, Partition second, Partition third);

    /// (-1)^{l(pi1)}
    int sign() const noexcept { return pi1.length() % 2 == 0 ? 1 : -1; }
    /// l(pi2) - l(pi3)
    int crank() const noexcept { return pi2.length() - pi3.length(); }
    int sum() const noexcept { return pi1.sum() + pi2.sum() + pi3.sum(); }

    friend bool operator==(const VectorPartition &, const VectorPartition &) = default;
};

// JSON: partitions and compositions are integer arrays; vector partitions are
// {"pi1": [...], "pi2": [...], "pi3": [...]}.
void to_json(nlohmann::json &j, const Partition &p);
void from_json(const nlohmann::json &j, Partition &p);
void to_json(nlohmann::json &j, const Composition &c);
void from_json(const nlohmann::json &j, Composition &c);
void to_json(nlohmann::json &j, const VectorPartition &v);

// ---------------------------------------------------------------------------
// Enumeration

/// Lazily yields the partitions of n with every part <= max_part, reverse-lex.
/// n == 0 yields the empty partition once.
class PartitionGenerator {
public:
    explicit PartitionGenerator(int n, std::optional<int> max_part = std::nullopt);
    /// Next partition, or nullopt when exhausted.
    std::optional<Partition> next();

private:
    void fill_from(std::size_t pos, int remaining, int cap);

    std::vector<int> parts_;
    bool started_ = false;
    bool done_ = false;
    int n_;
    int cap_;
};

template <typename Fn>
void for_each_partition(int n, Fn &&fn, std::optional<int> max_part = std::nullopt)
{
    PartitionGenerator gen(n, max_part);
    while (auto p = gen.next())
        fn(*p);
}

std::vector<Partition> partitions_of(int n, std::optional<int> max_part = std::nullopt);
std::vector<Partition> distinct_partitions_of(int n);

bool is_unimodal(const Composition &c);
bool is_unimodal(std::span<const int> parts);

namespace detail {
template <typename Fn>
void unimodal_rec(std::vector<int> &prefix, int remaining, int last, bool falling, Fn &fn)
{
    if (remaining == 0) {
        fn(Composition(prefix));
        return;
    }
    const int hi = falling ? std::min(last, remaining) : remaining;
    for (int part = 1; part <= hi; ++part) {
        prefix.push_back(part);
        unimodal_rec(prefix, remaining - part, part, falling || part < last, fn);
        prefix.pop_back();
    }
}
} // namespace detail

/// All unimodal compositions of n >= 1, lexicographic. n <= 0 yields nothing.
template <typename Fn>
void for_each_unimodal_composition(int n, Fn &&fn)
{
    if (n <= 0)
        return;
    std::vector<int> prefix;
    detail::unimodal_rec(prefix, n, 0, false, fn);
}

/// Unimodal compositions of n + m whose maximal part occurs exactly m times
/// (m >= 1). Built as (rising side) ++ (v repeated m times) ++ (falling side)
/// where both sides are partitions into parts < v.
template <typename Fn>
void for_each_unimodal_with_max_mult(int n, int m, Fn &&fn)
{
    if (n < 0 || m < 1)
        return;
    const int total = n + m;
    for (int v = 1; v * m <= total; ++v) {
        const int rest = total - v * m;
        if (v == 1) {
            if (rest == 0)
                fn(Composition(std::vector<int>(static_cast<std::size_t>(m), 1)));
            continue;
        }
        for (int left = 0; left <= rest; ++left) {
            const auto rising = partitions_of(left, v - 1);
            const auto falling = partitions_of(rest - left, v - 1);
            for (const auto &r : rising) {
                for (const auto &f : falling) {
                    std::vector<int> parts(r.vec().rbegin(), r.vec().rend());
                    parts.insert(parts.end(), static_cast<std::size_t>(m), v);
                    parts.insert(parts.end(), f.vec().begin(), f.vec().end());
                    fn(Composition(std::move(parts)));
                }
            }
        }
    }
}

std::vector<Composition> unimodal_compositions_of(int n);
std::vector<Composition> unimodal_with_max_mult(int n, int m);

/// Every vector partition of n exactly once.
template <typename Fn>
void for_each_vector_partition(int n, Fn &&fn)
{
    if (n < 0)
        return;
    std::vector<std::vector<Partition>> all(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<Partition>> distinct(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s) {
        all[static_cast<std::size_t>(s)] = partitions_of(s);
        distinct[static_cast<std::size_t>(s)] = distinct_partitions_of(s);
    }
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
            for (const auto &p1 : distinct[static_cast<std::size_t>(a)])
                for (const auto &p2 : all[static_cast<std::size_t>(b)])
                    for (const auto &p3 : all[static_cast<std::size_t>(n - a - b)])
                        fn(VectorPartition(p1, p2, p3));
}

// ---------------------------------------------------------------------------
// Diagram operations

/// Transpose of the Ferrers diagram.
Partition conjugate(const Partition &p);
/// Parts of the conjugate in non-decreasing order (the diagram rotated 90 degrees).
Composition rotate_star(const Partition &p);
/// Pentagonal staircase G_j: (2j-1, ..., j) for j > 0, (2t, ..., t+1) for j = -t < 0, empty for j = 0.
Partition staircase(std::int64_t j);

/// Crank: largest part if there are no ones, else (#parts > #ones) - (#ones).
/// Throws std::domain_error for the empty partition.
int crank(const Partition &p);

} // namespace crankshaft
