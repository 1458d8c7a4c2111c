#pragma once

// Constructive bijections on partitions and unimodal compositions, with
// exhaustive verifiers. Every map validates its input domain eagerly and
// throws std::domain_error on misuse.
//
// Notation for unimodal composition sets, m in {0,1,2}:
//   U_0(n): unimodal compositions of n
//   U_m(n): unimodal compositions of n + m whose maximal part occurs exactly m times

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include <json.hpp>

#include "crankshaft/objects.hpp"
#include "crankshaft/report.hpp"

namespace crankshaft {

// ---------------------------------------------------------------------------
// u_0(n) = u_1(n) - u_2(n)

/// U_2(n) -> U_1(n): lower the second of the two adjacent maximal parts by one.
Composition thm1_phi(const Composition &c);
/// Inverse of thm1_phi on its image (unique max followed by max - 1).
Composition thm1_phi_inverse(const Composition &c);
/// U_1(n) minus the image of thm1_phi -> U_0(n): lower the unique maximal part by one.
Composition thm1_psi(const Composition &c);
/// Inverse of thm1_psi: raise the last maximal part by one.
Composition thm1_psi_inverse(const Composition &c);

// ---------------------------------------------------------------------------
// Franklin's involution on partitions into distinct parts.
//
// With s the smallest part and t the length of the run of consecutive values
// starting at the largest part: if s <= t, the smallest part is removed and
// one cell added to each of the s largest parts; otherwise one cell is taken
// from each of the t largest parts to form a new smallest part t. The two
// cases where the run covers every part and s == t or s == t + 1 are the
// pentagonal staircases and are left fixed.
Partition franklin(const Partition &p);
bool is_franklin_fixed_point(const Partition &p);

// ---------------------------------------------------------------------------
// Vector-partition slices (G_j, pi2, pi3) -> U_m(|pi2| + |pi3|)

/// Length conditions: m = 0 needs l(pi2) > l(pi3), m = 1 needs l(pi2) >= l(pi3),
/// m = 2 needs l(pi2) == l(pi3). The staircase index j only labels the slice.
Composition sec5_psi(std::int64_t j, const Partition &pi2, const Partition &pi3, int m);
/// Recovers (pi2, pi3) from a member of U_m.
std::pair<Partition, Partition> sec5_psi_inverse(const Composition &c, int m);
/// Whether (pi2, pi3) satisfies the length condition for m.
bool sec5_length_condition(const Partition &pi2, const Partition &pi3, int m);

// ---------------------------------------------------------------------------
// Partitions with a part 1 and a part 2 versus P~_1(n)

/// Membership in P*_{1,2}: has a 2 and either (i) at least three 1s, or
/// (ii) one or two 1s, a part > 2, and the 1s and 2s together exceed the
/// smallest part > 2.
bool in_p_star_12(const Partition &p);
/// Membership in P~_k: every part 1..k present; the smallest part > k exists
/// and occurs at least k + 1 times.
bool in_p_tilde(const Partition &p, int k);

/// Splits the smallest part a >= 3 of a partition with no 1s or 2s into
/// 1 + 2 + ... (odd a) or 1 + 1 + 2 + ... (even a).
Partition sec6_split(const Partition &p);
Partition sec6_split_inverse(const Partition &p);

/// P*_{1,2}(n) -> P~_1(n).
Partition sec6_f(const Partition &p);
Partition sec6_f_inverse(const Partition &p);

/// Source copies of the domain P(n - k(3k-1)/2) (A) and P(n - k(3k+1)/2) (B).
enum class GSource { A, B };
/// Target copies P~_{k-1}(n) and P~_k(n); partitions in both sets occur once per copy.
enum class GTarget { Pk_minus_1, Pk };

std::string to_string(GSource s);
std::string to_string(GTarget t);

/// The map g for k >= 2 on the disjoint union of the two sources.
std::pair<Partition, GTarget> sec6_g(int k, const Partition &lambda, GSource source);
std::pair<Partition, GSource> sec6_g_inverse(int k, const Partition &mu, GTarget copy);

// ---------------------------------------------------------------------------
// Exhaustive verification

struct BijectionWitness {
    std::string map_name;
    Params params;
    nlohmann::json input;
    nlohmann::json output;
    bool round_trip_ok = false;
};

void to_json(nlohmann::json &j, const BijectionWitness &w);

using WitnessSink = std::function<void(const BijectionWitness &)>;

/// Names accepted by verify_bijection.
const std::vector<std::string> &bijection_names();

/// Runs the named map over every domain object of size n and checks image
/// membership, injectivity, surjectivity onto the stated codomain and round
/// trips. `params` supplies m, j or k where the map needs them. Failures are
/// reported, not thrown; an unknown name throws std::invalid_argument.
///
///   thm1        domain U_2(n) via phi plus the complement via psi
///   franklin    distinct partitions of n; fixed points must be the staircases
///   sec5_psi    params m, j; pairs of total size n - |G_j|
///   sec6_split  partitions of n with no 1s or 2s
///   sec6_f      P*_{1,2}(n)
///   sec6_g      param k >= 2
CheckReport verify_bijection(const std::string &name, const Params &params, int n, const WitnessSink &sink = {});

CheckReport verify_thm1(int n, const WitnessSink &sink = {});
CheckReport verify_franklin(int n, const WitnessSink &sink = {});
CheckReport verify_sec5_psi(int m, std::int64_t j, int n, const WitnessSink &sink = {});
CheckReport verify_sec6_split(int n, const WitnessSink &sink = {});
CheckReport verify_sec6_f(int n, const WitnessSink &sink = {});
CheckReport verify_sec6_g(int k, int n, const WitnessSink &sink = {});

} // namespace crankshaft
