#include "crankshaft/bijections.hpp"

#include <set>
#include <stdexcept>

#include "crankshaft/qseries.hpp"

namespace crankshaft {

namespace {

[[noreturn]] void outside_domain(const std::string &map, const std::string &what)
{
    throw std::domain_error(map + ": " + what);
}

void record(CheckReport &r, Params at, const std::string &detail, BigInt lhs = 0, BigInt rhs = 0)
{
    r.fail(Counterexample{std::move(at), std::move(lhs), std::move(rhs), detail});
}

void require_count(CheckReport &r, Params at, std::size_t got, std::size_t want, const std::string &what)
{
    if (got != want)
        record(r, std::move(at), what, static_cast<unsigned long>(got), static_cast<unsigned long>(want));
}

void emit(const WitnessSink &sink, const std::string &map, const Params &params, nlohmann::json in,
          nlohmann::json out, bool ok)
{
    if (sink)
        sink(BijectionWitness{map, params, std::move(in), std::move(out), ok});
}

void require_m(int m, const char *map)
{
    if (m < 0 || m > 2)
        outside_domain(map, "m must be 0, 1 or 2");
}

bool in_u_m(const Composition &c, int m)
{
    if (!is_unimodal(c))
        return false;
    return m == 0 || c.max_multiplicity() == m;
}

std::vector<Composition> u_set(int n, int m)
{
    return m == 0 ? unimodal_compositions_of(n) : unimodal_with_max_mult(n, m);
}

Partition add_one_of_each_below(Partition p, int k)
{
    for (int i = 1; i < k; ++i)
        p = p.with_parts(i);
    return p;
}

Partition remove_one_of_each_below(Partition p, int k)
{
    for (int i = 1; i < k; ++i)
        p = p.without_parts(i);
    return p;
}

} // namespace

// ---------------------------------------------------------------------------
// thm1

Composition thm1_phi(const Composition &c)
{
    if (!is_unimodal(c) || c.max_multiplicity() != 2)
        outside_domain("thm1_phi", c.to_string() + " is not unimodal with exactly two maximal parts");
    if (c.max_part() < 2)
        outside_domain("thm1_phi", "maximal parts must be at least 2");
    auto parts = c.vec();
    parts[static_cast<std::size_t>(c.first_max_index()) + 1] -= 1;
    return Composition(std::move(parts));
}

Composition thm1_phi_inverse(const Composition &c)
{
    if (!is_unimodal(c) || c.max_multiplicity() != 1)
        outside_domain("thm1_phi_inverse", c.to_string() + " does not have a unique maximal part");
    const auto j = static_cast<std::size_t>(c.first_max_index());
    if (j + 1 >= c.vec().size() || c.vec()[j + 1] != c.vec()[j] - 1)
        outside_domain("thm1_phi_inverse", c.to_string() + " is not in the image of thm1_phi");
    auto parts = c.vec();
    parts[j + 1] += 1;
    return Composition(std::move(parts));
}

Composition thm1_psi(const Composition &c)
{
    if (!is_unimodal(c) || c.max_multiplicity() != 1)
        outside_domain("thm1_psi", c.to_string() + " does not have a unique maximal part");
    const auto j = static_cast<std::size_t>(c.first_max_index());
    const auto &v = c.vec();
    if (v[j] < 2)
        outside_domain("thm1_psi", "maximal part must be at least 2");
    if (j + 1 < v.size() && v[j + 1] >= v[j] - 1)
        outside_domain("thm1_psi", c.to_string() + " lies in the image of thm1_phi");
    auto parts = v;
    parts[j] -= 1;
    return Composition(std::move(parts));
}

Composition thm1_psi_inverse(const Composition &c)
{
    if (!is_unimodal(c))
        outside_domain("thm1_psi_inverse", c.to_string() + " is not unimodal");
    auto parts = c.vec();
    parts[static_cast<std::size_t>(c.last_max_index())] += 1;
    return Composition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Franklin

Partition franklin(const Partition &p)
{
    if (!p.has_distinct_parts())
        outside_domain("franklin", p.to_string() + " has repeated parts");
    if (p.empty())
        return p;
    const auto &v = p.vec();
    const int r = p.length();
    const int s = p.smallest();
    int t = 1;
    while (t < r && v[static_cast<std::size_t>(t)] == v[static_cast<std::size_t>(t) - 1] - 1)
        ++t;

    auto parts = v;
    if (s <= t) {
        if (s == t && t == r)
            return p;
        parts.pop_back();
        for (int i = 0; i < s; ++i)
            parts[static_cast<std::size_t>(i)] += 1;
    } else {
        if (t == r && s == t + 1)
            return p;
        for (int i = 0; i < t; ++i)
            parts[static_cast<std::size_t>(i)] -= 1;
        parts.push_back(t);
    }
    return Partition(std::move(parts));
}

bool is_franklin_fixed_point(const Partition &p) { return p.has_distinct_parts() && franklin(p) == p; }

// ---------------------------------------------------------------------------
// sec5

bool sec5_length_condition(const Partition &pi2, const Partition &pi3, int m)
{
    switch (m) {
    case 0: return pi2.length() > pi3.length();
    case 1: return pi2.length() >= pi3.length();
    case 2: return pi2.length() == pi3.length();
    default: return false;
    }
}

Composition sec5_psi(std::int64_t /*j*/, const Partition &pi2, const Partition &pi3, int m)
{
    require_m(m, "sec5_psi");
    if (!sec5_length_condition(pi2, pi3, m))
        outside_domain("sec5_psi", "length condition for m=" + std::to_string(m) + " fails");
    const Partition left = m == 2 ? pi3.with_parts(1) : pi3;
    const Partition right = m >= 1 ? pi2.with_parts(1) : pi2;
    auto parts = rotate_star(left).vec();
    const auto tail = conjugate(right).vec();
    parts.insert(parts.end(), tail.begin(), tail.end());
    return Composition(std::move(parts));
}

std::pair<Partition, Partition> sec5_psi_inverse(const Composition &c, int m)
{
    require_m(m, "sec5_psi_inverse");
    if (c.empty() || !in_u_m(c, m))
        outside_domain("sec5_psi_inverse", c.to_string() + " is not in U_" + std::to_string(m));
    const auto &v = c.vec();
    // The rising side ends just before the first maximal part, or includes it when m = 2.
    const auto cut = static_cast<std::size_t>(c.first_max_index()) + (m == 2 ? 1 : 0);
    const Partition left = conjugate(Partition(std::vector<int>(v.rbegin() + static_cast<std::ptrdiff_t>(v.size() - cut), v.rend())));
    const Partition right = conjugate(Partition(std::vector<int>(v.begin() + static_cast<std::ptrdiff_t>(cut), v.end())));
    Partition pi3 = m == 2 ? left.without_parts(1) : left;
    Partition pi2 = m >= 1 ? right.without_parts(1) : right;
    if (!sec5_length_condition(pi2, pi3, m))
        outside_domain("sec5_psi_inverse", "recovered pair violates the length condition");
    return {std::move(pi2), std::move(pi3)};
}

// ---------------------------------------------------------------------------
// sec6: f and the splitting pre-step

bool in_p_star_12(const Partition &p)
{
    if (!p.contains(2))
        return false;
    const int ones = p.multiplicity(1);
    if (ones >= 3)
        return true;
    if (ones == 0)
        return false;
    const auto b = p.first_part_above(2);
    return b && ones + 2 * p.multiplicity(2) > *b;
}

bool in_p_tilde(const Partition &p, int k)
{
    for (int i = 1; i <= k; ++i)
        if (!p.contains(i))
            return false;
    const auto first = p.first_part_above(k);
    return first && p.multiplicity(*first) >= k + 1;
}

Partition sec6_split(const Partition &p)
{
    if (p.empty() || p.contains(1) || p.contains(2))
        outside_domain("sec6_split", p.to_string() + " must be nonempty with no parts 1 or 2");
    const int a = p.smallest();
    const int ones = a % 2 == 1 ? 1 : 2;
    return p.without_parts(a).with_parts(2, (a - ones) / 2).with_parts(1, ones);
}

Partition sec6_split_inverse(const Partition &p)
{
    const int ones = p.multiplicity(1);
    if (!p.contains(2) || ones < 1 || ones > 2 || in_p_star_12(p))
        outside_domain("sec6_split_inverse", p.to_string() + " is not a split partition");
    const int twos = p.multiplicity(2);
    return p.without_parts(1, ones).without_parts(2, twos).with_parts(ones + 2 * twos);
}

Partition sec6_f(const Partition &p)
{
    if (!in_p_star_12(p))
        outside_domain("sec6_f", p.to_string() + " is not in P*_{1,2}");
    const int ones = p.multiplicity(1);
    if (ones >= 3)
        return p.without_parts(1, 2).with_parts(2);
    const int b = *p.first_part_above(2);
    const int total = ones + 2 * p.multiplicity(2);
    return p.without_parts(1, ones).without_parts(2, p.multiplicity(2)).with_parts(b).with_parts(1, total - b);
}

Partition sec6_f_inverse(const Partition &p)
{
    if (!in_p_tilde(p, 1))
        outside_domain("sec6_f_inverse", p.to_string() + " is not in P~_1");
    if (p.contains(2))
        return p.without_parts(2).with_parts(1, 2);
    const int b = *p.first_part_above(1);
    const int ones = p.multiplicity(1);
    const int total = ones + b;
    const int new_ones = total % 2 == 0 ? 2 : 1;
    return p.without_parts(b).without_parts(1, ones).with_parts(2, (total - new_ones) / 2).with_parts(1, new_ones);
}

// ---------------------------------------------------------------------------
// sec6: g

std::string to_string(GSource s) { return s == GSource::A ? "A" : "B"; }
std::string to_string(GTarget t) { return t == GTarget::Pk_minus_1 ? "Pk-1" : "Pk"; }

std::pair<Partition, GTarget> sec6_g(int k, const Partition &lambda, GSource source)
{
    if (k < 2)
        outside_domain("sec6_g", "k must be >= 2");
    if (source == GSource::A)
        return {add_one_of_each_below(lambda, k).with_parts(k, k), GTarget::Pk_minus_1};

    const int mk = lambda.multiplicity(k);
    const auto x = lambda.first_part_above(k);
    const Partition base = add_one_of_each_below(lambda.without_parts(k, mk), k);
    if (!x || *x >= k + mk + 1)
        return {base.with_parts(k + mk + 1, k), GTarget::Pk_minus_1};
    return {base.with_parts(k, k + mk + 1 - *x).with_parts(*x, k), GTarget::Pk};
}

std::pair<Partition, GSource> sec6_g_inverse(int k, const Partition &mu, GTarget copy)
{
    if (k < 2)
        outside_domain("sec6_g_inverse", "k must be >= 2");
    const int level = copy == GTarget::Pk ? k : k - 1;
    if (!in_p_tilde(mu, level))
        outside_domain("sec6_g_inverse", mu.to_string() + " is not in P~_" + std::to_string(level));

    if (copy == GTarget::Pk_minus_1 && mu.contains(k))
        return {remove_one_of_each_below(mu, k).without_parts(k, k), GSource::A};
    // Both remaining cases strip k copies of the first part above k and restore y - k - 1 parts k.
    const int y = *mu.first_part_above(k);
    return {remove_one_of_each_below(mu, k).without_parts(y, k).with_parts(k, y - k - 1), GSource::B};
}

// ---------------------------------------------------------------------------
// Verification

void to_json(nlohmann::json &j, const BijectionWitness &w)
{
    j = nlohmann::json{{"map", w.map_name},
                       {"params", w.params},
                       {"input", w.input},
                       {"output", w.output},
                       {"round_trip_ok", w.round_trip_ok}};
}

const std::vector<std::string> &bijection_names()
{
    static const std::vector<std::string> names{"thm1", "franklin", "sec5_psi", "sec6_split", "sec6_f", "sec6_g"};
    return names;
}

CheckReport verify_thm1(int n, const WitnessSink &sink)
{
    CheckReport r;
    r.name = "biject:thm1";
    r.range = {{"n", n}};
    ScopedTimer timer(r);
    const Params at{{"n", n}};

    const auto u0 = unimodal_compositions_of(n);
    const auto u1 = unimodal_with_max_mult(n, 1);
    const auto u2 = unimodal_with_max_mult(n, 2);
    if (n <= 0) {
        // No maps at n = 0; the identity holds by the conventions 0 = 1 - 1.
        r.notes.push_back("n = 0 checked by counts only");
        require_count(r, at, u0.size() + u2.size(), u1.size(), "|U_0| + |U_2| vs |U_1|");
        return r;
    }

    const std::set<Composition> u0_set(u0.begin(), u0.end());
    const std::set<Composition> u1_set(u1.begin(), u1.end());
    std::set<Composition> phi_image, psi_image;

    for (const auto &c : u2) {
        ++r.cases;
        try {
            const auto img = thm1_phi(c);
            const bool ok = thm1_phi_inverse(img) == c;
            if (!u1_set.count(img))
                record(r, at, "phi" + c.to_string() + " = " + img.to_string() + " not in U_1");
            if (!phi_image.insert(img).second)
                record(r, at, "phi not injective at " + img.to_string());
            if (!ok)
                record(r, at, "phi round trip failed at " + c.to_string());
            emit(sink, "thm1_phi", at, c, img, ok);
        } catch (const std::domain_error &e) {
            record(r, at, e.what());
        }
    }
    for (const auto &c : u1) {
        if (phi_image.count(c))
            continue;
        ++r.cases;
        try {
            const auto img = thm1_psi(c);
            const bool ok = thm1_psi_inverse(img) == c;
            if (!u0_set.count(img))
                record(r, at, "psi" + c.to_string() + " = " + img.to_string() + " not in U_0");
            if (!psi_image.insert(img).second)
                record(r, at, "psi not injective at " + img.to_string());
            if (!ok)
                record(r, at, "psi round trip failed at " + c.to_string());
            emit(sink, "thm1_psi", at, c, img, ok);
        } catch (const std::domain_error &e) {
            record(r, at, e.what());
        }
    }
    require_count(r, at, psi_image.size(), u0.size(), "psi not onto U_0");
    require_count(r, at, u0.size() + u2.size(), u1.size(), "|U_0| + |U_2| vs |U_1|");
    return r;
}

CheckReport verify_franklin(int n, const WitnessSink &sink)
{
    CheckReport r;
    r.name = "biject:franklin";
    r.range = {{"n", n}};
    ScopedTimer timer(r);
    const Params at{{"n", n}};

    std::set<Partition> expected_fixed;
    for (std::int64_t j = -n - 1; j <= n + 1; ++j)
        if (j != 0 && pentagonal(j) == n)
            expected_fixed.insert(staircase(j));
    if (n == 0)
        expected_fixed.insert(Partition());

    std::set<Partition> fixed;
    BigInt signed_count = 0;
    for (const auto &p : distinct_partitions_of(n)) {
        ++r.cases;
        signed_count += p.length() % 2 == 0 ? 1 : -1;
        const auto img = franklin(p);
        const bool ok = franklin(img) == p;
        if (!ok)
            record(r, at, "not an involution at " + p.to_string());
        if (img.sum() != n || !img.has_distinct_parts())
            record(r, at, "image " + img.to_string() + " left the domain");
        if (img == p)
            fixed.insert(p);
        else if ((img.length() - p.length() != 1) && (p.length() - img.length() != 1))
            record(r, at, "length did not change by one at " + p.to_string());
        emit(sink, "franklin", at, p, img, ok);
    }
    if (fixed != expected_fixed)
        record(r, at, "fixed points differ from the staircases", static_cast<unsigned long>(fixed.size()),
               static_cast<unsigned long>(expected_fixed.size()));
    const BigInt pentagonal_coeff = pentagonal_sum_all(static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
    if (signed_count != pentagonal_coeff)
        record(r, at, "signed count vs pentagonal coefficient", signed_count, pentagonal_coeff);
    return r;
}

CheckReport verify_sec5_psi(int m, std::int64_t j, int n, const WitnessSink &sink)
{
    CheckReport r;
    r.name = "biject:sec5_psi";
    r.range = {{"m", m}, {"j", j}, {"n", n}};
    ScopedTimer timer(r);
    const Params at = r.range;
    require_m(m, "verify_sec5_psi");

    const std::int64_t rest = n - pentagonal(j);
    if (rest < 0) {
        r.notes.push_back("|G_j| > n: empty slice");
        return r;
    }
    const int size = static_cast<int>(rest);
    const auto codomain = u_set(size, m);
    const std::set<Composition> codomain_set(codomain.begin(), codomain.end());
    std::set<Composition> image;

    for (int a = 0; a <= size; ++a) {
        const auto second = partitions_of(a);
        const auto third = partitions_of(size - a);
        for (const auto &pi2 : second) {
            for (const auto &pi3 : third) {
                if (!sec5_length_condition(pi2, pi3, m))
                    continue;
                ++r.cases;
                const auto img = sec5_psi(j, pi2, pi3, m);
                bool ok = false;
                try {
                    ok = sec5_psi_inverse(img, m) == std::pair{pi2, pi3};
                } catch (const std::domain_error &e) {
                    record(r, at, e.what());
                }
                if (!codomain_set.count(img))
                    record(r, at, img.to_string() + " not in U_" + std::to_string(m));
                if (!image.insert(img).second)
                    record(r, at, "not injective at " + img.to_string());
                if (!ok)
                    record(r, at, "round trip failed at " + pi2.to_string() + "," + pi3.to_string());
                nlohmann::json in{{"j", j}, {"pi2", pi2}, {"pi3", pi3}};
                emit(sink, "sec5_psi", at, std::move(in), img, ok);
            }
        }
    }
    require_count(r, at, image.size(), codomain.size(), "not onto U_m");
    return r;
}

CheckReport verify_sec6_split(int n, const WitnessSink &sink)
{
    CheckReport r;
    r.name = "biject:sec6_split";
    r.range = {{"n", n}};
    ScopedTimer timer(r);
    const Params at = r.range;
    if (n < 1) {
        r.notes.push_back("n < 1: nothing to split");
        return r;
    }

    std::set<Partition> codomain, image;
    std::vector<Partition> domain;
    for_each_partition(n, [&](const Partition &p) {
        if (!p.contains(1) && !p.contains(2))
            domain.push_back(p);
        else if (p.contains(1) && p.contains(2) && !in_p_star_12(p))
            codomain.insert(p);
    });
    for (const auto &p : domain) {
        ++r.cases;
        const auto img = sec6_split(p);
        bool ok = false;
        try {
            ok = sec6_split_inverse(img) == p;
        } catch (const std::domain_error &e) {
            record(r, at, e.what());
        }
        if (!codomain.count(img))
            record(r, at, img.to_string() + " not in P_{1,2} minus P*_{1,2}");
        if (!image.insert(img).second)
            record(r, at, "not injective at " + img.to_string());
        if (!ok)
            record(r, at, "round trip failed at " + p.to_string());
        emit(sink, "sec6_split", at, p, img, ok);
    }
    require_count(r, at, image.size(), codomain.size(), "not onto P_{1,2} minus P*_{1,2}");
    return r;
}

CheckReport verify_sec6_f(int n, const WitnessSink &sink)
{
    CheckReport r;
    r.name = "biject:sec6_f";
    r.range = {{"n", n}};
    ScopedTimer timer(r);
    const Params at = r.range;

    std::vector<Partition> domain;
    std::set<Partition> codomain, image;
    for_each_partition(n, [&](const Partition &p) {
        if (in_p_star_12(p))
            domain.push_back(p);
        if (in_p_tilde(p, 1))
            codomain.insert(p);
    });
    for (const auto &p : domain) {
        ++r.cases;
        const auto img = sec6_f(p);
        bool ok = false;
        try {
            ok = sec6_f_inverse(img) == p;
        } catch (const std::domain_error &e) {
            record(r, at, e.what());
        }
        if (!codomain.count(img))
            record(r, at, img.to_string() + " not in P~_1");
        if (!image.insert(img).second)
            record(r, at, "not injective at " + img.to_string());
        if (!ok)
            record(r, at, "round trip failed at " + p.to_string());
        emit(sink, "sec6_f", at, p, img, ok);
    }
    require_count(r, at, image.size(), codomain.size(), "not onto P~_1");
    return r;
}

CheckReport verify_sec6_g(int k, int n, const WitnessSink &sink)
{
    CheckReport r;
    r.name = "biject:sec6_g";
    r.range = {{"k", k}, {"n", n}};
    ScopedTimer timer(r);
    const Params at = r.range;
    if (k < 2)
        throw std::invalid_argument("verify_sec6_g: k must be >= 2");

    std::set<Partition> lower, upper; // P~_{k-1}(n), P~_k(n)
    for_each_partition(n, [&](const Partition &p) {
        if (in_p_tilde(p, k - 1))
            lower.insert(p);
        if (in_p_tilde(p, k))
            upper.insert(p);
    });
    std::set<std::pair<Partition, GTarget>> image;

    const auto run = [&](GSource source, std::int64_t size) {
        if (size < 0)
            return;
        for (const auto &lambda : partitions_of(static_cast<int>(size))) {
            ++r.cases;
            const auto [mu, copy] = sec6_g(k, lambda, source);
            bool ok = false;
            try {
                ok = sec6_g_inverse(k, mu, copy) == std::pair{lambda, source};
            } catch (const std::domain_error &e) {
                record(r, at, e.what());
            }
            const auto &target = copy == GTarget::Pk ? upper : lower;
            if (mu.sum() != n || !target.count(mu))
                record(r, at, mu.to_string() + " not in copy " + to_string(copy));
            if (!image.insert({mu, copy}).second)
                record(r, at, "not injective at " + mu.to_string() + " in copy " + to_string(copy));
            if (!ok)
                record(r, at, "round trip failed at " + lambda.to_string());
            nlohmann::json in{{"source", to_string(source)}, {"lambda", lambda}};
            nlohmann::json out{{"target", to_string(copy)}, {"mu", mu}};
            emit(sink, "sec6_g", at, std::move(in), std::move(out), ok);
        }
    };
    run(GSource::A, n - k * (3 * k - 1) / 2);
    run(GSource::B, n - k * (3 * k + 1) / 2);

    require_count(r, at, image.size(), lower.size() + upper.size(), "not onto P~_{k-1} + P~_k");
    std::size_t shared = 0;
    for (const auto &mu : lower) {
        if (!upper.count(mu))
            continue;
        ++shared;
        if (!image.count({mu, GTarget::Pk_minus_1}) || !image.count({mu, GTarget::Pk}))
            record(r, at, mu.to_string() + " lies in both sets but is not hit once per copy");
    }
    r.notes.push_back("partitions in both P~_{k-1} and P~_k: " + std::to_string(shared));
    return r;
}

CheckReport verify_bijection(const std::string &name, const Params &params, int n, const WitnessSink &sink)
{
    const auto get = [&](const char *key) -> std::int64_t {
        const auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument("map " + name + " needs parameter " + key);
        return it->second;
    };
    if (name == "thm1")
        return verify_thm1(n, sink);
    if (name == "franklin")
        return verify_franklin(n, sink);
    if (name == "sec5_psi") {
        const auto m = get("m");
        if (m < 0 || m > 2)
            throw std::invalid_argument("sec5_psi: m must be 0, 1 or 2");
        return verify_sec5_psi(static_cast<int>(m), get("j"), n, sink);
    }
    if (name == "sec6_split")
        return verify_sec6_split(n, sink);
    if (name == "sec6_f")
        return verify_sec6_f(n, sink);
    if (name == "sec6_g") {
        const auto k = get("k");
        if (k < 2)
            throw std::invalid_argument("sec6_g: k must be >= 2");
        return verify_sec6_g(static_cast<int>(k), n, sink);
    }
    throw std::invalid_argument("unknown map '" + name + "'");
}

} // namespace crankshaft
