#include "crankshaft/qseries.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace crankshaft {

namespace {

void require_same_order(const TruncatedSeries &a, const TruncatedSeries &b, const char *op)
{
    if (a.order() != b.order()) {
        std::ostringstream msg;
        msg << op << ": mismatched truncation orders " << a.order() << " and " << b.order();
        throw std::invalid_argument(msg.str());
    }
}

std::size_t as_index(std::int64_t v) { return static_cast<std::size_t>(v); }

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != order + 1)
        throw std::invalid_argument("TruncatedSeries: coefficient count must be order + 1");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) { return monomial(order, 0); }

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t exponent, const BigInt &coeff)
{
    TruncatedSeries s(order);
    if (exponent <= order)
        s.coeffs_[exponent] = coeff;
    return s;
}

BigInt TruncatedSeries::coeff(std::int64_t i) const
{
    if (i < 0)
        return 0;
    if (as_index(i) > order())
        throw std::out_of_range("TruncatedSeries::coeff: index beyond truncation order");
    return coeffs_[as_index(i)];
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt &c) { return sgn(c) == 0; });
}

std::int64_t TruncatedSeries::degree() const
{
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (sgn(coeffs_[i]) != 0)
            return static_cast<std::int64_t>(i);
    return -1;
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &other)
{
    require_same_order(*this, other, "add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &other)
{
    require_same_order(*this, other, "subtract");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const BigInt &scalar)
{
    for (auto &c : coeffs_)
        c *= scalar;
    return *this;
}

TruncatedSeries &TruncatedSeries::shift(std::size_t k)
{
    if (k == 0)
        return *this;
    const std::size_t n = coeffs_.size();
    for (std::size_t i = n; i-- > 0;)
        coeffs_[i] = i >= k ? BigInt(coeffs_[i - k]) : BigInt(0);
    return *this;
}

TruncatedSeries &TruncatedSeries::mul_one_minus_q_pow(std::size_t s)
{
    if (s == 0)
        throw std::invalid_argument("mul_one_minus_q_pow: s must be positive");
    for (std::size_t i = coeffs_.size(); i-- > s;)
        coeffs_[i] -= coeffs_[i - s];
    return *this;
}

TruncatedSeries &TruncatedSeries::div_one_minus_q_pow(std::size_t s)
{
    if (s == 0)
        throw std::invalid_argument("div_one_minus_q_pow: s must be positive");
    for (std::size_t i = s; i < coeffs_.size(); ++i)
        coeffs_[i] += coeffs_[i - s];
    return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
TruncatedSeries operator-(TruncatedSeries a) { return a *= BigInt(-1); }
TruncatedSeries operator*(TruncatedSeries a, const BigInt &scalar) { return a *= scalar; }

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_same_order(a, b, "multiply");
    const std::size_t n = a.order();
    std::vector<BigInt> out(n + 1);
    // Many operands are sparse (theta sums, shifted terms), so skip zero rows.
    for (std::size_t i = 0; i <= n; ++i) {
        const BigInt &ai = a[i];
        if (sgn(ai) == 0)
            continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            const BigInt &bj = b[j];
            if (sgn(bj) != 0)
                out[i + j] += ai * bj;
        }
    }
    return TruncatedSeries(n, std::move(out));
}

TruncatedSeries inverse(const TruncatedSeries &a)
{
    const BigInt &c0 = a[0];
    if (c0 != 1 && c0 != -1)
        throw std::domain_error("inverse: constant term must be +1 or -1");
    const std::size_t n = a.order();
    std::vector<BigInt> b(n + 1);
    b[0] = c0; // 1/c0 == c0 for units
    BigInt acc;
    for (std::size_t i = 1; i <= n; ++i) {
        acc = 0;
        for (std::size_t j = 1; j <= i; ++j)
            if (sgn(a[j]) != 0)
                acc += a[j] * b[i - j];
        b[i] = -acc * c0;
    }
    return TruncatedSeries(n, std::move(b));
}

std::string to_csv_line(const TruncatedSeries &s)
{
    std::string out;
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (i)
            out += ',';
        out += s[i].get_str();
    }
    return out;
}

void to_json(nlohmann::json &j, const TruncatedSeries &s)
{
    auto coeffs = nlohmann::json::array();
    for (const auto &c : s.coeffs())
        coeffs.push_back(c.get_str());
    j = nlohmann::json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const nlohmann::json &j, TruncatedSeries &s)
{
    const auto order = j.at("order").get<std::size_t>();
    std::vector<BigInt> coeffs;
    for (const auto &c : j.at("coeffs"))
        coeffs.emplace_back(c.get<std::string>(), 10);
    s = TruncatedSeries(order, std::move(coeffs));
}

// ---------------------------------------------------------------------------

TruncatedSeries pochhammer(std::int64_t s, std::int64_t n, std::size_t order)
{
    if (s < 1)
        throw std::invalid_argument("pochhammer: s must be >= 1");
    if (n < 0)
        throw std::invalid_argument("pochhammer: n must be >= 0");
    auto out = TruncatedSeries::one(order);
    for (std::int64_t i = 0; i < n && as_index(s + i) <= order; ++i)
        out.mul_one_minus_q_pow(as_index(s + i));
    return out;
}

TruncatedSeries pochhammer_inf(std::int64_t s, std::size_t order)
{
    if (s < 1)
        throw std::invalid_argument("pochhammer_inf: s must be >= 1");
    auto out = TruncatedSeries::one(order);
    for (std::size_t e = as_index(s); e <= order; ++e)
        out.mul_one_minus_q_pow(e);
    return out;
}

TruncatedSeries partition_gf(std::size_t order)
{
    // Dividing 1 by each (1 - q^e) in turn is the inverse of pochhammer_inf(1, N)
    // computed in O(N^2) additions.
    auto out = TruncatedSeries::one(order);
    for (std::size_t e = 1; e <= order; ++e)
        out.div_one_minus_q_pow(e);
    return out;
}

TruncatedSeries gaussian_binomial(std::int64_t n, std::int64_t k, std::size_t order)
{
    if (n < 0 || k < 0 || k > n)
        return TruncatedSeries(order);
    // row[b] holds [a, b] for the current a, b = 0..k.
    std::vector<TruncatedSeries> row(as_index(k) + 1, TruncatedSeries(order));
    row[0] = TruncatedSeries::one(order);
    for (std::int64_t a = 1; a <= n; ++a) {
        for (std::int64_t b = std::min(a, k); b >= 1; --b) {
            // [a, b] = [a-1, b-1] + q^b [a-1, b]
            row[as_index(b)].shift(as_index(b));
            row[as_index(b)] += row[as_index(b - 1)];
        }
    }
    return row[as_index(k)];
}

TruncatedSeries pentagonal_sum(std::int64_t jlo, std::int64_t jhi, std::size_t order)
{
    if (jlo > jhi)
        throw std::invalid_argument("pentagonal_sum: empty window (jlo > jhi)");
    TruncatedSeries out(order);
    std::vector<BigInt> c(order + 1);
    for (std::int64_t j = jlo; j <= jhi; ++j) {
        const std::int64_t e = pentagonal(j);
        if (as_index(e) > order)
            continue;
        c[as_index(e)] += (j % 2 == 0) ? 1 : -1;
    }
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries pentagonal_sum_all(std::size_t order)
{
    // pentagonal(-j) > pentagonal(j) >= j for j >= 1, so j up to N covers every exponent <= N.
    const auto bound = static_cast<std::int64_t>(order) + 1;
    return pentagonal_sum(-bound, bound, order);
}

TruncatedSeries signed_triangular_sum(std::int64_t from, std::size_t order)
{
    if (from < 0)
        throw std::invalid_argument("signed_triangular_sum: from must be >= 0");
    std::vector<BigInt> c(order + 1);
    for (std::int64_t n = from; as_index(n * (n + 1) / 2) <= order; ++n)
        c[as_index(n * (n + 1) / 2)] += (n % 2 == 0) ? 1 : -1;
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries u_gf(int m, std::size_t order)
{
    if (m < 0 || m > 2)
        throw std::invalid_argument("u_gf: m must be 0, 1 or 2");
    TruncatedSeries total(order);
    if (m == 0) {
        // term_k = q^k / ((q;q)_{k-1} (q;q)_k) = term_{k-1} * q / ((1 - q^{k-1})(1 - q^k))
        auto term = TruncatedSeries::one(order);
        for (std::size_t k = 1; k <= order; ++k) {
            term.shift(1);
            if (k > 1)
                term.div_one_minus_q_pow(k - 1);
            term.div_one_minus_q_pow(k);
            total += term;
        }
        return total;
    }
    // term_k = q^{mk} / (q;q)_k^2; shifting from k-1 to k multiplies by q^m/(1 - q^k)^2
    auto term = TruncatedSeries::one(order);
    total += term;
    const auto step = static_cast<std::size_t>(m);
    for (std::size_t k = 1; step * k <= order; ++k) {
        term.shift(step);
        term.div_one_minus_q_pow(k);
        term.div_one_minus_q_pow(k);
        total += term;
    }
    return total;
}

TruncatedSeries nv_gf(std::int64_t k, std::size_t order)
{
    const std::int64_t ak = std::llabs(k);
    std::vector<BigInt> theta(order + 1);
    for (std::int64_t n = 1;; ++n) {
        const std::int64_t e = n * (n - 1) / 2 + n * ak;
        if (as_index(e) > order)
            break;
        const int sign = (n % 2 == 1) ? 1 : -1;
        theta[as_index(e)] += sign;
        if (as_index(e + n) <= order)
            theta[as_index(e + n)] -= sign;
    }
    return partition_gf(order) * TruncatedSeries(order, std::move(theta));
}

TruncatedSeries crank_cumulative_gf(int m, std::size_t order)
{
    const auto p = partition_gf(order);
    switch (m) {
    case 0:
        return -(p * signed_triangular_sum(1, order));
    case 1:
        return p * signed_triangular_sum(0, order);
    case 2:
        return crank_cumulative_gf(1, order) - crank_cumulative_gf(0, order);
    default:
        throw std::invalid_argument("crank_cumulative_gf: m must be 0, 1 or 2");
    }
}

TruncatedSeries mk_gf(std::int64_t k, std::size_t order)
{
    if (k < 1)
        throw std::invalid_argument("mk_gf: k must be >= 1");
    TruncatedSeries total(order);
    const std::int64_t base = k * (k - 1) / 2;
    if (as_index(base + (k + 1) * k) > order)
        return total;

    // Gaussian rows [a, b] for b = 0..k-1, advanced alongside n (a = n - 1).
    std::vector<TruncatedSeries> row(as_index(k), TruncatedSeries(order));
    row[0] = TruncatedSeries::one(order);
    std::int64_t a = 0;
    // inv_poch = 1/(q;q)_n
    auto inv_poch = TruncatedSeries::one(order);

    for (std::int64_t n = 1;; ++n) {
        const std::int64_t e = base + (k + 1) * n;
        if (as_index(e) > order)
            break;
        inv_poch.div_one_minus_q_pow(as_index(n));
        while (a < n - 1) {
            ++a;
            for (std::int64_t b = std::min(a, k - 1); b >= 1; --b) {
                row[as_index(b)].shift(as_index(b));
                row[as_index(b)] += row[as_index(b - 1)];
            }
        }
        if (n < k)
            continue;
        auto term = row[as_index(k - 1)] * inv_poch;
        total += term.shift(as_index(e));
    }
    return total;
}

TruncatedSeries pk_tilde_gf(std::int64_t k, std::size_t order)
{
    if (k < 1)
        throw std::invalid_argument("pk_tilde_gf: k must be >= 1");
    const std::int64_t head = k * (k + 1) / 2;
    TruncatedSeries total(order);
    // Summand with smallest part y = n + k + 1 > k has lowest power head + y(k+1).
    std::int64_t y_max = k;
    while (as_index(head + (y_max + 1) * (k + 1)) <= order)
        ++y_max;
    if (y_max == k)
        return total;

    // tail = 1/(q^y; q)_inf, built at y_max and extended downward one factor at a time.
    auto tail = TruncatedSeries::one(order);
    for (std::size_t e = as_index(y_max); e <= order; ++e)
        tail.div_one_minus_q_pow(e);
    for (std::int64_t y = y_max; y > k; --y) {
        if (y < y_max)
            tail.div_one_minus_q_pow(as_index(y));
        auto term = tail;
        total += term.shift(as_index(y * (k + 1)));
    }
    for (std::int64_t i = 1; i <= k && as_index(i) <= order; ++i)
        total.div_one_minus_q_pow(as_index(i));
    return total.shift(as_index(head));
}

} // namespace crankshaft
