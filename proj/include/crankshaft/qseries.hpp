#pragma once

// Exact arithmetic on power series in q truncated at a fixed order, and the
// generating functions used throughout the library.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace crankshaft {

using BigInt = mpz_class;

/// A power series c_0 + c_1 q + ... + c_N q^N with everything above q^N
/// discarded. Coefficients are arbitrary precision; no operation rounds.
///
/// Binary operations require both operands to carry the same order and throw
/// std::invalid_argument otherwise, so a truncation mismatch never silently
/// loses precision.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    /// Throws std::invalid_argument unless coeffs.size() == order + 1.
    TruncatedSeries(std::size_t order, std::vector<BigInt> coeffs);

    static TruncatedSeries one(std::size_t order);
    /// coeff * q^exponent; the zero series when exponent > order.
    static TruncatedSeries monomial(std::size_t order, std::size_t exponent, const BigInt &coeff = 1);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of q^i. Negative i yields 0; i > order throws std::out_of_range.
    BigInt coeff(std::int64_t i) const;
    const BigInt &operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const;

    TruncatedSeries &operator+=(const TruncatedSeries &other);
    TruncatedSeries &operator-=(const TruncatedSeries &other);
    TruncatedSeries &operator*=(const BigInt &scalar);

    /// Multiply by q^k in place.
    TruncatedSeries &shift(std::size_t k);
    /// Multiply by (1 - q^s) in place, s >= 1.
    TruncatedSeries &mul_one_minus_q_pow(std::size_t s);
    /// Divide by (1 - q^s) in place, s >= 1 (b_i = a_i + b_{i-s}).
    TruncatedSeries &div_one_minus_q_pow(std::size_t s);

    /// Index of the last nonzero coefficient, or -1 for the zero series.
    std::int64_t degree() const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    std::vector<BigInt> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b);
TruncatedSeries operator-(TruncatedSeries a);
TruncatedSeries operator*(TruncatedSeries a, const BigInt &scalar);
/// Truncated Cauchy product (schoolbook).
TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);

/// Multiplicative inverse modulo q^{N+1}. The constant term must be +1 or -1;
/// anything else throws std::domain_error.
TruncatedSeries inverse(const TruncatedSeries &a);

/// Renders coefficients as "c0,c1,...,cN".
std::string to_csv_line(const TruncatedSeries &s);

// nlohmann ADL hooks: {"order": N, "coeffs": ["1", "-1", ...]} with decimal strings.
void to_json(nlohmann::json &j, const TruncatedSeries &s);
void from_json(const nlohmann::json &j, TruncatedSeries &s);

// ---------------------------------------------------------------------------
// Generating functions. Every constructor takes the truncation order N last.
// Infinite sums stop at the first summand whose lowest power of q exceeds N.

/// (q^s; q)_n = prod_{i=0}^{n-1} (1 - q^{s+i}); n == 0 gives 1. Requires s >= 1.
TruncatedSeries pochhammer(std::int64_t s, std::int64_t n, std::size_t order);

/// (q^s; q)_inf. Factors with s + i > N are the identity and are skipped.
TruncatedSeries pochhammer_inf(std::int64_t s, std::size_t order);

/// 1 / (q;q)_inf; coefficient of q^n is p(n).
TruncatedSeries partition_gf(std::size_t order);

/// Gaussian binomial [n choose k]_q via [n,k] = [n-1,k-1] + q^k [n-1,k].
/// Zero when k < 0 or k > n.
TruncatedSeries gaussian_binomial(std::int64_t n, std::int64_t k, std::size_t order);

/// j(3j-1)/2, the pentagonal number attached to j in Z.
constexpr std::int64_t pentagonal(std::int64_t j) noexcept { return j * (3 * j - 1) / 2; }

/// sum_{j=jlo}^{jhi} (-1)^j q^{j(3j-1)/2}. Throws std::invalid_argument if jlo > jhi.
TruncatedSeries pentagonal_sum(std::int64_t jlo, std::int64_t jhi, std::size_t order);

/// The full two-sided pentagonal sum over every j whose exponent is <= N.
TruncatedSeries pentagonal_sum_all(std::size_t order);

/// sum_{n >= from} (-1)^n q^{n(n+1)/2}.
TruncatedSeries signed_triangular_sum(std::int64_t from, std::size_t order);

/// Generating function of u_m(n), m in {0,1,2}.
///   m = 0: sum_{k>=1} q^k / ((q;q)_{k-1} (q;q)_k)      lowest power k
///   m > 0: sum_{k>=0} q^{mk} / (q;q)_k^2               lowest power mk
TruncatedSeries u_gf(int m, std::size_t order);

/// Generating function of the signed vector-partition count N_V(k, n):
///   (1/(q;q)_inf) sum_{n>=1} (-1)^{n-1} q^{n(n-1)/2 + n|k|} (1 - q^n)
/// lowest power of the n-th summand is n(n-1)/2 + n|k|.
TruncatedSeries nv_gf(std::int64_t k, std::size_t order);

/// Generating function of C_m(n), m in {0,1,2}:
///   C_0: -(1/(q;q)_inf) sum_{n>=1} (-1)^n q^{n(n+1)/2}
///   C_1:  (1/(q;q)_inf) sum_{n>=0} (-1)^n q^{n(n+1)/2}
///   C_2:  C_1 - C_0
TruncatedSeries crank_cumulative_gf(int m, std::size_t order);

/// Generating function of M_k(n), k >= 1:
///   sum_{n>=k} q^{C(k,2) + (k+1)n} / (q;q)_n * [n-1 choose k-1]
/// lowest power of the n-th summand is C(k,2) + (k+1)n.
TruncatedSeries mk_gf(std::int64_t k, std::size_t order);

/// Generating function of P~_k(n), k >= 1:
///   q^{k(k+1)/2}/(q;q)_k * sum_{n>=0} q^{(n+k+1)(k+1)} / (q^{n+k+1};q)_inf
/// lowest power of the n-th summand is k(k+1)/2 + (n+k+1)(k+1).
TruncatedSeries pk_tilde_gf(std::int64_t k, std::size_t order);

} // namespace crankshaft
