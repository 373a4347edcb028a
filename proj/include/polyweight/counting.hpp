#ifndef POLYWEIGHT_COUNTING_HPP
#define POLYWEIGHT_COUNTING_HPP

#include <cstdint>
#include <map>

#include "polyweight/field.hpp"

namespace polyweight {

/// Exact C(a, b); zero for b outside [0, a].
BigInt binomial_exact(std::uint64_t a, std::uint64_t b);

/// The number of monic degree-n multiples of (x+1)^k over F_q whose nonzero
/// lower coefficients occupy one fixed support of size w-1 (independent of
/// which support, for n < p):
///
///   M_w = sum_{v >= k} (-1)^{w-v-1} C(w-1, v) q^{v-k}.
///
/// Vanishes for w <= k; equals 1 at w = k+1.
BigInt m_w(std::uint64_t q, std::uint64_t k, std::uint64_t w);

enum class CountSource { formula, enumeration };

/// Exact map weight -> count of monic degree-n multiples of (x+1)^k over
/// F_q.  Weights outside (k, n+1] never occur; the counts sum to q^{n-k}.
struct WeightDistribution {
    std::uint64_t q = 0;
    std::size_t n = 0;
    std::uint64_t k = 0;
    std::map<std::size_t, BigInt> counts;  // only nonzero counts are stored
    CountSource source = CountSource::formula;

    BigInt count(std::size_t w) const;
    BigInt total() const;

    bool operator==(const WeightDistribution& other) const {
        return q == other.q && n == other.n && k == other.k && counts == other.counts;
    }
};

/// Closed-form distribution: counts[w] = C(n, w-1) * M_w.  Requires
/// q = p^m with 1 <= k <= n < p.
WeightDistribution weight_distribution(std::uint64_t q, std::size_t n, std::uint64_t k);

/// Tripwire for the closing identity sum_w C(n, w-1) M_w = q^{n-k};
/// mathematically always true, so false signals an implementation bug.
bool total_identity_check(std::uint64_t q, std::size_t n, std::uint64_t k);

/// q^e as a big integer.
BigInt integer_power(std::uint64_t q, std::uint64_t e);

}  // namespace polyweight

#endif
