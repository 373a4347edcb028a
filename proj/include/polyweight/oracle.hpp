#ifndef POLYWEIGHT_ORACLE_HPP
#define POLYWEIGHT_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "polyweight/bounds.hpp"
#include "polyweight/counting.hpp"
#include "polyweight/polynomial.hpp"

namespace polyweight {

/// Parameters of an exhaustive sweep over the q^{n-k} monic degree-n
/// multiples of (x+1)^k over F_q.  The budget is a hard precondition checked
/// before any enumeration starts: a truncated sweep would be meaningless for
/// exact-count verification.
struct SweepConfig {
    std::uint64_t q = 0;
    std::size_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t budget = kDefaultEnumerationBudget;
    unsigned workers = 1;
};

/// Streams every monic multiple f = (x+1)^k g exactly once, with the monic
/// cofactors g ordered lexicographically over (g_{n-k-1}, ..., g_0) in
/// element-index order.  Always single-threaded: the stream order is part of
/// the contract.
void enumerate_multiples(const SweepConfig& cfg, const std::function<void(const Polynomial&)>& fn);

/// All q^{n-k} multiples in stream order (small sweeps only).
std::vector<Polynomial> collect_multiples(const SweepConfig& cfg);

/// Tally of weight(f) over the full stream; total is exactly q^{n-k}.
/// Partitioned across cfg.workers by the top non-leading cofactor
/// coefficient; the merge is an exact tally sum, so the worker count cannot
/// affect the result.
WeightDistribution empirical_weight_distribution(const SweepConfig& cfg);

/// Number of enumerated f with f_j != 0 for all j in J and f_i = 0 for all
/// other i < n.  For n < p this equals m_w(q, k, |J|+1) whatever J is.
BigInt empirical_fixed_support_count(const SweepConfig& cfg, const std::vector<std::size_t>& support);

/// empirical_weight_distribution plus its configuration and timing.
struct DistributionSweepReport {
    SweepConfig config;
    WeightDistribution distribution;
    double wall_time_ms = 0.0;
};
DistributionSweepReport run_distribution_sweep(const SweepConfig& cfg);

/// One weight-bound violation (expected never to occur).
struct BoundViolation {
    Polynomial f;
    std::uint64_t multiplicity = 0;
    BigInt bound;
    std::size_t weight = 0;
};

/// Per-multiplicity minimum observed weight with the first witness in
/// (degree, coefficient-tuple) order.
struct MinWeightRow {
    std::uint64_t multiplicity = 0;
    std::size_t min_weight = 0;
    BigInt bound;
    Polynomial witness;
    bool tight = false;
};

struct BoundSweepConfig {
    std::uint64_t p = 0;
    std::size_t max_degree = 0;
    std::uint64_t budget = kDefaultEnumerationBudget;
    unsigned workers = 1;
};

/// Checks weight(f) >= prod_t (k_t + 1) for every monic f over F_p of degree
/// <= max_degree with multiplicity k >= 1 at 1.  Returns the (expected
/// empty) violations and one minimum-weight row per observed k.
struct BoundSweepReport {
    BoundSweepConfig config;
    std::vector<BoundViolation> violations;
    std::vector<MinWeightRow> rows;  // ascending multiplicity
    double wall_time_ms = 0.0;
};
BoundSweepReport bound_sweep(const BoundSweepConfig& cfg);

}  // namespace polyweight

#endif
