#ifndef POLYWEIGHT_BOUNDS_HPP
#define POLYWEIGHT_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "polyweight/polynomial.hpp"

namespace polyweight {

/// Base-p digits of k with the product bound prod_t (k_t + 1).
struct PadicExpansion {
    std::uint64_t k = 0;
    std::uint64_t p = 0;
    std::vector<std::uint32_t> digits;  // digits[t] = k_t, leading digit nonzero
    BigInt bound;                       // prod_t (k_t + 1)
};

/// Digits of k >= 1 in base p (p prime).  Throws std::domain_error for k = 0.
PadicExpansion padic_digits(std::uint64_t k, std::uint64_t p);

/// Minimum possible weight of a polynomial with a nonzero root of
/// multiplicity k: k + 1 in characteristic zero, prod_t (k_t + 1) in
/// characteristic p.  The two agree when k < p.
BigInt weight_lower_bound(std::uint64_t k, std::uint64_t characteristic);
BigInt weight_lower_bound(std::uint64_t k, const FieldPtr& field);

/// The weight bound evaluated on one concrete instance.  `holds` is always
/// true for a correct implementation; it stays representable so sweeps can
/// report a violation instead of aborting.
struct BoundReport {
    Polynomial f;
    FieldElement xi;
    std::uint64_t multiplicity = 0;  // k
    BigInt bound;
    std::size_t weight = 0;
    bool holds = false;   // weight >= bound
    bool tight = false;   // weight == bound
};

/// Evaluates the weight bound for f at xi != 0.  If xi is not a root the
/// report carries k = 0 and holds trivially.  Throws for f = 0.
BoundReport check_bound(const Polynomial& f, const FieldElement& xi);

/// The polynomial attaining the bound: (x-1)^k, computed over characteristic
/// p as prod_t (x^{p^t} - 1)^{k_t}.  Its weight is exactly prod_t (k_t + 1)
/// and its multiplicity at 1 is exactly k.
Polynomial extremal_example(std::uint64_t k, const FieldPtr& field);

/// weight >= degree / #distinct-roots + 1, for f with f(0) != 0 that splits
/// over the field of definition.
struct RatioReport {
    std::size_t degree = 0;
    std::size_t distinct_roots = 0;
    std::size_t weight = 0;
    bool holds = false;
    bool tight = false;
};

/// Finite fields: distinct roots found by exhaustive evaluation.
RatioReport ratio_bound_check(const Polynomial& f);
/// Characteristic zero: the caller supplies the roots (no root finding here).
RatioReport ratio_bound_check(const Polynomial& f, const std::vector<FieldElement>& supplied_roots);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1000000;

/// Minimum weight over all monic f of degree <= n with multiplicity exactly
/// k at 1, by exhaustive enumeration of cofactors (x-1)^k * g with g(1) != 0.
/// Must equal weight_lower_bound(k, F) whenever n >= k.
BigInt empirical_min_weight(std::uint64_t k, std::size_t n, const FieldPtr& field,
                            std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace polyweight

#endif
