#ifndef POLYWEIGHT_CONSTRUCT_HPP
#define POLYWEIGHT_CONSTRUCT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polyweight/polynomial.hpp"

namespace polyweight {

/// A choice of forced-zero coefficient indices I within {0, ..., n-1} and
/// its complement J of allowed-nonzero indices.
struct SupportSpec {
    std::size_t n = 0;
    std::vector<std::size_t> forced_zero;  // I, sorted ascending
    std::vector<std::size_t> allowed;      // J = {0,...,n-1} \ I, sorted

    static SupportSpec from_zeros(std::size_t n, std::vector<std::size_t> zeros);
    static SupportSpec from_allowed(std::size_t n, std::vector<std::size_t> allowed);
};

/// The linear conditions f_i = 0 for i in I on the cofactor coefficients
/// g_0, ..., g_{n-k-1} of a monic f = (x+1)^k g of degree n, with the
/// normalization g_{n-k} = 1 folded into the right-hand side:
///
///   sum_j g_j C(k, i-j) = -C(k, i-n+k)      for each i in I.
struct LinearSystem {
    FieldPtr field;
    std::size_t n = 0;
    std::uint64_t k = 0;
    std::vector<std::size_t> forced_zero;            // I
    std::size_t rows = 0;                            // |I|
    std::size_t cols = 0;                            // n - k
    std::vector<std::vector<FieldElement>> entries;  // rows x cols
    std::vector<FieldElement> rhs;
};

/// Exact binomial coefficient C(k, r) reduced into the field; zero for r
/// outside [0, k].
FieldElement binomial_in_field(std::uint64_t k, std::int64_t r, const FieldPtr& field);

/// Builds the system above.  Requires 1 <= k <= n and characteristic zero or
/// n < p; |I| is arbitrary.
LinearSystem build_system(std::size_t n, std::uint64_t k, const SupportSpec& support, const FieldPtr& field);

enum class SolveKind { unique, affine, inconsistent };

/// Affine description of the solution set: a particular solution plus a
/// basis of the homogeneous space (empty for a unique solution).
struct SolveResult {
    SolveKind kind = SolveKind::inconsistent;
    std::vector<FieldElement> particular;
    std::vector<std::vector<FieldElement>> basis;
    std::size_t rank = 0;

    std::size_t dimension() const noexcept { return basis.size(); }
};

/// Exact Gaussian elimination, pivoting on the first nonzero entry in column
/// order (arithmetic is exact, so determinism is the only concern).
SolveResult solve_exact(const LinearSystem& system);

/// The monic cofactor g = x^{n-k} + sum_j solution[j] x^j and the monic
/// multiple f = (x+1)^k g encoded by a solution vector.
Polynomial cofactor_from_solution(const LinearSystem& system, const std::vector<FieldElement>& solution);
Polynomial multiple_from_solution(const LinearSystem& system, const std::vector<FieldElement>& solution);

/// The unique monic f = (x+1)^k g of degree n with f_i = 0 exactly on a
/// forced-zero set of size n-k.  Its weight is exactly k+1.
Polynomial construct_extremal(std::size_t n, std::uint64_t k, const SupportSpec& support, const FieldPtr& field);

/// Number of monic degree-n multiples of (x+1)^k of minimal weight k+1
/// (characteristic zero or n < p): C(n, k).
BigInt count_extremal_formula(std::size_t n, std::uint64_t k);

/// The boundary case degree = characteristic: over F_p there are exactly
/// C(p-1, k) + 1 monic degree-p multiples of (x+1)^k with weight <= k+1;
/// all but x^p + 1 have weight exactly k+1 and are multiples of x.
struct DegreeEqualsCharCount {
    std::uint64_t p = 0;
    std::uint64_t k = 0;
    BigInt count;
    std::string description;
};
DegreeEqualsCharCount degree_equals_char_count(std::uint64_t p, std::uint64_t k);

}  // namespace polyweight

#endif
