#include "polyweight/construct.hpp"

#include <algorithm>

#include "polyweight/counting.hpp"

namespace polyweight {

namespace {

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

SupportSpec SupportSpec::from_zeros(std::size_t n, std::vector<std::size_t> zeros) {
    SupportSpec s;
    s.n = n;
    s.forced_zero = sorted_unique(std::move(zeros));
    if (!s.forced_zero.empty() && s.forced_zero.back() >= n) {
        throw std::invalid_argument("support index out of range [0, n)");
    }
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (next < s.forced_zero.size() && s.forced_zero[next] == i) {
            ++next;
        } else {
            s.allowed.push_back(i);
        }
    }
    return s;
}

SupportSpec SupportSpec::from_allowed(std::size_t n, std::vector<std::size_t> allowed) {
    SupportSpec via = from_zeros(n, sorted_unique(std::move(allowed)));
    SupportSpec s;
    s.n = n;
    s.forced_zero = std::move(via.allowed);
    s.allowed = std::move(via.forced_zero);
    return s;
}

FieldElement binomial_in_field(std::uint64_t k, std::int64_t r, const FieldPtr& field) {
    if (r < 0 || static_cast<std::uint64_t>(r) > k) return field->zero();
    return field->from_integer(binomial_exact(k, static_cast<std::uint64_t>(r)));
}

LinearSystem build_system(std::size_t n, std::uint64_t k, const SupportSpec& support, const FieldPtr& field) {
    if (k < 1 || k > n) throw std::domain_error("multiplicity k must satisfy 1 <= k <= n");
    if (support.n != n) throw std::invalid_argument("support is for a different degree");
    if (field->is_finite() && n >= field->characteristic()) {
        throw UnsupportedRegimeError("requires n < p: uniqueness fails from degree p onwards");
    }
    LinearSystem system;
    system.field = field;
    system.n = n;
    system.k = k;
    system.forced_zero = support.forced_zero;
    system.rows = support.forced_zero.size();
    system.cols = n - static_cast<std::size_t>(k);
    system.entries.reserve(system.rows);
    system.rhs.reserve(system.rows);
    for (std::size_t i : support.forced_zero) {
        std::vector<FieldElement> row;
        row.reserve(system.cols);
        for (std::size_t j = 0; j < system.cols; ++j) {
            row.push_back(binomial_in_field(k, static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j), field));
        }
        system.entries.push_back(std::move(row));
        system.rhs.push_back(-binomial_in_field(
            k, static_cast<std::int64_t>(i) - static_cast<std::int64_t>(n) + static_cast<std::int64_t>(k), field));
    }
    return system;
}

SolveResult solve_exact(const LinearSystem& system) {
    const FieldPtr& field = system.field;
    const std::size_t rows = system.rows;
    const std::size_t cols = system.cols;
    std::vector<std::vector<FieldElement>> a = system.entries;
    std::vector<FieldElement> b = system.rhs;

    std::vector<std::size_t> pivot_col;  // pivot_col[r] = column of pivot in row r
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t r = pivot_row;
        while (r < rows && a[r][col].is_zero()) ++r;
        if (r == rows) continue;
        std::swap(a[r], a[pivot_row]);
        std::swap(b[r], b[pivot_row]);
        const FieldElement inv = a[pivot_row][col].inv();
        for (std::size_t j = col; j < cols; ++j) a[pivot_row][j] = a[pivot_row][j] * inv;
        b[pivot_row] = b[pivot_row] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || a[i][col].is_zero()) continue;
            const FieldElement factor = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] = a[i][j] - factor * a[pivot_row][j];
            b[i] = b[i] - factor * b[pivot_row];
        }
        pivot_col.push_back(col);
        ++pivot_row;
    }

    SolveResult result;
    result.rank = pivot_col.size();
    for (std::size_t i = result.rank; i < rows; ++i) {
        if (!b[i].is_zero()) {
            result.kind = SolveKind::inconsistent;
            return result;
        }
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    result.particular.assign(cols, field->zero());
    for (std::size_t r = 0; r < result.rank; ++r) result.particular[pivot_col[r]] = b[r];

    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElement> v(cols, field->zero());
        v[free_col] = field->one();
        for (std::size_t r = 0; r < result.rank; ++r) v[pivot_col[r]] = -a[r][free_col];
        result.basis.push_back(std::move(v));
    }
    result.kind = result.basis.empty() ? SolveKind::unique : SolveKind::affine;
    return result;
}

Polynomial cofactor_from_solution(const LinearSystem& system, const std::vector<FieldElement>& solution) {
    if (solution.size() != system.cols) throw std::invalid_argument("solution length does not match the system");
    std::vector<FieldElement> coeffs = solution;
    coeffs.push_back(system.field->one());  // g_{n-k} = 1
    return Polynomial(system.field, std::move(coeffs));
}

Polynomial multiple_from_solution(const LinearSystem& system, const std::vector<FieldElement>& solution) {
    const Polynomial x_plus_1_k = Polynomial::from_integers(system.field, {1, 1}).pow(system.k);
    return x_plus_1_k * cofactor_from_solution(system, solution);
}

Polynomial construct_extremal(std::size_t n, std::uint64_t k, const SupportSpec& support, const FieldPtr& field) {
    if (support.forced_zero.size() != n - static_cast<std::size_t>(k)) {
        throw std::invalid_argument("the forced-zero set must have exactly n - k indices");
    }
    LinearSystem system = build_system(n, k, support, field);
    SolveResult solved = solve_exact(system);
    if (solved.kind != SolveKind::unique) {
        throw std::logic_error("the maximal-rank system unexpectedly failed to have a unique solution");
    }
    Polynomial f = multiple_from_solution(system, solved.particular);
    if (f.weight() != static_cast<std::size_t>(k) + 1) {
        throw std::logic_error("constructed polynomial does not have the minimal weight k + 1");
    }
    return f;
}

BigInt count_extremal_formula(std::size_t n, std::uint64_t k) {
    if (k < 1 || k > n) throw std::domain_error("multiplicity k must satisfy 1 <= k <= n");
    return binomial_exact(n, k);
}

DegreeEqualsCharCount degree_equals_char_count(std::uint64_t p, std::uint64_t k) {
    if (!is_prime_u64(p)) throw std::invalid_argument("invalid characteristic: " + std::to_string(p) + " is not prime");
    if (k == 0 || k >= p) throw std::domain_error("requires 0 < k < p");
    DegreeEqualsCharCount result;
    result.p = p;
    result.k = k;
    result.count = binomial_exact(p - 1, k) + 1;
    result.description = "x^" + std::to_string(p) + " + 1 together with " + binomial_exact(p - 1, k).get_str() +
                         " polynomials of weight exactly " + std::to_string(k + 1) + " that are multiples of x";
    return result;
}

}  // namespace polyweight
