#include "polyweight/bounds.hpp"

#include <algorithm>

namespace polyweight {

PadicExpansion padic_digits(std::uint64_t k, std::uint64_t p) {
    if (k == 0) throw std::domain_error("multiplicity must be positive");
    if (!is_prime_u64(p)) throw std::invalid_argument("invalid characteristic: " + std::to_string(p) + " is not prime");
    PadicExpansion e;
    e.k = k;
    e.p = p;
    e.bound = 1;
    while (k > 0) {
        std::uint32_t digit = static_cast<std::uint32_t>(k % p);
        e.digits.push_back(digit);
        e.bound *= digit + 1;
        k /= p;
    }
    return e;
}

BigInt weight_lower_bound(std::uint64_t k, std::uint64_t characteristic) {
    if (k == 0) throw std::domain_error("multiplicity must be positive");
    if (characteristic == 0) return BigInt(static_cast<unsigned long>(k)) + 1;
    return padic_digits(k, characteristic).bound;
}

BigInt weight_lower_bound(std::uint64_t k, const FieldPtr& field) {
    return weight_lower_bound(k, field->characteristic());
}

BoundReport check_bound(const Polynomial& f, const FieldElement& xi) {
    if (f.is_zero()) throw std::domain_error("the weight bound applies to nonzero polynomials");
    if (xi.is_zero()) throw std::domain_error("the weight bound applies to nonzero roots");
    const std::size_t k = multiplicity_at(f, xi);
    BigInt bound = k == 0 ? BigInt(1) : weight_lower_bound(k, f.field()->characteristic());
    BoundReport report{f, xi, k, bound, f.weight(), false, false};
    report.holds = BigInt(static_cast<unsigned long>(report.weight)) >= report.bound;
    report.tight = BigInt(static_cast<unsigned long>(report.weight)) == report.bound;
    return report;
}

Polynomial extremal_example(std::uint64_t k, const FieldPtr& field) {
    if (k == 0) throw std::domain_error("multiplicity must be positive");
    const Polynomial x_minus_1 = Polynomial::from_integers(field, {-1, 1});
    if (field->is_rationals()) return x_minus_1.pow(k);
    const std::uint64_t p = field->characteristic();
    PadicExpansion e = padic_digits(k, p);
    Polynomial result = Polynomial::one(field);
    std::uint64_t pt = 1;  // p^t
    for (std::size_t t = 0; t < e.digits.size(); ++t) {
        if (e.digits[t] != 0) {
            // x^{p^t} - 1
            Polynomial factor = Polynomial::monomial(field, static_cast<std::size_t>(pt), field->one()) -
                                Polynomial::one(field);
            result = result * factor.pow(e.digits[t]);
        }
        pt *= p;
    }
    return result;
}

namespace {

RatioReport ratio_report_from_roots(const Polynomial& f, const std::vector<FieldElement>& roots) {
    const std::uint64_t p = f.field()->characteristic();
    const std::size_t degree = *f.degree();
    std::size_t multiplicity_sum = 0;
    for (const FieldElement& root : roots) {
        std::size_t k = multiplicity_at(f, root);
        if (k == 0) throw std::invalid_argument("supplied value is not a root: " + root.to_string());
        if (p != 0 && k >= p) {
            throw UnsupportedRegimeError("the ratio bound requires every root multiplicity below the characteristic");
        }
        multiplicity_sum += k;
    }
    RatioReport report;
    report.degree = degree;
    report.distinct_roots = roots.size();
    report.weight = f.weight();
    if (roots.empty()) {
        report.holds = true;  // ratio undefined, vacuous
        report.tight = false;
        return report;
    }
    if (multiplicity_sum < degree) {
        throw std::domain_error("the ratio bound requires the polynomial to split over its field of definition");
    }
    // weight >= degree / r + 1, compared exactly: r * (weight - 1) >= degree.
    report.holds = roots.size() * (report.weight - 1) >= degree;
    report.tight = roots.size() * (report.weight - 1) == degree;
    return report;
}

}  // namespace

RatioReport ratio_bound_check(const Polynomial& f) {
    if (!f.field()->is_finite()) {
        throw std::invalid_argument("over the rationals the caller must supply the roots");
    }
    if (f.is_zero()) throw std::domain_error("the ratio bound applies to nonzero polynomials");
    if (f.coeff(0).is_zero()) {
        throw std::domain_error("the ratio bound requires f(0) != 0; strip powers of x first");
    }
    std::vector<FieldElement> roots;
    for (const FieldElement& a : f.field()->enumerate()) {
        if (f.evaluate(a).is_zero()) roots.push_back(a);
    }
    return ratio_report_from_roots(f, roots);
}

RatioReport ratio_bound_check(const Polynomial& f, const std::vector<FieldElement>& supplied_roots) {
    if (f.is_zero()) throw std::domain_error("the ratio bound applies to nonzero polynomials");
    if (f.coeff(0).is_zero()) {
        throw std::domain_error("the ratio bound requires f(0) != 0; strip powers of x first");
    }
    std::vector<FieldElement> roots = supplied_roots;
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return ratio_report_from_roots(f, roots);
}

BigInt empirical_min_weight(std::uint64_t k, std::size_t n, const FieldPtr& field, std::uint64_t budget) {
    if (!field->is_finite()) throw std::domain_error("empirical sweeps require a finite field");
    if (k == 0) throw std::domain_error("multiplicity must be positive");
    if (n < k) throw std::invalid_argument("degree cap below the multiplicity leaves nothing to enumerate");
    const std::uint64_t q = field->cardinality();
    BigInt total(1);
    for (std::size_t i = 0; i < n - k; ++i) total *= static_cast<unsigned long>(q);
    if (total > BigInt(static_cast<unsigned long>(budget))) {
        throw CapacityError("enumeration of q^" + std::to_string(n - k) + " cofactors exceeds the budget");
    }

    const FieldElement one = field->one();
    const Polynomial xk = Polynomial::from_integers(field, {-1, 1}).pow(k);  // (x-1)^k
    std::size_t min_weight = static_cast<std::size_t>(-1);
    // Monic cofactors g of each degree d <= n - k with g(1) != 0, so the
    // multiplicity at 1 is exactly k.
    std::vector<FieldElement> gcoeffs;
    for (std::size_t d = 0; d + k <= n; ++d) {
        std::uint64_t count = 1;
        bool overflow = false;
        for (std::size_t i = 0; i < d; ++i) {
            count *= q;
            if (count > budget) {
                overflow = true;
                break;
            }
        }
        if (overflow) throw CapacityError("cofactor enumeration exceeds the budget");
        for (std::uint64_t t = 0; t < count; ++t) {
            gcoeffs.clear();
            std::uint64_t rest = t;
            for (std::size_t i = 0; i < d; ++i) {
                gcoeffs.push_back(field->element_at(rest % q));
                rest /= q;
            }
            gcoeffs.push_back(one);
            Polynomial g(field, gcoeffs);
            if (g.evaluate(one).is_zero()) continue;
            min_weight = std::min(min_weight, (xk * g).weight());
        }
    }
    return BigInt(static_cast<unsigned long>(min_weight));
}

}  // namespace polyweight
