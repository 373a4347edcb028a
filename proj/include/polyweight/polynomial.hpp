#ifndef POLYWEIGHT_POLYNOMIAL_HPP
#define POLYWEIGHT_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyweight/field.hpp"

namespace polyweight {

/// Dense univariate polynomial with exact coefficients over a Field.
///
/// Normal form: no trailing zero coefficients; the zero polynomial is the
/// empty coefficient sequence and its degree is a distinguished "none"
/// (std::nullopt), never -1.  Polynomials are immutable values.
class Polynomial {
   public:
    explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
    Polynomial(FieldPtr field, std::vector<FieldElement> coeffs);

    static Polynomial zero(FieldPtr field) { return Polynomial(std::move(field)); }
    static Polynomial one(FieldPtr field);
    static Polynomial x(FieldPtr field);
    static Polynomial monomial(FieldPtr field, std::size_t degree, const FieldElement& c);
    static Polynomial constant(const FieldElement& c);
    /// Convenience: coefficients given as integers, ascending degree.
    static Polynomial from_integers(const FieldPtr& field, const std::vector<std::int64_t>& coeffs);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const noexcept;
    /// Number of nonzero coefficients.
    std::size_t weight() const;
    bool is_monic() const;

    /// Coefficient of x^i (zero beyond the degree).
    FieldElement coeff(std::size_t i) const;
    const FieldElement& leading_coeff() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const FieldElement& s) const;
    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    /// Exact quotient and remainder: a = q*b + r with deg r < deg b.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    /// Exact division; throws std::domain_error if the remainder is nonzero.
    static Polynomial div_exact(const Polynomial& a, const Polynomial& b);

    Polynomial pow(std::uint64_t e) const;
    Polynomial shifted(std::size_t s) const;  // multiply by x^s

    FieldElement evaluate(const FieldElement& at) const;

    /// Canonical text form, terms in decreasing degree ("x^3 + 2*x^2 + x").
    std::string to_string() const;

   private:
    void normalize();
    void require_same_field(const Polynomial& other) const;

    FieldPtr field_;
    std::vector<FieldElement> coeffs_;  // coeffs_[i] = coefficient of x^i
};

/// Largest k such that (x - xi)^k divides f, by repeated exact division.
/// Valid in every characteristic.  Throws std::domain_error for f = 0.
std::size_t multiplicity_at(const Polynomial& f, const FieldElement& xi);

/// Divides f by the maximal power of x: returns (f / x^s, s) with nonzero
/// constant term.  The weight is unchanged.  Throws for f = 0.
std::pair<Polynomial, std::size_t> strip_x_power(const Polynomial& f);

/// f(xi^{-1} x): coefficient i is multiplied by xi^{-i}.  Preserves the
/// weight and relocates the multiplicity at xi to 1.  Requires xi != 0.
Polynomial dilate_root(const Polynomial& f, const FieldElement& xi);

/// Parses the canonical text form produced by Polynomial::to_string.
Polynomial parse_polynomial(const FieldPtr& field, std::string_view text);

}  // namespace polyweight

#endif
