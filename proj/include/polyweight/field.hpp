#ifndef POLYWEIGHT_FIELD_HPP
#define POLYWEIGHT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "polyweight/errors.hpp"

namespace polyweight {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Largest cardinality for which a finite field may be constructed.  Keeps
/// exhaustive element sweeps and the irreducibility scan at desk scale.
inline constexpr std::uint64_t kMaxFieldCardinality = 10000;

bool is_prime_u64(std::uint64_t n);

/// Factors q = p^m with p prime; throws std::invalid_argument if q is not a
/// prime power.
struct PrimePower {
    std::uint64_t p;
    unsigned m;
};
PrimePower factor_prime_power(std::uint64_t q);

enum class FieldKind { rationals, finite };

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/// An exactly represented coefficient field: the rationals, a prime field
/// F_p, or an extension F_{p^m} with the canonical irreducible modulus.
///
/// Fields are immutable once constructed and safe to share between threads.
/// For a fixed (p, m) the modulus is canonical: it is the first monic
/// irreducible of degree m over F_p in lexicographic order of the coefficient
/// tuple (c_{m-1}, ..., c_1, c_0), so repeated constructions are identical.
///
/// Elements of a finite field are carried as a single packed index in
/// [0, q): the element with power-basis coordinates (c_{m-1}, ..., c_0) has
/// index sum_i c_i p^i.  Index order is therefore coordinate-lexicographic,
/// starting with 0 and 1.
class Field : public std::enable_shared_from_this<Field> {
   public:
    static FieldPtr rationals();
    static FieldPtr finite(std::uint64_t p, unsigned m = 1);
    static FieldPtr of_cardinality(std::uint64_t q);  // factors q = p^m

    FieldKind kind() const noexcept { return kind_; }
    bool is_rationals() const noexcept { return kind_ == FieldKind::rationals; }
    bool is_finite() const noexcept { return kind_ == FieldKind::finite; }

    /// 0 for the rationals, p for F_{p^m}.
    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned extension_degree() const;
    std::uint64_t cardinality() const;

    /// Modulus coefficients c_0, ..., c_m (ascending degree, monic); empty
    /// for the rationals and for prime fields (m = 1).
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    bool operator==(const Field& other) const noexcept;

    FieldElement zero() const;
    FieldElement one() const;
    /// The power-basis generator x of F_{p^m}; requires m >= 2.
    FieldElement generator() const;
    FieldElement from_integer(std::int64_t v) const;
    FieldElement from_integer(const BigInt& v) const;
    FieldElement from_rational(const BigRational& v) const;
    /// Element with the given packed index (finite fields only).
    FieldElement element_at(std::uint64_t index) const;
    /// Element from power-basis coordinates (c_{m-1}, ..., c_1, c_0).
    FieldElement from_coordinates(const std::vector<std::uint64_t>& coords) const;
    FieldElement parse(std::string_view text) const;

    /// All q elements in index order: 0, 1, then coordinate-lexicographic.
    /// Throws std::domain_error for the rationals.
    std::vector<FieldElement> enumerate() const;

    /// Index-level arithmetic on packed finite-field elements.  These are the
    /// primitive operations; FieldElement delegates to them, and exhaustive
    /// sweeps may use them directly to avoid per-element boxing.
    std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub_index(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg_index(std::uint64_t a) const;
    std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv_index(std::uint64_t a) const;
    std::uint64_t pow_index(std::uint64_t a, std::uint64_t e) const;

    std::string to_string() const;

   private:
    Field(FieldKind kind, std::uint64_t p, unsigned m, std::uint64_t q,
          std::vector<std::uint64_t> modulus)
        : kind_(kind), p_(p), m_(m), q_(q), modulus_(std::move(modulus)) {}

    std::vector<std::uint64_t> unpack(std::uint64_t index) const;
    std::uint64_t pack(const std::vector<std::uint64_t>& coords) const;

    FieldKind kind_;
    std::uint64_t p_;  // 0 for rationals
    unsigned m_;       // 1 for rationals and prime fields
    std::uint64_t q_;  // 0 for rationals
    std::vector<std::uint64_t> modulus_;
};

/// make_field(p, m): canonical descriptor for F_{p^m}; make_field(): rationals.
FieldPtr make_field();
FieldPtr make_field(std::uint64_t p, unsigned m = 1);

/// An immutable element of a Field.  Rationals are stored as an exact
/// fraction in lowest terms with positive denominator; finite-field elements
/// as the packed power-basis index described in Field.
class FieldElement {
   public:
    FieldElement(FieldPtr field, BigRational value);
    FieldElement(FieldPtr field, std::uint64_t index);

    const FieldPtr& field() const noexcept { return field_; }

    bool is_zero() const;
    bool is_one() const;

    /// Packed index (finite fields only).
    std::uint64_t index() const;
    /// Power-basis coordinates (c_{m-1}, ..., c_1, c_0), finite fields only.
    std::vector<std::uint64_t> coordinates() const;
    /// Exact fraction (rationals only).
    const BigRational& rational() const;

    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::int64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    bool operator==(const FieldElement& other) const;
    bool operator!=(const FieldElement& other) const { return !(*this == other); }
    /// Deterministic total order within one field (index order for finite
    /// fields, numeric order for rationals).
    bool operator<(const FieldElement& other) const;

    /// Canonical text form: "a/b" (b omitted when 1) for rationals; for
    /// finite fields the coordinate string "c_{m-1}...c_1c_0" (digits for
    /// p <= 10, dot-separated decimal coordinates for larger p; plain
    /// decimal for prime fields).
    std::string to_string() const;

   private:
    friend class Field;

    void require_same_field(const FieldElement& other) const;

    FieldPtr field_;
    std::variant<std::uint64_t, BigRational> repr_;
};

}  // namespace polyweight

#endif
