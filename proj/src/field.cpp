#include "polyweight/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polyweight {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin for 64-bit inputs with the standard base set.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimePower factor_prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned m = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    if (r != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return {p, m};
}

// ---------------------------------------------------------------------------
// modulus search

namespace {

// Dense coefficient vectors over F_p, ascending degree, leading coeff nonzero.
using FpPoly = std::vector<std::uint64_t>;

// Remainder of a mod b (b monic), in place on a copy.
FpPoly fp_poly_rem(FpPoly a, const FpPoly& b, std::uint64_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - b.size();
        if (lead != 0) {
            for (std::size_t i = 0; i <= db; ++i) {
                std::uint64_t sub = (lead * b[i]) % p;
                std::uint64_t& c = a[shift + i];
                c = (c + p - sub) % p;
            }
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.size() < b.size()) break;
    }
    return a;
}

// Monic polynomial of degree deg whose non-leading coefficients are the
// base-p digits of t (digit i of t = coefficient of x^i).
FpPoly monic_from_counter(std::uint64_t t, unsigned deg, std::uint64_t p) {
    FpPoly f(deg + 1, 0);
    for (unsigned i = 0; i < deg; ++i) {
        f[i] = t % p;
        t /= p;
    }
    f[deg] = 1;
    return f;
}

bool is_irreducible(const FpPoly& f, std::uint64_t p) {
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    // Trial division by every monic polynomial of degree 1..m/2.
    for (unsigned d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            FpPoly g = monic_from_counter(t, d, p);
            if (fp_poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> canonical_modulus(std::uint64_t p, unsigned m) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    // Counter order is lexicographic over (c_{m-1}, ..., c_1, c_0) because the
    // digit of weight p^i is the coefficient of x^i.
    for (std::uint64_t t = 0; t < count; ++t) {
        FpPoly f = monic_from_counter(t, m, p);
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::rationals() {
    static const FieldPtr instance(new Field(FieldKind::rationals, 0, 1, 0, {}));
    return instance;
}

FieldPtr Field::finite(std::uint64_t p, unsigned m) {
    if (!is_prime_u64(p)) {
        throw std::invalid_argument("invalid characteristic: " + std::to_string(p) + " is not prime");
    }
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (q > kMaxFieldCardinality / p) {
            throw CapacityError("field cardinality " + std::to_string(p) + "^" + std::to_string(m) +
                                " exceeds the configured limit " + std::to_string(kMaxFieldCardinality));
        }
        q *= p;
    }
    std::vector<std::uint64_t> modulus;
    if (m >= 2) modulus = canonical_modulus(p, m);
    return FieldPtr(new Field(FieldKind::finite, p, m, q, std::move(modulus)));
}

FieldPtr Field::of_cardinality(std::uint64_t q) {
    PrimePower pp = factor_prime_power(q);
    return finite(pp.p, pp.m);
}

FieldPtr make_field() { return Field::rationals(); }
FieldPtr make_field(std::uint64_t p, unsigned m) { return Field::finite(p, m); }

unsigned Field::extension_degree() const {
    if (!is_finite()) throw std::domain_error("extension degree is defined for finite fields only");
    return m_;
}

std::uint64_t Field::cardinality() const {
    if (!is_finite()) throw std::domain_error("the rationals are infinite");
    return q_;
}

bool Field::operator==(const Field& other) const noexcept {
    return kind_ == other.kind_ && p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

std::string Field::to_string() const {
    if (is_rationals()) return "Q";
    return "F_" + std::to_string(q_);
}

std::vector<std::uint64_t> Field::unpack(std::uint64_t index) const {
    std::vector<std::uint64_t> coords(m_);
    for (unsigned i = 0; i < m_; ++i) {
        coords[i] = index % p_;
        index /= p_;
    }
    return coords;  // coords[i] = coefficient of x^i
}

std::uint64_t Field::pack(const std::vector<std::uint64_t>& coords) const {
    std::uint64_t index = 0;
    for (unsigned i = m_; i-- > 0;) index = index * p_ + coords[i];
    return index;
}

std::uint64_t Field::add_index(std::uint64_t a, std::uint64_t b) const {
    if (m_ == 1) return (a + b) % p_;
    std::uint64_t r = 0, w = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((a % p_ + b % p_) % p_) * w;
        a /= p_;
        b /= p_;
        w *= p_;
    }
    return r;
}

std::uint64_t Field::sub_index(std::uint64_t a, std::uint64_t b) const {
    if (m_ == 1) return (a + p_ - b) % p_;
    std::uint64_t r = 0, w = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((a % p_ + p_ - b % p_) % p_) * w;
        a /= p_;
        b /= p_;
        w *= p_;
    }
    return r;
}

std::uint64_t Field::neg_index(std::uint64_t a) const { return sub_index(0, a); }

std::uint64_t Field::mul_index(std::uint64_t a, std::uint64_t b) const {
    if (m_ == 1) return (a * b) % p_;
    // Schoolbook product in the power basis, then reduction by the monic
    // modulus: x^m = -(modulus_{m-1} x^{m-1} + ... + modulus_0).
    std::uint64_t ca[16], cb[16], prod[31];
    for (unsigned i = 0; i < m_; ++i) {
        ca[i] = a % p_;
        a /= p_;
        cb[i] = b % p_;
        b /= p_;
    }
    for (unsigned i = 0; i < 2 * m_ - 1; ++i) prod[i] = 0;
    for (unsigned i = 0; i < m_; ++i) {
        if (ca[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
    for (unsigned i = 2 * m_ - 2; i >= m_; --i) {
        std::uint64_t c = prod[i];
        if (c != 0) {
            prod[i] = 0;
            for (unsigned j = 0; j < m_; ++j) {
                prod[i - m_ + j] = (prod[i - m_ + j] + c * (p_ - modulus_[j]) % p_) % p_;
            }
        }
    }
    std::uint64_t r = 0;
    for (unsigned i = m_; i-- > 0;) r = r * p_ + prod[i];
    return r;
}

std::uint64_t Field::pow_index(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul_index(r, a);
        a = mul_index(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Field::inv_index(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return pow_index(a, q_ - 2);  // a^(q-1) = 1 for a != 0
}

FieldElement Field::zero() const {
    if (is_rationals()) return FieldElement(shared_from_this(), BigRational(0));
    return FieldElement(shared_from_this(), std::uint64_t{0});
}

FieldElement Field::one() const {
    if (is_rationals()) return FieldElement(shared_from_this(), BigRational(1));
    return FieldElement(shared_from_this(), std::uint64_t{1});
}

FieldElement Field::generator() const {
    if (!is_finite() || m_ < 2) throw std::domain_error("power-basis generator requires an extension field");
    return FieldElement(shared_from_this(), p_);
}

FieldElement Field::from_integer(std::int64_t v) const { return from_integer(BigInt(static_cast<long>(v))); }

FieldElement Field::from_integer(const BigInt& v) const {
    if (is_rationals()) return FieldElement(shared_from_this(), BigRational(v));
    BigInt r = v % BigInt(static_cast<unsigned long>(p_));
    if (r < 0) r += BigInt(static_cast<unsigned long>(p_));
    return FieldElement(shared_from_this(), static_cast<std::uint64_t>(r.get_ui()));
}

FieldElement Field::from_rational(const BigRational& v) const {
    if (!is_rationals()) throw std::domain_error("rational values require the rational field");
    BigRational c = v;
    c.canonicalize();
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::element_at(std::uint64_t index) const {
    if (!is_finite()) throw std::domain_error("the rationals are not indexable");
    if (index >= q_) throw std::out_of_range("element index out of range");
    return FieldElement(shared_from_this(), index);
}

FieldElement Field::from_coordinates(const std::vector<std::uint64_t>& coords) const {
    if (!is_finite()) throw std::domain_error("coordinates require a finite field");
    if (coords.size() != m_) throw std::invalid_argument("expected exactly m coordinates");
    for (std::uint64_t c : coords) {
        if (c >= p_) throw std::invalid_argument("coordinate out of range [0, p)");
    }
    // Argument order is (c_{m-1}, ..., c_0); storage is ascending.
    std::vector<std::uint64_t> asc(coords.rbegin(), coords.rend());
    return FieldElement(shared_from_this(), pack(asc));
}

std::vector<FieldElement> Field::enumerate() const {
    if (!is_finite()) throw std::domain_error("the rationals are not enumerable");
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint64_t i = 0; i < q_; ++i) out.emplace_back(shared_from_this(), i);
    return out;
}

FieldElement Field::parse(std::string_view text) const {
    if (text.empty()) throw std::invalid_argument("empty element literal");
    std::string s(text);
    if (is_rationals()) {
        BigRational v;
        try {
            v = BigRational(s);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("invalid rational literal: " + s);
        }
        if (v.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
        v.canonicalize();
        return FieldElement(shared_from_this(), std::move(v));
    }
    if (m_ == 1) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid element literal: " + s);
        }
        if (pos != s.size()) throw std::invalid_argument("invalid element literal: " + s);
        return FieldElement(shared_from_this(), v % p_);
    }
    if (p_ <= 10) {
        // Coordinate digit string "c_{m-1}...c_1c_0", up to m digits.
        if (s.size() > m_) throw std::invalid_argument("too many coordinates in: " + s);
        std::uint64_t index = 0;
        for (char ch : s) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw std::invalid_argument("invalid coordinate digit in: " + s);
            }
            std::uint64_t d = static_cast<std::uint64_t>(ch - '0');
            if (d >= p_) throw std::invalid_argument("coordinate out of range in: " + s);
            index = index * p_ + d;
        }
        return FieldElement(shared_from_this(), index);
    }
    // Dot-separated decimal coordinates for p > 10.
    std::vector<std::uint64_t> coords;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '.')) {
        if (part.empty()) throw std::invalid_argument("invalid element literal: " + s);
        coords.push_back(std::stoull(part));
    }
    while (coords.size() < m_) coords.insert(coords.begin(), 0);
    return from_coordinates(coords);
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr field, BigRational value) : field_(std::move(field)), repr_(std::move(value)) {
    std::get<BigRational>(repr_).canonicalize();
}

FieldElement::FieldElement(FieldPtr field, std::uint64_t index) : field_(std::move(field)), repr_(index) {}

bool FieldElement::is_zero() const {
    if (field_->is_rationals()) return std::get<BigRational>(repr_) == 0;
    return std::get<std::uint64_t>(repr_) == 0;
}

bool FieldElement::is_one() const {
    if (field_->is_rationals()) return std::get<BigRational>(repr_) == 1;
    return std::get<std::uint64_t>(repr_) == 1;
}

std::uint64_t FieldElement::index() const {
    if (!field_->is_finite()) throw std::domain_error("index is defined for finite fields only");
    return std::get<std::uint64_t>(repr_);
}

std::vector<std::uint64_t> FieldElement::coordinates() const {
    std::uint64_t idx = index();
    const std::uint64_t p = field_->characteristic();
    const unsigned m = field_->extension_degree();
    std::vector<std::uint64_t> coords(m);
    for (unsigned i = 0; i < m; ++i) {
        coords[m - 1 - i] = idx % p;
        idx /= p;
    }
    return coords;  // (c_{m-1}, ..., c_0)
}

const BigRational& FieldElement::rational() const {
    if (!field_->is_rationals()) throw std::domain_error("rational() is defined for the rationals only");
    return std::get<BigRational>(repr_);
}

void FieldElement::require_same_field(const FieldElement& other) const {
    if (field_ == other.field_) return;
    if (*field_ == *other.field_) return;  // canonical construction makes this sound
    throw FieldMismatchError("elements of " + field_->to_string() + " and " + other.field_->to_string() +
                             " cannot be combined");
}

FieldElement FieldElement::operator-() const {
    if (field_->is_rationals()) return FieldElement(field_, BigRational(-std::get<BigRational>(repr_)));
    return FieldElement(field_, field_->neg_index(std::get<std::uint64_t>(repr_)));
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (field_->is_rationals()) {
        return FieldElement(field_, BigRational(1) / std::get<BigRational>(repr_));
    }
    return FieldElement(field_, field_->inv_index(std::get<std::uint64_t>(repr_)));
}

FieldElement FieldElement::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    if (field_->is_finite()) {
        return FieldElement(field_, field_->pow_index(std::get<std::uint64_t>(repr_), static_cast<std::uint64_t>(e)));
    }
    const BigRational& base = std::get<BigRational>(repr_);
    BigRational r(1);
    BigRational b = base;
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return FieldElement(field_, std::move(r));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    if (a.field_->is_rationals()) {
        return FieldElement(a.field_, BigRational(std::get<BigRational>(a.repr_) + std::get<BigRational>(b.repr_)));
    }
    return FieldElement(a.field_, a.field_->add_index(std::get<std::uint64_t>(a.repr_), std::get<std::uint64_t>(b.repr_)));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    if (a.field_->is_rationals()) {
        return FieldElement(a.field_, BigRational(std::get<BigRational>(a.repr_) - std::get<BigRational>(b.repr_)));
    }
    return FieldElement(a.field_, a.field_->sub_index(std::get<std::uint64_t>(a.repr_), std::get<std::uint64_t>(b.repr_)));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    if (a.field_->is_rationals()) {
        return FieldElement(a.field_, BigRational(std::get<BigRational>(a.repr_) * std::get<BigRational>(b.repr_)));
    }
    return FieldElement(a.field_, a.field_->mul_index(std::get<std::uint64_t>(a.repr_), std::get<std::uint64_t>(b.repr_)));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.field_->is_rationals()) {
        return FieldElement(a.field_, BigRational(std::get<BigRational>(a.repr_) / std::get<BigRational>(b.repr_)));
    }
    return FieldElement(a.field_, a.field_->mul_index(std::get<std::uint64_t>(a.repr_),
                                                      a.field_->inv_index(std::get<std::uint64_t>(b.repr_))));
}

bool FieldElement::operator==(const FieldElement& other) const {
    if (!(field_ == other.field_ || *field_ == *other.field_)) return false;
    return repr_ == other.repr_;
}

bool FieldElement::operator<(const FieldElement& other) const {
    require_same_field(other);
    if (field_->is_finite()) return std::get<std::uint64_t>(repr_) < std::get<std::uint64_t>(other.repr_);
    return std::get<BigRational>(repr_) < std::get<BigRational>(other.repr_);
}

std::string FieldElement::to_string() const {
    if (field_->is_rationals()) return std::get<BigRational>(repr_).get_str();
    const unsigned m = field_->extension_degree();
    if (m == 1) return std::to_string(std::get<std::uint64_t>(repr_));
    std::vector<std::uint64_t> coords = coordinates();
    std::string out;
    if (field_->characteristic() <= 10) {
        for (std::uint64_t c : coords) out.push_back(static_cast<char>('0' + c));
    } else {
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i > 0) out.push_back('.');
            out += std::to_string(coords[i]);
        }
    }
    return out;
}

}  // namespace polyweight
