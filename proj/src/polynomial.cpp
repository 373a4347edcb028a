#include "polyweight/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polyweight {

Polynomial::Polynomial(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const FieldElement& c : coeffs_) {
        if (!(c.field() == field_ || *c.field() == *field_)) {
            throw FieldMismatchError("coefficient does not belong to " + field_->to_string());
        }
    }
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::one(FieldPtr field) {
    FieldElement c = field->one();
    return Polynomial(std::move(field), {std::move(c)});
}

Polynomial Polynomial::x(FieldPtr field) {
    std::vector<FieldElement> c{field->zero(), field->one()};
    return Polynomial(std::move(field), std::move(c));
}

Polynomial Polynomial::monomial(FieldPtr field, std::size_t degree, const FieldElement& c) {
    std::vector<FieldElement> coeffs(degree, field->zero());
    coeffs.push_back(c);
    return Polynomial(std::move(field), std::move(coeffs));
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::from_integers(const FieldPtr& field, const std::vector<std::int64_t>& coeffs) {
    std::vector<FieldElement> out;
    out.reserve(coeffs.size());
    for (std::int64_t v : coeffs) out.push_back(field->from_integer(v));
    return Polynomial(field, std::move(out));
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

std::size_t Polynomial::weight() const {
    std::size_t w = 0;
    for (const FieldElement& c : coeffs_) {
        if (!c.is_zero()) ++w;
    }
    return w;
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

FieldElement Polynomial::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return field_->zero();
}

const FieldElement& Polynomial::leading_coeff() const {
    if (coeffs_.empty()) throw std::domain_error("the zero polynomial has no leading coefficient");
    return coeffs_.back();
}

void Polynomial::require_same_field(const Polynomial& other) const {
    if (field_ == other.field_ || *field_ == *other.field_) return;
    throw FieldMismatchError("polynomials over " + field_->to_string() + " and " + other.field_->to_string() +
                             " cannot be combined");
}

Polynomial Polynomial::operator-() const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const FieldElement& c : coeffs_) out.push_back(-c);
    Polynomial r(field_);
    r.coeffs_ = std::move(out);
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.require_same_field(b);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<FieldElement> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(i) + b.coeff(i));
    Polynomial r(a.field_);
    r.coeffs_ = std::move(out);
    r.normalize();
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.require_same_field(b);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<FieldElement> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(i) - b.coeff(i));
    Polynomial r(a.field_);
    r.coeffs_ = std::move(out);
    r.normalize();
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_field(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_->zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
    }
    Polynomial r(a.field_);
    r.coeffs_ = std::move(out);
    r.normalize();
    return r;
}

Polynomial Polynomial::operator*(const FieldElement& s) const {
    if (s.is_zero()) return Polynomial(field_);
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const FieldElement& c : coeffs_) out.push_back(c * s);
    Polynomial r(field_);
    r.coeffs_ = std::move(out);
    r.normalize();
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!(field_ == other.field_ || *field_ == *other.field_)) return false;
    return coeffs_ == other.coeffs_;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    a.require_same_field(b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero() || a.coeffs_.size() < b.coeffs_.size()) return {Polynomial(a.field_), a};
    const FieldElement lead_inv = b.leading_coeff().inv();
    std::vector<FieldElement> rem = a.coeffs_;
    std::vector<FieldElement> quot(a.coeffs_.size() - b.coeffs_.size() + 1, a.field_->zero());
    for (std::size_t i = quot.size(); i-- > 0;) {
        FieldElement c = rem[i + b.coeffs_.size() - 1] * lead_inv;
        quot[i] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            rem[i + j] = rem[i + j] - c * b.coeffs_[j];
        }
    }
    Polynomial q(a.field_), r(a.field_);
    q.coeffs_ = std::move(quot);
    q.normalize();
    r.coeffs_ = std::move(rem);
    r.normalize();
    return {std::move(q), std::move(r)};
}

Polynomial Polynomial::div_exact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial result = Polynomial::one(field_);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Polynomial Polynomial::shifted(std::size_t s) const {
    if (is_zero() || s == 0) return *this;
    std::vector<FieldElement> out(s, field_->zero());
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    Polynomial r(field_);
    r.coeffs_ = std::move(out);
    return r;
}

FieldElement Polynomial::evaluate(const FieldElement& at) const {
    FieldElement acc = field_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
    return acc;
}

std::size_t multiplicity_at(const Polynomial& f, const FieldElement& xi) {
    if (f.is_zero()) throw std::domain_error("multiplicity is undefined for the zero polynomial");
    const Polynomial factor(f.field(), {-xi, f.field()->one()});  // x - xi
    std::size_t k = 0;
    Polynomial current = f;
    while (true) {
        auto [q, r] = Polynomial::divmod(current, factor);
        if (!r.is_zero()) break;
        current = std::move(q);
        ++k;
        if (current.is_zero()) break;  // unreachable: f != 0
    }
    return k;
}

std::pair<Polynomial, std::size_t> strip_x_power(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("cannot strip powers of x from the zero polynomial");
    std::size_t s = 0;
    while (f.coeffs()[s].is_zero()) ++s;
    std::vector<FieldElement> out(f.coeffs().begin() + static_cast<std::ptrdiff_t>(s), f.coeffs().end());
    return {Polynomial(f.field(), std::move(out)), s};
}

Polynomial dilate_root(const Polynomial& f, const FieldElement& xi) {
    if (xi.is_zero()) throw std::domain_error("dilation requires a nonzero point");
    const FieldElement inv = xi.inv();
    std::vector<FieldElement> out;
    out.reserve(f.coeffs().size());
    FieldElement scale = f.field()->one();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        out.push_back(f.coeffs()[i] * scale);
        scale = scale * inv;
    }
    return Polynomial(f.field(), std::move(out));
}

// ---------------------------------------------------------------------------
// text form

namespace {

std::string coeff_text(const FieldElement& c) {
    std::string s = c.to_string();
    if (s.find('/') != std::string::npos) return "(" + s + ")";
    return s;
}

std::string term_text(const FieldElement& c, std::size_t deg) {
    std::string out;
    if (deg == 0) return coeff_text(c);
    if (!c.is_one()) out += coeff_text(c) + "*";
    out += "x";
    if (deg >= 2) out += "^" + std::to_string(deg);
    return out;
}

}  // namespace

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    const bool rationals = field_->is_rationals();
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const FieldElement& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (rationals && c.rational() < 0) {
            out += out.empty() ? "-" : " - ";
            out += term_text(-c, i);
        } else {
            if (!out.empty()) out += " + ";
            out += term_text(c, i);
        }
    }
    return out;
}

namespace {

struct Term {
    std::string coeff;  // empty means 1
    bool negative = false;
    std::size_t degree = 0;
};

// Splits on top-level "+"/"-" and parses each "[coeff][*][x[^e]]" term.
std::vector<Term> split_terms(std::string_view text) {
    std::vector<Term> terms;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool first = true;
    while (i < n) {
        Term term;
        if (text[i] == '+' || text[i] == '-') {
            term.negative = text[i] == '-';
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in polynomial text");
        }
        first = false;
        std::string body;
        int depth = 0;
        while (i < n) {
            char ch = text[i];
            if (depth == 0 && (ch == '+' || ch == '-') ) break;
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            body.push_back(ch);
            ++i;
        }
        while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.pop_back();
        if (body.empty()) throw std::invalid_argument("empty term in polynomial text");

        std::size_t xpos = body.find('x');
        if (xpos == std::string::npos) {
            term.coeff = body;
        } else {
            std::string coeff = body.substr(0, xpos);
            while (!coeff.empty() && (std::isspace(static_cast<unsigned char>(coeff.back())) || coeff.back() == '*')) {
                coeff.pop_back();
            }
            if (!coeff.empty() && coeff.front() == '(' && coeff.back() == ')') {
                coeff = coeff.substr(1, coeff.size() - 2);
            }
            term.coeff = coeff;
            std::string rest = body.substr(xpos + 1);
            std::size_t caret = rest.find('^');
            if (caret != std::string::npos) {
                term.degree = std::stoull(rest.substr(caret + 1));
            } else {
                term.degree = 1;
            }
        }
        terms.push_back(std::move(term));
        skip_ws();
    }
    return terms;
}

}  // namespace

Polynomial parse_polynomial(const FieldPtr& field, std::string_view text) {
    std::vector<Term> terms = split_terms(text);
    if (terms.empty()) throw std::invalid_argument("empty polynomial text");
    std::size_t max_deg = 0;
    for (const Term& t : terms) max_deg = std::max(max_deg, t.degree);
    std::vector<FieldElement> coeffs(max_deg + 1, field->zero());
    for (const Term& t : terms) {
        FieldElement c = t.coeff.empty() ? field->one() : field->parse(t.coeff);
        if (t.negative) c = -c;
        coeffs[t.degree] = coeffs[t.degree] + c;
    }
    return Polynomial(field, std::move(coeffs));
}

}  // namespace polyweight
