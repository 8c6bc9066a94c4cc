#include "cubics/numfield.hpp"

#include <algorithm>

namespace cubics {

namespace {

// Dense univariate polynomials over Q, lowest degree first.
using QPoly = std::vector<Rat>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

// Remainder of a by monic-or-not divisor b (b nonzero).
QPoly rem(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}

// Extended Euclid: returns g = gcd(a, b) and u with u*a = g mod b.
// Enough for inversion: when g is a nonzero constant, a^{-1} = u/g mod b.
std::pair<QPoly, QPoly> half_ext_gcd(QPoly a, QPoly b) {
    QPoly u0 = {Rat(1)}, u1 = {};
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a = q*b + r
        QPoly q, r = a;
        trim(r);
        q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rat(0));
        while (r.size() >= b.size() && !r.empty()) {
            Rat c = r.back() / b.back();
            size_t shift = r.size() - b.size();
            q[shift] = c;
            for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
            trim(r);
        }
        QPoly u2 = u0;
        QPoly qu1 = mul(q, u1);
        if (u2.size() < qu1.size()) u2.resize(qu1.size(), Rat(0));
        for (size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
        trim(u2);
        a = b;
        b = r;
        u0 = u1;
        u1 = u2;
    }
    return {a, u0};
}

long long mod_pow(long long base, long long e, long long p) {
    long long r = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (e > 0) {
        if (e & 1) r = (__int128)r * base % p;
        base = (__int128)base * base % p;
        e >>= 1;
    }
    return r;
}

long long mod_inverse(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) fail(errc::bad_prime, "division by zero mod " + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

}  // namespace

bool NumberField::same(const NumberField& other) const {
    return degree == other.degree && min_poly == other.min_poly;
}

FieldPtr rationals() {
    static FieldPtr q = [] {
        auto f = std::make_shared<NumberField>();
        f->degree = 1;
        f->min_poly = {Rat(0), Rat(1)};  // x, so theta = 0
        f->label = "QQ";
        return f;
    }();
    return q;
}

FieldPtr make_field(std::vector<Rat> min_poly, std::string label) {
    if (min_poly.size() < 2) fail(errc::schema_error, "min_poly must have degree >= 1");
    if (min_poly.back() != 1) fail(errc::schema_error, "min_poly must be monic");
    if (min_poly.size() == 2 && min_poly[0] == 0) return rationals();
    auto f = std::make_shared<NumberField>();
    f->degree = static_cast<int>(min_poly.size()) - 1;
    f->min_poly = std::move(min_poly);
    f->label = std::move(label);
    return f;
}

FieldPtr cyclotomic(int n) {
    switch (n) {
        case 1:
        case 2: return rationals();
        case 3: return make_field({Rat(1), Rat(1), Rat(1)}, "cyclotomic-3");
        case 4: return make_field({Rat(1), Rat(0), Rat(1)}, "cyclotomic-4");
        case 6: return make_field({Rat(1), Rat(-1), Rat(1)}, "cyclotomic-6");
        case 8: return make_field({Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}, "cyclotomic-8");
        case 12: return make_field({Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)}, "cyclotomic-12");
        case 24:
            return make_field(
                {Rat(1), Rat(0), Rat(0), Rat(0), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)},
                "cyclotomic-24");
        default: fail(errc::unsupported_order, "cyclotomic(" + std::to_string(n) + ")");
    }
}

FieldPtr quadratic(const Rat& d) {
    return make_field({-d, Rat(0), Rat(1)}, "sqrt-" + format_rational(d));
}

AlgebraicNumber::AlgebraicNumber(const Rat& r) : field_(rationals()), c_{r} {}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, std::vector<Rat> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != field_->degree)
        fail(errc::dimension_mismatch, "coefficient vector length != field degree");
}

AlgebraicNumber AlgebraicNumber::zero(const FieldPtr& field) {
    return AlgebraicNumber(field, std::vector<Rat>(field->degree, Rat(0)));
}

AlgebraicNumber AlgebraicNumber::one(const FieldPtr& field) {
    return from_rational(field, Rat(1));
}

AlgebraicNumber AlgebraicNumber::from_rational(const FieldPtr& field, const Rat& r) {
    std::vector<Rat> c(field->degree, Rat(0));
    c[0] = r;
    return AlgebraicNumber(field, std::move(c));
}

AlgebraicNumber AlgebraicNumber::generator(const FieldPtr& field) {
    if (field->is_rationals()) return AlgebraicNumber(Rat(0));  // theta = 0 over Q
    std::vector<Rat> c(field->degree, Rat(0));
    c[1] = 1;
    return AlgebraicNumber(field, std::move(c));
}

bool AlgebraicNumber::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool AlgebraicNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat AlgebraicNumber::rational_value() const {
    if (!is_rational()) fail(errc::internal, "rational_value on a non-rational element");
    return c_[0];
}

const FieldPtr& common_field(const AlgebraicNumber& lhs, const AlgebraicNumber& rhs) {
    if (lhs.field() == rhs.field()) return lhs.field();
    if (lhs.field()->same(*rhs.field())) return lhs.field();
    if (rhs.field()->is_rationals() && rhs.is_rational()) return lhs.field();
    if (lhs.field()->is_rationals() && lhs.is_rational()) return rhs.field();
    fail(errc::field_mismatch,
         "mixed fields " + lhs.field()->label + " and " + rhs.field()->label);
}

namespace {

AlgebraicNumber lift(const AlgebraicNumber& a, const FieldPtr& field) {
    if (a.field() == field || a.field()->same(*field)) return a;
    return AlgebraicNumber::from_rational(field, a.rational_value());
}

}  // namespace

AlgebraicNumber AlgebraicNumber::operator-() const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x = -x;
    return AlgebraicNumber(field_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::operator+(const AlgebraicNumber& rhs) const {
    const FieldPtr& f = common_field(*this, rhs);
    AlgebraicNumber a = lift(*this, f), b = lift(rhs, f);
    for (int i = 0; i < f->degree; ++i) a.c_[i] += b.c_[i];
    return a;
}

AlgebraicNumber AlgebraicNumber::operator-(const AlgebraicNumber& rhs) const {
    return *this + (-rhs);
}

AlgebraicNumber AlgebraicNumber::operator*(const AlgebraicNumber& rhs) const {
    const FieldPtr& f = common_field(*this, rhs);
    AlgebraicNumber a = lift(*this, f), b = lift(rhs, f);
    QPoly prod = mul(a.c_, b.c_);
    prod = rem(std::move(prod), f->min_poly);
    prod.resize(f->degree, Rat(0));
    return AlgebraicNumber(f, std::move(prod));
}

AlgebraicNumber AlgebraicNumber::operator/(const AlgebraicNumber& rhs) const {
    return *this * rhs.inverse();
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& rhs) {
    *this = *this + rhs;
    return *this;
}
AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& rhs) {
    *this = *this - rhs;
    return *this;
}
AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& rhs) {
    *this = *this * rhs;
    return *this;
}

AlgebraicNumber AlgebraicNumber::operator*(const Rat& rhs) const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x *= rhs;
    return AlgebraicNumber(field_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (is_zero()) fail(errc::internal, "inverse of zero");
    if (field_->is_rationals()) return AlgebraicNumber(Rat(1) / c_[0]);
    QPoly a = c_;
    auto [g, u] = half_ext_gcd(a, field_->min_poly);
    if (g.size() != 1)
        fail(errc::internal, "min_poly of " + field_->label + " is not irreducible");
    QPoly inv = rem(std::move(u), field_->min_poly);
    for (auto& x : inv) x /= g[0];
    inv.resize(field_->degree, Rat(0));
    return AlgebraicNumber(field_, std::move(inv));
}

AlgebraicNumber AlgebraicNumber::pow(long long e) const {
    AlgebraicNumber base = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    AlgebraicNumber acc = one(field_);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& rhs) const {
    return (*this - rhs).is_zero();
}

int AlgebraicNumber::compare(const AlgebraicNumber& rhs) const {
    common_field(*this, rhs);
    size_t n = std::max(c_.size(), rhs.c_.size());
    for (size_t i = 0; i < n; ++i) {
        Rat a = i < c_.size() ? c_[i] : Rat(0);
        Rat b = i < rhs.c_.size() ? rhs.c_[i] : Rat(0);
        if (a < b) return -1;
        if (a > b) return 1;
    }
    return 0;
}

std::string AlgebraicNumber::str() const {
    if (is_rational()) return format_rational(c_[0]);
    std::string out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) out += " + ";
        first = false;
        out += format_rational(c_[i]);
        if (i == 1) out += "*z";
        if (i > 1) out += "*z^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<long long> minpoly_roots_mod_p(const FieldPtr& field, long long p) {
    std::vector<long long> roots;
    for (long long t = 0; t < p; ++t) {
        long long v = 0;
        for (auto it = field->min_poly.rbegin(); it != field->min_poly.rend(); ++it) {
            long long c = reduce_mod(*it, p);
            v = ((__int128)v * t + c) % p;
        }
        if (v == 0) roots.push_back(t);
    }
    return roots;
}

PrimeField make_prime_field(const FieldPtr& field, long long p) {
    if (p <= 3 || !is_prime(p)) fail(errc::bad_prime, std::to_string(p) + " is not an admissible prime");
    PrimeField pf;
    pf.p = p;
    pf.field = field;
    if (field->is_rationals()) return pf;
    auto roots = minpoly_roots_mod_p(field, p);
    if (roots.empty())
        fail(errc::bad_prime,
             "min_poly of " + field->label + " has no root mod " + std::to_string(p));
    pf.theta_image = roots.front();
    return pf;
}

long long reduce_mod(const Rat& a, long long p) {
    Int num = numerator(a) % p;
    Int den = denominator(a) % p;
    long long n = static_cast<long long>(num);
    long long d = static_cast<long long>(den);
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) fail(errc::bad_prime, "denominator vanishes mod " + std::to_string(p));
    return (__int128)n * mod_inverse(d, p) % p;
}

long long reduce_mod(const AlgebraicNumber& a, const PrimeField& pf) {
    if (!a.field()->same(*pf.field) && !(a.is_rational() && a.field()->is_rationals()))
        fail(errc::field_mismatch, "element and prime field disagree");
    long long v = 0;
    const auto& c = a.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        v = ((__int128)v * pf.theta_image + reduce_mod(*it, pf.p)) % pf.p;
    return v;
}

}  // namespace cubics
