#ifndef CUBICS_NUMFIELD_HPP
#define CUBICS_NUMFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "cubics/rational.hpp"

namespace cubics {

// A simple extension Q(theta) described by a monic minimal polynomial.
// degree 1 is Q itself (theta plays no role there). Irreducibility of
// min_poly is trusted input; the bundled constructors are the vetted ones.
struct NumberField {
    int degree = 1;
    std::vector<Rat> min_poly;  // length degree+1, monic
    std::string label;

    bool is_rationals() const { return degree == 1; }
    bool same(const NumberField& other) const;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// The rational field, shared singleton.
FieldPtr rationals();

// Q(zeta_n) for n in {1,2,3,4,6,8,12,24}; n <= 2 gives Q.
FieldPtr cyclotomic(int n);

// Q(sqrt(d)) with min_poly x^2 - d. The caller asserts d is not a square.
FieldPtr quadratic(const Rat& d);

// Generic constructor from a monic minimal polynomial (trusted irreducible).
FieldPtr make_field(std::vector<Rat> min_poly, std::string label);

class AlgebraicNumber {
  public:
    AlgebraicNumber() : AlgebraicNumber(Rat(0)) {}
    explicit AlgebraicNumber(const Rat& r);
    AlgebraicNumber(FieldPtr field, std::vector<Rat> coeffs);

    static AlgebraicNumber zero(const FieldPtr& field);
    static AlgebraicNumber one(const FieldPtr& field);
    static AlgebraicNumber from_rational(const FieldPtr& field, const Rat& r);
    static AlgebraicNumber generator(const FieldPtr& field);  // theta

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational()

    AlgebraicNumber operator-() const;
    AlgebraicNumber operator+(const AlgebraicNumber& rhs) const;
    AlgebraicNumber operator-(const AlgebraicNumber& rhs) const;
    AlgebraicNumber operator*(const AlgebraicNumber& rhs) const;
    AlgebraicNumber operator/(const AlgebraicNumber& rhs) const;
    AlgebraicNumber& operator+=(const AlgebraicNumber& rhs);
    AlgebraicNumber& operator-=(const AlgebraicNumber& rhs);
    AlgebraicNumber& operator*=(const AlgebraicNumber& rhs);

    AlgebraicNumber operator*(const Rat& rhs) const;
    AlgebraicNumber inverse() const;
    AlgebraicNumber pow(long long e) const;

    bool operator==(const AlgebraicNumber& rhs) const;
    bool operator!=(const AlgebraicNumber& rhs) const { return !(*this == rhs); }

    // Total order on coefficient vectors, used for canonical containers.
    int compare(const AlgebraicNumber& rhs) const;

    std::string str() const;

  private:
    FieldPtr field_;
    std::vector<Rat> c_;  // power-basis coefficients, length field_->degree
};

// Lifts rhs into lhs's field when rhs is a plain rational constant; fields
// must otherwise agree (FieldMismatch).
const FieldPtr& common_field(const AlgebraicNumber& lhs, const AlgebraicNumber& rhs);

struct PrimeField {
    long long p = 0;
    long long theta_image = 0;  // root of min_poly mod p; 0 and unused over Q
    FieldPtr field;
};

// Picks the smallest nonnegative root of min_poly mod p. BadPrime when the
// polynomial has no root mod p or p is not an odd prime > 3.
PrimeField make_prime_field(const FieldPtr& field, long long p);

// All roots of min_poly mod p, ascending.
std::vector<long long> minpoly_roots_mod_p(const FieldPtr& field, long long p);

long long reduce_mod(const Rat& a, long long p);
long long reduce_mod(const AlgebraicNumber& a, const PrimeField& pf);

bool is_prime(long long p);

}  // namespace cubics

#endif
