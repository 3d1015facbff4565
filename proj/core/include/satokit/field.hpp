#pragma once

#include <gmpxx.h>

#include <string>

#include "satokit/errors.hpp"

namespace satokit {

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
struct FieldSpec {
    long characteristic = 0;

    bool operator==(const FieldSpec&) const = default;
    [[nodiscard]] bool is_rational() const { return characteristic == 0; }
};

/// Throws input_error unless the characteristic is 0 or a prime.
void validate(const FieldSpec& f);

inline FieldSpec rationals() { return FieldSpec{0}; }
inline FieldSpec prime_field(long p) {
    FieldSpec f{p};
    validate(f);
    return f;
}

/// An exact field element.  Over Q the value is an arbitrary-precision
/// rational in lowest terms; over F_p it is the reduced residue in [0, p).
class Scalar {
  public:
    Scalar() = default;
    explicit Scalar(FieldSpec f) : field_(f) {}
    Scalar(FieldSpec f, long n);
    Scalar(FieldSpec f, mpq_class v);
    static Scalar fraction(FieldSpec f, const mpz_class& num, const mpz_class& den);

    [[nodiscard]] const FieldSpec& field() const { return field_; }
    [[nodiscard]] const mpq_class& value() const { return v_; }
    [[nodiscard]] bool is_zero() const { return v_ == 0; }
    [[nodiscard]] bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    [[nodiscard]] Scalar inverse() const;

    /// "num/den" over Q (plain integer text when den = 1), residue over F_p.
    [[nodiscard]] std::string str() const;

  private:
    FieldSpec field_{};
    mpq_class v_{0};

    void reduce_();
    void check_field_(const Scalar& o) const;
};

inline Scalar zero(FieldSpec f) { return Scalar(f); }
inline Scalar one(FieldSpec f) { return Scalar(f, 1); }

/// Parses "num", "num/den" (rational) or a residue (prime field).
Scalar parse_scalar(FieldSpec f, const std::string& text);

} // namespace satokit
