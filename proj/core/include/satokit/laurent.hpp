#pragma once

#include <map>
#include <optional>
#include <string>

#include "satokit/field.hpp"

namespace satokit {

/// Truncated formal Laurent series with an explicit precision window.
///
/// Coefficients are stored for exponents in [lo, hi).  Exponents below lo
/// are exactly zero; exponents at or above hi are unknown unless the series
/// is flagged exact, in which case they are exactly zero as well.
class LaurentSeries {
  public:
    LaurentSeries(FieldSpec f, long lo, long hi, bool exact = false);

    static LaurentSeries zero(FieldSpec f, long lo, long hi, bool exact = false);
    /// c * z^e, exact.
    static LaurentSeries monomial(FieldSpec f, long e, const Scalar& c);
    static LaurentSeries monomial(FieldSpec f, long e) { return monomial(f, e, one(f)); }
    /// The exact constant 1.
    static LaurentSeries unit(FieldSpec f) { return monomial(f, 0); }

    [[nodiscard]] const FieldSpec& field() const { return field_; }
    [[nodiscard]] long lo() const { return lo_; }
    [[nodiscard]] long hi() const { return hi_; }
    [[nodiscard]] bool exact() const { return exact_; }
    [[nodiscard]] const std::map<long, Scalar>& coefficients() const { return coeffs_; }

    /// True when the coefficient at exponent e is determined by the window.
    [[nodiscard]] bool determines(long e) const { return exact_ || e < hi_; }
    /// Coefficient at exponent e; throws precision_error when undetermined.
    [[nodiscard]] Scalar coeff(long e) const;

    /// Least exponent with a nonzero coefficient.  nullopt when no nonzero
    /// coefficient is visible; is_exact_zero() distinguishes the zero series
    /// from an undetermined one.
    [[nodiscard]] std::optional<long> valuation() const;
    [[nodiscard]] bool is_exact_zero() const { return exact_ && coeffs_.empty(); }
    /// Zero on the whole determined window.
    [[nodiscard]] bool vanishes() const { return coeffs_.empty(); }

    void set(long e, const Scalar& c);
    void add_to(long e, const Scalar& c);

    /// Restricts the window (forgetting knowledge); lo may only move up,
    /// hi only down.  Dropping the exact flag models a precision wall.
    [[nodiscard]] LaurentSeries masked(long lo, long hi, bool keep_exact = false) const;
    /// Truncates to exponents < hi (marks inexact if information is lost).
    [[nodiscard]] LaurentSeries truncated(long hi) const;

    LaurentSeries operator-() const;
    [[nodiscard]] LaurentSeries scaled(const Scalar& c) const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    /// z^n * a.
    [[nodiscard]] LaurentSeries shifted(long n) const;
    /// Multiplicative inverse determined through exponent hi_out.
    [[nodiscard]] LaurentSeries inverted(long hi_out) const;
    /// Coefficient of z^{-1}.
    [[nodiscard]] Scalar residue() const;
    /// Formal d/dz.
    [[nodiscard]] LaurentSeries derivative() const;

    /// Exact equality of the determined data.
    bool operator==(const LaurentSeries& o) const;

    [[nodiscard]] std::string str() const;

  private:
    FieldSpec field_;
    long lo_, hi_;
    bool exact_;
    std::map<long, Scalar> coeffs_; // nonzero entries only, keys in [lo_, hi_)

    [[nodiscard]] long eff_hi_() const;
    void check_field_(const LaurentSeries& o) const;
};

} // namespace satokit
