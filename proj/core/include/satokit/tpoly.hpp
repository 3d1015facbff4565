#pragma once

#include <map>
#include <string>
#include <vector>

#include "satokit/field.hpp"
#include "satokit/partitions.hpp"

namespace satokit {

/// Variable sets.  t, t' and t'' are time-variable alphabets with
/// wt(t_i) = i; u is the single Abel variable (stored as powers of index 1);
/// x holds evaluation variables of unit weight for the addition formula.
enum class VarSet { t, tp, tpp, u, x };

[[nodiscard]] std::string varset_name(VarSet v);
[[nodiscard]] bool unit_weighted(VarSet v);

/// Exponent multi-index on t_1, t_2, ...; trailing zeros trimmed.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exps);
    static Monomial variable(std::size_t i, unsigned power = 1); // t_i^power

    [[nodiscard]] const std::vector<unsigned>& exps() const { return e_; }
    [[nodiscard]] unsigned exp(std::size_t i) const { return i - 1 < e_.size() ? e_[i - 1] : 0; }
    [[nodiscard]] bool is_one() const { return e_.empty(); }
    [[nodiscard]] long weight(bool unit_weights) const;
    [[nodiscard]] long total_degree() const;
    [[nodiscard]] Monomial times(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator<(const Monomial& o) const;

    [[nodiscard]] std::string str(const std::string& var) const;

  private:
    std::vector<unsigned> e_;
};

/// Polynomial in one variable set, truncated by weighted degree: every term
/// has weight <= cap; higher-weight information is regarded as unknown.
class TPolynomial {
  public:
    TPolynomial(FieldSpec f, VarSet vars, long cap);
    static TPolynomial constant(FieldSpec f, VarSet vars, long cap, const Scalar& c);
    static TPolynomial variable(FieldSpec f, VarSet vars, long cap, std::size_t i);

    [[nodiscard]] const FieldSpec& field() const { return field_; }
    [[nodiscard]] VarSet vars() const { return vars_; }
    [[nodiscard]] long cap() const { return cap_; }
    [[nodiscard]] const std::map<Monomial, Scalar>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Scalar coeff(const Monomial& m) const;
    [[nodiscard]] Scalar constant_term() const { return coeff(Monomial()); }
    [[nodiscard]] long min_weight() const; // weight of the lowest term (0 for zero poly)

    void add_to(const Monomial& m, const Scalar& c); // silently drops beyond cap

    TPolynomial operator-() const;
    [[nodiscard]] TPolynomial scaled(const Scalar& c) const;
    friend TPolynomial operator+(const TPolynomial& a, const TPolynomial& b);
    friend TPolynomial operator-(const TPolynomial& a, const TPolynomial& b);
    friend TPolynomial operator*(const TPolynomial& a, const TPolynomial& b);
    bool operator==(const TPolynomial& o) const;

    /// Same terms, new truncation weight (drops terms when lowering).
    [[nodiscard]] TPolynomial recapped(long cap) const;
    /// Same terms on a different variable set.
    [[nodiscard]] TPolynomial relabeled(VarSet vars) const;
    /// t_i -> -t_i.
    [[nodiscard]] TPolynomial negated_vars() const;

    /// symbol(d~) applied to this, d~_i = (1/i) d/dt_i.  Characteristic zero.
    [[nodiscard]] TPolynomial sdiff(const TPolynomial& symbol) const;
    /// <symbol(d~)|_0, this> = sum_a symbol_a this_a prod a_i! / i^{a_i}.
    [[nodiscard]] Scalar hall(const TPolynomial& symbol) const;

    /// Substitute t_i <- u^i (Abel direction).
    [[nodiscard]] TPolynomial substituted_u() const;
    /// Substitute t_i <- (x_1^i + ... + x_n^i)/i, producing an x-polynomial
    /// truncated at total degree cap_x.
    [[nodiscard]] TPolynomial substituted_powersums(std::size_t n, long cap_x) const;
    /// Evaluate at values for t_1..t_m (missing tail = 0).
    [[nodiscard]] Scalar evaluated(const std::vector<Scalar>& values) const;

    [[nodiscard]] std::string str() const;

  private:
    FieldSpec field_;
    VarSet vars_;
    long cap_;
    std::map<Monomial, Scalar> terms_;

    void check_compat_(const TPolynomial& o) const;
};

/// Exact division: q with q * d = f (throws when no polynomial quotient
/// exists within the truncation).  The quotient carries cap
/// f.cap() - d.min_weight().
TPolynomial divide_exact(const TPolynomial& f, const TPolynomial& d);

/// Polynomial on a product of variable sets (t x t', or t x t' x t'').
class TensorPoly {
  public:
    TensorPoly(FieldSpec f, std::vector<VarSet> slots, std::vector<long> caps);

    [[nodiscard]] const FieldSpec& field() const { return field_; }
    [[nodiscard]] const std::vector<VarSet>& slots() const { return slots_; }
    [[nodiscard]] const std::vector<long>& caps() const { return caps_; }
    [[nodiscard]] const std::map<std::vector<Monomial>, Scalar>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    void add_to(const std::vector<Monomial>& key, const Scalar& c);
    /// this += c * prod_k comps[k] (componentwise tensor product).
    void accumulate(const Scalar& c, const std::vector<const TPolynomial*>& comps);
    TensorPoly& operator+=(const TensorPoly& o);

    /// <sym_1(d~) ... sym_k(d~)|_0, this>, one symbol per slot.
    [[nodiscard]] Scalar hall(const std::vector<const TPolynomial*>& symbols) const;

    /// Exact division by d acting on slot k.
    [[nodiscard]] TensorPoly divided_slot(std::size_t k, const TPolynomial& d) const;

    /// First nonzero term in canonical order, as (key, coefficient).
    [[nodiscard]] std::pair<std::vector<Monomial>, Scalar> first_term() const;

    bool operator==(const TensorPoly& o) const;
    [[nodiscard]] std::string str() const;

  private:
    FieldSpec field_;
    std::vector<VarSet> slots_;
    std::vector<long> caps_;
    std::map<std::vector<Monomial>, Scalar> terms_;
};

} // namespace satokit
