#pragma once

#include "satokit/tpoly.hpp"

namespace satokit {

/// Finite scalar combination of monomials in the scaled derivations
/// d~ = (d_1, d_2/2, d_3/3, ...) acting on up to three variable sets, with
/// an evaluate-at-zero flag per set.
class DiffOperator {
  public:
    struct Term {
        Scalar coeff;
        std::vector<Monomial> exps; // one multi-index per slot
    };

    DiffOperator(FieldSpec f, std::vector<VarSet> slots, std::vector<bool> at_zero);

    /// Operator P(d~)|(0?) from a one-slot symbol polynomial.
    static DiffOperator from_symbol(const TPolynomial& symbol, bool at_zero);
    /// Rank-one product sym_1(d~_1) ... sym_k(d~_k), all evaluated at zero.
    static DiffOperator product_at_zero(const std::vector<TPolynomial>& symbols);

    [[nodiscard]] const FieldSpec& field() const { return field_; }
    [[nodiscard]] const std::vector<VarSet>& slots() const { return slots_; }
    [[nodiscard]] const std::vector<bool>& at_zero() const { return at_zero_; }
    [[nodiscard]] const std::map<std::vector<Monomial>, Scalar>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<Monomial>& exps, const Scalar& c);
    /// this += c * sym_1 x ... x sym_k (symbols expanded into terms).
    void accumulate_product(const Scalar& c, const std::vector<const TPolynomial*>& symbols);
    DiffOperator& operator+=(const DiffOperator& o);

    /// Apply to one polynomial per slot with every slot evaluated at zero.
    [[nodiscard]] Scalar apply_at_zero(const std::vector<const TPolynomial*>& fs) const;
    /// One-slot operator, flag not set: the differentiated polynomial.
    [[nodiscard]] TPolynomial apply(const TPolynomial& f) const;

    [[nodiscard]] std::string str() const;

  private:
    FieldSpec field_;
    std::vector<VarSet> slots_;
    std::vector<bool> at_zero_;
    std::map<std::vector<Monomial>, Scalar> terms_;
};

} // namespace satokit
