#pragma once

#include "satokit/partitions.hpp"
#include "satokit/tpoly.hpp"

namespace satokit {

/// p_j(t) from exp(sum_i t_i z^i) = sum_j p_j(t) z^j, truncated at weight
/// cap.  Characteristic zero; p_0 = 1.
TPolynomial elementary_schur(FieldSpec f, long j, long cap, VarSet vars = VarSet::t);

/// chi_lambda(t): Jacobi-Trudi determinant det(p_{lambda_i - i + j}) in the
/// elementary Schur polynomials; homogeneous of weight |lambda|.
TPolynomial schur(FieldSpec f, const Partition& lambda, long cap, VarSet vars = VarSet::t);

/// D_{lambda,alpha}(t) = sum over mu with lambda/mu a horizontal alpha-strip
/// of chi_mu(t) (the symbol of the operator D_{lambda,alpha}).
TPolynomial d_symbol(FieldSpec f, const Partition& lambda, long alpha, long cap,
                     VarSet vars = VarSet::t);

} // namespace satokit
