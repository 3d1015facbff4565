#include "satokit/schur.hpp"

#include <functional>

namespace satokit {

namespace {

std::vector<TPolynomial> elementary_schur_family(FieldSpec f, long jmax, long cap, VarSet vars) {
    if (!f.is_rational()) throw char_error("schur polynomials require characteristic zero");
    std::vector<TPolynomial> p;
    p.push_back(TPolynomial::constant(f, vars, cap, one(f)));
    // j p_j = sum_{i=1..j} i t_i p_{j-i}
    for (long j = 1; j <= jmax; ++j) {
        TPolynomial pj(f, vars, cap);
        for (long i = 1; i <= j; ++i) {
            TPolynomial ti = TPolynomial::variable(f, vars, cap, static_cast<std::size_t>(i));
            pj = pj + (ti * p[static_cast<std::size_t>(j - i)]).scaled(Scalar(f, i));
        }
        p.push_back(pj.scaled(Scalar(f, j).inverse()));
    }
    return p;
}

// determinant of a small TPolynomial matrix by Laplace expansion
TPolynomial tp_det(const std::vector<std::vector<TPolynomial>>& m, FieldSpec f, VarSet vars,
                   long cap) {
    std::size_t n = m.size();
    std::function<TPolynomial(std::vector<std::size_t>, std::size_t)> rec =
        [&](std::vector<std::size_t> rows, std::size_t col) -> TPolynomial {
        if (rows.empty()) return TPolynomial::constant(f, vars, cap, one(f));
        TPolynomial acc(f, vars, cap);
        int sign = 1;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const TPolynomial& entry = m[rows[k]][col];
            if (!entry.is_zero()) {
                std::vector<std::size_t> rest;
                for (std::size_t j = 0; j < rows.size(); ++j)
                    if (j != k) rest.push_back(rows[j]);
                TPolynomial sub = rec(rest, col + 1);
                TPolynomial term = entry * sub;
                acc = sign > 0 ? acc + term : acc - term;
            }
            sign = -sign;
        }
        return acc;
    };
    std::vector<std::size_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = i;
    return rec(rows, 0);
}

} // namespace

TPolynomial elementary_schur(FieldSpec f, long j, long cap, VarSet vars) {
    if (j < 0) throw input_error("elementary_schur index must be nonnegative");
    if (j > cap)
        return TPolynomial(f, vars, cap); // homogeneous of weight j: truncated away
    return elementary_schur_family(f, j, cap, vars).back();
}

TPolynomial schur(FieldSpec f, const Partition& lambda, long cap, VarSet vars) {
    if (lambda.weight() > cap)
        throw input_error("schur: |lambda| = " + std::to_string(lambda.weight()) +
                          " exceeds the truncation weight " + std::to_string(cap));
    std::size_t n = lambda.length();
    if (n == 0) return TPolynomial::constant(f, vars, cap, one(f));
    auto p = elementary_schur_family(f, lambda.weight(), cap, vars);
    auto pj = [&](long j) {
        if (j < 0 || j > static_cast<long>(p.size()) - 1) return TPolynomial(f, vars, cap);
        return p[static_cast<std::size_t>(j)];
    };
    std::vector<std::vector<TPolynomial>> m;
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<TPolynomial> row;
        for (std::size_t j = 1; j <= n; ++j)
            row.push_back(pj(lambda.part(i - 1) - static_cast<long>(i) + static_cast<long>(j)));
        m.push_back(std::move(row));
    }
    return tp_det(m, f, vars, cap);
}

TPolynomial d_symbol(FieldSpec f, const Partition& lambda, long alpha, long cap, VarSet vars) {
    TPolynomial acc(f, vars, cap);
    for (const auto& mu : horizontal_strips(lambda, alpha)) acc = acc + schur(f, mu, cap, vars);
    return acc;
}

} // namespace satokit
