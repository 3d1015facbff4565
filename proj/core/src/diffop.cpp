#include "satokit/diffop.hpp"

#include <functional>
#include <sstream>

namespace satokit {

DiffOperator::DiffOperator(FieldSpec f, std::vector<VarSet> slots, std::vector<bool> at_zero)
    : field_(f), slots_(std::move(slots)), at_zero_(std::move(at_zero)) {
    if (slots_.empty() || slots_.size() > 3) throw input_error("diff operator needs 1..3 slots");
    if (slots_.size() != at_zero_.size()) throw input_error("diff operator slot/flag mismatch");
}

DiffOperator DiffOperator::from_symbol(const TPolynomial& symbol, bool at_zero) {
    DiffOperator op(symbol.field(), {symbol.vars()}, {at_zero});
    for (const auto& [m, c] : symbol.terms()) op.add_term({m}, c);
    return op;
}

DiffOperator DiffOperator::product_at_zero(const std::vector<TPolynomial>& symbols) {
    if (symbols.empty()) throw input_error("empty operator product");
    std::vector<VarSet> slots;
    std::vector<bool> flags;
    std::vector<const TPolynomial*> ptrs;
    for (const auto& s : symbols) {
        slots.push_back(s.vars());
        flags.push_back(true);
        ptrs.push_back(&s);
    }
    DiffOperator op(symbols.front().field(), std::move(slots), std::move(flags));
    op.accumulate_product(one(op.field_), ptrs);
    return op;
}

void DiffOperator::add_term(const std::vector<Monomial>& exps, const Scalar& c) {
    if (exps.size() != slots_.size()) throw input_error("diff operator term arity mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void DiffOperator::accumulate_product(const Scalar& c,
                                      const std::vector<const TPolynomial*>& symbols) {
    if (symbols.size() != slots_.size()) throw input_error("operator product arity mismatch");
    std::vector<Monomial> key(slots_.size());
    std::function<void(std::size_t, Scalar)> rec = [&](std::size_t k, Scalar acc) {
        if (k == symbols.size()) {
            add_term(key, acc);
            return;
        }
        for (const auto& [m, v] : symbols[k]->terms()) {
            key[k] = m;
            rec(k + 1, acc * v);
        }
    };
    rec(0, c);
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
    if (slots_ != o.slots_ || at_zero_ != o.at_zero_)
        throw input_error("adding incompatible diff operators");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Scalar DiffOperator::apply_at_zero(const std::vector<const TPolynomial*>& fs) const {
    if (fs.size() != slots_.size()) throw input_error("diff operator application arity mismatch");
    for (bool flag : at_zero_)
        if (!flag) throw input_error("apply_at_zero requires all evaluate-at-zero flags");
    Scalar acc(field_);
    for (const auto& [key, c] : terms_) {
        Scalar term = c;
        bool zero = false;
        for (std::size_t k = 0; k < key.size() && !zero; ++k) {
            const Monomial& a = key[k];
            Scalar fa = fs[k]->coeff(a);
            if (fa.is_zero()) {
                zero = true;
                break;
            }
            // (d~^a t^a)|_0 = prod_i a_i! / i^{a_i}
            for (std::size_t i = 1; i <= a.exps().size(); ++i)
                for (unsigned kk = 1; kk <= a.exp(i); ++kk)
                    term *= Scalar::fraction(field_, mpz_class(kk), mpz_class(static_cast<long>(i)));
            term *= fa;
        }
        if (!zero) acc += term;
    }
    return acc;
}

TPolynomial DiffOperator::apply(const TPolynomial& f) const {
    if (slots_.size() != 1 || at_zero_[0])
        throw input_error("apply expects a single slot without evaluation at zero");
    TPolynomial symbol(field_, slots_[0], f.cap());
    for (const auto& [key, c] : terms_) symbol.add_to(key[0], c);
    return f.sdiff(symbol);
}

std::string DiffOperator::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c.str();
        for (std::size_t k = 0; k < key.size(); ++k) {
            if (key[k].is_one()) continue;
            out << "*D[" << key[k].str(varset_name(slots_[k])) << "]";
        }
    }
    return out.str();
}

} // namespace satokit
