#include "satokit/tpoly.hpp"

#include <algorithm>
#include <sstream>

#include "satokit/linalg.hpp"

namespace satokit {

std::string varset_name(VarSet v) {
    switch (v) {
        case VarSet::t: return "t";
        case VarSet::tp: return "t'";
        case VarSet::tpp: return "t''";
        case VarSet::u: return "u";
        case VarSet::x: return "x";
    }
    return "?";
}

bool unit_weighted(VarSet v) { return v == VarSet::x; }

Monomial::Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

Monomial Monomial::variable(std::size_t i, unsigned power) {
    if (i == 0) throw input_error("variable indices start at 1");
    std::vector<unsigned> e(i, 0);
    e[i - 1] = power;
    return Monomial(std::move(e));
}

long Monomial::weight(bool unit_weights) const {
    long w = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
        w += static_cast<long>(e_[i]) * (unit_weights ? 1 : static_cast<long>(i + 1));
    return w;
}

long Monomial::total_degree() const {
    long d = 0;
    for (unsigned x : e_) d += x;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    std::vector<unsigned> e(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < e_.size(); ++i) e[i] += e_[i];
    for (std::size_t i = 0; i < o.e_.size(); ++i) e[i] += o.e_[i];
    return Monomial(std::move(e));
}

bool Monomial::operator<(const Monomial& o) const {
    std::size_t n = std::max(e_.size(), o.e_.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned a = i < e_.size() ? e_[i] : 0, b = i < o.e_.size() ? o.e_[i] : 0;
        if (a != b) return a < b;
    }
    return false;
}

std::string Monomial::str(const std::string& var) const {
    if (is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (!e_[i]) continue;
        if (!first) out << "*";
        first = false;
        out << var << "_" << (i + 1);
        if (e_[i] > 1) out << "^" << e_[i];
    }
    return out.str();
}

TPolynomial::TPolynomial(FieldSpec f, VarSet vars, long cap)
    : field_(f), vars_(vars), cap_(cap) {}

TPolynomial TPolynomial::constant(FieldSpec f, VarSet vars, long cap, const Scalar& c) {
    TPolynomial p(f, vars, cap);
    p.add_to(Monomial(), c);
    return p;
}

TPolynomial TPolynomial::variable(FieldSpec f, VarSet vars, long cap, std::size_t i) {
    TPolynomial p(f, vars, cap);
    p.add_to(Monomial::variable(i), one(f));
    return p;
}

Scalar TPolynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(field_) : it->second;
}

long TPolynomial::min_weight() const {
    long best = 0;
    bool found = false;
    for (const auto& [m, c] : terms_) {
        long w = m.weight(unit_weighted(vars_));
        if (!found || w < best) best = w;
        found = true;
    }
    return best;
}

void TPolynomial::add_to(const Monomial& m, const Scalar& c) {
    if (c.field() != field_) throw field_mismatch("tpolynomial coefficient field mismatch");
    if (m.weight(unit_weighted(vars_)) > cap_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TPolynomial::check_compat_(const TPolynomial& o) const {
    if (field_ != o.field_) throw field_mismatch("tpolynomial field mismatch");
    if (vars_ != o.vars_) throw input_error("tpolynomial variable-set mismatch");
}

TPolynomial TPolynomial::operator-() const {
    TPolynomial r(field_, vars_, cap_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TPolynomial TPolynomial::scaled(const Scalar& c) const {
    TPolynomial r(field_, vars_, cap_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

TPolynomial operator+(const TPolynomial& a, const TPolynomial& b) {
    a.check_compat_(b);
    TPolynomial r(a.field_, a.vars_, std::min(a.cap_, b.cap_));
    for (const auto& [m, c] : a.terms_) r.add_to(m, c);
    for (const auto& [m, c] : b.terms_) r.add_to(m, c);
    return r;
}

TPolynomial operator-(const TPolynomial& a, const TPolynomial& b) { return a + (-b); }

TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
    a.check_compat_(b);
    TPolynomial r(a.field_, a.vars_, std::min(a.cap_, b.cap_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_to(ma.times(mb), ca * cb);
    return r;
}

bool TPolynomial::operator==(const TPolynomial& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && terms_ == o.terms_;
}

TPolynomial TPolynomial::recapped(long cap) const {
    TPolynomial r(field_, vars_, cap);
    for (const auto& [m, c] : terms_) r.add_to(m, c);
    return r;
}

TPolynomial TPolynomial::relabeled(VarSet vars) const {
    if (unit_weighted(vars) != unit_weighted(vars_))
        throw input_error("relabeling across weight conventions");
    TPolynomial r(field_, vars, cap_);
    r.terms_ = terms_;
    return r;
}

TPolynomial TPolynomial::negated_vars() const {
    TPolynomial r(field_, vars_, cap_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, m.total_degree() % 2 ? -c : c);
    return r;
}

TPolynomial TPolynomial::sdiff(const TPolynomial& symbol) const {
    check_compat_(symbol);
    if (!field_.is_rational()) throw char_error("scaled derivations require characteristic zero");
    long drop = 0;
    for (const auto& [m, c] : symbol.terms_)
        drop = std::max(drop, m.weight(unit_weighted(vars_)));
    TPolynomial r(field_, vars_, cap_ - drop);
    for (const auto& [a, pa] : symbol.terms_) {
        for (const auto& [m, fm] : terms_) {
            // d~^a (t^m): prod_i (1/i)^{a_i} m_i!/(m_i-a_i)! t_i^{m_i-a_i}
            bool ok = true;
            Scalar factor = pa * fm;
            std::vector<unsigned> out(m.exps());
            for (std::size_t i = 1; i <= a.exps().size() && ok; ++i) {
                unsigned ai = a.exp(i);
                if (!ai) continue;
                unsigned mi = m.exp(i);
                if (mi < ai) {
                    ok = false;
                    break;
                }
                for (unsigned k = 0; k < ai; ++k)
                    factor *= Scalar::fraction(field_, mpz_class(mi - k), mpz_class(static_cast<long>(i)));
                if (out.size() < i) out.resize(i, 0);
                out[i - 1] = mi - ai;
            }
            if (ok) r.add_to(Monomial(out), factor);
        }
    }
    return r;
}

Scalar TPolynomial::hall(const TPolynomial& symbol) const {
    check_compat_(symbol);
    if (!field_.is_rational()) throw char_error("hall pairing requires characteristic zero");
    Scalar acc(field_);
    for (const auto& [m, c] : symbol.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) continue;
        Scalar factor = c * it->second;
        for (std::size_t i = 1; i <= m.exps().size(); ++i) {
            unsigned mi = m.exp(i);
            for (unsigned k = 1; k <= mi; ++k)
                factor *= Scalar::fraction(field_, mpz_class(k), mpz_class(static_cast<long>(i)));
        }
        acc += factor;
    }
    return acc;
}

TPolynomial TPolynomial::substituted_u() const {
    TPolynomial r(field_, VarSet::u, cap_);
    for (const auto& [m, c] : terms_) {
        long w = m.weight(false);
        r.add_to(w == 0 ? Monomial() : Monomial::variable(1, static_cast<unsigned>(w)), c);
    }
    return r;
}

TPolynomial TPolynomial::substituted_powersums(std::size_t n, long cap_x) const {
    if (!field_.is_rational()) throw char_error("power-sum substitution requires characteristic zero");
    TPolynomial r(field_, VarSet::x, cap_x);
    // power sums p_i(x)/i, i up to the largest variable index used
    std::size_t maxi = 0;
    for (const auto& [m, c] : terms_) maxi = std::max(maxi, m.exps().size());
    std::vector<TPolynomial> ps; // ps[i-1] = (sum_j x_j^i)/i
    for (std::size_t i = 1; i <= maxi; ++i) {
        TPolynomial p(field_, VarSet::x, cap_x);
        for (std::size_t j = 1; j <= n; ++j)
            p.add_to(Monomial::variable(j, static_cast<unsigned>(i)),
                     Scalar::fraction(field_, 1, mpz_class(static_cast<long>(i))));
        ps.push_back(std::move(p));
    }
    for (const auto& [m, c] : terms_) {
        TPolynomial term = TPolynomial::constant(field_, VarSet::x, cap_x, c);
        for (std::size_t i = 1; i <= m.exps().size(); ++i)
            for (unsigned k = 0; k < m.exp(i); ++k) term = term * ps[i - 1];
        for (const auto& [mx, cx] : term.terms()) r.add_to(mx, cx);
    }
    return r;
}

Scalar TPolynomial::evaluated(const std::vector<Scalar>& values) const {
    Scalar acc(field_);
    for (const auto& [m, c] : terms_) {
        Scalar term = c;
        for (std::size_t i = 1; i <= m.exps().size(); ++i) {
            unsigned e = m.exp(i);
            if (!e) continue;
            if (i > values.size()) {
                term = Scalar(field_);
                break;
            }
            for (unsigned k = 0; k < e; ++k) term *= values[i - 1];
        }
        acc += term;
    }
    return acc;
}

std::string TPolynomial::str() const {
    if (terms_.empty()) return "0";
    // weight-graded printing
    std::vector<std::pair<Monomial, Scalar>> sorted(terms_.begin(), terms_.end());
    bool uw = unit_weighted(vars_);
    std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
        return a.first.weight(uw) < b.first.weight(uw);
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : sorted) {
        if (!first) out << " + ";
        first = false;
        out << c.str();
        if (!m.is_one()) out << "*" << m.str(varset_name(vars_));
    }
    return out.str();
}

namespace {
std::vector<Monomial> monomials_up_to(long cap, bool unit, std::size_t max_var) {
    // all multi-indices on variables 1..max_var with weight <= cap
    std::vector<Monomial> out;
    std::vector<unsigned> cur(max_var, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i == max_var) {
            out.emplace_back(cur);
            return;
        }
        long wi = unit ? 1 : static_cast<long>(i + 1);
        for (long e = 0; e * wi <= left; ++e) {
            cur[i] = static_cast<unsigned>(e);
            rec(i + 1, left - e * wi);
        }
        cur[i] = 0;
    };
    rec(0, cap);
    return out;
}
} // namespace

TPolynomial divide_exact(const TPolynomial& f, const TPolynomial& d) {
    if (d.is_zero()) throw input_error("division by the zero polynomial");
    long qcap = f.cap() - d.min_weight();
    bool uw = unit_weighted(f.vars());
    std::size_t max_var = uw ? 8 : static_cast<std::size_t>(std::max<long>(qcap, 1));
    auto qmonos = monomials_up_to(std::max<long>(qcap, 0), uw, max_var);
    // equations: coefficient of every monomial of weight <= f.cap() in q*d
    std::map<Monomial, std::size_t> eqn_index;
    std::vector<Monomial> eqn_monos;
    auto eq_of = [&](const Monomial& m) {
        auto it = eqn_index.find(m);
        if (it != eqn_index.end()) return it->second;
        std::size_t id = eqn_monos.size();
        eqn_index.emplace(m, id);
        eqn_monos.push_back(m);
        return id;
    };
    // first touch all product monomials so the matrix covers them
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(qmonos.size());
    for (std::size_t j = 0; j < qmonos.size(); ++j)
        for (const auto& [dm, dc] : d.terms()) {
            Monomial prod = qmonos[j].times(dm);
            if (prod.weight(uw) > f.cap()) continue;
            cols[j].emplace_back(eq_of(prod), dc);
        }
    for (const auto& [fm, fc] : f.terms()) eq_of(fm);
    Matrix A(f.field(), eqn_monos.size(), qmonos.size());
    for (std::size_t j = 0; j < qmonos.size(); ++j)
        for (const auto& [row, c] : cols[j]) A.at(row, j) += c;
    std::vector<Scalar> b(eqn_monos.size(), Scalar(f.field()));
    for (std::size_t r = 0; r < eqn_monos.size(); ++r) b[r] = f.coeff(eqn_monos[r]);
    auto sol = A.solve(b);
    if (!sol) throw input_error("polynomial division is not exact within the truncation");
    TPolynomial q(f.field(), f.vars(), qcap);
    for (std::size_t j = 0; j < qmonos.size(); ++j) q.add_to(qmonos[j], (*sol)[j]);
    return q;
}

TensorPoly::TensorPoly(FieldSpec f, std::vector<VarSet> slots, std::vector<long> caps)
    : field_(f), slots_(std::move(slots)), caps_(std::move(caps)) {
    if (slots_.size() != caps_.size()) throw input_error("tensorpoly slot/cap size mismatch");
}

void TensorPoly::add_to(const std::vector<Monomial>& key, const Scalar& c) {
    if (key.size() != slots_.size()) throw input_error("tensorpoly key arity mismatch");
    for (std::size_t k = 0; k < key.size(); ++k)
        if (key[k].weight(unit_weighted(slots_[k])) > caps_[k]) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TensorPoly::accumulate(const Scalar& c, const std::vector<const TPolynomial*>& comps) {
    if (comps.size() != slots_.size()) throw input_error("tensorpoly accumulate arity mismatch");
    if (c.is_zero()) return;
    std::vector<Monomial> key(slots_.size());
    std::function<void(std::size_t, Scalar)> rec = [&](std::size_t k, Scalar acc) {
        if (k == comps.size()) {
            add_to(key, acc);
            return;
        }
        for (const auto& [m, v] : comps[k]->terms()) {
            key[k] = m;
            rec(k + 1, acc * v);
        }
    };
    rec(0, c);
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    if (slots_ != o.slots_) throw input_error("tensorpoly slot mismatch");
    for (const auto& [k, c] : o.terms_) add_to(k, c);
    return *this;
}

Scalar TensorPoly::hall(const std::vector<const TPolynomial*>& symbols) const {
    if (symbols.size() != slots_.size()) throw input_error("tensorpoly hall arity mismatch");
    Scalar acc(field_);
    for (const auto& [key, c] : terms_) {
        Scalar term = c;
        bool skip = false;
        for (std::size_t k = 0; k < key.size() && !skip; ++k) {
            const Monomial& m = key[k];
            Scalar sc = symbols[k]->coeff(m);
            if (sc.is_zero()) {
                skip = true;
                break;
            }
            for (std::size_t i = 1; i <= m.exps().size(); ++i) {
                unsigned mi = m.exp(i);
                for (unsigned kk = 1; kk <= mi; ++kk)
                    term *= Scalar::fraction(field_, mpz_class(kk), mpz_class(static_cast<long>(i)));
            }
            term *= sc;
        }
        if (!skip) acc += term;
    }
    return acc;
}

TensorPoly TensorPoly::divided_slot(std::size_t k, const TPolynomial& d) const {
    if (k >= slots_.size()) throw input_error("tensorpoly slot out of range");
    // group terms by the key with slot k removed
    std::map<std::vector<Monomial>, TPolynomial> groups;
    for (const auto& [key, c] : terms_) {
        std::vector<Monomial> rest(key);
        Monomial mk = rest[k];
        rest.erase(rest.begin() + static_cast<long>(k));
        auto it = groups.find(rest);
        if (it == groups.end())
            it = groups.emplace(rest, TPolynomial(field_, slots_[k], caps_[k])).first;
        it->second.add_to(mk, c);
    }
    std::vector<long> caps = caps_;
    caps[k] = caps_[k] - d.min_weight();
    TensorPoly out(field_, slots_, caps);
    for (const auto& [rest, poly] : groups) {
        TPolynomial q = divide_exact(poly, d.relabeled(slots_[k]));
        for (const auto& [m, c] : q.terms()) {
            std::vector<Monomial> key(rest);
            key.insert(key.begin() + static_cast<long>(k), m);
            out.add_to(key, c);
        }
    }
    return out;
}

std::pair<std::vector<Monomial>, Scalar> TensorPoly::first_term() const {
    if (terms_.empty()) throw input_error("first_term of the zero tensor polynomial");
    return *terms_.begin();
}

bool TensorPoly::operator==(const TensorPoly& o) const {
    return slots_ == o.slots_ && terms_ == o.terms_;
}

std::string TensorPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c.str();
        for (std::size_t k = 0; k < key.size(); ++k)
            if (!key[k].is_one()) out << "*" << key[k].str(varset_name(slots_[k]));
    }
    return out.str();
}

} // namespace satokit
