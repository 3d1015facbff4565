#include "satokit/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace satokit {

namespace {
constexpr long kInf = std::numeric_limits<long>::max() / 4;
}

LaurentSeries::LaurentSeries(FieldSpec f, long lo, long hi, bool exact)
    : field_(f), lo_(lo), hi_(hi), exact_(exact) {
    if (lo > hi) throw input_error("series window [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + ") is inverted");
}

LaurentSeries LaurentSeries::zero(FieldSpec f, long lo, long hi, bool exact) {
    return LaurentSeries(f, lo, hi, exact);
}

LaurentSeries LaurentSeries::monomial(FieldSpec f, long e, const Scalar& c) {
    LaurentSeries s(f, e, e + 1, true);
    s.set(e, c);
    return s;
}

long LaurentSeries::eff_hi_() const { return exact_ ? kInf : hi_; }

void LaurentSeries::check_field_(const LaurentSeries& o) const {
    if (field_ != o.field_) throw field_mismatch("laurent series field mismatch");
}

Scalar LaurentSeries::coeff(long e) const {
    if (!determines(e))
        throw precision_error("coefficient of z^" + std::to_string(e) +
                              " undetermined: window ends at " + std::to_string(hi_));
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Scalar(field_) : it->second;
}

std::optional<long> LaurentSeries::valuation() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

void LaurentSeries::set(long e, const Scalar& c) {
    if (c.field() != field_) throw field_mismatch("coefficient field mismatch");
    if (e < lo_) lo_ = e;
    if (e >= hi_) {
        if (!exact_)
            throw precision_error("exponent " + std::to_string(e) + " beyond window hi " +
                                  std::to_string(hi_));
        hi_ = e + 1;
    }
    if (c.is_zero())
        coeffs_.erase(e);
    else
        coeffs_[e] = c;
}

void LaurentSeries::add_to(long e, const Scalar& c) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        set(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentSeries LaurentSeries::masked(long lo, long hi, bool keep_exact) const {
    bool drops_high = !coeffs_.empty() && coeffs_.rbegin()->first >= hi;
    LaurentSeries r(field_, std::max(lo, lo_), std::min(hi, eff_hi_()),
                    exact_ && keep_exact && !drops_high);
    if (r.lo_ > r.hi_) r.lo_ = r.hi_;
    for (const auto& [e, c] : coeffs_)
        if (e >= r.lo_ && e < r.hi_) r.coeffs_[e] = c;
    return r;
}

LaurentSeries LaurentSeries::truncated(long hi) const {
    bool lossless = exact_ && (coeffs_.empty() || coeffs_.rbegin()->first < hi);
    LaurentSeries r(field_, std::min(lo_, hi), std::min(hi, eff_hi_()), lossless);
    for (const auto& [e, c] : coeffs_)
        if (e < r.hi_) r.coeffs_[e] = c;
    return r;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r(*this);
    for (auto& [e, c] : r.coeffs_) c = -c;
    return r;
}

LaurentSeries LaurentSeries::scaled(const Scalar& c) const {
    if (c.field() != field_) throw field_mismatch("scale factor field mismatch");
    LaurentSeries r(field_, lo_, hi_, exact_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[e] = v * c;
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    a.check_field_(b);
    long hi = std::min(a.eff_hi_(), b.eff_hi_());
    LaurentSeries r(a.field_, std::min(a.lo_, b.lo_), std::min(hi, std::numeric_limits<long>::max() / 4),
                    a.exact_ && b.exact_);
    for (const auto& [e, c] : a.coeffs_)
        if (e < r.hi_) r.add_to(e, c);
    for (const auto& [e, c] : b.coeffs_)
        if (e < r.hi_) r.add_to(e, c);
    if (r.exact_) r = r.truncated(r.coeffs_.empty() ? r.lo_ : r.coeffs_.rbegin()->first + 1);
    return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    a.check_field_(b);
    if (a.lo_ >= a.eff_hi_() || b.lo_ >= b.eff_hi_())
        throw precision_error("multiplying a series with an empty window");
    long lo = a.lo_ + b.lo_;
    long hi = std::min(a.lo_ + b.eff_hi_(), b.lo_ + a.eff_hi_());
    bool exact = a.exact_ && b.exact_;
    if (hi <= lo && !exact)
        throw precision_error("product window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                              ") is empty: insufficient precision");
    LaurentSeries r(a.field_, lo, std::max(lo, hi), exact);
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            long e = ea + eb;
            if (e < r.hi_ || exact) {
                if (exact && e >= r.hi_) r.hi_ = e + 1;
                r.add_to(e, ca * cb);
            }
        }
    if (exact) r = r.truncated(r.coeffs_.empty() ? r.lo_ : r.coeffs_.rbegin()->first + 1);
    return r;
}

LaurentSeries LaurentSeries::shifted(long n) const {
    LaurentSeries r(field_, lo_ + n, hi_ + n, exact_);
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + n] = c;
    return r;
}

LaurentSeries LaurentSeries::inverted(long hi_out) const {
    auto v = valuation();
    if (!v) {
        if (is_exact_zero()) throw input_error("inverting the zero series");
        throw precision_error("inverting a series with no visible nonzero coefficient");
    }
    // b_{-v+k} for 0 <= k < hi_out + v needs a determined through v + k.
    long terms = hi_out + *v; // number of inverse coefficients requested
    if (terms > 0 && !exact_ && *v + terms > hi_) {
        throw precision_error("inverse through z^" + std::to_string(hi_out - 1) +
                              " needs input through z^" + std::to_string(*v + terms - 1) +
                              ", window ends at " + std::to_string(hi_));
    }
    Scalar lead = coeffs_.begin()->second;
    Scalar linv = lead.inverse();
    bool mono = coeffs_.size() == 1 && exact_;
    if (hi_out <= -*v && !mono)
        throw precision_error("inverse window [" + std::to_string(-*v) + ", " +
                              std::to_string(hi_out) + ") is empty");
    LaurentSeries r(field_, -*v, std::max(-*v + 1, hi_out), exact_ && mono);
    r.set(-*v, linv);
    if (mono) return r.truncated(std::max(-*v + 1, hi_out));
    // b_k solves sum_{j} a_{v+j} b_{k-j} = delta_{k,-v}
    for (long k = -*v + 1; k < hi_out; ++k) {
        Scalar acc(field_);
        for (const auto& [ea, ca] : coeffs_) {
            long j = ea - *v;
            if (j == 0 || k - j < -*v) continue;
            if (k - j >= k) continue;
            acc += ca * r.coeff(k - j);
        }
        Scalar bk = -acc * linv;
        if (!bk.is_zero()) r.coeffs_[k] = bk;
    }
    return r;
}

Scalar LaurentSeries::residue() const {
    if (-1 >= eff_hi_())
        throw precision_error("residue undetermined: window ends at " + std::to_string(hi_) +
                              " (need hi > -1 or the exact flag)");
    auto it = coeffs_.find(-1);
    return it == coeffs_.end() ? Scalar(field_) : it->second;
}

LaurentSeries LaurentSeries::derivative() const {
    LaurentSeries r(field_, lo_ - 1, exact_ ? hi_ - 1 : hi_ - 1, exact_);
    for (const auto& [e, c] : coeffs_) {
        if (e == 0) continue;
        r.coeffs_[e - 1] = c * Scalar(field_, e);
    }
    return r;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    // equality of determined data: exact series are compared coefficientwise
    // over all of Z, inexact ones must share the precision wall
    if (field_ != o.field_ || exact_ != o.exact_) return false;
    if (!exact_ && hi_ != o.hi_) return false;
    return coeffs_ == o.coeffs_;
}

std::string LaurentSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        out << c.str();
        if (e != 0) out << "*z^" << e;
    }
    if (first) out << "0";
    if (!exact_) out << " + O(z^" << hi_ << ")";
    return out.str();
}

} // namespace satokit
