#include "satokit/field.hpp"

namespace satokit {

void validate(const FieldSpec& f) {
    if (f.characteristic == 0) return;
    long p = f.characteristic;
    if (p < 2) throw input_error("characteristic must be 0 or a prime, got " + std::to_string(p));
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw input_error("characteristic " + std::to_string(p) + " is not prime");
}

Scalar::Scalar(FieldSpec f, long n) : field_(f), v_(n) { reduce_(); }

Scalar::Scalar(FieldSpec f, mpq_class v) : field_(f), v_(std::move(v)) {
    v_.canonicalize();
    reduce_();
}

Scalar Scalar::fraction(FieldSpec f, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw input_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(f, q);
}

void Scalar::reduce_() {
    if (field_.is_rational()) return;
    mpz_class p(field_.characteristic);
    mpz_class den = v_.get_den();
    mpz_class num = v_.get_num() % p;
    if (num < 0) num += p;
    if (den != 1) {
        // clear the denominator with a modular inverse
        mpz_class dinv, d = den % p;
        if (d < 0) d += p;
        if (d == 0) throw input_error("denominator divisible by characteristic");
        mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
        num = (num * dinv) % p;
    }
    v_ = mpq_class(num);
}

void Scalar::check_field_(const Scalar& o) const {
    if (field_ != o.field_) throw field_mismatch("scalar field mismatch");
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.v_ = -r.v_;
    r.reduce_();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_field_(o);
    v_ += o.v_;
    reduce_();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_field_(o);
    v_ -= o.v_;
    reduce_();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_field_(o);
    v_ *= o.v_;
    reduce_();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_field_(o);
    return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    check_field_(o);
    return v_ == o.v_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw input_error("division by zero");
    if (field_.is_rational()) return Scalar(field_, mpq_class(1) / v_);
    mpz_class p(field_.characteristic), inv;
    mpz_class n = v_.get_num();
    mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return Scalar(field_, mpq_class(inv));
}

std::string Scalar::str() const {
    if (field_.is_rational() && v_.get_den() != 1)
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    return v_.get_num().get_str();
}

Scalar parse_scalar(FieldSpec f, const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Scalar(f, mpq_class(mpz_class(text)));
        mpz_class num(text.substr(0, slash)), den(text.substr(slash + 1));
        return Scalar::fraction(f, num, den);
    } catch (const std::invalid_argument&) {
        throw input_error("cannot parse scalar '" + text + "'");
    }
}

} // namespace satokit
