#include "dexact/scalar.hpp"

namespace dexact {

namespace {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

// Residue of a rational modulo p; the denominator is inverted mod p.
mpz_class residue_mod(const mpq_class& q, unsigned long p) {
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class num = q.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = q.get_den() % pz;
    if (den == 0) throw FieldMismatch("denominator divisible by p");
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw FieldMismatch("denominator not invertible mod p");
    return (num * inv) % pz;
}

} // namespace

Field Field::prime(unsigned long p) {
    if (!is_prime(p)) throw FieldMismatch("p = " + std::to_string(p) + " is not prime");
    return Field{Kind::Prime, p};
}

std::string Field::describe() const {
    return kind == Kind::Rational ? "Q" : "F_" + std::to_string(p);
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field), value_(value) {
    value_.canonicalize();
    reduce();
}

void Scalar::reduce() {
    if (field_.kind == Field::Kind::Prime) {
        value_ = mpq_class(residue_mod(value_, field_.p));
    }
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("mixed fields: " + field_.describe() + " vs " + o.field_.describe());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    return Scalar(field_, value_ + o.value_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    return Scalar(field_, value_ - o.value_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    return Scalar(field_, value_ * o.value_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (field_.kind == Field::Kind::Prime) {
        // invert the residue
        mpz_class pz(field_.p), inv;
        mpz_class d = o.value_.get_num();
        if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t()) == 0)
            throw std::domain_error("division by zero residue");
        return Scalar(field_, value_ * mpq_class(inv));
    }
    return Scalar(field_, value_ / o.value_);
}

Scalar Scalar::operator-() const { return Scalar(field_, -value_); }

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return value_ == o.value_;
}

std::string Scalar::str() const { return value_.get_str(); }

} // namespace dexact
