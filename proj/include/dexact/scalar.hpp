#pragma once

#include <gmpxx.h>

#include <string>

#include "dexact/errors.hpp"

namespace dexact {

/// Ground field: exact rationals, or F_p for a prime p.
struct Field {
    enum class Kind { Rational, Prime };

    Kind kind = Kind::Rational;
    unsigned long p = 0;

    static Field rational() { return Field{Kind::Rational, 0}; }
    static Field prime(unsigned long p);

    bool operator==(const Field&) const = default;

    std::string describe() const;
};

/// One field element. Rational values are kept in lowest terms with a
/// positive denominator (mpq_class canonicalizes); prime-field values are
/// residues in [0, p).
class Scalar {
public:
    Scalar() = default;
    Scalar(Field field, const mpq_class& value);
    Scalar(Field field, long value) : Scalar(field, mpq_class(value)) {}

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }

    const Field& field() const { return field_; }
    const mpq_class& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_same_field(const Scalar& o) const;
    void reduce();

    Field field_ = Field::rational();
    mpq_class value_ = 0;
};

} // namespace dexact
