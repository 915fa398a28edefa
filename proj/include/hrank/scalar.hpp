#pragma once

// Exact scalars in Q(i), optionally extended by the square root of a
// square-free integer s >= 2.  An element is
//
//     (a + b i) + (c + d i) * sqrt(s)
//
// with rational a, b, c, d.  The radicand is carried per value; combining two
// values with different nonzero radicands is an error.

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <stdexcept>
#include <string>

namespace hrank {

using Rational = mpq_class;

class FieldMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    /// Full constructor; `radicand` must be square-free and >= 2 when the
    /// radical part is nonzero.
    Scalar(Rational re, Rational im, Rational rad_re, Rational rad_im, int radicand);

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    /// sqrt(s) as a field element.
    static Scalar sqrt(int s);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    const Rational& rad_re() const { return rad_re_; }
    const Rational& rad_im() const { return rad_im_; }
    int radicand() const { return radicand_; }

    bool is_zero() const {
        return sgn(re_) == 0 && sgn(im_) == 0 && radicand_ == 0;
    }
    bool has_radical() const { return radicand_ != 0; }
    bool is_real() const { return sgn(im_) == 0 && sgn(rad_im_) == 0; }
    bool is_rational() const { return sgn(im_) == 0 && radicand_ == 0; }
    /// Sign of a real element (-1, 0, 1).  Throws for non-real input.
    int real_sign() const;

    Scalar conj() const;
    Scalar inverse() const;
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Numeric embedding; only for oracles and display.
    std::complex<double> to_complex() const;

    /// Canonical text "a/b+c/di+e/fr2+g/hir2" with zero terms omitted;
    /// "0" for zero.  Integers print without a denominator.
    std::string str() const;

private:
    void normalize();
    void unify(const Scalar& o);

    Rational re_, im_, rad_re_, rad_im_;
    int radicand_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// True when s >= 2 has no repeated prime factor.
bool is_square_free(int s);

}  // namespace hrank
