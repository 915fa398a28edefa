#include "hrank/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace hrank {

bool is_square_free(int s) {
    if (s < 2) return false;
    for (int p = 2; p * p <= s; ++p) {
        if (s % (p * p) == 0) return false;
    }
    return true;
}

Scalar::Scalar(Rational re, Rational im, Rational rad_re, Rational rad_im, int radicand)
    : re_(std::move(re)), im_(std::move(im)), rad_re_(std::move(rad_re)),
      rad_im_(std::move(rad_im)), radicand_(radicand) {
    re_.canonicalize();
    im_.canonicalize();
    rad_re_.canonicalize();
    rad_im_.canonicalize();
    if (sgn(rad_re_) != 0 || sgn(rad_im_) != 0) {
        if (!is_square_free(radicand_)) {
            throw FieldMismatch("radicand must be a square-free integer >= 2");
        }
    }
    normalize();
}

Scalar Scalar::sqrt(int s) {
    return Scalar(Rational(0), Rational(0), Rational(1), Rational(0), s);
}

void Scalar::normalize() {
    if (sgn(rad_re_) == 0 && sgn(rad_im_) == 0) radicand_ = 0;
}

void Scalar::unify(const Scalar& o) {
    if (o.radicand_ != 0 && radicand_ != 0 && o.radicand_ != radicand_) {
        throw FieldMismatch("scalars from different radical extensions: sqrt(" +
                            std::to_string(radicand_) + ") vs sqrt(" +
                            std::to_string(o.radicand_) + ")");
    }
}

int Scalar::real_sign() const {
    if (!is_real()) throw std::domain_error("real_sign of a non-real scalar");
    const int sa = sgn(re_);
    const int sc = sgn(rad_re_);
    if (sc == 0) return sa;
    if (sa == 0) return sc;
    if (sa == sc) return sa;
    // a + c sqrt(s) with opposite signs: compare a^2 against c^2 s.
    const Rational lhs = re_ * re_;
    const Rational rhs = rad_re_ * rad_re_ * radicand_;
    const int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // unreachable for square-free s, kept for totality
    return c > 0 ? sa : sc;
}

Scalar Scalar::conj() const {
    Scalar r = *this;
    r.im_ = -im_;
    r.rad_im_ = -rad_im_;
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.re_ = -re_;
    r.im_ = -im_;
    r.rad_re_ = -rad_re_;
    r.rad_im_ = -rad_im_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    unify(o);
    re_ += o.re_;
    im_ += o.im_;
    if (o.radicand_ != 0) {
        rad_re_ += o.rad_re_;
        rad_im_ += o.rad_im_;
        radicand_ = o.radicand_;
        normalize();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    unify(o);
    re_ -= o.re_;
    im_ -= o.im_;
    if (o.radicand_ != 0) {
        rad_re_ -= o.rad_re_;
        rad_im_ -= o.rad_im_;
        radicand_ = o.radicand_;
        normalize();
    }
    return *this;
}

namespace {

// (a + b i)(c + d i)
inline void gauss_mul(const Rational& a, const Rational& b, const Rational& c,
                      const Rational& d, Rational& out_re, Rational& out_im) {
    Rational re = a * c - b * d;
    Rational im = a * d + b * c;
    out_re = std::move(re);
    out_im = std::move(im);
}

}  // namespace

Scalar& Scalar::operator*=(const Scalar& o) {
    unify(o);
    if (radicand_ == 0 && o.radicand_ == 0) {
        if (sgn(im_) == 0 && sgn(o.im_) == 0) {
            re_ *= o.re_;
            return *this;
        }
        gauss_mul(re_, im_, o.re_, o.im_, re_, im_);
        return *this;
    }
    // (u + v r)(u' + v' r) = u u' + s v v' + (u v' + v u') r
    const int s = radicand_ != 0 ? radicand_ : o.radicand_;
    Rational uu_re, uu_im, vv_re, vv_im, uv_re, uv_im, vu_re, vu_im;
    gauss_mul(re_, im_, o.re_, o.im_, uu_re, uu_im);
    gauss_mul(rad_re_, rad_im_, o.rad_re_, o.rad_im_, vv_re, vv_im);
    gauss_mul(re_, im_, o.rad_re_, o.rad_im_, uv_re, uv_im);
    gauss_mul(rad_re_, rad_im_, o.re_, o.im_, vu_re, vu_im);
    re_ = uu_re + vv_re * s;
    im_ = uu_im + vv_im * s;
    rad_re_ = uv_re + vu_re;
    rad_im_ = uv_im + vu_im;
    radicand_ = s;
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    if (radicand_ == 0) {
        const Rational n = re_ * re_ + im_ * im_;
        return Scalar(re_ / n, -im_ / n);
    }
    // 1/(u + v r) = (u - v r) / (u^2 - s v^2), with u^2 - s v^2 in Q(i)
    // nonzero because sqrt(s) is not in Q(i).
    Rational u2_re, u2_im, v2_re, v2_im;
    gauss_mul(re_, im_, re_, im_, u2_re, u2_im);
    gauss_mul(rad_re_, rad_im_, rad_re_, rad_im_, v2_re, v2_im);
    const Scalar norm(u2_re - v2_re * radicand_, u2_im - v2_im * radicand_);
    const Scalar ninv = norm.inverse();
    Scalar num(re_, im_, -rad_re_, -rad_im_, radicand_);
    return num * ninv;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.radicand_ == b.radicand_ && a.re_ == b.re_ && a.im_ == b.im_ &&
           a.rad_re_ == b.rad_re_ && a.rad_im_ == b.rad_im_;
}

std::complex<double> Scalar::to_complex() const {
    const double r = radicand_ == 0 ? 0.0 : std::sqrt(static_cast<double>(radicand_));
    return {re_.get_d() + r * rad_re_.get_d(), im_.get_d() + r * rad_im_.get_d()};
}

namespace {

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

void append_term(std::string& out, const Rational& q, const std::string& suffix) {
    if (sgn(q) == 0) return;
    std::string t = rational_str(q);
    if (!out.empty() && t.front() != '-') out += '+';
    out += t;
    out += suffix;
}

}  // namespace

std::string Scalar::str() const {
    std::string out;
    append_term(out, re_, "");
    append_term(out, im_, "i");
    if (radicand_ != 0) {
        const std::string r = "r" + std::to_string(radicand_);
        append_term(out, rad_re_, r);
        append_term(out, rad_im_, "i" + r);
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hrank
