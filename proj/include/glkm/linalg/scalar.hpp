#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace glkm {

// Exact Gaussian rational re + im*i. Both parts are kept in canonical form
// (coprime, positive denominator), so equality is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}  // NOLINT: implicit from integers is intended
    Scalar(mpq_class re, mpq_class im = 0);

    static Scalar rational(long num, long den);
    static Scalar imaginary_unit() { return Scalar(0, 1); }

    // Accepts "3", "-2/5", "i", "-i", "3/4i", "1/2-3i", "2+i".
    static Scalar parse(std::string_view text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return is_real() && re_ == 1; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar canonical() const;
    bool is_canonical() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Lowest common denominator of both parts; used to clear fractions before
// fraction-free elimination.
mpz_class common_denominator(const Scalar& s);

}  // namespace glkm
