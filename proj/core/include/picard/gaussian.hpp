#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace picard {

// Arbitrary-precision integers and rationals. mpq_class keeps rationals
// canonical (lowest terms, positive denominator), which makes equality
// structural and ordering exact.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }
inline bool is_even_integer(const Rat& q) {
    return is_integer(q) && mpz_even_p(q.get_num().get_mpz_t());
}

std::string to_string(const Int& n);
/// Renders as "p/q", denominator always present ("3/4", "-2/1").
std::string to_string(const Rat& q);
Int parse_int(const std::string& s);
/// Accepts "p" or "p/q".
Rat parse_rat(const std::string& s);

/// Element of Z[i].
struct GaussInt {
    Int re, im;

    GaussInt() : re(0), im(0) {}
    GaussInt(Int r) : re(std::move(r)), im(0) {}
    GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    GaussInt(long r, long i) : re(r), im(i) {}

    GaussInt conj() const { return {re, -im}; }
    Int norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }

    GaussInt operator-() const { return {-re, -im}; }
    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussInt& operator+=(const GaussInt& o) { re += o.re; im += o.im; return *this; }
    GaussInt& operator-=(const GaussInt& o) { re -= o.re; im -= o.im; return *this; }
    GaussInt& operator*=(const GaussInt& o) { *this = *this * o; return *this; }

    friend bool operator==(const GaussInt& a, const GaussInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussInt& a, const GaussInt& b) { return !(a == b); }
};

GaussInt gauss_i();
/// The four units of Z[i] in the order 1, i, -1, -i.
const GaussInt* gauss_units();

std::string to_string(const GaussInt& z);
std::ostream& operator<<(std::ostream&, const GaussInt&);

/// Element of Q(i), stored as a Gaussian-integer numerator over a positive
/// rational-integer denominator, with gcd(num.re, num.im, den) = 1. The
/// canonical form is unique, so equality is structural.
struct GaussRat {
    GaussInt num;
    Int den;

    GaussRat() : num(), den(1) {}
    GaussRat(GaussInt n) : num(std::move(n)), den(1) {}
    GaussRat(long r, long i) : num(r, i), den(1) {}
    GaussRat(GaussInt n, Int d) : num(std::move(n)), den(std::move(d)) { canonicalize(); }
    GaussRat(const Rat& real, const Rat& imag);

    void canonicalize();

    Rat re() const { return make_rat(num.re, den); }
    Rat im() const { return make_rat(num.im, den); }
    GaussRat conj() const { return raw(num.conj(), den); }
    Rat norm() const { return make_rat(num.norm(), den * den); }
    bool is_zero() const { return num.is_zero(); }
    bool is_integral() const { return den == 1; }
    /// Integral part; throws unless den == 1.
    GaussInt to_gauss_int() const;

    GaussRat operator-() const { return raw(-num, den); }
    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.num * GaussInt(b.den) + b.num * GaussInt(a.den), a.den * b.den);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.num * GaussInt(b.den) - b.num * GaussInt(a.den), a.den * b.den);
    }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.num * b.num, a.den * b.den);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
    GaussRat& operator+=(const GaussRat& o) { *this = *this + o; return *this; }
    GaussRat& operator-=(const GaussRat& o) { *this = *this - o; return *this; }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.den == b.den && a.num == b.num;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

private:
    // Bypasses canonicalization for values already in lowest terms.
    static GaussRat raw(GaussInt n, Int d) {
        GaussRat g;
        g.num = std::move(n);
        g.den = std::move(d);
        return g;
    }
};

std::string to_string(const GaussRat& z);
std::ostream& operator<<(std::ostream&, const GaussRat&);

} // namespace picard
