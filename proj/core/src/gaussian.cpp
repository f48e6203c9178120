#include "picard/gaussian.hpp"

#include <ostream>
#include <sstream>

namespace picard {

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    mpz_class n;
    if (n.set_str(s, 10) != 0) throw std::invalid_argument("bad integer literal: " + s);
    return n;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

GaussInt gauss_i() { return GaussInt(0, 1); }

const GaussInt* gauss_units() {
    static const GaussInt units[4] = {GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0),
                                      GaussInt(0, -1)};
    return units;
}

std::string to_string(const GaussInt& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussInt& z) {
    if (z.im == 0) return os << z.re;
    if (z.re == 0) return os << z.im << "i";
    os << z.re;
    if (z.im > 0) os << "+";
    return os << z.im << "i";
}

GaussRat::GaussRat(const Rat& real, const Rat& imag) {
    // common positive denominator
    Int d = real.get_den() * imag.get_den();
    num = GaussInt(real.get_num() * imag.get_den(), imag.get_num() * real.get_den());
    den = d;
    canonicalize();
}

void GaussRat::canonicalize() {
    if (den == 0) throw std::domain_error("Gaussian rational with zero denominator");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (num.is_zero()) {
        den = 1;
        return;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num.re.get_mpz_t(), num.im.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num.re.get_mpz_t(), num.re.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(num.im.get_mpz_t(), num.im.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
}

GaussInt GaussRat::to_gauss_int() const {
    if (den != 1) throw std::domain_error("not a Gaussian integer: " + to_string(*this));
    return num;
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    if (b.is_zero()) throw std::domain_error("Gaussian rational division by zero");
    // a/b = a * conj(b) / |b|^2
    return GaussRat(a.num * b.num.conj() * GaussInt(b.den), a.den * b.num.norm());
}

std::string to_string(const GaussRat& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) {
    os << "(" << z.num << ")/" << z.den;
    return os;
}

} // namespace picard
