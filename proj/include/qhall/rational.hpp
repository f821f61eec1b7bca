#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace qhall {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense polynomial in q over Z, least degree first, trailing zeros trimmed.
class Poly {
public:
    Poly() = default;
    Poly(long c);
    explicit Poly(Int c);
    explicit Poly(std::vector<Int> coeffs);

    static Poly q(int e = 1);                 // q^e, e >= 0
    static Poly monomial(Int c, int e);

    bool isZero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Int& leading() const;
    const Int& coeff(int e) const;            // 0 outside range

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Int content() const;                      // gcd of coefficients, sign of leading; 0 for zero
    Poly primitivePart() const;               // positive leading coefficient

    // Exact division; returns false if remainder would be nonzero.
    static bool divide(const Poly& a, const Poly& b, Poly& quot);
    // Primitive gcd with positive leading coefficient (subresultant-free PRS).
    static Poly gcd(Poly a, Poly b);

    Rat eval(const Rat& x) const;
    std::string str() const;                  // descending powers, e.g. "q^3 - q + 2"
    size_t hash() const;

private:
    void trim();
    std::vector<Int> c_;
};

// Rational function num/den over Z[q].  Invariants after normalization:
// gcd(num, den) = 1, joint integer content 1, den has positive leading
// coefficient, den = 1 when num = 0.
class QScalar {
public:
    QScalar() : num_(), den_(1) {}
    QScalar(long c) : num_(c), den_(1) {}
    explicit QScalar(Poly num) : num_(std::move(num)), den_(1) {}
    QScalar(Poly num, Poly den);

    static QScalar qpow(long e);              // q^e, any sign of e
    static QScalar qm1() { return QScalar(Poly::q() - Poly(1)); }  // q - 1

    bool isZero() const { return num_.isZero(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    QScalar operator-() const;
    QScalar operator+(const QScalar& o) const;
    QScalar operator-(const QScalar& o) const;
    QScalar operator*(const QScalar& o) const;
    QScalar operator/(const QScalar& o) const;
    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    QScalar& operator/=(const QScalar& o) { return *this = *this / o; }
    bool operator==(const QScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QScalar& o) const { return !(*this == o); }

    QScalar inverse() const;
    QScalar pow(long e) const;

    Rat eval(const Rat& q0) const;            // throws if den vanishes at q0
    std::string str() const;                  // "(q^3 - q)/(q - 1)", "q + 1", "0"
    size_t hash() const;

private:
    void normalize();
    Poly num_, den_;
};

}  // namespace qhall
