#include "qhall/rational.hpp"

#include <boost/multiprecision/integer.hpp>
#include <sstream>
#include <stdexcept>

namespace qhall {

namespace {
Int igcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (!b.is_zero()) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}
}  // namespace

Poly::Poly(long c) {
    if (c != 0) c_.push_back(Int(c));
}

Poly::Poly(Int c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::q(int e) { return monomial(Int(1), e); }

Poly Poly::monomial(Int c, int e) {
    Poly p;
    if (c.is_zero()) return p;
    if (e < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
    p.c_.assign(static_cast<size_t>(e) + 1, Int(0));
    p.c_.back() = std::move(c);
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Int& Poly::leading() const {
    static const Int zero(0);
    return c_.empty() ? zero : c_.back();
}

const Int& Poly::coeff(int e) const {
    static const Int zero(0);
    if (e < 0 || static_cast<size_t>(e) >= c_.size()) return zero;
    return c_[static_cast<size_t>(e)];
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Int Poly::content() const {
    Int g(0);
    for (const auto& c : c_) g = igcd(g, c);
    if (!c_.empty() && leading() < 0) g = -g;
    return g;
}

Poly Poly::primitivePart() const {
    if (isZero()) return Poly();
    Int ct = content();
    Poly r = *this;
    for (auto& c : r.c_) c /= ct;
    return r;
}

bool Poly::divide(const Poly& a, const Poly& b, Poly& quot) {
    if (b.isZero()) throw std::invalid_argument("Poly::divide by zero");
    Poly rem = a;
    quot = Poly();
    if (a.isZero()) return true;
    if (rem.degree() < b.degree()) return false;
    quot.c_.assign(static_cast<size_t>(rem.degree() - b.degree()) + 1, Int(0));
    while (!rem.isZero() && rem.degree() >= b.degree()) {
        Int lc = rem.leading();
        if (!Int(lc % b.leading()).is_zero()) return false;
        Int f = lc / b.leading();
        int shift = rem.degree() - b.degree();
        quot.c_[static_cast<size_t>(shift)] = f;
        rem = rem - b * monomial(f, shift);
    }
    quot.trim();
    return rem.isZero();
}

Poly Poly::gcd(Poly a, Poly b) {
    if (a.isZero() && b.isZero()) return Poly();
    Int ca = a.content(), cb = b.content();
    if (ca < 0) ca = -ca;
    if (cb < 0) cb = -cb;
    Poly cont{Poly(igcd(ca, cb))};
    if (a.isZero()) return cont * b.primitivePart();
    if (b.isZero()) return cont * a.primitivePart();
    a = a.primitivePart();
    b = b.primitivePart();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.isZero()) {
        // pseudo-remainder of a by b
        Poly rem = a;
        Int lb = b.leading();
        int d = a.degree() - b.degree();
        for (int i = 0; i <= d && !rem.isZero() && rem.degree() >= b.degree(); ++i) {
            for (auto& c : rem.c_) c *= lb;
            Int f = rem.leading() / lb;  // exact by construction after scaling
            rem = rem - b * monomial(f, rem.degree() - b.degree());
        }
        if (!rem.isZero() && rem.degree() >= b.degree())
            throw std::logic_error("Poly::gcd: pseudo-division failed");
        a = std::move(b);
        b = rem.primitivePart();
    }
    return cont * a.primitivePart();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
}

std::string Poly::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const Int& c = coeff(e);
        if (c.is_zero()) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unitCoeff = (a == 1);
        if (e == 0) {
            os << a.str();
        } else {
            if (!unitCoeff) os << a.str() << "*";
            os << "q";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

size_t Poly::hash() const {
    size_t h = c_.size();
    for (const auto& c : c_) {
        size_t v = static_cast<size_t>(boost::multiprecision::hash_value(c));
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

QScalar::QScalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero()) throw std::invalid_argument("QScalar: zero denominator");
    normalize();
}

void QScalar::normalize() {
    if (num_.isZero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0 || g.leading() != 1) {
        Poly qn, qd;
        if (!Poly::divide(num_, g, qn) || !Poly::divide(den_, g, qd))
            throw std::logic_error("QScalar: gcd does not divide");
        num_ = std::move(qn);
        den_ = std::move(qd);
    }
    Int cn = num_.content(), cd = den_.content();
    Int g2 = igcd(cn, cd);
    if (cd < 0) g2 = -g2;  // make denominator leading coefficient positive
    if (g2 != 1) {
        Poly qn, qd;
        Poly gp{Poly(g2)};
        if (!Poly::divide(num_, gp, qn) || !Poly::divide(den_, gp, qd))
            throw std::logic_error("QScalar: content does not divide");
        num_ = std::move(qn);
        den_ = std::move(qd);
    }
}

QScalar QScalar::qpow(long e) {
    if (e >= 0) return QScalar(Poly::q(static_cast<int>(e)));
    return QScalar(Poly(1), Poly::q(static_cast<int>(-e)));
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar QScalar::operator+(const QScalar& o) const {
    return QScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator-(const QScalar& o) const {
    return QScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator*(const QScalar& o) const {
    return QScalar(num_ * o.num_, den_ * o.den_);
}

QScalar QScalar::operator/(const QScalar& o) const {
    if (o.isZero()) throw std::domain_error("QScalar: division by zero");
    return QScalar(num_ * o.den_, den_ * o.num_);
}

QScalar QScalar::inverse() const {
    if (isZero()) throw std::domain_error("QScalar: inverse of zero");
    return QScalar(den_, num_);
}

QScalar QScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QScalar r(1), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rat QScalar::eval(const Rat& q0) const {
    Rat d = den_.eval(q0);
    if (d == 0) throw std::domain_error("QScalar::eval: denominator vanishes");
    return num_.eval(q0) / d;
}

std::string QScalar::str() const {
    if (den_ == Poly(1)) return num_.str();
    auto wrap = [](const Poly& p) {
        std::string s = p.str();
        // parenthesize sums/differences, keep single terms bare
        bool needs = s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
        return needs ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

size_t QScalar::hash() const {
    return num_.hash() * 1000003u ^ den_.hash();
}

}  // namespace qhall
