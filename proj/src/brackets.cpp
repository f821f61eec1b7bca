#include "qhall/brackets.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhall {

long Brackets::eulerExp(const Indec& A, const Indec& B) {
    // normalize by translation so memo entries are shift-independent
    const long c = A.lo;
    auto key = std::make_tuple(static_cast<int>(A.kind), A.level, A.hi - A.lo,
                               static_cast<int>(B.kind), B.level, B.lo - c, B.hi - c);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    const Indec a = A.shifted(-c);
    Indec cur = B.shifted(-c);
    long e = 0;
    int sign = 1;
    long n = 0;
    const long gap = cur.topIdx() - (a.lo - 1);
    const long maxN = 16 + p_.r * (std::max(0l, gap) / p_.m + 4);
    while (cur.topIdx() >= a.lo - 1) {
        e += sign * homDims(p_, a, cur).total();
        cur = cur.suspend(p_, -1);
        sign = -sign;
        if (++n > maxN) throw std::logic_error("eulerExp: scan did not reach cutoff");
    }
    for (int extra = 0; extra < 2 * p_.r; ++extra) {
        if (homDims(p_, a, cur).total() != 0)
            throw std::logic_error("eulerExp: vanishing bound violated");
        cur = cur.suspend(p_, -1);
    }
    memo_[key] = e;
    return e;
}

long Brackets::eulerExp(const Obj& A, const Obj& B) {
    long e = 0;
    for (const auto& a : A.parts())
        for (const auto& b : B.parts()) e += eulerExp(a, b);
    return e;
}

QScalar Brackets::square(const Obj& A, const Obj& B) {
    return QScalar::qpow(eulerExp(A, B));
}

QScalar Brackets::curly(const Obj& A, const Obj& B) {
    return QScalar::qpow(eulerExp(A, B) - homDim(p_, A, B));
}

QScalar Brackets::lambda(long i, int k, int l) {
    return QScalar::qpow(eulerExp(Indec::X(p_, k, 0, 0), Indec::X(p_, l, i, i)));
}

QScalar Brackets::mu(long i, int k, int l) {
    return QScalar::qpow(eulerExp(Indec::X(p_, k, 0, 0), Indec::Z(p_, l, i)));
}

QScalar Brackets::nu(long i, int k, int l) {
    return QScalar::qpow(eulerExp(Indec::Z(p_, k, 0), Indec::X(p_, l, i, i)));
}

QScalar Brackets::kappa(long i, int k, int l) {
    return QScalar::qpow(eulerExp(Indec::Z(p_, k, 0), Indec::Z(p_, l, i)));
}

QScalar Brackets::muPrime(long i, int k) {
    const long d = p_.topShift(k);
    return mu(i - d + 1, p_.levelAdd(k, 1), k);
}

QScalar Brackets::nuPrime(long i, int k) {
    const long d = p_.topShift(k);
    return nu(i + d - 1, k, p_.levelAdd(k, 1));
}

QScalar lambdaClosedForm(const Params& p, long i) {
    long e = 0;
    if (i >= 0 && i % p.m == 0) {
        long t = (i / p.m) * p.r;
        e += (t % 2 == 0) ? 1 : -1;
    }
    if (i + 1 >= p.m && (i + 1) % p.m == 0) {
        long t = ((i + 1) / p.m) * p.r - 1;
        e += (t % 2 == 0) ? 1 : -1;
    }
    return QScalar::qpow(e);
}

}  // namespace qhall
