#pragma once

// Closed-form expectations for products of two indecomposable basis elements.
// Every case is transcribed from the multiplication tables for C(r,m); the
// engine must reproduce these exactly.  Returns nullopt when the pair (A,B)
// falls outside the tabulated shapes.

#include "qhall/hall.hpp"

#include <optional>

namespace qhall {

inline std::optional<HallElement> closedFormProduct(const Params& p, Brackets& br,
                                                    const Indec& A, const Indec& B) {
    const QScalar one(1);
    const QScalar q = QScalar::qpow(1);
    const QScalar qm1 = QScalar::qm1();
    const Obj split = Obj(A).oplus(B);
    auto mono = [](const Obj& M, QScalar c) { return HallElement::basis(M, c); };

    const bool oneone = (p.r == 1 && p.m == 1);

    if (A.isX() && B.isX()) {
        const int k = A.level, l = B.level;
        if (A.hi == A.lo && B.hi == B.lo) {
            const long i = A.lo, j = B.lo;
            if (l == k && j == i) return std::nullopt;  // X_i X_i: not tabulated
            const QScalar lam = br.lambda(j - i, k, l);
            if (oneone && j == i + 1) {
                // adjacency and suspension-adjacency coincide
                return mono(split, lam) + mono(xObj(p, k, i, i + 1), lam) +
                       mono(Obj(), q / qm1 * lam);
            }
            if (l == k && j == i + 1)
                return mono(split, lam) + mono(xObj(p, k, i, i + 1), lam);
            if (l == p.levelAdd(k, 1) && j == i + p.topShift(k))
                return mono(split, lam) + mono(Obj(), q / qm1 * lam);
            return mono(split, lam);
        }
        // the four tabulated interval shapes (width one, same level)
        if (l != k) return std::nullopt;
        const QScalar l0 = br.lambda(0, k, k);
        if (A.hi == A.lo + 1 && B.hi == B.lo) {
            if (B.lo == A.lo)  // X_{i,i+1} X_i
                return mono(split, l0 * br.lambda(-1, k, k) / q);
            if (B.lo == A.hi) {  // X_{i,i+1} X_{i+1}
                HallElement e = mono(split, l0 * br.lambda(1, k, k));
                if (oneone) e += mono(Obj(B), one / q);
                return e;
            }
        }
        if (A.hi == A.lo && B.hi == B.lo + 1) {
            if (A.lo == B.hi)  // X_{i+1} X_{i,i+1}
                return mono(split, l0 * br.lambda(-1, k, k) / q);
            if (A.lo == B.lo) {  // X_i X_{i,i+1}
                HallElement e = mono(split, l0 * br.lambda(1, k, k));
                if (oneone) e += mono(Obj(A), one / q);
                return e;
            }
        }
        return std::nullopt;
    }

    if (A.isZ() && B.isZ()) {
        const int k = A.level, l = B.level;
        const long i = A.lo, j = B.lo;
        if (l == k && j == i) {
            HallElement e = mono(split, q + one);
            // at r = 1 the level wraps, Hom(Z_i, Sigma Z_i) is one-dimensional
            // and the nonzero maps contribute an interval
            if (p.r == 1) e += mono(xObj(p, k, i, i + p.m - 1), one);
            return e;
        }
        if (l == p.levelAdd(k, 1) && j <= i + p.topShift(k)) {
            HallElement e = mono(split, br.kappa(j - i, k, l));
            if (j < i + p.topShift(k))
                e += mono(xObj(p, l, j, i + p.topShift(k) - 1), one);
            else
                e += mono(Obj(), one / qm1);  // degenerate tail completes to F^0
            return e;
        }
        return mono(split, br.kappa(j - i, k, l));
    }

    if (A.isX() && B.isZ()) {
        if (A.hi != A.lo) return std::nullopt;
        const int l = A.level, k = B.level;
        const long j = A.lo, i = B.lo;
        const QScalar m = br.mu(i - j, l, k);
        if (l == k && j == i - 1)
            return mono(split, m) + mono(zObj(p, k, i - 1), m);
        return mono(split, m);
    }

    // A Z, B X
    if (B.hi != B.lo) return std::nullopt;
    const int k = A.level, l = B.level;
    const long i = A.lo, j = B.lo;
    if (l == p.levelAdd(k, 1) && j == i + p.topShift(k)) {
        const QScalar np = br.nuPrime(1, k);
        return mono(split, np) + mono(zObj(p, k, i + 1), np);
    }
    return mono(split, br.nu(j - i, k, l));
}

}  // namespace qhall
