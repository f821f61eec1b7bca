#include "doctest.h"

#include "qhall/brackets.hpp"

using namespace qhall;

static const Params kPairs[] = {Params(1, 1), Params(1, 2), Params(2, 1),
                                Params(2, 2), Params(2, 3), Params(3, 2)};

TEST_CASE("lambda pinned values at (1,1)") {
    Params p(1, 1);
    Brackets br(p);
    CHECK(br.lambda(1, 1, 1).str() == "1/q^2");
    CHECK(br.lambda(-1, 1, 1).str() == "1");
    CHECK(br.lambda(0, 1, 1).str() == "q^2");
}

TEST_CASE("lambda closed form matches bracket over [-3m, 3m]") {
    for (const Params& p : kPairs) {
        Brackets br(p);
        for (int k = 1; k <= p.r; ++k)
            for (long i = -3 * p.m; i <= 3 * p.m; ++i)
                CHECK(br.lambda(i, k, k) == lambdaClosedForm(p, i));
    }
}

TEST_CASE("curly pinned values at (1,1)") {
    Params p(1, 1);
    Brackets br(p);
    Obj xii1 = xObj(p, 1, 0, 1);
    CHECK(br.curly(xii1, xObj(p, 1, 1, 1)).str() == "1/q");
    CHECK(br.curly(xii1, xii1).str() == "1/q");
    CHECK(br.curly(Obj(), Obj()).str() == "1");
    CHECK(br.square(Obj(), xii1).str() == "1");
}

TEST_CASE("kappa values") {
    for (const Params& p : kPairs) {
        Brackets br(p);
        for (int k = 1; k <= p.r; ++k) {
            CHECK(br.kappa(0, k, k).str() == "q");
            Obj z = zObj(p, k, 0);
            CHECK(br.curly(z, z).str() == "1");
            int k1 = p.levelAdd(k, 1);
            if (k < p.r) CHECK(br.kappa(0, k, k1).str() == "1/q");
            // κ at the suspension offset
            QScalar v = br.kappa(p.topShift(k), k, k1);
            CHECK(v.str() == (p.r == 1 ? "1" : "1/q"));
        }
    }
}

TEST_CASE("shift identities and suspension invariance") {
    for (const Params& p : kPairs) {
        Brackets br(p);
        for (int k = 1; k <= p.r; ++k)
            for (int l = 1; l <= p.r; ++l)
                for (long i = -2; i <= 2; ++i)
                    for (long j = -2; j <= 2; ++j) {
                        Indec xi = Indec::X(p, k, i, i), xj = Indec::X(p, l, j, j);
                        Indec zi = Indec::Z(p, k, i), zj = Indec::Z(p, l, j);
                        CHECK(QScalar::qpow(br.eulerExp(xi, xj)) == br.lambda(j - i, k, l));
                        CHECK(QScalar::qpow(br.eulerExp(xi, zj)) == br.mu(j - i, k, l));
                        CHECK(QScalar::qpow(br.eulerExp(zi, xj)) == br.nu(j - i, k, l));
                        CHECK(QScalar::qpow(br.eulerExp(zi, zj)) == br.kappa(j - i, k, l));
                        // Σ-invariance
                        CHECK(br.eulerExp(xi.suspend(p, 1), zj.suspend(p, 1)) ==
                              br.eulerExp(xi, zj));
                        CHECK(br.eulerExp(zi.suspend(p, 1), zj.suspend(p, 1)) ==
                              br.eulerExp(zi, zj));
                    }
    }
}

TEST_CASE("euler exponent additivity over sums") {
    Params p(2, 3);
    Brackets br(p);
    Obj a = xObj(p, 1, 0, 2).oplus(zObj(p, 2, -1));
    Obj b = xObj(p, 2, 1, 1).oplus(zObj(p, 1, 0));
    long e = br.eulerExp(a, b);
    long s = 0;
    for (const auto& ai : a.parts())
        for (const auto& bi : b.parts()) s += br.eulerExp(ai, bi);
    CHECK(e == s);
    CHECK(br.square(a, b) == QScalar::qpow(e));
}
