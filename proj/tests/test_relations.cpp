#include "doctest.h"

#include "qhall/relations.hpp"

#include <set>

using namespace qhall;

namespace {
const std::vector<std::pair<int, int>> kPairs = {{1, 1}, {1, 2}, {2, 1},
                                                 {2, 2}, {2, 3}, {3, 2}};
}

TEST_CASE("interval straightening identity") {
    // (1/l1) X_i X_{i+1} - (1/l-1) X_{i+1} X_i = X_{i,i+1} (+ q/(q-1) at (1,1))
    for (auto [r, m] : kPairs) {
        Params p(r, m);
        Engine eng(p);
        Brackets& br = eng.brackets();
        for (int k = 1; k <= r; ++k)
            for (long i : {-2L, 0L, 1L}) {
                HallElement a = eng.mul(HallElement::basis(xObj(p, k, i, i)),
                                        HallElement::basis(xObj(p, k, i + 1, i + 1)));
                HallElement b = eng.mul(HallElement::basis(xObj(p, k, i + 1, i + 1)),
                                        HallElement::basis(xObj(p, k, i, i)));
                HallElement lhs = a.scaled(QScalar(1) / br.lambda(1, k, k)) -
                                  b.scaled(QScalar(1) / br.lambda(-1, k, k));
                HallElement want = HallElement::basis(xObj(p, k, i, i + 1));
                if (r == 1 && m == 1)
                    want += HallElement::basis(Obj(), QScalar::qpow(1) / QScalar::qm1());
                CAPTURE(r);
                CAPTURE(m);
                CAPTURE(k);
                CAPTURE(i);
                CHECK(lhs == want);
            }
    }
}

TEST_CASE("all relation instances vanish in the Hall algebra") {
    for (auto [r, m] : kPairs) {
        Params p(r, m);
        Engine eng(p);
        auto insts = relationInstances(eng, -2, 2);
        CHECK(insts.size() > 20);
        for (const auto& inst : insts) {
            CAPTURE(r);
            CAPTURE(m);
            CAPTURE(inst.family);
            CAPTURE(inst.label);
            CHECK(eng.evalFree(inst.element).isZero());
        }
    }
}

TEST_CASE("family inventory matches the parameter shape") {
    for (auto [r, m] : kPairs) {
        Params p(r, m);
        Engine eng(p);
        std::set<std::string> fams;
        for (const auto& inst : relationInstances(eng, -2, 2)) fams.insert(inst.family);
        CAPTURE(r);
        CAPTURE(m);
        for (const char* f : {"1", "2", "3", "5", "6", "7", "8", "9", "10", "11", "12"})
            CHECK(fams.count(f) == 1);
        CHECK(fams.count("1'") == size_t(!(r == 1 && m == 1)));
        CHECK(fams.count("4'") == size_t(r >= 2));
        CHECK(fams.count("4") == 0);  // needs r >= 4
    }
}
