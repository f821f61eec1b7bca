#include "doctest.h"

#include "qhall/normalform.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

using namespace qhall;

namespace {
const std::vector<std::pair<int, int>> kPairs = {{1, 1}, {1, 2}, {2, 1},
                                                 {2, 2}, {2, 3}, {3, 2}};

Word gx(int k, long i) { return {Generator::x(k, i)}; }

Word cat(std::initializer_list<Word> ws) {
    Word out;
    for (const Word& w : ws) out.insert(out.end(), w.begin(), w.end());
    return out;
}

// all objects with exactly d z-summands (counted with multiplicity), every
// x-position of bdim inside [lo,hi] with multiplicity at most cap
std::vector<Obj> objectsInSlice(const Params& p, int d, long lo, long hi, long cap) {
    std::vector<Indec> cand;
    for (int k = 1; k <= p.r; ++k) {
        cand.push_back(Indec::Z(p, k, 0));
        if (hi >= -1)
            for (long i = -1; i >= lo; --i) cand.push_back(Indec::Z(p, k, i));
        const long D = p.topShift(k);
        if (lo <= D)
            for (long i = 1; i + D - 1 <= hi; ++i) cand.push_back(Indec::Z(p, k, i));
        for (long s = lo; s <= hi; ++s)
            for (long t = s; t <= hi; ++t) cand.push_back(Indec::X(p, k, s, t));
    }
    auto boxOk = [&](const DimVec& dv) {
        for (const auto& [key, c] : dv.dx)
            if (key.second < lo || key.second > hi || c > cap) return false;
        return true;
    };
    std::vector<Obj> out;
    std::vector<Indec> parts;
    DimVec dim;
    std::function<void(size_t, int)> go = [&](size_t from, int zleft) {
        if (zleft == 0) out.push_back(Obj(parts));
        for (size_t u = from; u < cand.size(); ++u) {
            const Indec& c = cand[u];
            const bool isZ = c.isZ();
            if (isZ && zleft == 0) continue;
            DimVec nd = dim;
            nd += bdim(p, c);
            if (!boxOk(nd)) continue;
            DimVec save = dim;
            dim = nd;
            parts.push_back(c);
            go(u, zleft - (isZ ? 1 : 0));
            parts.pop_back();
            dim = save;
        }
    };
    go(0, d);
    return out;
}
}  // namespace

TEST_CASE("word parsing recovers composite letters") {
    for (auto [r, m] : kPairs) {
        Params p(r, m);
        CAPTURE(r);
        CAPTURE(m);
        for (int k = 1; k <= r; ++k)
            for (long i = -3; i <= 3; ++i) {
                Word w = zLetter(p, k, i);
                auto ls = parseLetters(p, w);
                REQUIRE(ls.has_value());
                REQUIRE(ls->size() == 1);
                CHECK((*ls)[0].isZ);
                CHECK((*ls)[0].level == k);
                CHECK((*ls)[0].i == i);
            }
        // interval letters split greedily into maximal ascending runs
        auto ls = parseLetters(p, cat({gx(1, 0), gx(1, 1), gx(1, 0)}));
        REQUIRE(ls.has_value());
        REQUIRE(ls->size() == 2);
        CHECK((*ls)[0].s == 0);
        CHECK((*ls)[0].t == 1);
        CHECK((*ls)[1].s == 0);
        CHECK((*ls)[1].t == 0);
        // an x-block before z that is no letter tail (index 5 is neither -1
        // nor any topShift in the tested range)
        auto bad = parseLetters(p, cat({gx(1, 5), {Generator::z(1)}}));
        CHECK(!bad.has_value());
    }
}

TEST_CASE("normal word recognition: pinned cases") {
    Params p11(1, 1);
    CHECK(isNormal(p11, {}));
    CHECK(isNormal(p11, gx(1, 0)));
    CHECK(isNormal(p11, cat({gx(1, 0), gx(1, 1)})));   // one letter x_{0,1}
    CHECK(isNormal(p11, cat({gx(1, 1), gx(1, 0)})));   // descending singles
    CHECK(isNormal(p11, cat({gx(1, 0), gx(1, 0)})));
    CHECK(!isNormal(p11, cat({gx(1, 0), gx(1, 2)})));  // s must not increase
    Word z1 = {Generator::z(1)};
    CHECK(isNormal(p11, cat({z1, z1})));               // z_0 z_0 is a valid repeat
    CHECK(isNormal(p11, cat({z1, gx(1, 2)})));
    CHECK(!isNormal(p11, cat({gx(1, 2), z1})));        // x before z
    // z_{-1} z_1 ordered by |i|, ties by i descending: z_1 z_{-1} is normal
    Word zm1 = zLetter(p11, 1, -1), zp1 = zLetter(p11, 1, 1);
    CHECK(isNormal(p11, cat({z1, zm1})));
    CHECK(isNormal(p11, cat({zp1, zm1})));
    CHECK(!isNormal(p11, cat({zm1, zp1})));
    CHECK(!isNormal(p11, cat({zm1, z1})));

    Params p32(3, 2);
    Word za = {Generator::z(3)}, zb = {Generator::z(1)};
    CHECK(isNormal(p32, cat({za, zb})));               // levels descending
    CHECK(!isNormal(p32, cat({zb, za})));
    CHECK(isNormal(p32, cat({gx(2, 1), gx(1, 1)})));
    CHECK(!isNormal(p32, cat({gx(1, 1), gx(2, 1)})));
    // z_1^{(3)} carries an x-tail at level 1 shifted by m
    Word z13 = zLetter(p32, 3, 1);
    REQUIRE(z13.size() == 2);
    CHECK(z13[0] == Generator::x(1, 2));
    CHECK(isNormal(p32, z13));
}

TEST_CASE("normal word enumeration matches the object count slice by slice") {
    // the letter <-> indecomposable bijection makes the counts agree
    struct Case {
        int r, m, d;
        long lo, hi, cap;
    };
    const std::vector<Case> cases = {
        {1, 1, 0, 0, 1, 1},  {1, 1, 1, -1, 1, 1}, {1, 1, 2, -1, 1, 1},
        {1, 2, 1, -1, 1, 1}, {2, 1, 0, -1, 1, 2}, {2, 1, 1, -1, 1, 1},
        {2, 3, 1, 0, 1, 1},  {3, 2, 1, 0, 1, 1},  {2, 2, 2, 0, 1, 1},
    };
    for (const Case& c : cases) {
        Params p(c.r, c.m);
        auto words = normalWords(p, c.d, c.lo, c.hi, c.cap);
        auto objs = objectsInSlice(p, c.d, c.lo, c.hi, c.cap);
        CAPTURE(c.r);
        CAPTURE(c.m);
        CAPTURE(c.d);
        CAPTURE(c.lo);
        CAPTURE(c.hi);
        CAPTURE(c.cap);
        for (const Word& w : words) CHECK(isNormal(p, w));
        std::set<Word> uniq(words.begin(), words.end());
        CHECK(uniq.size() == words.size());
        CHECK(words.size() == objs.size());
    }

    // pinned slice: no z, positions {0,1} once each, five words
    Params p11(1, 1);
    auto words = normalWords(p11, 0, 0, 1, 1);
    std::set<Word> got(words.begin(), words.end());
    std::set<Word> want = {{}, gx(1, 0), gx(1, 1), cat({gx(1, 0), gx(1, 1)}),
                           cat({gx(1, 1), gx(1, 0)})};
    CHECK(got == want);
}

TEST_CASE("normal form: pinned rewrites") {
    Params p(2, 1);
    Engine eng(p);
    Brackets& br = eng.brackets();
    NormalForm nf(eng);

    // already normal words pass through unchanged
    FreeElement w = FreeElement::word(cat({gx(1, 1), gx(1, 0)}));
    CHECK(nf.reduce(w) == w);

    // commuting letters across levels picks up the bracket ratio
    FreeElement in = FreeElement::word(cat({gx(1, 0), gx(2, 2)}));
    FreeElement want = FreeElement::word(cat({gx(2, 2), gx(1, 0)}),
                                         br.lambda(2, 1, 2) / br.lambda(-2, 2, 1));
    CHECK(nf.reduce(in) == want);

    // z-letter absorption: x_{-1} z is the letter z_{-1}, already normal
    Params p11(1, 1);
    Engine e11(p11);
    NormalForm nf11(e11);
    FreeElement zl = FreeElement::word(zLetter(p11, 1, -1));
    CHECK(nf11.reduce(zl) == zl);

    // x_2 z straightens to a multiple of z x_2
    FreeElement xz = FreeElement::word(cat({gx(1, 2), {Generator::z(1)}}));
    FreeElement red = nf11.reduce(xz);
    REQUIRE(red.terms().size() == 1);
    Word zx2 = cat({{Generator::z(1)}, gx(1, 2)});
    CHECK(red.terms().begin()->first == zx2);
    CHECK(e11.evalFree(red) == e11.evalFree(xz));
}

TEST_CASE("normal form: projection and multiplication invariance") {
    std::mt19937 rng(20240818);
    for (auto [r, m] : kPairs) {
        Params p(r, m);
        Engine eng(p);
        NormalForm nf(eng);
        std::vector<Generator> pool;
        for (int k = 1; k <= r; ++k) {
            pool.push_back(Generator::z(k));
            for (long i = -2; i <= 2; ++i) pool.push_back(Generator::x(k, i));
        }
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        std::uniform_int_distribution<int> len(0, 4);
        for (int trial = 0; trial < 10; ++trial) {
            Word w;
            int n = len(rng);
            for (int u = 0; u < n; ++u) w.push_back(pool[pick(rng)]);
            CAPTURE(r);
            CAPTURE(m);
            CAPTURE(wordStr(w));
            FreeElement in = FreeElement::word(w);
            FreeElement red = nf.reduce(in);
            for (const auto& [u, c] : red.terms()) CHECK(isNormal(p, u));
            CHECK(eng.evalFree(red) == eng.evalFree(in));
            CHECK(nf.reduce(red) == red);
        }
    }
}
