#include "qhall/graded.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

namespace qhall {

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
            const bool isZ = cand[u].isZ();
            if (isZ && zleft == 0) continue;
            DimVec nd = dim;
            nd += bdim(p, cand[u]);
            if (!boxOk(nd)) continue;
            DimVec save = dim;
            dim = nd;
            parts.push_back(cand[u]);
            go(u, zleft - (isZ ? 1 : 0));
            parts.pop_back();
            dim = save;
        }
    };
    go(0, d);
    return out;
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1) r = mulmod(r, a, p);
    return r;
}

uint64_t intMod(const Int& v, uint64_t p) {
    Int r = v % Int(p);
    if (r < 0) r += Int(p);
    return r.convert_to<uint64_t>();
}

// rank over F_p; returns SIZE_MAX when p divides some denominator
size_t modularRank(const std::vector<std::vector<Rat>>& rows, size_t ncols, uint64_t p) {
    std::vector<std::vector<uint64_t>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<uint64_t> mr(ncols, 0);
        for (size_t j = 0; j < row.size(); ++j) {
            uint64_t den = intMod(denominator(row[j]), p);
            if (den == 0) return SIZE_MAX;
            mr[j] = mulmod(intMod(numerator(row[j]), p), powmod(den, p - 2, p), p);
        }
        m.push_back(std::move(mr));
    }
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < m.size(); ++col) {
        size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        uint64_t inv = powmod(m[rank][col], p - 2, p);
        for (size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            uint64_t f = mulmod(m[i][col], inv, p);
            for (size_t j = col; j < ncols; ++j)
                m[i][j] = (m[i][j] + p - mulmod(f, m[rank][j], p)) % p;
        }
        ++rank;
    }
    return rank;
}

size_t exactRank(std::vector<std::vector<Rat>> m, size_t ncols) {
    for (auto& row : m) row.resize(ncols, Rat(0));
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < m.size(); ++col) {
        size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        Rat lead = m[rank][col];
        for (size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / lead;
            for (size_t j = col; j < ncols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

size_t rationalRank(std::vector<std::vector<Rat>> rows) {
    size_t ncols = 0;
    for (const auto& r : rows) ncols = std::max(ncols, r.size());
    if (rows.empty() || ncols == 0) return 0;
    const size_t most = std::min(rows.size(), ncols);
    // rank mod p never exceeds the rational rank, so hitting the dimension
    // bound certifies the answer; otherwise fall back to exact elimination
    for (uint64_t p : {2305843009213693951ULL, 9223372036854775783ULL}) {
        size_t r = modularRank(rows, ncols, p);
        if (r == most) return r;
    }
    return exactRank(std::move(rows), ncols);
}

GradedReport gradedCheck(Engine& eng, int d, long lo, long hi, long cap) {
    const Params& p = eng.params();
    GradedReport rep;
    rep.d = d;
    rep.lo = lo;
    rep.hi = hi;
    rep.cap = cap;
    std::vector<Word> words = normalWords(p, d, lo, hi, cap);
    std::vector<Obj> objs = objectsInSlice(p, d, lo, hi, cap);
    rep.normalCount = words.size();
    rep.objectCount = objs.size();
    rep.equal = rep.normalCount == rep.objectCount;

    std::map<Obj, size_t> rowIx;
    for (size_t i = 0; i < objs.size(); ++i) rowIx[objs[i]] = i;
    size_t nrows = objs.size();
    std::vector<std::map<size_t, QScalar>> cols(words.size());
    for (size_t c = 0; c < words.size(); ++c) {
        HallElement v = eng.mulWord(words[c]);
        for (const auto& [M, coef] : v.terms()) {
            if (bdim(p, M).zTotal() != d) continue;  // lower filtration layer
            auto [it, fresh] = rowIx.emplace(M, nrows);
            if (fresh) ++nrows;  // object escaped the box: keep it as an extra row
            cols[c][it->second] = coef;
        }
    }

    for (int q0 : {2, 3}) {
        std::vector<std::vector<Rat>> m(nrows, std::vector<Rat>(words.size(), Rat(0)));
        for (size_t c = 0; c < cols.size(); ++c)
            for (const auto& [r, coef] : cols[c]) m[r][c] = coef.eval(Rat(q0));
        size_t rk = rationalRank(std::move(m));
        (q0 == 2 ? rep.rankQ2 : rep.rankQ3) = rk;
    }
    return rep;
}

}  // namespace qhall
