#include "qhall/category.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhall {

Params::Params(int r_, int m_) : r(r_), m(m_) {
    if (r < 1 || m < 1) throw std::invalid_argument("Params: need r >= 1, m >= 1");
}

int Params::levelAdd(int k, long d) const {
    long v = (k - 1 + d) % r;
    if (v < 0) v += r;
    return static_cast<int>(v) + 1;
}

Indec Indec::X(const Params& p, int k, long i, long j) {
    if (k < 1 || k > p.r) throw std::invalid_argument("Indec::X: level out of range");
    if (j < i) throw std::invalid_argument("Indec::X: empty interval");
    return Indec{Kind::X, k, i, j};
}

Indec Indec::Z(const Params& p, int k, long i) {
    if (k < 1 || k > p.r) throw std::invalid_argument("Indec::Z: level out of range");
    return Indec{Kind::Z, k, i, i};
}

Indec Indec::suspend(const Params& p, long n) const {
    Indec cur = *this;
    for (; n > 0; --n) {
        long d = p.topShift(cur.level);
        cur.level = p.levelAdd(cur.level, 1);
        cur.lo += d;
        cur.hi += d;
    }
    for (; n < 0; ++n) {
        long d = p.botShift(cur.level);
        cur.level = p.levelAdd(cur.level, -1);
        cur.lo -= d;
        cur.hi -= d;
    }
    return cur;
}

Indec Indec::shifted(long d) const {
    Indec r = *this;
    r.lo += d;
    r.hi += d;
    return r;
}

std::tuple<int, int, long, long> Indec::key() const {
    if (isZ()) {
        long a = lo < 0 ? -lo : lo;
        return {0, -level, a, -lo};
    }
    return {1, -level, -lo, -hi};
}

bool indecLess(const Indec& a, const Indec& b) { return a.key() < b.key(); }

std::string Indec::str() const {
    std::ostringstream os;
    if (isZ())
        os << "Z(" << level << "," << lo << ")";
    else
        os << "X(" << level << "," << lo << "," << hi << ")";
    return os.str();
}

Obj::Obj(std::vector<Indec> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), indecLess);
}

long Obj::ql() const {
    long s = 0;
    for (const auto& p : parts_) s += p.ql();
    return s;
}

Obj Obj::oplus(const Obj& o) const {
    std::vector<Indec> v;
    v.reserve(parts_.size() + o.parts_.size());
    std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(),
               std::back_inserter(v), indecLess);
    Obj r;
    r.parts_ = std::move(v);
    return r;
}

Obj Obj::oplus(const Indec& p) const { return oplus(Obj(p)); }

Obj Obj::suspend(const Params& p, long n) const {
    std::vector<Indec> v;
    v.reserve(parts_.size());
    for (const auto& x : parts_) v.push_back(x.suspend(p, n));
    return Obj(std::move(v));
}

Obj Obj::shifted(long d) const {
    std::vector<Indec> v;
    v.reserve(parts_.size());
    for (const auto& x : parts_) v.push_back(x.shifted(d));
    return Obj(std::move(v));
}

Obj Obj::minus(const Indec& p) const {
    Obj r = *this;
    auto it = std::find(r.parts_.begin(), r.parts_.end(), p);
    if (it == r.parts_.end()) throw std::logic_error("Obj::minus: summand not present");
    r.parts_.erase(it);
    return r;
}

bool Obj::operator<(const Obj& o) const {
    return std::lexicographical_compare(parts_.begin(), parts_.end(),
                                        o.parts_.begin(), o.parts_.end(),
                                        indecLess);
}

std::string Obj::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << " + ";
        os << parts_[i].str();
    }
    return os.str();
}

size_t Obj::hash() const {
    size_t h = parts_.size();
    for (const auto& p : parts_) {
        auto [a, b, c, d] = p.key();
        size_t v = static_cast<size_t>(a) * 1000003u + static_cast<size_t>(b);
        v = v * 1000003u + static_cast<size_t>(c);
        v = v * 1000003u + static_cast<size_t>(d);
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Obj xObj(const Params& p, int k, long i, long j) {
    if (j == i - 1) {
        if (k < 1 || k > p.r) throw std::invalid_argument("xObj: level out of range");
        return Obj();
    }
    return Obj(Indec::X(p, k, i, j));
}

Obj zObj(const Params& p, int k, long i) { return Obj(Indec::Z(p, k, i)); }

bool arrowExists(const Params& p, const Indec& A, const Indec& B, int deg) {
    const int k = A.level;
    const long D = p.topShift(k);
    if (A.isX()) {
        const long i = A.lo, j = A.hi;
        switch (deg) {
            case 0:  // interval inclusion-projection at the same level
                return B.isX() && B.level == k && i <= B.lo && B.lo <= j && B.hi >= j;
            case 1:
                return B.isZ() && B.level == k && i <= B.lo && B.lo <= j;
            case 2:
                return B.isX() && B.level == p.levelAdd(k, 1) && B.lo <= i + D - 1 &&
                       i + D - 1 <= B.hi && B.hi <= j + D - 1;
            default:
                return false;
        }
    }
    const long i = A.lo;
    switch (deg) {
        case 0:
            return B.isZ() && B.level == k && B.lo >= i;
        case 1:
            return B.isX() && B.level == p.levelAdd(k, 1) && B.lo <= i + D - 1 &&
                   i + D - 1 <= B.hi;
        default:
            return false;
    }
}

HomDims homDims(const Params& p, const Indec& A, const Indec& B) {
    HomDims h;
    h.d0 = arrowExists(p, A, B, 0) ? 1 : 0;
    h.d1 = arrowExists(p, A, B, 1) ? 1 : 0;
    h.d2 = arrowExists(p, A, B, 2) ? 1 : 0;
    return h;
}

long homDim(const Params& p, const Obj& A, const Obj& B) {
    long s = 0;
    for (const auto& a : A.parts())
        for (const auto& b : B.parts()) s += homDims(p, a, b).total();
    return s;
}

std::optional<Arrow> composeArrows(const Params& p, const Arrow& a, const Arrow& b) {
    if (a.tgt != b.src) throw std::logic_error("composeArrows: endpoints mismatch");
    int d = a.deg + b.deg;
    if (arrowExists(p, a.src, b.tgt, d)) return Arrow{a.src, b.tgt, d};
    return std::nullopt;
}

long endDim(const Params& p, const Obj& M) { return homDim(p, M, M); }

QScalar glOrder(long n) {
    QScalar r(1);
    Poly qn = Poly::q(static_cast<int>(n));
    for (long t = 0; t < n; ++t) r *= QScalar(qn - Poly::q(static_cast<int>(t)));
    return r;
}

QScalar homCard(const Params& p, const Obj& A, const Obj& B) {
    return QScalar::qpow(homDim(p, A, B));
}

QScalar autCard(const Params& p, const Obj& M) {
    // group equal summands
    long dimEnd = endDim(p, M);
    long sumSq = 0;
    QScalar gl(1);
    const auto& parts = M.parts();
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        long mult = static_cast<long>(j - i);
        sumSq += mult * mult;
        gl *= glOrder(mult);
        i = j;
    }
    return QScalar::qpow(dimEnd - sumSq) * gl;
}

void DimVec::addZ(int k, long c) {
    if (c == 0) return;
    long& v = dz[k];
    v += c;
    if (v == 0) dz.erase(k);
}

void DimVec::addX(int k, long pos, long c) {
    if (c == 0) return;
    long& v = dx[{k, pos}];
    v += c;
    if (v == 0) dx.erase({k, pos});
}

DimVec& DimVec::operator+=(const DimVec& o) {
    for (const auto& [k, c] : o.dz) addZ(k, c);
    for (const auto& [kp, c] : o.dx) addX(kp.first, kp.second, c);
    return *this;
}

bool DimVec::operator<(const DimVec& o) const {
    if (dz != o.dz) return dz < o.dz;
    return dx < o.dx;
}

long DimVec::zTotal() const {
    long s = 0;
    for (const auto& [k, c] : dz) s += c;
    return s;
}

long DimVec::xTotal() const {
    long s = 0;
    for (const auto& [kp, c] : dx) s += c;
    return s;
}

std::string DimVec::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, c] : dz) {
        if (!first) os << ", ";
        os << "z" << k << ":" << c;
        first = false;
    }
    for (const auto& [kp, c] : dx) {
        if (!first) os << ", ";
        os << "x" << kp.first << "@" << kp.second << ":" << c;
        first = false;
    }
    os << "}";
    return os.str();
}

namespace {
template <class Map>
bool mapLeq(const Map& a, const Map& b) {
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        if (it == b.end() || v > it->second) return false;
    }
    return true;
}
}  // namespace

bool dzLeq(const DimVec& a, const DimVec& b) { return mapLeq(a.dz, b.dz); }
bool dxLeq(const DimVec& a, const DimVec& b) { return mapLeq(a.dx, b.dx); }

bool pairLeq(const DimVec& a, const DimVec& b) {
    if (!dzLeq(a, b)) return false;
    if (a.dz == b.dz) return dxLeq(a, b);
    return true;  // dz strictly smaller
}

DimVec bdim(const Params& p, const Indec& M) {
    DimVec d;
    if (M.isX()) {
        for (long t = M.lo; t <= M.hi; ++t) d.addX(M.level, t);
        return d;
    }
    d.addZ(M.level);
    const long s = M.lo;
    if (s < 0) {
        for (long t = s; t <= -1; ++t) d.addX(M.level, t);
    } else if (s > 0) {
        const long D = p.topShift(M.level);
        const int k1 = p.levelAdd(M.level, 1);
        for (long t = D; t <= s + D - 1; ++t) d.addX(k1, t);
    }
    return d;
}

DimVec bdim(const Params& p, const Obj& M) {
    DimVec d;
    for (const auto& part : M.parts()) d += bdim(p, part);
    return d;
}

}  // namespace qhall
