#pragma once

#include "qhall/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace qhall {

struct Params {
    int r = 1;
    int m = 1;
    Params() = default;
    Params(int r_, int m_);

    int levelAdd(int k, long d) const;            // representative in [1,r]
    long topShift(int k) const { return k == r ? m : 0; }   // index shift of Σ leaving level k
    long botShift(int k) const { return k == 1 ? m : 0; }   // index shift of Σ⁻¹ leaving level k
};

struct Indec {
    enum class Kind : std::uint8_t { Z = 0, X = 1 };
    Kind kind{Kind::X};
    int level{1};
    long lo{0}, hi{0};   // X: interval [lo,hi]; Z: lo == hi == index

    static Indec X(const Params& p, int k, long i, long j);
    static Indec Z(const Params& p, int k, long i);

    bool isX() const { return kind == Kind::X; }
    bool isZ() const { return kind == Kind::Z; }
    long topIdx() const { return isX() ? hi : lo; }
    long ql() const { return isX() ? hi - lo + 1 : 1 + (lo < 0 ? -lo : lo); }

    Indec suspend(const Params& p, long n) const;
    Indec shifted(long d) const;                 // all indices += d, same level

    // canonical order key; Z-parts sort before X-parts
    std::tuple<int, int, long, long> key() const;
    bool operator==(const Indec& o) const { return key() == o.key(); }
    bool operator!=(const Indec& o) const { return !(*this == o); }
    std::string str() const;
};

bool indecLess(const Indec& a, const Indec& b);

// Finite direct sum of indecomposables, kept canonically sorted.
// The empty sum is the zero object.
class Obj {
public:
    Obj() = default;
    explicit Obj(const Indec& one) : parts_{one} {}
    explicit Obj(std::vector<Indec> parts);

    const std::vector<Indec>& parts() const { return parts_; }
    bool isZero() const { return parts_.empty(); }
    long ql() const;

    Obj oplus(const Obj& o) const;
    Obj oplus(const Indec& p) const;
    Obj suspend(const Params& p, long n) const;
    Obj shifted(long d) const;
    Obj minus(const Indec& p) const;             // remove one copy; throws if absent

    bool operator==(const Obj& o) const { return parts_ == o.parts_; }
    bool operator!=(const Obj& o) const { return !(*this == o); }
    bool operator<(const Obj& o) const;          // container order for map keys
    std::string str() const;
    size_t hash() const;

private:
    std::vector<Indec> parts_;
};

// X(k, i, i-1) denotes the zero object; j < i-1 is an error.
Obj xObj(const Params& p, int k, long i, long j);
Obj zObj(const Params& p, int k, long i);

// Basis arrow of a given degree between indecomposables (each graded hom
// component is 0- or 1-dimensional, with a preferred generator).
bool arrowExists(const Params& p, const Indec& A, const Indec& B, int deg);

struct HomDims {
    int d0 = 0, d1 = 0, d2 = 0;
    int total() const { return d0 + d1 + d2; }
    int at(int deg) const { return deg == 0 ? d0 : deg == 1 ? d1 : deg == 2 ? d2 : 0; }
    bool operator==(const HomDims& o) const { return d0 == o.d0 && d1 == o.d1 && d2 == o.d2; }
};
HomDims homDims(const Params& p, const Indec& A, const Indec& B);
long homDim(const Params& p, const Obj& A, const Obj& B);

struct Arrow {
    Indec src, tgt;
    int deg;
};
// Composite of basis arrows: the basis arrow with matching endpoints and
// degree d1+d2 when it exists, zero otherwise.
std::optional<Arrow> composeArrows(const Params& p, const Arrow& a, const Arrow& b);

long endDim(const Params& p, const Obj& M);
QScalar glOrder(long n);
QScalar homCard(const Params& p, const Obj& A, const Obj& B);
QScalar autCard(const Params& p, const Obj& M);

// Dimension vector: z-part counts per level, x-part counts per (level, position).
struct DimVec {
    std::map<int, long> dz;
    std::map<std::pair<int, long>, long> dx;

    void addZ(int k, long c = 1);
    void addX(int k, long pos, long c = 1);
    DimVec& operator+=(const DimVec& o);
    bool operator==(const DimVec& o) const { return dz == o.dz && dx == o.dx; }
    bool operator<(const DimVec& o) const;       // container order
    long zTotal() const;
    long xTotal() const;
    std::string str() const;
};

// componentwise order on each half
bool dzLeq(const DimVec& a, const DimVec& b);
bool dxLeq(const DimVec& a, const DimVec& b);
// pair order: a ≤ b iff dz(a) < dz(b) strictly, or dz equal and dx(a) ≤ dx(b)
bool pairLeq(const DimVec& a, const DimVec& b);

DimVec bdim(const Params& p, const Indec& M);
DimVec bdim(const Params& p, const Obj& M);

}  // namespace qhall
