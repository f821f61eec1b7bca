#pragma once

#include "qhall/brackets.hpp"
#include "qhall/cones.hpp"
#include "qhall/freealg.hpp"

#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace qhall {

// Finitely supported Obj -> QScalar; the zero object (empty sum) is the unit.
class HallElement {
public:
    HallElement() = default;
    static HallElement unit() { return basis(Obj()); }
    static HallElement basis(const Obj& M, QScalar c = QScalar(1));

    const std::map<Obj, QScalar>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    void add(const Obj& M, const QScalar& c);
    QScalar coeff(const Obj& M) const;

    HallElement operator+(const HallElement& o) const;
    HallElement operator-(const HallElement& o) const;
    HallElement scaled(const QScalar& c) const;
    HallElement& operator+=(const HallElement& o);
    HallElement& operator-=(const HallElement& o);
    bool operator==(const HallElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const HallElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<Obj, QScalar> terms_;
};

// Exact multiplication engine for the Hall algebra of C(r,m).  Holds all memo
// tables; not safe for concurrent use — use one Engine per thread.
class Engine {
public:
    explicit Engine(const Params& p) : p_(p), br_(p) {}
    const Params& params() const { return p_; }
    Brackets& brackets() { return br_; }

    // Tally of cone(f) over f ∈ Hom(G,T), each support pattern weighted by
    // (q-1)^{#nonzero components}.  Σ over cones equals q^{dim Hom(G,T)}.
    // G must be a width-zero X or any Z.
    std::vector<std::pair<Obj, QScalar>> countConesFrom(const Indec& G, const Obj& T);

    HallElement mulRightGenerator(const HallElement& e, const Generator& g);
    HallElement mulWord(const Word& w);              // unit · w, memoized
    HallElement evalFree(const FreeElement& e);
    HallElement mul(const HallElement& a, const HallElement& b);

    // F^L_{M,N}: direct route when M is a single width-zero X or Z summand,
    // rotation route when N is; throws otherwise.
    QScalar hallNumber(const Obj& M, const Obj& N, const Obj& L);

    FreeElement expandInGenerators(const Obj& M);    // Φ_M

private:
    std::vector<std::pair<Obj, QScalar>> coneTallyX(const Indec& G, const Obj& T);
    std::vector<std::pair<Obj, QScalar>> coneTallyZ(const Indec& G, const Obj& T);
    FreeElement expandIndec(const Indec& M);

    Params p_;
    Brackets br_;
    std::map<std::tuple<int, int, long, Obj>, std::vector<std::pair<Obj, QScalar>>> coneMemo_;
    std::map<Word, HallElement> wordMemo_;
    std::map<Obj, FreeElement> phiMemo_;
    std::set<Obj> phiInProgress_;
};

}  // namespace qhall
