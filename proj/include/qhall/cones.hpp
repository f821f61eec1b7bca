#pragma once

#include "qhall/category.hpp"

#include <array>
#include <optional>
#include <vector>

namespace qhall {

// f ∈ Hom(G,T) up to unit scaling of homogeneous components: per summand slot
// of T and per degree, a flag "coefficient nonzero".  Only the flag pattern
// matters for the class [f]; counting weights a pattern by (q-1)^{#flags}.
struct SupportPattern {
    std::vector<std::array<bool, 3>> flags;  // indexed like T.parts(), by degree

    explicit SupportPattern(size_t slots) : flags(slots, {false, false, false}) {}
    int count() const;
};

// Canonical class of a map out of a generator (width-zero X or Z), together
// with the untouched summands of the target.
struct MapClass {
    enum class Kind { Zero, XAlpha, XBeta, XGamma, ZFront };
    Kind kind{Kind::Zero};
    long a{0};                                   // XAlpha: t;  XGamma: s
    std::vector<std::pair<long, long>> front;    // ZFront: (s,t), s strictly decreasing
    std::optional<long> j;                       // ZFront: retained Z-index
    Obj residual;
};

// Which single-arrow components X_i^{(k)} -> slot exist, by degree.
struct XSlotInfo {
    bool alpha = false, beta = false, gamma = false;
};
XSlotInfo xSlotInfo(const Params& p, const Indec& G, const Indec& slot);

// Arrow-class comparison for nonzero single-arrow classes out of G = X_i^{(k)}:
// [c1] <= [c2] iff an arrow tgt(c1) -> tgt(c2) of degree deg(c2)-deg(c1) exists.
// a-parameters as in MapClass.
bool xClassLeq(const Params& p, const Indec& G, MapClass::Kind k1, long a1,
               MapClass::Kind k2, long a2);

MapClass classifyFromX(const Params& p, const Indec& G, const Obj& T,
                       const SupportPattern& pat);
MapClass classifyFromZ(const Params& p, const Indec& G, const Obj& T,
                       const SupportPattern& pat);
MapClass classify(const Params& p, const Indec& G, const Obj& T,
                  const SupportPattern& pat);

// Cone of the triangle G -> T -> cone, for the class of a map G -> T.
// Includes the residual summands.
Obj coneOf(const Params& p, const Indec& G, const MapClass& c);

// target of the consumed slot for an X-source class kind
Indec xClassTarget(const Params& p, const Indec& G, MapClass::Kind k, long a);

}  // namespace qhall
