#include "qhall/cones.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhall {

int SupportPattern::count() const {
    int c = 0;
    for (const auto& f : flags) c += int(f[0]) + int(f[1]) + int(f[2]);
    return c;
}

XSlotInfo xSlotInfo(const Params& p, const Indec& G, const Indec& slot) {
    XSlotInfo info;
    info.alpha = arrowExists(p, G, slot, 0);
    info.beta = arrowExists(p, G, slot, 1);
    info.gamma = arrowExists(p, G, slot, 2);
    return info;
}

Indec xClassTarget(const Params& p, const Indec& G, MapClass::Kind k, long a) {
    const int kk = G.level;
    const long i = G.lo;
    const long D = p.topShift(kk);
    switch (k) {
        case MapClass::Kind::XAlpha:
            return Indec::X(p, kk, i, a);
        case MapClass::Kind::XBeta:
            return Indec::Z(p, kk, i);
        case MapClass::Kind::XGamma:
            return Indec::X(p, p.levelAdd(kk, 1), a, i + D - 1);
        default:
            throw std::logic_error("xClassTarget: not an X-source class");
    }
}

namespace {
int classDeg(MapClass::Kind k) {
    switch (k) {
        case MapClass::Kind::XAlpha: return 0;
        case MapClass::Kind::XBeta: return 1;
        case MapClass::Kind::XGamma: return 2;
        default: throw std::logic_error("classDeg: not an X-source class");
    }
}
}  // namespace

bool xClassLeq(const Params& p, const Indec& G, MapClass::Kind k1, long a1,
               MapClass::Kind k2, long a2) {
    int d = classDeg(k2) - classDeg(k1);
    if (d < 0) return false;
    return arrowExists(p, xClassTarget(p, G, k1, a1), xClassTarget(p, G, k2, a2), d);
}

MapClass classifyFromX(const Params& p, const Indec& G, const Obj& T,
                       const SupportPattern& pat) {
    if (!G.isX() || G.lo != G.hi) throw std::invalid_argument("classifyFromX: source not X_i");
    if (pat.flags.size() != T.parts().size())
        throw std::invalid_argument("classifyFromX: pattern size mismatch");
    bool have = false;
    MapClass::Kind bk{};
    long ba = 0;
    size_t bslot = 0;
    for (size_t s = 0; s < pat.flags.size(); ++s) {
        const Indec& Y = T.parts()[s];
        XSlotInfo info = xSlotInfo(p, G, Y);
        for (int d = 0; d < 3; ++d) {
            if (!pat.flags[s][d]) continue;
            MapClass::Kind k;
            long a;
            if (d == 0) {
                if (!info.alpha) throw std::invalid_argument("pattern flag without hom");
                k = MapClass::Kind::XAlpha;
                a = Y.hi;
            } else if (d == 1) {
                if (!info.beta) throw std::invalid_argument("pattern flag without hom");
                k = MapClass::Kind::XBeta;
                a = 0;
            } else {
                if (!info.gamma) throw std::invalid_argument("pattern flag without hom");
                k = MapClass::Kind::XGamma;
                a = Y.lo;
            }
            if (!have || xClassLeq(p, G, k, a, bk, ba)) {
                have = true;
                bk = k;
                ba = a;
                bslot = s;
            }
        }
    }
    MapClass c;
    if (!have) {
        c.kind = MapClass::Kind::Zero;
        c.residual = T;
        return c;
    }
    c.kind = bk;
    c.a = ba;
    c.residual = T.minus(T.parts()[bslot]);
    return c;
}

MapClass classifyFromZ(const Params& p, const Indec& G, const Obj& T,
                       const SupportPattern& pat) {
    if (!G.isZ()) throw std::invalid_argument("classifyFromZ: source not Z");
    if (pat.flags.size() != T.parts().size())
        throw std::invalid_argument("classifyFromZ: pattern size mismatch");
    const long i = G.lo;
    const long D = p.topShift(G.level);
    std::vector<std::pair<long, long>> comps;  // (s,t) of flagged X-components
    std::optional<long> jmin;
    for (size_t s = 0; s < pat.flags.size(); ++s) {
        const Indec& Y = T.parts()[s];
        if (pat.flags[s][2]) throw std::invalid_argument("Z-source has no degree-2 maps");
        if (pat.flags[s][1]) {
            if (!arrowExists(p, G, Y, 1)) throw std::invalid_argument("pattern flag without hom");
            comps.emplace_back(Y.lo, Y.hi);
        }
        if (pat.flags[s][0]) {
            if (!arrowExists(p, G, Y, 0)) throw std::invalid_argument("pattern flag without hom");
            if (!jmin || Y.lo < *jmin) jmin = Y.lo;
        }
    }
    // Pareto-minimal X-components: drop (s,t) dominating another componentwise
    std::vector<std::pair<long, long>> front;
    for (const auto& c : comps) {
        bool dominated = false;
        for (const auto& d : comps)
            if ((d.first < c.first && d.second <= c.second) ||
                (d.first <= c.first && d.second < c.second)) {
                dominated = true;
                break;
            }
        if (!dominated) front.push_back(c);
    }
    std::sort(front.begin(), front.end());
    front.erase(std::unique(front.begin(), front.end()), front.end());
    // with a Z-component retained, X-components reaching t >= j+D-1 are absorbed
    if (jmin)
        std::erase_if(front, [&](const auto& c) { return c.second >= *jmin + D - 1; });
    std::sort(front.begin(), front.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    MapClass c;
    if (front.empty() && !jmin) {
        c.kind = MapClass::Kind::Zero;
        c.residual = T;
        return c;
    }
    c.kind = MapClass::Kind::ZFront;
    c.front = front;
    c.j = jmin;
    Obj res = T;
    for (const auto& [s, t] : front) res = res.minus(Indec::X(p, p.levelAdd(G.level, 1), s, t));
    if (jmin) res = res.minus(Indec::Z(p, G.level, *jmin));
    c.residual = res;
    // invariant: s strictly decreasing, t strictly increasing
    for (size_t u = 1; u < front.size(); ++u)
        if (front[u].first >= front[u - 1].first || front[u].second <= front[u - 1].second)
            throw std::logic_error("classifyFromZ: front not antichain-sorted");
    (void)i;
    return c;
}

MapClass classify(const Params& p, const Indec& G, const Obj& T,
                  const SupportPattern& pat) {
    return G.isX() ? classifyFromX(p, G, T, pat) : classifyFromZ(p, G, T, pat);
}

Obj coneOf(const Params& p, const Indec& G, const MapClass& c) {
    const int k = G.level;
    const long i = G.lo;
    const long D = p.topShift(k);
    const int k1 = p.levelAdd(k, 1);
    switch (c.kind) {
        case MapClass::Kind::Zero:
            return Obj(G.suspend(p, 1)).oplus(c.residual);
        case MapClass::Kind::XAlpha:
            return xObj(p, k, i + 1, c.a).oplus(c.residual);
        case MapClass::Kind::XBeta:
            return Obj(Indec::Z(p, k, i + 1)).oplus(c.residual);
        case MapClass::Kind::XGamma:
            return Obj(Indec::X(p, k1, c.a, i + D)).oplus(c.residual);
        case MapClass::Kind::ZFront: {
            const auto& fr = c.front;
            const size_t n = fr.size();
            Obj out = c.residual;
            long prevS = i + D;  // s_0
            for (size_t u = 0; u < n; ++u) {
                out = out.oplus(xObj(p, k1, prevS, fr[u].second));
                prevS = fr[u].first;
            }
            if (c.j)
                out = out.oplus(xObj(p, k1, prevS, *c.j + D - 1));
            else
                out = out.oplus(zObj(p, k1, prevS));
            return out;
        }
    }
    throw std::logic_error("coneOf: bad kind");
}

}  // namespace qhall
