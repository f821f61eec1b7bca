#include "qhall/hall.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qhall {

HallElement HallElement::basis(const Obj& M, QScalar c) {
    HallElement e;
    e.add(M, c);
    return e;
}

void HallElement::add(const Obj& M, const QScalar& c) {
    if (c.isZero()) return;
    auto it = terms_.find(M);
    if (it == terms_.end()) {
        terms_.emplace(M, c);
        return;
    }
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
}

QScalar HallElement::coeff(const Obj& M) const {
    auto it = terms_.find(M);
    return it == terms_.end() ? QScalar(0) : it->second;
}

HallElement HallElement::operator+(const HallElement& o) const {
    HallElement r = *this;
    r += o;
    return r;
}

HallElement HallElement::operator-(const HallElement& o) const {
    HallElement r = *this;
    r -= o;
    return r;
}

HallElement& HallElement::operator+=(const HallElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

HallElement& HallElement::operator-=(const HallElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

HallElement HallElement::scaled(const QScalar& c) const {
    HallElement r;
    if (c.isZero()) return r;
    for (const auto& [m, v] : terms_) r.add(m, v * c);
    return r;
}

std::string HallElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")[" << m.str() << "]";
        first = false;
    }
    return os.str();
}

std::vector<std::pair<Obj, QScalar>> Engine::countConesFrom(const Indec& G, const Obj& T) {
    if (G.isX() && G.lo != G.hi)
        throw std::invalid_argument("countConesFrom: X source must have width zero");
    const long c = G.lo;
    auto key = std::make_tuple(static_cast<int>(G.kind), G.level, 0l, T.shifted(-c));
    auto it = coneMemo_.find(key);
    if (it != coneMemo_.end()) {
        auto out = it->second;
        for (auto& [obj, w] : out) obj = obj.shifted(c);
        return out;
    }
    const Indec g0 = G.shifted(-c);
    const Obj t0 = T.shifted(-c);
    auto tally = G.isX() ? coneTallyX(g0, t0) : coneTallyZ(g0, t0);
    coneMemo_.emplace(std::move(key), tally);
    for (auto& [obj, w] : tally) obj = obj.shifted(c);
    return tally;
}

std::vector<std::pair<Obj, QScalar>> Engine::coneTallyX(const Indec& G, const Obj& T) {
    // DP over slots; state = least component class so far, as a rank pair
    // (degree-kind, parameter) whose lexicographic order matches xClassLeq.
    using Rank = std::optional<std::pair<int, long>>;
    std::map<Rank, QScalar> states;
    states[std::nullopt] = QScalar(1);
    const QScalar qm1 = QScalar::qm1();
    const QScalar q = QScalar::qpow(1);
    for (const auto& slot : T.parts()) {
        XSlotInfo info = xSlotInfo(p_, G, slot);
        std::vector<std::pair<Rank, QScalar>> local;
        local.emplace_back(std::nullopt, QScalar(1));
        if (info.alpha)
            local.emplace_back(std::make_pair(0, slot.hi), info.gamma ? q * qm1 : qm1);
        if (info.gamma) local.emplace_back(std::make_pair(2, slot.lo), qm1);
        if (info.beta) local.emplace_back(std::make_pair(1, 0l), qm1);
        std::map<Rank, QScalar> next;
        for (const auto& [st, w] : states)
            for (const auto& [lc, lw] : local) {
                Rank nr = st;
                if (lc && (!nr || *lc < *nr)) nr = lc;
                auto [pos, fresh] = next.try_emplace(nr, w * lw);
                if (!fresh) pos->second += w * lw;
            }
        states = std::move(next);
    }
    std::vector<std::pair<Obj, QScalar>> out;
    for (const auto& [st, w] : states) {
        MapClass cls;
        if (!st) {
            cls.kind = MapClass::Kind::Zero;
            cls.residual = T;
        } else {
            cls.kind = st->first == 0   ? MapClass::Kind::XAlpha
                       : st->first == 1 ? MapClass::Kind::XBeta
                                        : MapClass::Kind::XGamma;
            cls.a = st->second;
            cls.residual = T.minus(xClassTarget(p_, G, cls.kind, cls.a));
        }
        out.emplace_back(coneOf(p_, G, cls), w);
    }
    // merge isomorphic cones
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Obj, QScalar>> merged;
    for (auto& [obj, w] : out) {
        if (!merged.empty() && merged.back().first == obj)
            merged.back().second += w;
        else
            merged.emplace_back(std::move(obj), std::move(w));
    }
    return merged;
}

std::vector<std::pair<Obj, QScalar>> Engine::coneTallyZ(const Indec& G, const Obj& T) {
    const long i = G.lo;
    const long D = p_.topShift(G.level);
    // state: Pareto front of flagged X-components (s desc) + least flagged j
    using Front = std::vector<std::pair<long, long>>;
    using State = std::pair<Front, std::optional<long>>;
    std::map<State, QScalar> states;
    states[{{}, std::nullopt}] = QScalar(1);
    const QScalar qm1 = QScalar::qm1();
    auto insertFront = [](Front f, std::pair<long, long> c) {
        for (const auto& d : f)
            if (d.first <= c.first && d.second <= c.second) return f;  // dominated or dup
        std::erase_if(f, [&](const auto& d) { return c.first <= d.first && c.second <= d.second; });
        f.push_back(c);
        std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        return f;
    };
    for (const auto& slot : T.parts()) {
        bool xcomp = arrowExists(p_, G, slot, 1);
        bool zcomp = arrowExists(p_, G, slot, 0);
        if (!xcomp && !zcomp) continue;
        std::map<State, QScalar> next;
        auto put = [&next](State s, QScalar w) {
            auto [pos, fresh] = next.try_emplace(std::move(s), w);
            if (!fresh) pos->second += w;
        };
        for (const auto& [st, w] : states) {
            put(st, w);  // unflagged
            if (xcomp)
                put({insertFront(st.first, {slot.lo, slot.hi}), st.second}, w * qm1);
            if (zcomp) {
                auto j = st.second;
                if (!j || slot.lo < *j) j = slot.lo;
                put({st.first, j}, w * qm1);
            }
        }
        states = std::move(next);
    }
    std::vector<std::pair<Obj, QScalar>> out;
    for (const auto& [st, w] : states) {
        MapClass cls;
        Front front = st.first;
        const auto& j = st.second;
        if (j) std::erase_if(front, [&](const auto& c) { return c.second >= *j + D - 1; });
        if (front.empty() && !j) {
            cls.kind = MapClass::Kind::Zero;
            cls.residual = T;
        } else {
            cls.kind = MapClass::Kind::ZFront;
            cls.front = front;
            cls.j = j;
            Obj res = T;
            for (const auto& [s, t] : front)
                res = res.minus(Indec::X(p_, p_.levelAdd(G.level, 1), s, t));
            if (j) res = res.minus(Indec::Z(p_, G.level, *j));
            cls.residual = res;
        }
        out.emplace_back(coneOf(p_, G, cls), w);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Obj, QScalar>> merged;
    for (auto& [obj, w] : out) {
        if (!merged.empty() && merged.back().first == obj)
            merged.back().second += w;
        else
            merged.emplace_back(std::move(obj), std::move(w));
    }
    (void)i;
    return merged;
}

HallElement Engine::mulRightGenerator(const HallElement& e, const Generator& g) {
    // For each triangle Σ⁻¹T → M → L → T built from h: G → ΣM with cone T,
    // the Hall number is obtained by rotating the two count formulas:
    //   F^L_{M,G} = |Hom(G,ΣM)_{ΣL}| · {G,ΣM}/({G,G}|Aut G|) · |Aut L|{L,L}/(|Aut M|{M,M})
    const Indec gi = g.indec(p_);
    const Obj gObj(gi);
    HallElement out;
    const QScalar gAutCurly = (autCard(p_, gObj) * br_.curly(gObj, gObj)).inverse();
    for (const auto& [M, cM] : e.terms()) {
        const Obj SM = M.suspend(p_, 1);
        const QScalar mFactor =
            cM * br_.curly(gObj, SM) * gAutCurly /
            (autCard(p_, M) * br_.curly(M, M));
        for (const auto& [C, w] : countConesFrom(gi, SM)) {
            const Obj L = C.suspend(p_, -1);
            out.add(L, mFactor * w * autCard(p_, L) * br_.curly(L, L));
        }
    }
    return out;
}

HallElement Engine::mulWord(const Word& w) {
    if (w.empty()) return HallElement::unit();
    auto it = wordMemo_.find(w);
    if (it != wordMemo_.end()) return it->second;
    Word prefix = w;
    prefix.pop_back();
    HallElement r = mulRightGenerator(mulWord(prefix), w.back());
    wordMemo_.emplace(w, r);
    return r;
}

HallElement Engine::evalFree(const FreeElement& e) {
    HallElement out;
    for (const auto& [w, c] : e.terms()) out += mulWord(w).scaled(c);
    return out;
}

HallElement Engine::mul(const HallElement& a, const HallElement& b) {
    HallElement out;
    for (const auto& [N, d] : b.terms()) {
        FreeElement phi = expandInGenerators(N);
        for (const auto& [w, c] : phi.terms()) {
            HallElement cur = a;
            for (const auto& g : w) cur = mulRightGenerator(cur, g);
            out += cur.scaled(c * d);
        }
    }
    return out;
}

namespace {
bool isGeneratorShape(const Obj& M) {
    if (M.parts().size() != 1) return false;
    const Indec& x = M.parts()[0];
    return x.isZ() || x.lo == x.hi;
}
}  // namespace

QScalar Engine::hallNumber(const Obj& M, const Obj& N, const Obj& L) {
    if (isGeneratorShape(M)) {
        const Indec& g = M.parts()[0];
        QScalar tally(0);
        for (const auto& [C, w] : countConesFrom(g, L))
            if (C == N) tally = w;
        return tally * br_.curly(M, L) / (br_.curly(M, M) * autCard(p_, M));
    }
    if (isGeneratorShape(N)) {
        const Indec& g = N.parts()[0];
        const Obj SM = M.suspend(p_, 1);
        const Obj SL = L.suspend(p_, 1);
        QScalar tally(0);
        for (const auto& [C, w] : countConesFrom(g, SM))
            if (C == SL) tally = w;
        return tally * br_.curly(N, SM) /
               (br_.curly(N, N) * autCard(p_, N)) * autCard(p_, L) * br_.curly(L, L) /
               (autCard(p_, M) * br_.curly(M, M));
    }
    throw std::invalid_argument("hallNumber: neither factor is a single generator summand");
}

FreeElement Engine::expandInGenerators(const Obj& M) {
    auto it = phiMemo_.find(M);
    if (it != phiMemo_.end()) return it->second;
    if (phiInProgress_.count(M))
        throw std::logic_error("expandInGenerators: recursion cycle at " + M.str());
    phiInProgress_.insert(M);
    FreeElement phi;
    if (M.isZero()) {
        phi = FreeElement::unit();
    } else if (M.parts().size() == 1) {
        phi = expandIndec(M.parts()[0]);
    } else {
        // decomposable step: pick a summand M1 with leading term M and all
        // other products strictly smaller in endomorphism dimension
        const long dM = endDim(p_, M);
        bool done = false;
        std::string lastErr;
        std::vector<Indec> tried;
        for (const auto& part : M.parts()) {
            if (std::find(tried.begin(), tried.end(), part) != tried.end()) continue;
            tried.push_back(part);
            const Obj M1(part);
            const Obj M2 = M.minus(part);
            HallElement P = mul(HallElement::basis(M1), HallElement::basis(M2));
            QScalar vM = P.coeff(M);
            if (vM.isZero()) {
                lastErr = "leading coefficient vanishes";
                continue;
            }
            bool ok = true;
            for (const auto& [L, c] : P.terms())
                if (L != M && endDim(p_, L) >= dM) {
                    ok = false;
                    lastErr = "non-leading term " + L.str() + " has endo dim >= " +
                              std::to_string(dM);
                    break;
                }
            if (!ok) continue;
            phi = expandInGenerators(M1) * expandInGenerators(M2);
            for (const auto& [L, c] : P.terms())
                if (L != M) phi -= expandInGenerators(L).scaled(c);
            phi = phi.scaled(vM.inverse());
            done = true;
            break;
        }
        if (!done)
            throw std::logic_error("expandInGenerators: no admissible summand for " +
                                   M.str() + " (" + lastErr + ")");
    }
    phiInProgress_.erase(M);
    phiMemo_.emplace(M, phi);
    return phi;
}

FreeElement Engine::expandIndec(const Indec& Mi) {
    const int k = Mi.level;
    if (Mi.isX() && Mi.lo == Mi.hi)
        return FreeElement::word({Generator::x(k, Mi.lo)});
    if (Mi.isZ() && Mi.lo == 0) return FreeElement::word({Generator::z(k)});

    if (Mi.isX()) {
        // interval elimination: [X_i][X_{i+1,j}] = v0(split) + v1[X_{i,j}] + v2[X_{i+1,j-1}]
        //                       [X_{i+1,j}][X_i] = u0(split)
        const long i = Mi.lo, j = Mi.hi;
        const Obj xi = xObj(p_, k, i, i);
        const Obj rest = xObj(p_, k, i + 1, j);
        const Obj split = xi.oplus(rest);
        const Obj inner = xObj(p_, k, i + 1, j - 1);
        HallElement P = mul(HallElement::basis(xi), HallElement::basis(rest));
        HallElement Q = mul(HallElement::basis(rest), HallElement::basis(xi));
        const QScalar v1 = P.coeff(Obj(Mi));
        const QScalar v0 = P.coeff(split);
        const QScalar v2 = P.coeff(inner);
        const QScalar u0 = Q.coeff(split);
        if (v1.isZero() || v0.isZero() || u0.isZero())
            throw std::logic_error("expandIndec: degenerate interval coefficients");
        for (const auto& [L, c] : P.terms())
            if (L != Obj(Mi) && L != split && L != inner)
                throw std::logic_error("expandIndec: unexpected interval product term " + L.str());
        for (const auto& [L, c] : Q.terms())
            if (L != split)
                throw std::logic_error("expandIndec: unexpected swapped product term " + L.str());
        FreeElement xiF = FreeElement::word({Generator::x(k, i)});
        FreeElement phiRest = expandInGenerators(rest);
        FreeElement phiInner = expandInGenerators(inner);
        FreeElement phi = (xiF * phiRest).scaled(v1.inverse());
        phi -= (phiRest * xiF).scaled(v0 / (v1 * u0));
        if (!v2.isZero()) phi -= phiInner.scaled(v2 / v1);
        return phi;
    }

    const long i = Mi.lo;
    if (i < 0) {
        // [X_i][Z_{i+1}] = a(split) + b[Z_i];  [Z_{i+1}][X_i] = c(split)
        const Obj xi = xObj(p_, k, i, i);
        const Obj znext = zObj(p_, k, i + 1);
        const Obj split = xi.oplus(znext);
        HallElement P = mul(HallElement::basis(xi), HallElement::basis(znext));
        HallElement Q = mul(HallElement::basis(znext), HallElement::basis(xi));
        const QScalar b = P.coeff(Obj(Mi));
        const QScalar a = P.coeff(split);
        const QScalar c = Q.coeff(split);
        if (b.isZero() || a.isZero() || c.isZero())
            throw std::logic_error("expandIndec: degenerate negative-Z coefficients");
        for (const auto& [L, cc] : P.terms())
            if (L != Obj(Mi) && L != split)
                throw std::logic_error("expandIndec: unexpected Z- product term " + L.str());
        for (const auto& [L, cc] : Q.terms())
            if (L != split)
                throw std::logic_error("expandIndec: unexpected Z- swapped term " + L.str());
        FreeElement xiF = FreeElement::word({Generator::x(k, i)});
        FreeElement phiNext = expandInGenerators(znext);
        FreeElement phi = (xiF * phiNext) - (phiNext * xiF).scaled(a / c);
        return phi.scaled(b.inverse());
    }

    // i > 0: [Z_{i-1}][X'] = vs(split) + vn[Z_i];  [X'][Z_{i-1}] = u(split)
    const long D = p_.topShift(k);
    const int k1 = p_.levelAdd(k, 1);
    const Obj xp = xObj(p_, k1, i - 1 + D, i - 1 + D);
    const Obj zprev = zObj(p_, k, i - 1);
    const Obj split = xp.oplus(zprev);
    HallElement P = mul(HallElement::basis(zprev), HallElement::basis(xp));
    HallElement Q = mul(HallElement::basis(xp), HallElement::basis(zprev));
    const QScalar vn = P.coeff(Obj(Mi));
    const QScalar vs = P.coeff(split);
    const QScalar u = Q.coeff(split);
    if (vn.isZero() || vs.isZero() || u.isZero())
        throw std::logic_error("expandIndec: degenerate positive-Z coefficients");
    for (const auto& [L, cc] : P.terms())
        if (L != Obj(Mi) && L != split)
            throw std::logic_error("expandIndec: unexpected Z+ product term " + L.str());
    for (const auto& [L, cc] : Q.terms())
        if (L != split)
            throw std::logic_error("expandIndec: unexpected Z+ swapped term " + L.str());
    FreeElement xpF = FreeElement::word({Generator::x(k1, i - 1 + D)});
    FreeElement phiPrev = expandInGenerators(zprev);
    FreeElement phi = (phiPrev * xpF) - (xpF * phiPrev).scaled(vs / u);
    return phi.scaled(vn.inverse());
}

}  // namespace qhall
