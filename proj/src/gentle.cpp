#include "qhall/gentle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qhall {

namespace {

[[noreturn]] void fail(size_t line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

// the unique cycle of a connected quiver with |Q_0| = |Q_1|, as an edge walk
struct CycleData {
    std::vector<bool> onCycle;    // per arrow
    std::vector<int> walkArrow;   // arrows in cyclic order
    std::vector<bool> walkAligned;  // arrow points along the walk direction
    std::vector<int> walkVertex;  // walkVertex[t] = start of step t
};

CycleData findCycle(const BoundQuiver& bq) {
    const size_t nv = bq.vertices.size(), na = bq.arrows.size();
    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (other, arrow)
    std::vector<int> deg(nv, 0);
    for (size_t i = 0; i < na; ++i) {
        const auto& a = bq.arrows[i];
        adj[a.src].push_back({a.dst, int(i)});
        adj[a.dst].push_back({a.src, int(i)});
        deg[a.src]++;
        deg[a.dst]++;
    }
    std::vector<bool> removedA(na, false), removedV(nv, false);
    std::vector<int> leaves;
    for (size_t v = 0; v < nv; ++v)
        if (deg[v] == 1) leaves.push_back(int(v));
    while (!leaves.empty()) {
        int v = leaves.back();
        leaves.pop_back();
        if (removedV[v] || deg[v] != 1) continue;
        removedV[v] = true;
        for (const auto& [w, e] : adj[v]) {
            if (removedA[e]) continue;
            removedA[e] = true;
            deg[v]--;
            deg[w]--;
            if (!removedV[w] && deg[w] == 1) leaves.push_back(w);
            break;
        }
    }
    CycleData cd;
    cd.onCycle.assign(na, false);
    int start = -1;
    for (size_t i = 0; i < na; ++i)
        if (!removedA[i]) {
            cd.onCycle[i] = true;
            if (start < 0) start = bq.arrows[i].src;
        }
    if (start < 0) return cd;  // no cycle (not one-cycle input)
    std::vector<bool> used(na, false);
    int v = start;
    while (true) {
        int next = -1;
        for (const auto& [w, e] : adj[v])
            if (cd.onCycle[e] && !used[e]) {
                next = e;
                break;
            }
        if (next < 0) break;
        used[next] = true;
        const auto& a = bq.arrows[next];
        const bool aligned = a.src == v;
        cd.walkArrow.push_back(next);
        cd.walkAligned.push_back(aligned);
        cd.walkVertex.push_back(v);
        v = aligned ? a.dst : a.src;
        if (v == start) break;
    }
    return cd;
}

}  // namespace

BoundQuiver parseBoundQuiver(const std::string& text) {
    BoundQuiver bq;
    std::map<std::string, int> vIx, aIx;
    std::istringstream in(text);
    std::string raw;
    size_t lineNo = 0;
    while (std::getline(in, raw)) {
        ++lineNo;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "vertex") {
            std::string name;
            if (!(ls >> name)) fail(lineNo, "vertex needs a name");
            if (!vIx.emplace(name, int(bq.vertices.size())).second)
                fail(lineNo, "duplicate vertex " + name);
            bq.vertices.push_back(name);
        } else if (kw == "arrow") {
            std::string name, src, arr, dst;
            if (!(ls >> name >> src >> arr >> dst) || arr != "->")
                fail(lineNo, "expected: arrow <name>: <src> -> <dst>");
            if (!name.empty() && name.back() == ':') name.pop_back();
            if (name.empty()) fail(lineNo, "arrow needs a name");
            auto s = vIx.find(src), t = vIx.find(dst);
            if (s == vIx.end()) fail(lineNo, "unknown vertex " + src);
            if (t == vIx.end()) fail(lineNo, "unknown vertex " + dst);
            if (!aIx.emplace(name, int(bq.arrows.size())).second)
                fail(lineNo, "duplicate arrow " + name);
            bq.arrows.push_back({name, s->second, t->second});
        } else if (kw == "rel") {
            std::string a, b;
            if (!(ls >> a >> b)) fail(lineNo, "expected: rel <arrow> <arrow>");
            auto ia = aIx.find(a), ib = aIx.find(b);
            if (ia == aIx.end()) fail(lineNo, "unknown arrow " + a);
            if (ib == aIx.end()) fail(lineNo, "unknown arrow " + b);
            if (bq.arrows[ia->second].dst != bq.arrows[ib->second].src)
                fail(lineNo, "relation " + a + " " + b + " is not composable");
            bq.rels.push_back({ia->second, ib->second});
        } else {
            fail(lineNo, "unknown directive " + kw);
        }
    }
    return bq;
}

GentleReport checkGentle(const BoundQuiver& bq) {
    GentleReport rep;
    const size_t nv = bq.vertices.size(), na = bq.arrows.size();
    std::vector<int> outd(nv, 0), ind(nv, 0);
    for (const auto& a : bq.arrows) {
        outd[a.src]++;
        ind[a.dst]++;
    }
    rep.out2 = std::all_of(outd.begin(), outd.end(), [](int d) { return d <= 2; });
    rep.in2 = std::all_of(ind.begin(), ind.end(), [](int d) { return d <= 2; });

    std::set<std::pair<int, int>> R(bq.rels.begin(), bq.rels.end());
    rep.uniqueFree = rep.uniqueRel = true;
    for (size_t i = 0; i < na; ++i) {
        int contFree = 0, contRel = 0, preFree = 0, preRel = 0;
        for (size_t j = 0; j < na; ++j) {
            if (bq.arrows[j].src == bq.arrows[i].dst)
                (R.count({int(i), int(j)}) ? contRel : contFree)++;
            if (bq.arrows[j].dst == bq.arrows[i].src)
                (R.count({int(j), int(i)}) ? preRel : preFree)++;
        }
        if (contFree > 1 || preFree > 1) rep.uniqueFree = false;
        if (contRel > 1 || preRel > 1) rep.uniqueRel = false;
    }

    // connectivity of the underlying graph
    if (nv > 0) {
        std::vector<std::vector<int>> adj(nv);
        for (const auto& a : bq.arrows) {
            adj[a.src].push_back(a.dst);
            adj[a.dst].push_back(a.src);
        }
        std::vector<bool> seen(nv, false);
        std::vector<int> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        rep.connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }

    rep.oneCycle = rep.connected && nv == na && na > 0;
    if (rep.oneCycle) {
        CycleData cd = findCycle(bq);
        std::vector<int> alignedOf(na, -1);
        for (size_t t = 0; t < cd.walkArrow.size(); ++t)
            alignedOf[cd.walkArrow[t]] = cd.walkAligned[t] ? 1 : 0;
        for (const auto& [a, b] : bq.rels) {
            if (alignedOf[a] < 0 || alignedOf[b] < 0) continue;  // off the cycle
            (alignedOf[a] == 1 ? rep.cw : rep.acw)++;
        }
        rep.clock = rep.cw == rep.acw;
    }
    return rep;
}

std::optional<CanonicalParams> canonicalParams(const BoundQuiver& bq) {
    GentleReport rep = checkGentle(bq);
    if (!rep.gentle() || !rep.oneCycle) return std::nullopt;
    const size_t na = bq.arrows.size();
    CycleData cd = findCycle(bq);

    // the cycle must be directed; normalize the walk to run along the arrows
    const size_t p = cd.walkArrow.size();
    if (p == 0) return std::nullopt;
    bool allFwd = true, allBwd = true;
    for (bool al : cd.walkAligned) (al ? allBwd : allFwd) = false;
    if (!allFwd && !allBwd) return std::nullopt;
    if (allBwd) {
        std::reverse(cd.walkArrow.begin(), cd.walkArrow.end());
        for (size_t t = 0; t < p; ++t) cd.walkVertex[t] = bq.arrows[cd.walkArrow[t]].src;
    }

    // off-cycle arrows must form one directed path into the cycle
    std::vector<int> offOut(bq.vertices.size(), 0), offIn(bq.vertices.size(), 0);
    std::vector<bool> onCycleV(bq.vertices.size(), false);
    for (int v : cd.walkVertex) onCycleV[v] = true;
    int q = 0, attach = -1;
    std::vector<int> offSrc;
    for (size_t i = 0; i < na; ++i) {
        if (cd.onCycle[i]) continue;
        ++q;
        const auto& a = bq.arrows[i];
        if (onCycleV[a.src]) return std::nullopt;  // tail leaving the cycle
        offOut[a.src]++;
        offSrc.push_back(a.src);
        if (onCycleV[a.dst]) {
            if (attach >= 0) return std::nullopt;  // two attachment points
            attach = a.dst;
        } else {
            offIn[a.dst]++;
        }
    }
    if (q > 0) {
        if (attach < 0) return std::nullopt;
        for (int v : offSrc)
            if (offOut[v] != 1 || offIn[v] > 1) return std::nullopt;  // branching tail
        // connected + vertex count then force a single chain
    }

    // relations must sit on the cycle; record their middle vertices
    std::map<int, int> vIndex;  // cycle vertex -> position along the walk
    size_t a0 = 0;              // walk offset so that position 0 = attachment
    if (attach >= 0)
        for (size_t t = 0; t < p; ++t)
            if (cd.walkVertex[t] == attach) a0 = t;
    for (size_t t = 0; t < p; ++t) vIndex[cd.walkVertex[(a0 + t) % p]] = int(t);

    std::set<int> middles;
    for (const auto& [a, b] : bq.rels) {
        if (!cd.onCycle[a] || !cd.onCycle[b]) return std::nullopt;
        middles.insert(vIndex.at(bq.arrows[a].dst));
    }
    const int r = int(middles.size());
    if (r < 1 || size_t(r) > p || middles.size() != bq.rels.size()) return std::nullopt;

    // canonical relation arc: positions {0, p-1, ..., p-r+1}
    auto arcFrom = [&](int s) {
        std::set<int> arc{s};
        for (int j = 1; j < r; ++j) arc.insert(int((s + p - j) % p));
        return arc;
    };
    if (attach >= 0) {
        if (middles != arcFrom(0)) return std::nullopt;
    } else {
        bool ok = false;
        for (int s = 0; s < int(p) && !ok; ++s) ok = middles == arcFrom(s);
        if (!ok) return std::nullopt;
    }

    CanonicalParams out;
    out.p = int(p);
    out.q = q;
    out.r = r;
    if (r == int(p)) out.rm = std::make_pair(int(p), int(p) + q);
    return out;
}

BoundQuiver lambdaQuiver(int p, int q, int r) {
    std::ostringstream os;
    for (int v = -q; v < p; ++v) os << "vertex v" << v << "\n";
    for (int i = 0; i < p; ++i)
        os << "arrow a" << i << ": v" << i << " -> v" << (i + 1) % p << "\n";
    for (int i = -q; i < 0; ++i) os << "arrow a" << i << ": v" << i << " -> v" << i + 1 << "\n";
    // relations a_0 a_{p-1}, a_{p-1} a_{p-2}, ... in diagrammatic order
    for (int j = 1; j <= r; ++j) {
        int hi = (p - j + 1 + p) % p, lo = (p - j) % p;
        os << "rel a" << lo << " a" << hi << "\n";
    }
    return parseBoundQuiver(os.str());
}

}  // namespace qhall
