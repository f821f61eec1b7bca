#include "qhall/normalform.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qhall {

std::string Letter::str() const {
    std::ostringstream os;
    if (isZ)
        os << "z[" << level << "," << i << "]";
    else
        os << "x[" << level << "," << s << ".." << t << "]";
    return os.str();
}

Word letterWord(const Params& p, const Letter& l) {
    return l.isZ ? zLetter(p, l.level, l.i) : xRun(l.level, l.s, l.t);
}

std::optional<std::vector<Letter>> parseLetters(const Params& p, const Word& w) {
    std::vector<Letter> out;
    size_t blockStart = 0;
    for (size_t t = 0; t < w.size(); ++t) {
        if (!w[t].zgen) continue;
        const int k = w[t].level;
        const size_t n = t - blockStart;
        Letter L;
        L.isZ = true;
        L.level = k;
        if (n == 0) {
            L.i = 0;
        } else {
            // the x-part must be the full tail of one z-letter: either an
            // ascending run at level k ending at -1 or a descending run at
            // level k+1 ending at topShift(k); the two shapes never overlap
            bool asc = w[t - 1].i == -1;
            for (size_t u = 0; asc && u < n; ++u) {
                const Generator& g = w[blockStart + u];
                asc = !g.zgen && g.level == k && g.i == w[blockStart].i + long(u);
            }
            if (asc) {
                L.i = w[blockStart].i;
            } else {
                const long D = p.topShift(k);
                const int k1 = p.levelAdd(k, 1);
                bool desc = w[t - 1].i == D;
                for (size_t u = 0; desc && u < n; ++u) {
                    const Generator& g = w[blockStart + u];
                    desc = !g.zgen && g.level == k1 && g.i == w[blockStart].i - long(u);
                }
                if (!desc) return std::nullopt;
                L.i = w[blockStart].i - D + 1;
            }
        }
        out.push_back(L);
        blockStart = t + 1;
    }
    size_t u = blockStart;
    while (u < w.size()) {  // maximal ascending runs
        Letter L;
        L.isZ = false;
        L.level = w[u].level;
        L.s = w[u].i;
        long last = w[u].i;
        ++u;
        while (u < w.size() && w[u].level == L.level && w[u].i == last + 1) {
            last = w[u].i;
            ++u;
        }
        L.t = last;
        out.push_back(L);
    }
    return out;
}

bool lettersNormal(const Params&, const std::vector<Letter>& ls) {
    size_t d = 0;
    while (d < ls.size() && ls[d].isZ) ++d;
    for (size_t u = d; u < ls.size(); ++u)
        if (ls[u].isZ) return false;
    for (size_t u = 0; u + 1 < d; ++u) {
        const Letter &a = ls[u], &b = ls[u + 1];
        if (a.level != b.level) {
            if (a.level < b.level) return false;
        } else if (std::labs(a.i) != std::labs(b.i)) {
            if (std::labs(a.i) > std::labs(b.i)) return false;
        } else if (a.i < b.i) {
            return false;
        }
    }
    for (size_t u = d; u + 1 < ls.size(); ++u) {
        const Letter &a = ls[u], &b = ls[u + 1];
        if (a.level != b.level) {
            if (a.level < b.level) return false;
        } else if (a.s != b.s) {
            if (a.s < b.s) return false;
        } else if (a.t < b.t) {
            return false;
        }
    }
    return true;
}

bool isNormal(const Params& p, const Word& w) {
    auto ls = parseLetters(p, w);
    return ls && lettersNormal(p, *ls);
}

namespace {

bool dimInBox(const DimVec& d, long lo, long hi, long cap) {
    for (const auto& [key, c] : d.dx)
        if (key.second < lo || key.second > hi || c > cap) return false;
    return true;
}

// consecutive-pair admissibility in a normal sequence
bool zChainOk(const Letter& a, const Letter& b) {
    if (a.level != b.level) return a.level > b.level;
    if (std::labs(a.i) != std::labs(b.i)) return std::labs(a.i) < std::labs(b.i);
    return a.i >= b.i;
}
bool xChainOk(const Letter& a, const Letter& b) {
    if (a.level != b.level) return a.level > b.level;
    if (a.s != b.s) return a.s > b.s;
    return a.t >= b.t;
}

}  // namespace

std::vector<Word> normalWords(const Params& p, int d, long lo, long hi, long cap) {
    std::vector<Letter> zc, xc;
    for (int k = 1; k <= p.r; ++k) {
        Letter L;
        L.isZ = true;
        L.level = k;
        L.i = 0;
        zc.push_back(L);
        if (hi >= -1)
            for (long i = -1; i >= lo; --i) {
                L.i = i;
                zc.push_back(L);
            }
        const long D = p.topShift(k);
        if (lo <= D)
            for (long i = 1; i + D - 1 <= hi; ++i) {
                L.i = i;
                zc.push_back(L);
            }
        L.isZ = false;
        for (long s = lo; s <= hi; ++s)
            for (long t = s; t <= hi; ++t) {
                L.s = s;
                L.t = t;
                xc.push_back(L);
            }
    }

    std::vector<Word> out;
    std::vector<Letter> cur;
    DimVec dim;

    auto tryPush = [&](const Letter& c, auto&& cont) {
        DimVec nd = dim;
        nd += bdeg(p, letterWord(p, c));
        if (!dimInBox(nd, lo, hi, cap)) return;
        DimVec save = dim;
        dim = nd;
        cur.push_back(c);
        cont();
        cur.pop_back();
        dim = save;
    };

    std::function<void()> growX = [&]() {
        Word w;
        for (const Letter& L : cur) {
            Word lw = letterWord(p, L);
            w.insert(w.end(), lw.begin(), lw.end());
        }
        out.push_back(std::move(w));
        for (const Letter& c : xc) {
            if (!cur.empty() && !cur.back().isZ && !xChainOk(cur.back(), c)) continue;
            tryPush(c, growX);
        }
    };
    std::function<void(int)> growZ = [&](int left) {
        if (left == 0) {
            growX();
            return;
        }
        for (const Letter& c : zc) {
            if (!cur.empty() && !zChainOk(cur.back(), c)) continue;
            tryPush(c, [&]() { growZ(left - 1); });
        }
    };
    growZ(d);
    return out;
}

void NormalForm::ensureWindow(long lo, long hi) {
    const bool empty = wLo_ > wHi_;
    if (!empty && lo >= wLo_ && hi <= wHi_) return;
    wLo_ = empty ? lo : std::min(lo, wLo_);
    wHi_ = empty ? hi : std::max(hi, wHi_);
    insts_ = relationInstances(eng_, wLo_, wHi_);
    byWord_.clear();
    maxWordLen_ = 0;
    const Params& p = eng_.params();
    // Only words of an instance's maximal degree class may be matched as
    // rewrite segments: embedding a lower word would leave remainder terms in
    // a class that is not below the one being reduced.
    for (size_t n = 0; n < insts_.size(); ++n) {
        std::vector<std::pair<Word, DimVec>> wd;
        for (const auto& [w, c] : insts_[n].element.terms()) wd.push_back({w, bdeg(p, w)});
        for (const auto& [w, d] : wd) {
            bool top = true;
            for (const auto& [w2, d2] : wd)
                if (!(d2 == d) && !pairLeq(d2, d)) {
                    top = false;
                    break;
                }
            if (!top) continue;
            byWord_[w].push_back(n);
            maxWordLen_ = std::max(maxWordLen_, w.size());
        }
    }
}

std::vector<NormalForm::Row> NormalForm::closure(const DimVec& cls, std::vector<Word>& V) {
    const Params& p = eng_.params();
    long lo = -2, hi = 2;
    for (const auto& [key, c] : cls.dx) {
        lo = std::min(lo, key.second);
        hi = std::max(hi, key.second);
    }
    ensureWindow(lo - p.m - 2, hi + p.m + 2);

    std::vector<Row> rows;
    std::set<Word> seen(V.begin(), V.end());
    std::set<std::tuple<size_t, Word, Word>> usedRows;
    std::vector<Word> queue = V;
    while (!queue.empty()) {
        Word w = std::move(queue.back());
        queue.pop_back();
        if (seen.size() > 20000)
            throw std::runtime_error("normal form: class closure too large");
        for (size_t a = 0; a < w.size(); ++a) {
            for (size_t len = 2; len <= maxWordLen_ && a + len <= w.size(); ++len) {
                Word seg(w.begin() + a, w.begin() + a + len);
                auto hit = byWord_.find(seg);
                if (hit == byWord_.end()) continue;
                Word pre(w.begin(), w.begin() + a);
                Word suf(w.begin() + a + len, w.end());
                for (size_t n : hit->second) {
                    if (!usedRows.emplace(n, pre, suf).second) continue;
                    Row row;
                    for (const auto& [u, c] : insts_[n].element.terms()) {
                        Word full = pre;
                        full.insert(full.end(), u.begin(), u.end());
                        full.insert(full.end(), suf.begin(), suf.end());
                        if (bdeg(p, full) == cls) {
                            row.top[full] = row.top[full] + c;
                            if (seen.insert(full).second) queue.push_back(full);
                        } else {
                            row.tail.add(full, c);
                        }
                    }
                    for (auto it = row.top.begin(); it != row.top.end();)
                        it = it->second.isZero() ? row.top.erase(it) : std::next(it);
                    if (!row.top.empty()) rows.push_back(std::move(row));
                }
            }
        }
    }
    V.assign(seen.begin(), seen.end());
    return rows;
}

FreeElement NormalForm::reduce(const FreeElement& e) {
    const Params& p = eng_.params();
    FreeElement out;
    std::map<Word, QScalar> cur(e.terms().begin(), e.terms().end());

    auto takeNormals = [&]() {
        for (auto it = cur.begin(); it != cur.end();) {
            if (it->second.isZero()) {
                it = cur.erase(it);
            } else if (isNormal(p, it->first)) {
                out.add(it->first, it->second);
                it = cur.erase(it);
            } else {
                ++it;
            }
        }
    };

    for (int guard = 0; ; ++guard) {
        if (guard > 4096) throw std::runtime_error("normal form: class descent too long");
        takeNormals();
        if (cur.empty()) break;

        // pick a pairLeq-maximal class among the remaining (non-normal) words
        std::vector<DimVec> classes;
        for (const auto& [w, c] : cur) {
            DimVec d = bdeg(p, w);
            if (std::find(classes.begin(), classes.end(), d) == classes.end())
                classes.push_back(d);
        }
        DimVec cls = classes.front();
        for (const DimVec& d : classes) {
            bool below = false;
            for (const DimVec& o : classes)
                if (!(o == d) && pairLeq(d, o)) {
                    below = true;
                    break;
                }
            if (!below) {
                cls = d;
                break;
            }
        }

        std::map<Word, QScalar> work;
        for (auto it = cur.begin(); it != cur.end();) {
            if (bdeg(p, it->first) == cls) {
                work.insert(*it);
                it = cur.erase(it);
            } else {
                ++it;
            }
        }

        std::vector<Word> V;
        for (const auto& [w, c] : work) V.push_back(w);
        std::vector<Row> rows = closure(cls, V);

        // echelonize: pivot on the order-greatest word of each row
        std::map<Word, Row> pivots;
        for (Row& row : rows) {
            while (!row.top.empty()) {
                auto lead = std::max_element(
                    row.top.begin(), row.top.end(),
                    [](const auto& a, const auto& b) { return wordLess(a.first, b.first); });
                auto piv = pivots.find(lead->first);
                if (piv == pivots.end()) break;
                QScalar c = lead->second;
                row.top.erase(lead);  // pivot rows are monic in their lead
                for (const auto& [u, cu] : piv->second.top) {
                    QScalar& slot = row.top[u];
                    slot = slot - c * cu;
                    if (slot.isZero()) row.top.erase(u);
                }
                row.tail -= piv->second.tail.scaled(c);
            }
            if (row.top.empty()) continue;  // relation among lower classes only
            auto lead = std::max_element(
                row.top.begin(), row.top.end(),
                [](const auto& a, const auto& b) { return wordLess(a.first, b.first); });
            if (isNormal(p, lead->first))
                throw std::logic_error("normal form: relation row pivots on the normal word " +
                                       wordStr(lead->first));
            Word lw = lead->first;
            QScalar inv = QScalar(1) / lead->second;
            Row norm;
            for (const auto& [u, cu] : row.top)
                if (!(u == lw)) norm.top[u] = cu * inv;
            norm.tail = row.tail.scaled(inv);
            pivots.emplace(std::move(lw), std::move(norm));
        }

        // eliminate the working terms greatest-first
        while (!work.empty()) {
            auto lead = std::max_element(
                work.begin(), work.end(),
                [](const auto& a, const auto& b) { return wordLess(a.first, b.first); });
            Word w = lead->first;
            QScalar c = lead->second;
            work.erase(lead);
            if (c.isZero()) continue;
            if (isNormal(p, w)) {
                out.add(w, c);
                continue;
            }
            auto piv = pivots.find(w);
            if (piv == pivots.end())
                throw std::logic_error("normal form: no relation eliminates the word " +
                                       wordStr(w));
            for (const auto& [u, cu] : piv->second.top) {
                QScalar& slot = work[u];
                slot = slot - c * cu;
                if (slot.isZero()) work.erase(u);
            }
            for (const auto& [u, cu] : piv->second.tail.terms()) {
                QScalar& slot = cur[u];
                slot = slot - c * cu;
                if (slot.isZero()) cur.erase(u);
            }
        }
    }
    return out;
}

}  // namespace qhall
