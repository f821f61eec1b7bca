#include "qhall/freealg.hpp"

#include <sstream>

namespace qhall {

std::string Generator::str() const {
    std::ostringstream os;
    if (zgen)
        os << "z(" << level << ")";
    else
        os << "x(" << level << "," << i << ")";
    return os.str();
}

std::string wordStr(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t t = 0; t < w.size(); ++t) {
        if (t) os << " ";
        os << w[t].str();
    }
    return os.str();
}

DimVec bdeg(const Params&, const Word& w) {
    DimVec d;
    for (const auto& g : w) {
        if (g.zgen)
            d.addZ(g.level);
        else
            d.addX(g.level, g.i);
    }
    return d;
}

Word xRun(int k, long i, long j) {
    Word w;
    for (long t = i; t <= j; ++t) w.push_back(Generator::x(k, t));
    return w;
}

Word zLetter(const Params& p, int k, long i) {
    Word w;
    if (i < 0) {
        w = xRun(k, i, -1);
    } else if (i > 0) {
        const long D = p.topShift(k);
        const int k1 = p.levelAdd(k, 1);
        for (long t = i + D - 1; t >= D; --t) w.push_back(Generator::x(k1, t));
    }
    w.push_back(Generator::z(k));
    return w;
}

bool xWordLess(const Word& a, const Word& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t s = 0; s < n; ++s) {
        if (a[s] == b[s]) continue;
        if (a[s].level != b[s].level) return a[s].level > b[s].level;
        return a[s].i > b[s].i;
    }
    return a.size() < b.size();
}

bool wordLess(const Word& a, const Word& b) {
    std::vector<size_t> sa, sb;
    for (size_t t = 0; t < a.size(); ++t)
        if (a[t].zgen) sa.push_back(t);
    for (size_t t = 0; t < b.size(); ++t)
        if (b[t].zgen) sb.push_back(t);
    // (1) z-level sequences, lexicographically bigger level first
    size_t l = std::min(sa.size(), sb.size());
    for (size_t j = 0; j < l; ++j) {
        int ka = a[sa[j]].level, kb = b[sb[j]].level;
        if (ka != kb) return ka > kb;
    }
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    // (2) z-position tuples, earlier first
    for (size_t j = 0; j < l; ++j)
        if (sa[j] != sb[j]) return sa[j] < sb[j];
    // (3) x-subwords in the §4.3 order
    Word xa, xb;
    for (const auto& g : a)
        if (!g.zgen) xa.push_back(g);
    for (const auto& g : b)
        if (!g.zgen) xb.push_back(g);
    return xWordLess(xa, xb);
}

FreeElement FreeElement::word(Word w, QScalar c) {
    FreeElement e;
    e.add(w, c);
    return e;
}

void FreeElement::add(const Word& w, const QScalar& c) {
    if (c.isZero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
}

QScalar FreeElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QScalar(0) : it->second;
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
    FreeElement r = *this;
    r += o;
    return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
    FreeElement r = *this;
    r -= o;
    return r;
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

FreeElement FreeElement::operator*(const FreeElement& o) const {
    FreeElement r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add(w, c1 * c2);
        }
    return r;
}

FreeElement FreeElement::scaled(const QScalar& c) const {
    FreeElement r;
    if (c.isZero()) return r;
    for (const auto& [w, v] : terms_) r.add(w, v * c);
    return r;
}

std::string FreeElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")·" << wordStr(w);
        first = false;
    }
    return os.str();
}

}  // namespace qhall
