#pragma once

#include "qhall/category.hpp"

#include <map>
#include <string>
#include <vector>

namespace qhall {

// Free-algebra generator: x(k,i) stands for [X_i^{(k)}], z(k) for [Z_0^{(k)}].
struct Generator {
    bool zgen{false};
    int level{1};
    long i{0};  // unused for z

    static Generator x(int k, long idx) { return Generator{false, k, idx}; }
    static Generator z(int k) { return Generator{true, k, 0}; }

    Indec indec(const Params& p) const {
        return zgen ? Indec::Z(p, level, 0) : Indec::X(p, level, i, i);
    }
    bool operator==(const Generator& o) const {
        return zgen == o.zgen && level == o.level && i == o.i;
    }
    bool operator<(const Generator& o) const {  // container order only
        if (zgen != o.zgen) return zgen < o.zgen;
        if (level != o.level) return level < o.level;
        return i < o.i;
    }
    std::string str() const;
};

using Word = std::vector<Generator>;

std::string wordStr(const Word& w);
DimVec bdeg(const Params& p, const Word& w);

// composite letters
Word xRun(int k, long i, long j);                 // x_i^{(k)} ... x_j^{(k)}, empty if j = i-1
Word zLetter(const Params& p, int k, long i);     // the word denoted z_i^{(k)}

// §4.3 inverse lexicographic order on x-only words of equal length:
// smaller at the first difference means larger level, then larger index.
bool xWordLess(const Word& a, const Word& b);
// §5.3 order on words of a common degree vector (deterministic extension
// to arbitrary words: shorter z-sequence first, then §4.3 data).
bool wordLess(const Word& a, const Word& b);

class FreeElement {
public:
    FreeElement() = default;
    static FreeElement unit() { return word(Word{}); }
    static FreeElement word(Word w, QScalar c = QScalar(1));

    const std::map<Word, QScalar>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    void add(const Word& w, const QScalar& c);
    QScalar coeff(const Word& w) const;

    FreeElement operator+(const FreeElement& o) const;
    FreeElement operator-(const FreeElement& o) const;
    FreeElement operator*(const FreeElement& o) const;  // concatenation, bilinear
    FreeElement scaled(const QScalar& c) const;
    FreeElement& operator+=(const FreeElement& o);
    FreeElement& operator-=(const FreeElement& o);
    bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<Word, QScalar> terms_;
};

}  // namespace qhall
