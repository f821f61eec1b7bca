#pragma once

#include "qhall/relations.hpp"

#include <optional>

namespace qhall {

// One letter of the composite alphabet: z_i^{(level)} or x_{s,t}^{(level)}.
struct Letter {
    bool isZ = false;
    int level = 1;
    long i = 0;     // z-index
    long s = 0, t = 0;  // x-interval

    std::string str() const;
};

Word letterWord(const Params& p, const Letter& l);

// Maximal parse into letters: blocks ending at z-generators must match a
// z_i^{(k)} tail exactly, the trailing x-part splits into maximal ascending
// runs.  nullopt when a z-block fits no letter.
std::optional<std::vector<Letter>> parseLetters(const Params& p, const Word& w);

bool lettersNormal(const Params& p, const std::vector<Letter>& ls);
bool isNormal(const Params& p, const Word& w);

// All normal words with exactly d z-letters, every x-generator index (tails of
// z-letters included) inside [lo, hi], and every multiplicity of bdeg at most
// cap.
std::vector<Word> normalWords(const Params& p, int d, long lo, long hi, long cap);

// Rewrites free elements onto the normal-word spanning set, exactly: the
// result is congruent to the input modulo the defining ideal.  Works one
// degree-vector class at a time by Gaussian elimination over the localized
// relation rows; throws logic_error if a non-normal word cannot be reduced
// (that would contradict the spanning theorem).
class NormalForm {
public:
    explicit NormalForm(Engine& eng) : eng_(eng) {}
    FreeElement reduce(const FreeElement& e);

private:
    struct Row {
        std::map<Word, QScalar> top;  // words of the class under reduction
        FreeElement tail;             // strictly lower classes
    };
    void ensureWindow(long lo, long hi);
    std::vector<Row> closure(const DimVec& cls, std::vector<Word>& V);

    Engine& eng_;
    long wLo_ = 1, wHi_ = 0;  // cached relation window, empty initially
    std::vector<RelationInstance> insts_;
    std::map<Word, std::vector<size_t>> byWord_;
    size_t maxWordLen_ = 0;
};

}  // namespace qhall
