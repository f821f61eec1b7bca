#pragma once

#include "qhall/normalform.hpp"

namespace qhall {

// One graded slice: exact total z-degree d, x-positions confined to [lo, hi]
// (z-letter tails included) with every multiplicity at most cap.
struct GradedReport {
    int d = 0;
    long lo = 0, hi = 0, cap = 1;
    size_t normalCount = 0;
    size_t objectCount = 0;
    bool equal = false;
    size_t rankQ2 = 0;
    size_t rankQ3 = 0;
    bool fullRank() const {
        return equal && rankQ2 == normalCount && rankQ3 == normalCount;
    }
};

// All objects whose bdim has z-total exactly d and x-part inside the box.
std::vector<Obj> objectsInSlice(const Params& p, int d, long lo, long hi, long cap);

// Enumerates both sides of the slice, evaluates every normal word through the
// multiplication map, projects onto the top z-layer, and ranks the resulting
// matrix at q = 2 and q = 3.
GradedReport gradedCheck(Engine& eng, int d, long lo, long hi, long cap);

// rank of a rational matrix (rows = entries[i], one vector per matrix row)
size_t rationalRank(std::vector<std::vector<Rat>> rows);

}  // namespace qhall
