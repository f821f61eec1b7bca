#pragma once

#include "qhall/hall.hpp"

#include <string>
#include <vector>

namespace qhall {

struct RelationInstance {
    std::string family;  // "1", "1'", "2", ..., "12"
    std::string label;   // parameter tag, e.g. "k=1 i=0 l=2 j=3"
    FreeElement element;
};

// Defining relations of the presented algebra B(r,m), instantiated with all
// free x-indices inside [lo, hi].  Families with no free index appear once per
// level.  Every element maps to zero in the Hall algebra.
std::vector<RelationInstance> relationInstances(Engine& eng, long lo, long hi);

}  // namespace qhall
