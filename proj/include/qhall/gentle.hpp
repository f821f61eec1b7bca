#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qhall {

// Bound quiver: vertices, arrows, and length-2 relations.  A relation
// `rel a b` means the path "a then b" (diagrammatic order), so it requires
// target(a) = source(b); as a composite in function order it is "ba".
struct BoundQuiver {
    std::vector<std::string> vertices;
    struct Arrow {
        std::string name;
        int src = 0, dst = 0;  // vertex indices
    };
    std::vector<Arrow> arrows;
    std::vector<std::pair<int, int>> rels;  // arrow indices (first, then second)
};

// Parses the .bq format: `vertex <name>`, `arrow <name>: <src> -> <dst>`,
// `rel <a> <b>`, with `#` starting a comment.  Throws std::runtime_error
// mentioning the line number on malformed input, unknown names, or a
// non-composable relation.
BoundQuiver parseBoundQuiver(const std::string& text);

// Pass/fail per axiom of a gentle bound quiver, plus the one-cycle data.
struct GentleReport {
    bool out2 = false;       // (1) at most two arrows start at each vertex
    bool in2 = false;        // (2) at most two arrows end at each vertex
    bool uniqueFree = false; // (3) unique continuation avoiding the ideal
    bool uniqueRel = false;  // (4) unique continuation inside the ideal
    bool connected = false;
    bool gentle() const { return out2 && in2 && uniqueFree && uniqueRel && connected; }

    bool oneCycle = false;   // connected and |Q_0| = |Q_1|
    long cw = 0, acw = 0;    // relation counts along the two senses of the cycle
    bool clock = false;      // cw == acw
};

GentleReport checkGentle(const BoundQuiver& bq);

struct CanonicalParams {
    int p = 0, q = 0, r = 0;                // Lambda(p, q, r)
    std::optional<std::pair<int, int>> rm;  // (r, m) = (p, p+q) when r = p
};

// Recognizes bound quivers isomorphic, up to relabeling, to the canonical
// Lambda(p,q,r): a directed p-cycle with a directed q-tail feeding it, bound
// by r consecutive relations on the cycle ending at the attachment vertex.
std::optional<CanonicalParams> canonicalParams(const BoundQuiver& bq);

// Convenience generator for the canonical bound quiver of Lambda(p,q,r).
BoundQuiver lambdaQuiver(int p, int q, int r);

}  // namespace qhall
