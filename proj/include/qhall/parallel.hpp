#pragma once

#include "qhall/relations.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <vector>

namespace qhall {

// Evaluates ξ on a batch of relation instances and reports which vanish.
// Engines memoize internally and are not thread safe, so the parallel path
// gives each worker its own; results are identical to the serial loop by
// construction (exact arithmetic, independent instances).
inline std::vector<char> relationsVanish(const Params& p,
                                         const std::vector<RelationInstance>& insts,
                                         [[maybe_unused]] bool parallel) {
    std::vector<char> ok(insts.size(), 0);
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel
        {
            Engine eng(p);
#pragma omp for schedule(dynamic)
            for (long i = 0; i < long(insts.size()); ++i)
                ok[size_t(i)] = eng.evalFree(insts[size_t(i)].element).isZero();
        }
        return ok;
    }
#endif
    Engine eng(p);
    for (size_t i = 0; i < insts.size(); ++i)
        ok[i] = eng.evalFree(insts[i].element).isZero();
    return ok;
}

inline int workerCount() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace qhall
