// Times relation-batch evaluation: serial reference vs the OpenMP path.
// Results must agree exactly; the speedup column is only meaningful with
// more than one hardware thread.

#include "CLI11.hpp"

#include "qhall/parallel.hpp"

#include <chrono>
#include <cstdio>
#include <vector>

using namespace qhall;

int main(int argc, char** argv) {
    int r = 2, m = 1;
    std::vector<long> win{-2, 2};
    CLI::App app{"relation-evaluation benchmark"};
    app.add_option("--r", r, "number of levels");
    app.add_option("--m", m, "suspension shift");
    app.add_option("--window", win, "index window: lo hi")->expected(2);
    CLI11_PARSE(app, argc, argv);

    Params p(r, m);
    Engine eng(p);
    const auto insts = relationInstances(eng, win[0], win[1]);

    auto run = [&](bool parallel) {
        const auto t0 = std::chrono::steady_clock::now();
        auto ok = relationsVanish(p, insts, parallel);
        const auto t1 = std::chrono::steady_clock::now();
        return std::pair{std::chrono::duration<double, std::milli>(t1 - t0).count(),
                         std::move(ok)};
    };

    const auto [tSerial, okSerial] = run(false);
    const auto [tParallel, okParallel] = run(true);

    bool agree = okSerial == okParallel;
    long vanish = 0;
    for (char c : okSerial) vanish += c;

    std::printf("relations      %zu (window [%ld, %ld], r=%d, m=%d)\n", insts.size(),
                win[0], win[1], r, m);
    std::printf("all vanish     %s (%ld/%zu)\n",
                size_t(vanish) == insts.size() ? "yes" : "NO", vanish, insts.size());
    std::printf("workers        %d\n", workerCount());
    std::printf("serial         %8.2f ms\n", tSerial);
    std::printf("openmp batch   %8.2f ms\n", tParallel);
    std::printf("speedup        %8.2fx\n", tParallel > 0 ? tSerial / tParallel : 0.0);
    std::printf("agreement      %s\n", agree ? "exact" : "MISMATCH");

    return agree && size_t(vanish) == insts.size() ? 0 : 1;
}
