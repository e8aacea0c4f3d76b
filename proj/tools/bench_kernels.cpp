// Timing comparison of the serial and OpenMP defect kernels on the octonions
// (dim 8) and on octonions (x) quaternions (dim 32).

#include <chrono>
#include <cstdio>

#include "nalg/group_algebra.hpp"
#include "nalg/kernels.hpp"
#include "nalg/structure_constants.hpp"

using namespace nalg;

namespace {

template <typename F>
double time_once(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void bench(const StructureConstants& sc) {
    GroupAlgebraElement g = zero_element();
    g[0] = rat(2);
    g[1] = rat(1);
    g[2] = rat(1);
    g[3] = rat(1);
    g[4] = rat(1);

    bool s_sat = false;
    bool p_sat = false;
    Subspace s_ann(kGroupOrder);
    Subspace p_ann(kGroupOrder);

    double t_s_sat = time_once([&] { s_sat = kernels::serial::satisfies(sc, g); });
    double t_p_sat = time_once([&] { p_sat = kernels::par::satisfies(sc, g); });
    double t_s_ann = time_once([&] { s_ann = kernels::serial::annihilator(sc); });
    double t_p_ann = time_once([&] { p_ann = kernels::par::annihilator(sc); });

    std::printf("%-28s dim %3zu\n", sc.name().c_str(), sc.dim());
    std::printf("  satisfies    serial %8.3fs   parallel %8.3fs   agree %s\n", t_s_sat,
                t_p_sat, s_sat == p_sat ? "yes" : "NO");
    std::printf("  annihilator  serial %8.3fs   parallel %8.3fs   agree %s (dim %zu)\n",
                t_s_ann, t_p_ann, s_ann == p_ann ? "yes" : "NO", s_ann.dim());
}

}  // namespace

int main() {
    StructureConstants oct = builtin("octonions");
    StructureConstants quat = builtin("quaternions");
    bench(oct);
    bench(tensor(oct, quat));
    return 0;
}
