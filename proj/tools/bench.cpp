// Benchmark comparing the serial reference kernels with the OpenMP ones.
#include "lgcorr/collapse.hpp"

#include <cstdio>
#include <omp.h>

using namespace lgcorr;

namespace {

template <class F>
double timed(F&& fn)
{
    double t0 = omp_get_wtime();
    fn();
    return omp_get_wtime() - t0;
}

void report(const char* name, double serial, double parallel)
{
    std::printf("%-28s serial %8.3fs   openmp %8.3fs   speedup %.2fx\n", name, serial,
                parallel, serial / parallel);
}

} // namespace

int main(int argc, char** argv)
{
    unsigned bits = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 200;
    set_precision_bits(bits);
    std::printf("precision %u bits, %d threads\n", bits, omp_get_max_threads());

    WeightSystem dp({1, 1, 1, 1}, 3);

    std::vector<Real> qs;
    for (int i = 0; i < 24; ++i) qs.push_back(Real("0.1") + Real(i) * Real("0.03"));
    std::vector<std::vector<Complex>> a, b;
    double s1 = timed([&] { a = sample_gw_many(dp, qs, 0, ExecMode::Serial); });
    double p1 = timed([&] { b = sample_gw_many(dp, qs, 0, ExecMode::OpenMP); });
    report("gw fundamental sampling", s1, p1);

    RegularizedSeries reg = regularize_fano(dp, static_cast<long>(bits) + 40);
    LaplaceProfile prof = default_profile(reg);
    prof.T = Real(40);
    std::vector<BranchContinuation> cont;
    double s2 = timed([&] { cont = continue_ode(reg, dp, prof, ExecMode::Serial); });
    double p2 = timed([&] { cont = continue_ode(reg, dp, prof, ExecMode::OpenMP); });
    report("ode continuation", s2, p2);

    std::vector<Real> us;
    for (int i = 0; i < 16; ++i) us.push_back(Real(5) + Real(i) * Real(2));
    std::vector<std::vector<LaplaceValue>> lv;
    double s3 = timed([&] { lv = laplace_samples(reg, cont, prof, us, ExecMode::Serial); });
    double p3 = timed([&] { lv = laplace_samples(reg, cont, prof, us, ExecMode::OpenMP); });
    report("laplace transforms", s3, p3);

    WeightSystem sx({1, 1, 1}, 6);
    std::vector<Real> ts;
    for (int i = 0; i < 24; ++i) ts.push_back(Real("0.5") + Real(i) * Real("0.05"));
    double s4 = timed([&] { sample_fjrw_many(sx, ts, ExecMode::Serial); });
    double p4 = timed([&] { sample_fjrw_many(sx, ts, ExecMode::OpenMP); });
    report("fjrw fundamental sampling", s4, p4);

    return 0;
}
