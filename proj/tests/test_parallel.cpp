#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgcorr/collapse.hpp"

using namespace lgcorr;

// The OpenMP kernels must reproduce the serial reference bit for bit: each
// work item is an independent deterministic computation.

TEST_CASE("gw sampling kernel: serial vs openmp")
{
    set_precision_bits(160);
    WeightSystem ws({1, 1, 1, 1}, 3);
    std::vector<Real> qs;
    for (int i = 0; i < 12; ++i) qs.push_back(Real("0.1") + Real(i) * Real("0.07"));
    auto serial = sample_gw_many(ws, qs, 0, ExecMode::Serial);
    auto parallel = sample_gw_many(ws, qs, 0, ExecMode::OpenMP);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i)
        for (size_t c = 0; c < serial[i].size(); ++c) {
            CHECK(serial[i][c].re == parallel[i][c].re);
            CHECK(serial[i][c].im == parallel[i][c].im);
        }
}

TEST_CASE("fjrw sampling kernel: serial vs openmp")
{
    set_precision_bits(160);
    WeightSystem ws({1, 1, 1}, 6);
    std::vector<Real> ts;
    for (int i = 0; i < 10; ++i) ts.push_back(Real("0.5") + Real(i) * Real("0.11"));
    auto serial = sample_fjrw_many(ws, ts, ExecMode::Serial);
    auto parallel = sample_fjrw_many(ws, ts, ExecMode::OpenMP);
    for (size_t i = 0; i < serial.size(); ++i)
        for (size_t c = 0; c < serial[i].size(); ++c)
            CHECK(serial[i][c].re == parallel[i][c].re);
}

TEST_CASE("laplace kernel: serial vs openmp")
{
    set_precision_bits(140);
    WeightSystem ws({1, 1, 1, 1}, 3);
    RegularizedSeries reg = regularize_fano(ws, 160);
    LaplaceProfile prof = default_profile(reg);
    prof.T = Real(26);
    auto cont_s = continue_ode(reg, ws, prof, ExecMode::Serial);
    auto cont_p = continue_ode(reg, ws, prof, ExecMode::OpenMP);
    std::vector<Real> us{Real(6), Real(9), Real(13), Real(21)};
    auto a = laplace_samples(reg, cont_s, prof, us, ExecMode::Serial);
    auto b = laplace_samples(reg, cont_p, prof, us, ExecMode::OpenMP);
    for (size_t i = 0; i < us.size(); ++i)
        for (size_t bi = 0; bi < reg.branches.size(); ++bi) {
            CHECK(a[i][bi].value.re == b[i][bi].value.re);
            CHECK(a[i][bi].value.im == b[i][bi].value.im);
        }
}
