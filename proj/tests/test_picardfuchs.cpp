#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgcorr/massive.hpp"

#include <random>

using namespace lgcorr;

namespace {

WeightSystem delpezzo() { return WeightSystem({1, 1, 1, 1}, 3); }
WeightSystem deg8() { return WeightSystem({2, 3, 4, 4}, 8); }
WeightSystem sextic() { return WeightSystem({1, 1, 1}, 6); }

// assert the residual of a GW-side annihilation sits entirely beyond the
// truncation frontier
void check_gw_annihilation(const WeightSystem& ws, long order)
{
    ExponentSum I = gw_small_i(ws, order).eval_z(Rat(1));
    ExponentSum res = apply(build_pf(ws, PfForm::Q), I);
    CHECK(annihilates_below(res, Rat(order - 1)));
    CHECK_FALSE(res.is_zero()); // the frontier term itself survives
}

} // namespace

TEST_CASE("reduced operator for the del Pezzo matches the displayed form")
{
    DiffOperator op = build_pf_reduced(delpezzo());
    REQUIRE(op.monomials().size() == 2);
    // D^3 - 3 q (3D+2)(3D+1) = D^3 - q(27 D^2 + 27 D + 6)
    DPoly p0 = op.monomials().at(0);
    DPoly p1 = op.monomials().at(1);
    CHECK(p0 == DPoly{Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(p1 == DPoly{Rat(-6), Rat(-27), Rat(-27)});
}

TEST_CASE("degenerate inputs are rejected for the irregular forms")
{
    WeightSystem triv({1}, 1); // kappa = 0
    CHECK_THROWS_AS(build_pf(triv, PfForm::UMassive), std::invalid_argument);
    CHECK_THROWS_AS(build_pf(triv, PfForm::TauRegularizedFano), std::invalid_argument);
    CHECK_THROWS_AS(build_pf(triv, PfForm::TauRegularizedGt), std::invalid_argument);
    CHECK_THROWS_AS(massive_solutions(triv, 5), std::invalid_argument);
}

TEST_CASE("apply on a single P-shifted term")
{
    DiffOperator D("q");
    D.add_monomial(0, DPoly{Rat(0), Rat(1)});
    ExponentSum f(ExponentSum::SectorKind::LambdaPhase, "q", true);
    f.add_term(Rat(0), Rat(1), LaurentZ(0, NilpotentPoly(Rat(1), 2)));
    ExponentSum g = apply(D, f);
    NilpotentPoly expect(2);
    expect.set_coeff(0, Rat(1));
    expect.set_coeff(1, Rat(1)); // (1 + P) q^{1+P}
    CHECK(g.coeff(Rat(0), Rat(1)).coeff(0) == expect);
}

TEST_CASE("full PF operator annihilates the GW I-function")
{
    check_gw_annihilation(delpezzo(), 12);
    check_gw_annihilation(deg8(), 6);
}

TEST_CASE("fano-form operator annihilates the FJRW formal solutions")
{
    for (const WeightSystem& ws : {delpezzo(), deg8()}) {
        long order = 10;
        ExponentSum I = fjrw_small_at_lg(ws, order);
        ExponentSum res = apply(build_pf(ws, PfForm::Q), I);
        // residual only at the per-branch frontier exponent -(order + (k+1)/d)
        for (const auto& [key, c] : res.terms()) {
            (void)c;
            Rat frontier = -(Rat(order) + (key.first + 1) / Rat(ws.degree));
            CHECK(key.second == frontier);
        }
        CHECK_FALSE(res.is_zero());
    }
}

TEST_CASE("general-type operator annihilates the convergent FJRW series")
{
    WeightSystem ws = sextic();
    long order = 8;
    ExponentSum I = fjrw_small_i(ws, order).eval_z(Rat(-1));
    ExponentSum res = apply(build_pf(ws, PfForm::TGeneralType), I);
    for (const auto& [key, c] : res.terms()) {
        (void)c;
        CHECK(key.second > Rat(ws.degree * order));
    }
    CHECK_FALSE(res.is_zero());
}

TEST_CASE("apply respects operator composition")
{
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> coef(-4, 4);
    auto random_op = [&]() {
        DiffOperator op("q");
        for (int mono = 0; mono < 2; ++mono) {
            DPoly p(1 + rng() % 3);
            for (auto& c : p) c = Rat(coef(rng));
            op.add_monomial(static_cast<long>(rng() % 3), p);
        }
        return op;
    };
    auto random_series = [&]() {
        ExponentSum f(ExponentSum::SectorKind::LambdaPhase, "q", true);
        for (int t = 0; t < 4; ++t) {
            NilpotentPoly p(3);
            for (int i = 0; i < 3; ++i) p.set_coeff(i, Rat(coef(rng)));
            LaurentZ c(3);
            c.add_term(static_cast<long>(rng() % 3) - 1, p);
            f.add_term(Rat(0), Rat(static_cast<long>(rng() % 5), 2), c);
        }
        return f;
    };
    for (int it = 0; it < 25; ++it) {
        DiffOperator a = random_op(), b = random_op();
        ExponentSum f = random_series();
        ExponentSum lhs = apply(a * b, f);
        ExponentSum rhs = apply(a, apply(b, f));
        CHECK(lhs.terms() == rhs.terms());
        // linearity
        ExponentSum g = random_series();
        ExponentSum sum = f;
        for (const auto& [key, c] : g.terms()) sum.add_term(key.first, key.second, c);
        ExponentSum l2 = apply(a, sum);
        ExponentSum r2 = apply(a, f);
        ExponentSum ag = apply(a, g);
        for (const auto& [key, c] : ag.terms()) r2.add_term(key.first, key.second, c);
        CHECK(l2.terms() == r2.terms());
    }
}

TEST_CASE("massive vacuum solutions for the del Pezzo")
{
    WeightSystem ws = delpezzo();
    CHECK(massive_alpha_power(ws) == Rat(27));
    auto sols = massive_solutions(ws, 25);
    REQUIRE(sols.size() == 1);
    const MassiveSolution& s = sols[0];
    CHECK(s.exact);
    CHECK(s.alpha_rat == Rat(27));
    CHECK(s.lambda_exp == Rat(1));
    REQUIRE(s.coeff_rat.size() >= 23);
    CHECK(s.coeff_rat[0] == Rat(1));
    CHECK(s.coeff_rat[1] == Rat(7, 243));
    // the displayed three-term recursion, exactly, for n <= 20
    for (long n = 0; n <= 20; ++n) {
        Rat lhs = Rat(729 * (n + 2)) * s.coeff_rat[n + 2];
        Rat rhs = Rat(54 * n * n + 162 * n + 129) * s.coeff_rat[n + 1] -
                  Rat((n + 1) * (n + 1) * (n + 1)) * s.coeff_rat[n];
        CHECK(lhs == rhs);
    }
}

TEST_CASE("del Pezzo band from the reduced operator is the displayed recursion")
{
    WeightSystem ws = delpezzo();
    // r = 1, so the q-form reduced operator is already the u-form
    MassiveBand<Rat> band = derive_massive_band<Rat>(build_pf_reduced(ws), Rat(27), Rat(1));
    REQUIRE(band.smax == 2);
    // relation P_0(n) a_n + P_1(n+1) a_{n+1} + P_2(n+2) a_{n+2} = 0 must be
    // proportional to (n+1)^3 a_n - (54n^2+162n+129) a_{n+1} + 729(n+2) a_{n+2}
    auto Q0 = band.shifts.at(0);
    auto Q1 = band.shifts.at(1);
    auto Q2 = band.shifts.at(2);
    auto eval = [&](const std::vector<Rat>& p, long n) {
        Rat r(0);
        for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * Rat(n) + *it;
        return r;
    };
    Rat scale = eval(Q2, 2) / Rat(729 * 2); // match the a_{n+2} coefficient at n=0
    REQUIRE(scale != 0);
    for (long n = 0; n <= 12; ++n) {
        CHECK(eval(Q0, n) == scale * Rat((n + 1) * (n + 1) * (n + 1)));
        CHECK(eval(Q1, n + 1) == -scale * Rat(54 * n * n + 162 * n + 129));
        CHECK(eval(Q2, n + 2) == scale * Rat(729 * (n + 2)));
    }
}

TEST_CASE("exact residuals vanish and numeric roots are consistent")
{
    // r = 2 with rational roots +-4
    WeightSystem ws({1, 1, 1, 1}, 2);
    auto sols = massive_solutions(ws, 15);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0].exact);
    CHECK(sols[1].exact);
    CHECK(sols[0].alpha_rat == Rat(4));
    CHECK(sols[1].alpha_rat == Rat(-4));
    CHECK(sols[0].lambda_exp == Rat(1));
    for (const auto& s : sols) {
        MassiveBand<Rat> band =
            derive_massive_band<Rat>(build_pf(ws, PfForm::UMassive), s.alpha_rat, s.lambda_exp);
        for (const Rat& r : massive_band_residuals(band, s.coeff_rat)) CHECK(r == 0);
    }

    // r = 3 with complex roots: product of roots = alpha^3 identity
    set_precision_bits(200);
    WeightSystem w5({1, 1, 1, 1, 1}, 2);
    auto s5 = massive_solutions(w5, 8);
    REQUIRE(s5.size() == 3);
    Complex prod{Rat(1)};
    Complex sum{Rat(0)};
    for (const auto& s : s5) {
        prod *= s.alpha_num;
        sum += s.alpha_num;
    }
    Real tol = ldexp(Real(1), -150);
    CHECK(abs(prod - Complex(massive_alpha_power(w5))) < tol);
    CHECK(abs(sum) < tol);
    // numeric residuals small
    MassiveBand<AlgNum> sym = derive_massive_band<AlgNum>(
        build_pf(w5, PfForm::UMassive), AlgNum::generator(3, massive_alpha_power(w5)),
        s5[1].lambda_exp);
    MassiveBand<Complex> band = embed_band<Complex>(sym, s5[1].alpha_num);
    for (const Complex& r : massive_band_residuals(band, s5[1].coeff_num))
        CHECK(abs(r) < ldexp(Real(1), -120));
}

TEST_CASE("formal monodromy block structure")
{
    WeightSystem ws = delpezzo();
    FormalMonodromy fm = formal_monodromy(ws);
    REQUIRE(fm.diag.size() == 2);
    CHECK(fm.diag[0] == std::pair<long, Rat>{0, Rat(2, 3)});  // e^{-2 pi i /3}
    CHECK(fm.diag[1] == std::pair<long, Rat>{1, Rat(1, 3)});
    CHECK(fm.massive_block == 1);
    CHECK(fm.step_phase == Rat(0)); // modulus-one scalar

    WeightSystem w2({1, 1, 1, 1}, 2);
    FormalMonodromy f2 = formal_monodromy(w2);
    CHECK(f2.massive_block == 2);
    CHECK(f2.step_phase == Rat(1, 2)); // nonzero per-step scalar
    // cyclic block eigenvalues are the massive_block-th roots of the total
    // scalar, hence distinct: eigenvalue count = matrix size
    CHECK(f2.massive_block == 2);

    CHECK_THROWS(formal_monodromy(sextic()));
}

TEST_CASE("solution-space dimension audit: #Nar + r = ambient rank = reduced order")
{
    std::vector<WeightSystem> cases{delpezzo(), deg8(), WeightSystem({1, 1, 1, 1, 1}, 2),
                                    WeightSystem({1, 2, 2, 3}, 4),
                                    WeightSystem({1, 1, 2, 5}, 6)};
    for (const WeightSystem& ws : cases) {
        REQUIRE(ws.kappa() < 0);
        long nar = static_cast<long>(narrow_set(ws).size());
        long r = ws.fano_index();
        CHECK(nar + r == ambient_rank(ws));
        CHECK(nar + r == build_pf_reduced(ws).order());
    }
}
