#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgcorr/laurent_z.hpp"
#include "lgcorr/multi_series.hpp"

#include <random>

using namespace lgcorr;

namespace {

NilpotentPoly make_poly(std::initializer_list<long> cs, int trunc)
{
    NilpotentPoly p(trunc);
    int i = 0;
    for (long c : cs) {
        if (i < trunc) p.set_coeff(i, Rat(c));
        ++i;
    }
    return p;
}

NilpotentPoly random_poly(std::mt19937& rng, int trunc)
{
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    NilpotentPoly p(trunc);
    for (int i = 0; i < trunc; ++i) p.set_coeff(i, Rat(num(rng), den(rng)));
    return p;
}

} // namespace

TEST_CASE("rational parsing and fractional part")
{
    CHECK(parse_rat("7/243") == Rat(7, 243));
    CHECK(parse_rat(" -3 / 9 ") == Rat(-1, 3));
    CHECK(parse_rat("5") == Rat(5));
    CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK(frac(Rat(-1, 3)) == Rat(2, 3));
    CHECK(frac(Rat(7, 3)) == Rat(1, 3));
    CHECK(rat_floor(Rat(-7, 3)) == Int(-3));
}

TEST_CASE("poly_mul truncates at P^m")
{
    // (1+P)(1+P) with m=2 -> 1+2P
    NilpotentPoly a = make_poly({1, 1}, 2);
    CHECK(a * a == make_poly({1, 2}, 2));

    // (6+33P+54P^2)(1-4P+10P^2) with m=3 -> 6+9P-18P^2
    NilpotentPoly b = make_poly({6, 33, 54}, 3);
    NilpotentPoly c = make_poly({1, -4, 10}, 3);
    CHECK(b * c == make_poly({6, 9, -18}, 3));

    // P * P^2 = 0 with m=3
    NilpotentPoly p = NilpotentPoly::variable(3);
    CHECK((p * (p * p)).is_zero());

    CHECK_THROWS_AS(make_poly({1}, 2) * make_poly({1}, 3), std::invalid_argument);
}

TEST_CASE("poly_inverse")
{
    NilpotentPoly one_plus_p = make_poly({1, 1}, 3);
    CHECK(one_plus_p.inverse() == make_poly({1, -1, 1}, 3));

    // (1+P)^4 = 1+4P+6P^2 at m=3; inverse is 1-4P+10P^2
    NilpotentPoly q = make_poly({1, 4, 6}, 3);
    CHECK(q.inverse() == make_poly({1, -4, 10}, 3));
    CHECK(q * q.inverse() == make_poly({1}, 3));

    NilpotentPoly two = make_poly({2}, 2);
    NilpotentPoly half(2);
    half.set_coeff(0, Rat(1, 2));
    CHECK(two.inverse() == half);

    CHECK_THROWS_AS(NilpotentPoly::variable(3).inverse(), std::domain_error);
}

TEST_CASE("nilpotent ring axioms on random instances")
{
    std::mt19937 rng(12345);
    for (int it = 0; it < 60; ++it) {
        int m = 1 + static_cast<int>(rng() % 5);
        NilpotentPoly a = random_poly(rng, m), b = random_poly(rng, m), c = random_poly(rng, m);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * make_poly({1}, m) == a);
        CHECK(a + b == b + a);
        if (a.coeff(0) != 0) CHECK((a * a.inverse()) == make_poly({1}, m));
    }
}

TEST_CASE("laurent z arithmetic and evaluation")
{
    int m = 2;
    LaurentZ u(1, make_poly({1}, m));           // z
    LaurentZ v(-1, NilpotentPoly::variable(m)); // P/z
    LaurentZ w = u * v;                         // P
    CHECK(w.coeff(0) == NilpotentPoly::variable(m));
    CHECK(w.eval_z(Rat(1)) == NilpotentPoly::variable(m));
    LaurentZ s = u + v;
    CHECK(s.eval_z(Rat(-1)) == make_poly({-1, -1}, m));
    CHECK((s - s).is_zero());
}

TEST_CASE("multiseries products and truncation")
{
    // (1+t)(1-t) at bound 2 -> 1-t^2
    MultiSeries one_plus = MultiSeries::constant(Rat(1), 1, 2);
    one_plus.add_term({1, 0}, Rat(1));
    MultiSeries one_minus = MultiSeries::constant(Rat(1), 1, 2);
    one_minus.add_term({1, 0}, Rat(-1));
    MultiSeries prod = one_plus * one_minus;
    CHECK(prod.coeff({0, 0}) == Rat(1));
    CHECK(prod.coeff({1, 0}) == Rat(0));
    CHECK(prod.coeff({2, 0}) == Rat(-1));

    // e^{t0/z} to t0-order 3, times z: z + t0 + t0^2/(2z) + t0^3/(6 z^2)
    MultiSeries e(1, 3);
    for (int n = 0; n <= 3; ++n) {
        MultiSeries::Key k{n, -n};
        e.add_term(k, Rat(1) / Rat(factorial(n)));
    }
    MultiSeries ez = e.shift_z(1);
    CHECK(ez.coeff({0, 1}) == Rat(1));
    CHECK(ez.coeff({1, 0}) == Rat(1));
    CHECK(ez.coeff({2, -1}) == Rat(1, 2));
    CHECK(ez.coeff({3, -2}) == Rat(1, 6));

    // truncation of t^5 at bound 4 -> 0
    MultiSeries t5(1, 4);
    t5.add_term({5, 0}, Rat(1));
    CHECK(t5.is_zero());
}

TEST_CASE("multiseries ring axioms on random instances")
{
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
    auto random_series = [&](int nv, int bound) {
        MultiSeries s(nv, bound);
        for (int it = 0; it < 6; ++it) {
            MultiSeries::Key k(nv + 1, 0);
            for (int i = 0; i < nv; ++i) k[i] = static_cast<int>(rng() % 3);
            k[nv] = static_cast<int>(rng() % 5) - 2;
            s.add_term(k, Rat(num(rng), den(rng)));
        }
        return s;
    };
    for (int it = 0; it < 40; ++it) {
        int nv = 1 + static_cast<int>(rng() % 2);
        int bound = 3 + static_cast<int>(rng() % 3);
        MultiSeries a = random_series(nv, bound), b = random_series(nv, bound),
                    c = random_series(nv, bound);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * MultiSeries::constant(Rat(1), nv, bound) == a);
    }
}

TEST_CASE("multiseries with nilpotent coefficients composes")
{
    using MS = MultiSeriesT<NilpotentPoly>;
    NilpotentPoly p = NilpotentPoly::variable(2);
    NilpotentPoly one(Rat(1), 2);
    MS a = MS::constant(one, 1, 2);
    a.add_term({1, 0}, p);
    MS sq = a * a; // (1 + tP)^2 = 1 + 2tP since P^2 = 0
    CHECK(sq.coeff({1, 0}) == p * Rat(2));
    CHECK(sq.coeff({2, 0}).is_zero());
}

TEST_CASE("multiseries derivative and z helpers")
{
    MultiSeries s(2, 4);
    s.add_term({2, 1, -1}, Rat(3, 2)); // (3/2) t0^2 t1 / z
    MultiSeries ds = s.derivative(0);
    CHECK(ds.coeff({1, 1, -1}) == Rat(3));
    CHECK(s.flip_z().coeff({2, 1, -1}) == Rat(-3, 2));
    CHECK(s.shift_z(2).coeff({2, 1, 1}) == Rat(3, 2));
    CHECK(s.min_zpow() == -1);
    CHECK(s.z_slice(-1).coeff({2, 1, 0}) == Rat(3, 2));
}
