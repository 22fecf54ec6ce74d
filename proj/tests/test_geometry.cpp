#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgcorr/milnor.hpp"

using namespace lgcorr;

namespace {

WeightSystem cubic_fourfold()
{
    std::vector<std::vector<long>> mono;
    for (int i = 0; i < 6; ++i) {
        std::vector<long> row(6, 0);
        row[i] = 3;
        mono.push_back(row);
    }
    return WeightSystem({1, 1, 1, 1, 1, 1}, 3, mono);
}

WeightSystem degree8_surface()
{
    // x1^4 + x1 x2^2 + x3^2 + x4^2 in P(2,3,4,4)
    return WeightSystem({2, 3, 4, 4}, 8,
                        std::vector<std::vector<long>>{
                            {4, 0, 0, 0}, {1, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
}

WeightSystem degree6_orbicurve()
{
    // x1^6 + x2^2 + x3^2 in P(1,3,3)
    return WeightSystem({1, 3, 3}, 6,
                        std::vector<std::vector<long>>{{6, 0, 0}, {0, 2, 0}, {0, 0, 2}});
}

SymmetryGroup degree6_group()
{
    WeightSystem ws = degree6_orbicurve();
    GroupElement g(std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(0)});
    return close_group(ws, {g});
}

} // namespace

TEST_CASE("weight system validation")
{
    CHECK_THROWS(WeightSystem({2, 2}, 4));             // gcd != 1
    CHECK_THROWS(WeightSystem({1, -1}, 3));            // negative weight
    CHECK_THROWS(WeightSystem({1, 1}, 3,
                              std::vector<std::vector<long>>{{1, 1}})); // not quasi-homogeneous
    WeightSystem ws({1, 2}, 4, std::vector<std::vector<long>>{{4, 0}, {0, 2}});
    CHECK(ws.gorenstein());
}

TEST_CASE("j_element")
{
    WeightSystem cubic = cubic_fourfold();
    GroupElement j = j_element(cubic);
    for (const auto& p : j.phases) CHECK(p == Rat(1, 3));

    GroupElement j8 = j_element(degree8_surface());
    CHECK(j8.phases == std::vector<Rat>{Rat(1, 4), Rat(3, 8), Rat(1, 2), Rat(1, 2)});

    WeightSystem triv({1}, 1);
    CHECK(j_element(triv).is_identity());
}

TEST_CASE("j_element has exact order d")
{
    for (const WeightSystem& ws : {cubic_fourfold(), degree8_surface(), degree6_orbicurve()}) {
        GroupElement j = j_element(ws);
        CHECK(element_order(j) == ws.degree);
    }
}

TEST_CASE("kappa")
{
    CHECK(kappa(cubic_fourfold()) == -3);
    CHECK(kappa(degree8_surface()) == -5);
    CHECK(kappa(WeightSystem({1, 1, 1, 1, 1}, 5)) == 0);
}

TEST_CASE("narrow set")
{
    CHECK(narrow_set(WeightSystem({1, 1, 1, 1}, 3)) == std::set<long>{0, 1});
    // (k+1) w_j not in 8Z for all j, weights (2,3,4,4): k = 0,2,4,6
    CHECK(narrow_set(degree8_surface()) == std::set<long>{0, 2, 4, 6});
    CHECK(narrow_set(WeightSystem({1}, 1)).empty());
}

TEST_CASE("narrow set matches trivial fixed locus of J^{k+1}")
{
    for (const WeightSystem& ws : {cubic_fourfold(), degree8_surface(), degree6_orbicurve(),
                                   WeightSystem({1, 1, 1}, 6), WeightSystem({1, 2, 3}, 7)}) {
        GroupElement j = j_element(ws);
        std::set<long> nar = narrow_set(ws);
        GroupElement pw = j;
        for (long k = 0; k < ws.degree; ++k) {
            // pw == J^{k+1} at this point
            CHECK((pw.fixed_count() == 0) == (nar.count(k) > 0));
            pw = pw + j;
        }
    }
}

TEST_CASE("fjrw age")
{
    CHECK(fjrw_age(j_element(cubic_fourfold())) == Rat(2));
    GroupElement id(std::vector<Rat>(4, Rat(0)));
    CHECK(fjrw_age(id) == Rat(0));
    WeightSystem w8 = degree8_surface();
    GroupElement j = j_element(w8);
    GroupElement j3 = j + j + j;
    CHECK(fjrw_age(j3) == Rat(15, 8)); // (6+1+4+4)/8
}

TEST_CASE("cr age on the hypersurface via the closed form")
{
    WeightSystem w8 = degree8_surface();
    CHECK(cr_age_hypersurface(w8, Rat(1, 4)) == Rat(5, 4));
    CHECK(cr_age_hypersurface(w8, Rat(1, 3)) == Rat(2, 3));
    CHECK(cr_age_hypersurface(w8, Rat(2, 3)) == Rat(4, 3));
    CHECK(cr_age_hypersurface(w8, Rat(1, 2)) == Rat(1, 2));
    CHECK(cr_age_hypersurface(w8, Rat(3, 4)) == Rat(3, 4));
    CHECK(cr_age_hypersurface(w8, Rat(0)) == Rat(0));
    CHECK_THROWS(cr_age_hypersurface(WeightSystem({2, 3}, 7), Rat(1, 5)));
}

TEST_CASE("fjrw degree")
{
    // phi_k sits in sector J^{k+1}: the J^2 table row of the cubic (deg 4)
    // pins k=1, the J^7 row of the degree-8 table (deg 3/2) pins k=6
    WeightSystem cubic = cubic_fourfold();
    CHECK(fjrw_degree(cubic, 1) == Rat(4));
    CHECK(fjrw_degree(cubic, 0) == Rat(0));
    CHECK(fjrw_degree(degree8_surface(), 6) == Rat(3, 2));
    CHECK_THROWS(fjrw_degree(cubic, 3));
}

TEST_CASE("group closure and coset decomposition")
{
    WeightSystem ws = degree6_orbicurve();
    SymmetryGroup G = degree6_group();
    CHECK(G.order() == 12);
    CHECK(G.contains(j_element(ws)));

    auto reps = coset_decomposition(ws, G);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].is_identity());
    // representatives in distinct <J> cosets
    GroupElement j = j_element(ws);
    GroupElement h = reps[0];
    bool same_coset = false;
    for (long m = 0; m < ws.degree; ++m) {
        if (h == reps[1]) same_coset = true;
        h = h + j;
    }
    CHECK_FALSE(same_coset);

    SymmetryGroup JG = close_group(ws, {});
    CHECK(JG.order() == 6);
    CHECK(coset_decomposition(ws, JG).size() == 1);
}

TEST_CASE("narrow classes land in modified degree zero")
{
    WeightSystem ws = degree6_orbicurve();
    SymmetryGroup G = degree6_group();
    Rat qsum = ws.charge_sum();
    for (const auto& g : coset_decomposition(ws, G)) {
        for (long m = 0; m < ws.degree; ++m) {
            GroupElement gamma = twist(ws, g, Rat(m, ws.degree));
            if (gamma.fixed_count() != 0) continue;
            // bidegree (a - sum q, a - sum q): p - q = 0 always; the shifted
            // degree is nonnegative and rational
            Rat shift = fjrw_age(gamma) - qsum;
            CHECK(rat_den(2 * shift) <= Int(ws.degree));
        }
    }
}

TEST_CASE("milnor poincare series")
{
    // (1,1,1,1,1,1;3): total 2^6 = 64, invariant (1,20,1) at charges 2,3,4
    MilnorData md = milnor_poincare(cubic_fourfold());
    CHECK(md.total == 64);
    CHECK(md.invariant_dims ==
          std::map<Rat, long>{{Rat(2), 1}, {Rat(3), 20}, {Rat(4), 1}});

    // x^6+y^2+z^2 with weights (1,3,3;6): dims 1+t+t^2+t^3+t^4, no invariants
    MilnorData m6 = milnor_poincare(degree6_orbicurve());
    CHECK(m6.total == 5);
    CHECK(m6.invariant_dims.empty());

    // A_1 singularity in one variable
    MilnorData m1 = milnor_poincare(std::vector<long>{1}, 2);
    CHECK(m1.total == 1);

    // degree-8 full milnor: invariant dim 1 at charge 2
    MilnorData m8 = milnor_poincare(degree8_surface());
    CHECK(m8.total == 5);
    CHECK(m8.invariant_dims == std::map<Rat, long>{{Rat(2), 1}});
}

TEST_CASE("fermat invariant dims")
{
    WeightSystem cubic = cubic_fourfold();
    SymmetryGroup G = close_group(cubic, {});
    GroupElement id(std::vector<Rat>(6, Rat(0)));
    MilnorData md = fermat_invariant_dims(cubic, G, id);
    CHECK(md.total == 64);
    CHECK(md.invariant_dims ==
          std::map<Rat, long>{{Rat(2), 1}, {Rat(3), 20}, {Rat(4), 1}});

    // degree-6 orbicurve, gamma = gJ^3 fixes x1,x2; invariant dim 1 at charge 1
    WeightSystem w6 = degree6_orbicurve();
    SymmetryGroup G6 = degree6_group();
    GroupElement g(std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(0)});
    GroupElement gamma = twist(w6, g, Rat(3, 6));
    CHECK(gamma.fixed_coords() == std::vector<int>{0, 1});
    MilnorData b = fermat_invariant_dims(w6, G6, gamma);
    CHECK(b.invariant_dims == std::map<Rat, long>{{Rat(1), 1}});

    // empty fixed locus: dimension 1 (relative cohomology of a point)
    GroupElement j = j_element(w6);
    CHECK(fermat_invariant_dims(w6, G6, j).total == 1);

    CHECK_THROWS(fermat_invariant_dims(degree8_surface(), close_group(degree8_surface(), {}), id));
}

TEST_CASE("restricted milnor agrees with fermat enumeration under <J>")
{
    WeightSystem w6 = degree6_orbicurve();
    SymmetryGroup J6 = close_group(w6, {});
    GroupElement j = j_element(w6);
    GroupElement pw(std::vector<Rat>(3, Rat(0)));
    for (long m = 0; m < w6.degree; ++m) {
        if (pw.fixed_count() > 0) {
            MilnorData a = fermat_invariant_dims(w6, J6, pw);
            MilnorData b = restricted_invariant_dims(w6, pw);
            CHECK(a.invariant_dims == b.invariant_dims);
        }
        pw = pw + j;
    }
}

TEST_CASE("sector phases")
{
    WeightSystem w8 = degree8_surface();
    GroupElement id(std::vector<Rat>(4, Rat(0)));
    std::vector<Rat> ph = sector_phases(w8, id);
    std::set<Rat> expect{Rat(0), Rat(1, 2), Rat(1, 4), Rat(3, 4), Rat(1, 3), Rat(2, 3)};
    CHECK(std::set<Rat>(ph.begin(), ph.end()) == expect);
}
