#include "lgcorr/massive.hpp"

#include <gmp.h>

namespace lgcorr {

namespace {

bool exact_root(const Int& x, unsigned long r, Int& out)
{
    if (x < 0) return false;
    Int res;
    int exact = mpz_root(res.backend().data(), x.backend().data(), r);
    out = res;
    return exact != 0;
}

} // namespace

Rat massive_alpha_power(const WeightSystem& ws)
{
    if (ws.kappa() >= 0)
        throw std::invalid_argument("massive vacua require kappa < 0");
    const long r = ws.fano_index();
    Rat a0 = Rat(int_pow(Int(r), r)) * Rat(int_pow(Int(ws.degree), ws.degree));
    for (long w : ws.weights) a0 /= Rat(int_pow(Int(w), w));
    return a0;
}

std::vector<MassiveSolution> massive_solutions(const WeightSystem& ws, long nterms)
{
    const long r = ws.fano_index();
    const Rat lambda(ws.nvars() - 2, 2);
    const Rat a0 = massive_alpha_power(ws);
    DiffOperator uform = build_pf(ws, PfForm::UMassive);

    Int num_root, den_root;
    bool rational_rho = exact_root(rat_num(a0), static_cast<unsigned long>(r), num_root) &&
                        exact_root(rat_den(a0), static_cast<unsigned long>(r), den_root);
    Rat rho_rat = rational_rho ? Rat(num_root, den_root) : Rat(0);
    Real rho_num = rational_rho
                       ? real_from_rat(rho_rat)
                       : boost::multiprecision::pow(real_from_rat(a0), Real(1) / Real(r));

    // one symbolic derivation in Q[alpha]/(alpha^r - A0); the root equation
    // kills the top slot exactly before any numeric embedding
    MassiveBand<AlgNum> sym =
        derive_massive_band<AlgNum>(uform, AlgNum::generator(r, a0), lambda);

    std::vector<MassiveSolution> out;
    for (int j = 0; j < r; ++j) {
        MassiveSolution sol;
        sol.root_index = j;
        sol.lambda_exp = lambda;
        sol.alpha_num = polar(rho_num, 2 * pi_value() * j / r);
        bool exact = rational_rho && (j == 0 || 2 * j == r);
        sol.exact = exact;
        if (exact) {
            sol.alpha_rat = (j == 0) ? rho_rat : -rho_rat;
            sol.alpha_num = Complex(real_from_rat(sol.alpha_rat));
            MassiveBand<Rat> band = embed_band<Rat>(sym, sol.alpha_rat);
            sol.coeff_rat = solve_massive_recursion(band, nterms);
            sol.coeff_num.reserve(sol.coeff_rat.size());
            for (const Rat& c : sol.coeff_rat) sol.coeff_num.emplace_back(real_from_rat(c));
        } else {
            MassiveBand<Complex> band = embed_band<Complex>(sym, sol.alpha_num);
            sol.coeff_num = solve_massive_recursion(band, nterms);
        }
        out.push_back(std::move(sol));
    }
    return out;
}

FormalMonodromy formal_monodromy(const WeightSystem& ws)
{
    if (ws.kappa() >= 0)
        throw std::invalid_argument("formal_monodromy: requires kappa < 0");
    FormalMonodromy fm;
    for (long k : narrow_set(ws)) fm.diag.emplace_back(k, frac(Rat(-(k + 1), ws.degree)));
    fm.massive_block = ws.fano_index();
    fm.step_phase = frac(Rat(-(ws.nvars() - 2), 2 * ws.fano_index()));
    return fm;
}

} // namespace lgcorr
