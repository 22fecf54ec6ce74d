#include "lgcorr/collapse.hpp"
#include "lgcorr/diagram.hpp"
#include "lgcorr/massive.hpp"
#include "lgcorr/mirror.hpp"
#include "lgcorr/report.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace lgcorr;
using nlohmann::json;

namespace {

struct CliOptions {
    std::string problem_path;
    long order = -1;
    unsigned precision = 0;
    double ray_deg = std::numeric_limits<double>::quiet_NaN();
    std::string format = "json";
    int p_trunc = -1;
    std::string convention;
    long terms = 20;
    long coset = 0;
    std::string side = "fjrw";
};

ProblemFile load_with_flags(const CliOptions& cli)
{
    ProblemFile pf = load_problem(cli.problem_path);
    if (cli.order >= 0) pf.order = cli.order;
    if (cli.precision > 0) pf.precision = cli.precision;
    if (!std::isnan(cli.ray_deg))
        pf.ray_turns = Rat(static_cast<long>(cli.ray_deg * 10), 3600);
    if (cli.p_trunc >= 0)
        for (const Rat& f : ambient_sectors(pf.ws)) pf.p_trunc[f] = cli.p_trunc;
    if (!cli.convention.empty()) pf.small_convention = cli.convention != "big";
    set_precision_bits(pf.precision);
    return pf;
}

void emit(const json& j, const std::string& format)
{
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // aligned text rendering of the same payload
    std::function<void(const json&, int)> walk = [&](const json& node, int indent) {
        std::string pad(static_cast<size_t>(indent), ' ');
        if (node.is_object()) {
            for (const auto& [k, v] : node.items()) {
                if (v.is_primitive())
                    std::cout << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                              << "\n";
                else {
                    std::cout << pad << k << ":\n";
                    walk(v, indent + 2);
                }
            }
        } else if (node.is_array()) {
            for (const auto& v : node) {
                if (v.is_primitive())
                    std::cout << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump())
                              << "\n";
                else {
                    std::cout << pad << "-\n";
                    walk(v, indent + 2);
                }
            }
        } else {
            std::cout << pad << node.dump() << "\n";
        }
    };
    walk(j, 0);
}

json laurent_json(const LaurentZ& c)
{
    json arr = json::array();
    for (const auto& [zp, poly] : c.terms()) {
        json entry;
        entry["z_pow"] = zp;
        json pl = json::array();
        for (int i = 0; i <= poly.degree(); ++i) pl.push_back(rat_str(poly.coeff(i)));
        entry["p_poly"] = pl;
        arr.push_back(entry);
    }
    return arr;
}

int run_statespace(const CliOptions& cli)
{
    ProblemFile pf = load_with_flags(cli);
    SymmetryGroup G = problem_group(pf);
    CorrespondenceReport rep =
        verify_correspondence(pf.ws, G, pf.has_overrides ? &pf.overrides : nullptr);
    json j = report_envelope(pf, "statespace");
    j["cr"] = state_space_json(rep.cr);
    j["fjrw"] = state_space_json(rep.fjrw);
    j["pass"] = rep.pass;
    json ledger = json::array();
    for (const auto& led : rep.ledger)
        ledger.push_back({{"coset", group_element_json(led.coset)},
                          {"dots", led.dots},
                          {"rays", led.rays},
                          {"internal_dots", led.internal_dots},
                          {"empty_rays", led.empty_rays},
                          {"extremal_dots", led.extremal_dots},
                          {"nonempty_rays", led.nonempty_rays}});
    j["ledger"] = ledger;
    j["mismatches"] = rep.mismatches;
    emit(j, cli.format);
    return rep.pass ? 0 : 2;
}

int run_diagram(const CliOptions& cli)
{
    ProblemFile pf = load_with_flags(cli);
    SymmetryGroup G = problem_group(pf);
    auto reps = coset_decomposition(pf.ws, G);
    if (cli.coset < 0 || cli.coset >= static_cast<long>(reps.size()))
        throw std::invalid_argument("diagram: coset index out of range");
    Diagram d = build_diagram(pf.ws, reps[static_cast<size_t>(cli.coset)]);
    if (cli.format == "svg") {
        std::cout << render(d, RenderFormat::Svg);
        return 0;
    }
    if (cli.format == "text") {
        std::cout << render(d, RenderFormat::Text);
        return 0;
    }
    json j = report_envelope(pf, "diagram");
    j["coset"] = cli.coset;
    j["rays"] = d.ray_total();
    j["dots"] = d.dot_total();
    j["internal_dots"] = d.internal_dots();
    j["empty_rays"] = d.empty_rays();
    j["difference"] = d.dot_total() - d.ray_total();
    j["text"] = render(d, RenderFormat::Text);
    emit(j, cli.format);
    return 0;
}

int run_ifunction(const CliOptions& cli)
{
    ProblemFile pf = load_with_flags(cli);
    json j = report_envelope(pf, "ifunction");
    json terms = json::array();
    if (cli.side == "gw") {
        ExponentSum I = gw_small_i(pf.ws, pf.order, pf.p_trunc.empty() ? nullptr : &pf.p_trunc);
        for (const auto& [key, c] : I.terms())
            terms.push_back({{"sector", rat_str(key.first)},
                             {"exponent", rat_str(key.second)},
                             {"coeff", laurent_json(c)}});
        j["series"] = "gw_small";
    } else {
        SmallConvention conv =
            pf.small_convention ? SmallConvention::TPower : SmallConvention::BigSlice;
        ExponentSum I = fjrw_small_i(pf.ws, pf.order, conv);
        for (const auto& [key, c] : I.terms())
            terms.push_back({{"phi", rat_str(key.first)},
                             {"exponent", rat_str(key.second)},
                             {"coeff", laurent_json(c)}});
        j["series"] = "fjrw_small";
    }
    j["terms"] = terms;
    emit(j, cli.format);
    return 0;
}

int run_pf_check(const CliOptions& cli)
{
    ProblemFile pf = load_with_flags(cli);
    const long order = pf.order;
    json j = report_envelope(pf, "pf-check");
    j["operator_q_form"] = build_pf(pf.ws, PfForm::Q).str();
    j["operator_reduced"] = build_pf_reduced(pf.ws).str();

    bool ok = true;
    {
        ExponentSum I = gw_small_i(pf.ws, order).eval_z(Rat(1));
        ExponentSum res = apply(build_pf(pf.ws, PfForm::Q), I);
        bool pass = annihilates_below(res, Rat(order - 1));
        j["gw_annihilation"] = pass;
        ok = ok && pass;
    }
    if (pf.ws.kappa() < 0) {
        ExponentSum I = fjrw_small_at_lg(pf.ws, order);
        ExponentSum res = apply(build_pf(pf.ws, PfForm::Q), I);
        bool pass = true;
        for (const auto& [key, c] : res.terms()) {
            (void)c;
            if (key.second > -Rat(order)) pass = false;
        }
        j["fjrw_lg_annihilation"] = pass;
        ok = ok && pass;
    } else if (pf.ws.kappa() > 0) {
        ExponentSum I = fjrw_small_i(pf.ws, order).eval_z(Rat(-1));
        ExponentSum res = apply(build_pf(pf.ws, PfForm::TGeneralType), I);
        bool pass = true;
        for (const auto& [key, c] : res.terms()) {
            (void)c;
            if (key.second <= Rat(pf.ws.degree * order)) pass = false;
        }
        j["fjrw_gt_annihilation"] = pass;
        ok = ok && pass;
    }
    j["pass"] = ok;
    emit(j, cli.format);
    return ok ? 0 : 2;
}

int run_massive(const CliOptions& cli)
{
    ProblemFile pf = load_with_flags(cli);
    if (pf.ws.kappa() >= 0) throw std::invalid_argument("massive: requires a Fano input");
    auto sols = massive_solutions(pf.ws, cli.terms);
    json j = report_envelope(pf, "massive");
    j["alpha_power"] = rat_str(massive_alpha_power(pf.ws));
    json arr = json::array();
    for (const auto& s : sols) {
        json e;
        e["root_index"] = s.root_index;
        e["exact"] = s.exact;
        e["lambda"] = rat_str(s.lambda_exp);
        if (s.exact) {
            e["alpha"] = rat_str(s.alpha_rat);
            json cs = json::array();
            for (const auto& c : s.coeff_rat) cs.push_back(rat_str(c));
            e["coefficients"] = cs;
        } else {
            e["alpha_re"] = s.alpha_num.re.str(30);
            e["alpha_im"] = s.alpha_num.im.str(30);
            json cs = json::array();
            for (const auto& c : s.coeff_num)
                cs.push_back(json::array({c.re.str(30), c.im.str(30)}));
            e["coefficients"] = cs;
        }
        arr.push_back(e);
    }
    j["solutions"] = arr;
    FormalMonodromy fm = formal_monodromy(pf.ws);
    json diag = json::array();
    for (const auto& [k, ph] : fm.diag)
        diag.push_back({{"phi", k}, {"phase_turns", rat_str(ph)}});
    j["monodromy"] = {{"diag", diag},
                      {"massive_block", fm.massive_block},
                      {"step_phase_turns", rat_str(fm.step_phase)}};
    emit(j, cli.format);
    return 0;
}

int run_mirror(const CliOptions& cli)
{
    ProblemFile pf = load_with_flags(cli);
    int order = static_cast<int>(std::min<long>(pf.order, 10));
    MirrorResult mr = extract_j(pf.ws, fjrw_big_i(pf.ws, order), order);
    json j = report_envelope(pf, "mirror-j");
    auto series_json = [&](const MultiSeries& s) {
        json arr = json::array();
        for (const auto& [key, c] : s.terms()) {
            json mono = json::array();
            for (int v : key) mono.push_back(v);
            arr.push_back({{"key", mono}, {"coeff", rat_str(c)}});
        }
        return arr;
    };
    json comps = json::object();
    for (const auto& [phi, comp] : mr.j) comps[std::to_string(phi)] = series_json(comp);
    j["j"] = comps;
    json cs = json::object();
    for (const auto& [i, ci] : mr.c) cs[std::to_string(i)] = series_json(ci);
    j["c"] = cs;
    json taus = json::object();
    for (const auto& [i, ti] : mr.tau) taus[std::to_string(i)] = series_json(ti);
    j["tau"] = taus;
    json invs = json::array();
    for (const auto& inv : mr.invariants) {
        json ins = json::array();
        for (int v : inv.insertions) ins.push_back(v);
        invs.push_back({{"insertions", ins},
                        {"descendant", inv.descendant},
                        {"output", inv.output},
                        {"value", rat_str(inv.value)}});
    }
    j["invariants"] = invs;
    emit(j, cli.format);
    return 0;
}

int run_asymptotics(const CliOptions& cli)
{
    ProblemFile pf = load_with_flags(cli);
    json j = report_envelope(pf, "asymptotics");
    CollapseOptions opt;
    opt.mode = ExecMode::OpenMP;
    if (pf.ray_turns) opt.ray_turns = pf.ray_turns;

    if (pf.ws.kappa() == 0)
        throw std::invalid_argument("asymptotics: requires kappa != 0");

    std::vector<Real> fit, hold;
    CollapseMap cm;
    if (pf.ws.kappa() < 0) {
        for (int i = 0; i < 9; ++i) fit.push_back(Real("0.10") + Real(i) * Real("0.05"));
        for (int i = 0; i < 4; ++i) hold.push_back(Real("0.12") + Real(i) * Real("0.1"));
        cm = collapse_map_fano(pf.ws, fit, hold, opt);

        RegularizedSeries reg = regularize_fano(pf.ws, 60 + precision_bits() / 4);
        json branches = json::array();
        for (const auto& b : reg.branches)
            branches.push_back({{"phi", b.label},
                                {"lead_exponent", rat_str(b.expo0)},
                                {"ratio_limit_inverse", Real(1 / ratio_test(b, 15)).str(20)}});
        j["regularized"] = {{"radius_pow", rat_str(reg.radius_pow)},
                            {"radius", reg.radius.str(20)},
                            {"branches", branches}};

        LaplaceProfile prof = default_profile(reg);
        prof.T = std::max(prof.T, Real(precision_bits() + 60) * Real(0.7) / Real(10));
        auto cont = continue_ode(reg, pf.ws, prof, opt.mode);
        std::vector<Real> us{Real(10), Real(20), Real(40)};
        auto rows = watson_check(reg, cont, prof, us, 5, opt.mode);
        json wat = json::array();
        for (const auto& row : rows)
            wat.push_back({{"branch", row.branch_index},
                           {"u", row.u.str(6)},
                           {"m", row.m},
                           {"error", row.error.str(8)},
                           {"next_term", row.next_term.str(8)},
                           {"ratio", row.ratio.str(8)}});
        j["watson"] = wat;

        bool unit = true;
        for (long w : pf.ws.weights) unit = unit && w == 1;
        if (unit && pf.ws.degree < pf.ws.nvars()) {
            std::vector<Real> qs;
            for (int i = 0; i <= 10; ++i) qs.push_back(Real(1) + Real(i) * Real("0.1"));
            SteepestReport sr = steepest_leading(pf.ws, qs, opt.mode);
            j["steepest"] = {{"band", sr.band.str(8)},
                             {"max_adjacent_change", sr.max_adjacent_change.str(8)},
                             {"direction_residual", sr.direction_residual.str(8)}};
        }
    } else {
        for (int i = 0; i < 7; ++i) fit.push_back(Real("0.6") + Real(i) * Real("0.2"));
        for (int i = 0; i < 3; ++i) hold.push_back(Real("0.7") + Real(i) * Real("0.4"));
        cm = collapse_map_gt(pf.ws, fit, hold, opt);
        RegularizedSeries reg = regularize_gt(pf.ws, 60 + precision_bits() / 4);
        j["regularized"] = {{"radius_pow", rat_str(reg.radius_pow)},
                            {"radius", reg.radius.str(20)}};
    }

    json L = json::array();
    for (long r = 0; r < cm.L.rows; ++r) {
        json row = json::array();
        for (long c = 0; c < cm.L.cols; ++c)
            row.push_back(json::array({cm.L(r, c).re.str(25), cm.L(r, c).im.str(25)}));
        L.push_back(row);
    }
    json sv = json::array();
    for (const auto& s : cm.singular_values) sv.push_back(s.str(15));
    json ssv = json::array();
    for (const auto& s : cm.stacked_singulars) ssv.push_back(s.str(15));
    j["collapse"] = {{"L", L},
                     {"singular_values", sv},
                     {"numerical_rank", cm.numerical_rank},
                     {"stacked_singulars", ssv},
                     {"sv_gap", cm.sv_gap.str(10)},
                     {"holdout_residual", cm.residual_rel.str(10)}};

    if (cli.format == "csv") {
        std::cout << "q";
        auto labels = pf.ws.kappa() < 0
                          ? [&] {
                                std::vector<std::string> ls;
                                for (const auto& [f, p] : ambient_component_labels(pf.ws))
                                    ls.push_back("gw_" + rat_str(f) + "_P" + std::to_string(p));
                                return ls;
                            }()
                          : [&] {
                                std::vector<std::string> ls;
                                for (long k : narrow_set(pf.ws))
                                    ls.push_back("fjrw_" + std::to_string(k));
                                return ls;
                            }();
        for (const auto& l : labels) std::cout << "," << l;
        std::cout << "\n";
        auto src = pf.ws.kappa() < 0 ? sample_gw_many(pf.ws, fit) : sample_fjrw_many(pf.ws, fit);
        for (size_t i = 0; i < fit.size(); ++i) {
            std::cout << fit[i].str(10);
            for (const auto& v : src[i]) std::cout << "," << v.re.str(18);
            std::cout << "\n";
        }
        return 0;
    }
    emit(j, cli.format);
    if (cm.residual_rel > Real("1e-4")) return 3;
    return 0;
}

int run_verify_all(const CliOptions& cli)
{
    ProblemFile pf = load_with_flags(cli);
    SymmetryGroup G = problem_group(pf);
    json j = report_envelope(pf, "verify-all");
    bool ok = true;

    CorrespondenceReport rep =
        verify_correspondence(pf.ws, G, pf.has_overrides ? &pf.overrides : nullptr);
    j["statespace_pass"] = rep.pass;
    ok = ok && rep.pass;

    long order = std::min<long>(pf.order, 12);
    {
        ExponentSum I = gw_small_i(pf.ws, order).eval_z(Rat(1));
        ExponentSum res = apply(build_pf(pf.ws, PfForm::Q), I);
        bool pass = annihilates_below(res, Rat(order - 1));
        j["gw_annihilation"] = pass;
        ok = ok && pass;
    }
    if (pf.ws.kappa() < 0 && pf.ws.gorenstein() && G.order() == pf.ws.degree) {
        ExponentSum I = fjrw_small_at_lg(pf.ws, order);
        ExponentSum res = apply(build_pf(pf.ws, PfForm::Q), I);
        bool pass = true;
        for (const auto& [key, c] : res.terms()) {
            (void)c;
            if (key.second > -Rat(order)) pass = false;
        }
        j["fjrw_lg_annihilation"] = pass;
        ok = ok && pass;

        auto sols = massive_solutions(pf.ws, 10);
        bool mpass = !sols.empty();
        for (const auto& s : sols) {
            if (!s.exact) continue;
            MassiveBand<AlgNum> sym = derive_massive_band<AlgNum>(
                build_pf(pf.ws, PfForm::UMassive),
                AlgNum::generator(pf.ws.fano_index(), massive_alpha_power(pf.ws)), s.lambda_exp);
            for (const Rat& rres :
                 massive_band_residuals(embed_band<Rat>(sym, s.alpha_rat), s.coeff_rat))
                if (rres != 0) mpass = false;
        }
        j["massive_residuals_zero"] = mpass;
        ok = ok && mpass;
    }
    if (pf.ws.kappa() > 0 && pf.ws.gorenstein()) {
        ExponentSum I = fjrw_small_i(pf.ws, order).eval_z(Rat(-1));
        ExponentSum res = apply(build_pf(pf.ws, PfForm::TGeneralType), I);
        bool pass = true;
        for (const auto& [key, c] : res.terms()) {
            (void)c;
            if (key.second <= Rat(pf.ws.degree * order)) pass = false;
        }
        j["fjrw_gt_annihilation"] = pass;
        ok = ok && pass;
    }
    j["pass"] = ok;
    emit(j, cli.format);
    return ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"state spaces, I-functions, Picard-Fuchs operators and asymptotics "
                 "of weighted hypersurface correspondences"};
    app.require_subcommand(1);

    CliOptions cli;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("problem", cli.problem_path, "problem file (JSON)")->required();
        sub->add_option("--order", cli.order, "series truncation order");
        sub->add_option("--precision", cli.precision, "working precision in bits");
        sub->add_option("--ray", cli.ray_deg, "integration ray angle in degrees");
        sub->add_option("--format", cli.format, "json|text|svg|csv");
        sub->add_option("--p-trunc", cli.p_trunc, "override every sector P-truncation");
        sub->add_option("--exponent-convention", cli.convention, "big|small");
        return sub;
    };

    auto* sc_state = add_common(app.add_subcommand("statespace", "modified state spaces"));
    auto* sc_diag = add_common(app.add_subcommand("diagram", "coset ray/dot diagram"));
    sc_diag->add_option("--coset", cli.coset, "coset index");
    auto* sc_ifun = add_common(app.add_subcommand("ifunction", "I-function term tables"));
    sc_ifun->add_option("--side", cli.side, "gw|fjrw");
    auto* sc_pf = add_common(app.add_subcommand("pf-check", "Picard-Fuchs annihilation"));
    auto* sc_mass = add_common(app.add_subcommand("massive", "massive vacuum solutions"));
    sc_mass->add_option("--terms", cli.terms, "number of recursion coefficients");
    auto* sc_mir = add_common(app.add_subcommand("mirror-j", "mirror-theorem extraction"));
    auto* sc_asy = add_common(app.add_subcommand("asymptotics", "Borel/Laplace pipeline"));
    auto* sc_all = add_common(app.add_subcommand("verify-all", "chained golden checks"));

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_state->parsed()) return run_statespace(cli);
        if (sc_diag->parsed()) return run_diagram(cli);
        if (sc_ifun->parsed()) return run_ifunction(cli);
        if (sc_pf->parsed()) return run_pf_check(cli);
        if (sc_mass->parsed()) return run_massive(cli);
        if (sc_mir->parsed()) return run_mirror(cli);
        if (sc_asy->parsed()) return run_asymptotics(cli);
        if (sc_all->parsed()) return run_verify_all(cli);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        return msg.find("precision") != std::string::npos ? 3 : 1;
    }
    return 0;
}
