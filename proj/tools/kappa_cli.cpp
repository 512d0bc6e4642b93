#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "kappa/fixtures.hpp"
#include "kappa/parser.hpp"
#include "kappa/selftest.hpp"
#include "kappa/serialize.hpp"

namespace {

using namespace kappa;

struct CommonFlags {
    std::string basis = "bicross";
    std::string order = "px";
    bool metric_flipped = false;
    bool transposed = false;
    std::string format = "text";

    SmashConfig smash() const {
        return SmashConfig{basis_from_string(basis), order_from_string(order),
                           Metric{metric_flipped},
                           transposed ? CoproductVariant::Transposed : CoproductVariant::Direct};
    }
    HopfContext hopf() const { return smash().hopf(); }
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_order = true) {
    cmd->add_option("--basis", f.basis, "coalgebra basis: bicross or standard")
        ->check(CLI::IsMember({"bicross", "bicrossproduct", "standard"}));
    if (with_order)
        cmd->add_option("--order", f.order, "construction order: xp or px")
            ->check(CLI::IsMember({"xp", "px"}));
    cmd->add_flag("--metric-flipped", f.metric_flipped, "flip the metric signature");
    cmd->add_flag("--transposed", f.transposed, "transpose the spatial-momentum coproduct");
}

void add_format(CLI::App* cmd, CommonFlags& f, const std::vector<std::string>& allowed) {
    cmd->add_option("--format", f.format, "output format")->check(CLI::IsMember(allowed));
}

const RelationTable& pick_table(const std::string& choice, const CommonFlags& f,
                                const Element& e, RelationTable& phase_storage) {
    bool has_x = false, has_p = false;
    for (const auto& [m, s] : e.terms())
        for (const auto& g : m.word()) (g.is_x() ? has_x : has_p) = true;

    std::string resolved = choice;
    if (resolved == "auto") resolved = has_x && has_p ? "phase" : (has_x ? "x" : "p");
    if (resolved == "x") return position_table(f.hopf());
    if (resolved == "p") return momentum_table();
    phase_storage = derive_table(f.smash()).rules();
    return phase_storage;
}

int run_derive(const CommonFlags& f, bool verify, bool no_verify, bool provenance) {
    DerivedTable t = derive_table(f.smash());
    if (f.format == "json")
        std::cout << table_to_json(t, provenance) << "\n";
    else
        std::cout << table_to_text(t);

    if (no_verify) return 0;
    try {
        DiffReport diff = verify_against_fixture(t);
        if (f.format == "json")
            std::cout << diff_to_json(diff) << "\n";
        else
            std::cout << diff_to_text(diff);
        return diff.clean ? 0 : 1;
    } catch (const MissingFixtureError& e) {
        if (verify) throw;
        std::cout << "verify: skipped (" << e.what() << ")\n";
        return 0;
    }
}

ActionMode mode_from_string(const std::string& s) {
    if (s == "x>p") return ActionMode::LeftXOnP;
    if (s == "p>x") return ActionMode::LeftPOnX;
    if (s == "p<x") return ActionMode::RightPByX;
    if (s == "x<p") return ActionMode::RightXByP;
    throw Error("unknown action mode '" + s + "' (use x>p, p>x, p<x, x<p)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kappa-deformed phase-space engine: derive cross-product algebras, evaluate "
                 "Hopf-algebra operations, and verify the deformed uncertainty relations"};
    app.require_subcommand(1);

    // derive
    CommonFlags derive_flags;
    bool derive_verify = false, derive_no_verify = false, derive_provenance = false;
    auto* cmd_derive = app.add_subcommand("derive", "derive a phase-space commutator table");
    add_common(cmd_derive, derive_flags);
    add_format(cmd_derive, derive_flags, {"text", "json"});
    cmd_derive->add_flag("--verify", derive_verify, "fail when no fixture exists");
    cmd_derive->add_flag("--no-verify", derive_no_verify, "skip the fixture comparison");
    cmd_derive->add_flag("--provenance", derive_provenance, "include derivation provenance");

    // normalize / commutator
    CommonFlags norm_flags;
    std::string norm_table = "auto", norm_expr;
    auto* cmd_norm = app.add_subcommand("normalize", "normal-order an expression");
    add_common(cmd_norm, norm_flags);
    cmd_norm->add_option("--table", norm_table, "relation table: auto, x, p or phase")
        ->check(CLI::IsMember({"auto", "x", "p", "phase"}));
    cmd_norm->add_option("expr", norm_expr, "expression")->required();

    CommonFlags comm_flags;
    std::string comm_table = "auto", comm_a, comm_b;
    auto* cmd_comm = app.add_subcommand("commutator", "commutator [a, b] in a chosen table");
    add_common(cmd_comm, comm_flags);
    cmd_comm->add_option("--table", comm_table, "relation table: auto, x, p or phase")
        ->check(CLI::IsMember({"auto", "x", "p", "phase"}));
    cmd_comm->add_option("a", comm_a, "left expression")->required();
    cmd_comm->add_option("b", comm_b, "right expression")->required();

    // pair
    CommonFlags pair_flags;
    std::string pair_x, pair_p;
    auto* cmd_pair = app.add_subcommand("pair", "duality pairing <x, p>");
    add_common(cmd_pair, pair_flags, false);
    cmd_pair->add_option("x", pair_x, "position-side expression")->required();
    cmd_pair->add_option("p", pair_p, "momentum-side expression")->required();

    // act
    CommonFlags act_flags;
    std::string act_mode, act_actor, act_target;
    auto* cmd_act = app.add_subcommand("act", "module action of one algebra on the other");
    add_common(cmd_act, act_flags, false);
    cmd_act->add_option("--mode", act_mode, "x>p, p>x, p<x or x<p")->required();
    cmd_act->add_option("actor", act_actor, "acting expression")->required();
    cmd_act->add_option("target", act_target, "target expression")->required();

    // coproduct
    CommonFlags cop_flags;
    std::string cop_side = "p", cop_expr;
    auto* cmd_cop = app.add_subcommand("coproduct", "coproduct of an expression");
    add_common(cmd_cop, cop_flags, false);
    cmd_cop->add_option("--side", cop_side, "x or p")->check(CLI::IsMember({"x", "p"}));
    cmd_cop->add_option("expr", cop_expr, "expression")->required();

    // limit
    CommonFlags limit_flags;
    auto* cmd_limit = app.add_subcommand("limit", "classical limit of a derived table");
    add_common(cmd_limit, limit_flags);
    add_format(cmd_limit, limit_flags, {"text", "json"});

    // uncertainty
    CommonFlags unc_flags;
    std::string unc_case = "bicross";
    std::vector<double> unc_kappas;
    double unc_hbar = 1.0, unc_extent = 8.0;
    int unc_states = 20, unc_grid = 96;
    std::uint64_t unc_seed = 12345;
    bool unc_residuals = false;
    auto* cmd_unc = app.add_subcommand("uncertainty",
                                       "verify the deformed uncertainty relations numerically");
    cmd_unc->add_option("--case", unc_case, "bicross or standard")
        ->check(CLI::IsMember({"bicross", "standard"}));
    cmd_unc->add_option("--kappa", unc_kappas, "deformation parameters (default 0.5 1 10 1000)");
    cmd_unc->add_option("--hbar", unc_hbar, "Planck constant");
    cmd_unc->add_option("--states", unc_states, "random states per kappa");
    cmd_unc->add_option("--grid", unc_grid, "points per axis");
    cmd_unc->add_option("--extent", unc_extent, "half-width of the momentum box");
    cmd_unc->add_option("--seed", unc_seed, "random seed");
    cmd_unc->add_flag("--residuals", unc_residuals, "also print commutator residuals");
    add_format(cmd_unc, unc_flags, {"text", "json", "csv"});

    // selftest
    std::uint64_t st_seed = 12345;
    bool st_full = false, st_skip_numeric = false;
    auto* cmd_st = app.add_subcommand("selftest", "run every property suite");
    cmd_st->add_option("--seed", st_seed, "random seed");
    cmd_st->add_flag("--full", st_full, "acceptance-scale sample counts");
    cmd_st->add_flag("--skip-numeric", st_skip_numeric, "symbolic suites only");

    // fixture
    std::string fx_id;
    bool fx_list = false;
    auto* cmd_fx = app.add_subcommand("fixture", "print a golden fixture");
    cmd_fx->add_option("--id", fx_id, "fixture id");
    cmd_fx->add_flag("--list", fx_list, "list fixture ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_derive->parsed())
            return run_derive(derive_flags, derive_verify, derive_no_verify, derive_provenance);

        if (cmd_norm->parsed()) {
            Element e = parse(norm_expr);
            RelationTable storage = RelationTable::momentum();
            const RelationTable& t = pick_table(norm_table, norm_flags, e, storage);
            std::cout << normalize(e, t).to_string() << "\n";
            return 0;
        }
        if (cmd_comm->parsed()) {
            Element a = parse(comm_a), b = parse(comm_b);
            RelationTable storage = RelationTable::momentum();
            const RelationTable& t = pick_table(comm_table, comm_flags, a + b, storage);
            std::cout << commutator(a, b, t).to_string() << "\n";
            return 0;
        }
        if (cmd_pair->parsed()) {
            std::cout << pair(parse(pair_x), parse(pair_p), pair_flags.hopf()).to_string()
                      << "\n";
            return 0;
        }
        if (cmd_act->parsed()) {
            Element result = act(mode_from_string(act_mode), parse(act_actor),
                                 parse(act_target), act_flags.hopf());
            std::cout << result.to_string() << "\n";
            return 0;
        }
        if (cmd_cop->parsed()) {
            Side side = cop_side == "x" ? Side::X : Side::P;
            std::cout << coproduct(parse(cop_expr), side, cop_flags.hopf()).to_string() << "\n";
            return 0;
        }
        if (cmd_limit->parsed()) {
            auto report = check_classical_limit(derive_table(limit_flags.smash()));
            std::cout << (limit_flags.format == "json" ? limit_report_to_json(report) + "\n"
                                                       : limit_report_to_text(report));
            return 0;
        }
        if (cmd_unc->parsed()) {
            if (unc_kappas.empty()) unc_kappas = {0.5, 1.0, 10.0, 1000.0};
            RepresentCase rc = represent_case_from_string(unc_case);
            Grid g{unc_grid, unc_extent};
            auto report = uncertainty_sweep(rc, g, unc_hbar, unc_kappas, unc_states, unc_seed);
            if (unc_flags.format == "json")
                std::cout << uncertainty_to_json(report) << "\n";
            else if (unc_flags.format == "csv")
                std::cout << uncertainty_to_csv(report);
            else
                std::cout << uncertainty_to_text(report);
            int rc_code = report.violations() == 0 ? 0 : 1;
            if (unc_residuals) {
                for (double kappa : unc_kappas) {
                    OperatorSet ops(rc, g, unc_hbar, kappa);
                    GridState state = GridState::gaussian(g, GaussianParams{});
                    auto rows = commutator_residuals(ops, state);
                    std::cout << residuals_to_json(unc_case, unc_hbar, kappa, rows) << "\n";
                    for (const auto& row : rows)
                        if (row.residual > 1e-6) rc_code = 1;
                }
            }
            return rc_code;
        }
        if (cmd_st->parsed()) {
            SelftestOptions opts;
            opts.seed = st_seed;
            if (!st_full) {
                opts.algebra_triples = 200;
                opts.hopf_products = 80;
                opts.roundtrip_samples = 100;
                opts.termination_words = 60;
                opts.residual_grid_n = 64;
                opts.sweep_grid_n = 64;
                opts.uncertainty_states = 10;
                opts.classical_probe_states = 10;
            }
            opts.run_numeric = !st_skip_numeric;
            bool all_ok = true;
            for (const auto& suite : run_selftest(opts)) {
                std::printf("%-28s %s (%d checks)\n", suite.name.c_str(),
                            suite.ok() ? "pass" : "FAIL", suite.checks);
                for (const auto& m : suite.messages) std::printf("    %s\n", m.c_str());
                all_ok = all_ok && suite.ok();
            }
            return all_ok ? 0 : 1;
        }
        if (cmd_fx->parsed()) {
            if (fx_list) {
                for (const auto& id : fixture_ids()) std::cout << id << "\n";
                return 0;
            }
            if (fx_id.empty()) throw Error("fixture: pass --id or --list");
            const Fixture& fx = fixture_by_id(fx_id);
            DerivedTable t;
            t.config = fx.config;
            t.comms = fx.comms;
            t.annotations = fx.annotations;
            std::cout << table_to_json(t, false) << "\n";
            return 0;
        }
    } catch (const kappa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
