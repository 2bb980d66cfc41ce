#include <map>
#include <string>

#include <CLI11.hpp>

#include "seashell/cli.hpp"
#include "seashell/version.hpp"

using seashell::Command;
using seashell::DiffScheme;
using seashell::RunConfig;
using seashell::ShiftMode;

namespace {

void add_grid_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("-m,--m", cfg.m, "grid size (m+1 nodes on [0,pi])")
        ->check(CLI::Range(std::size_t{8}, std::size_t{1000000}))
        ->capture_default_str();
    const std::map<std::string, ShiftMode> shifts{
        {"none", ShiftMode::none}, {"auto", ShiftMode::automatic}};
    cmd->add_option("--shift", cfg.shift, "spectral shift mode")
        ->transform(CLI::CheckedTransformer(shifts, CLI::ignore_case))
        ->default_str("auto");
    const std::map<std::string, DiffScheme> schemes{
        {"central2", DiffScheme::central2}, {"central4", DiffScheme::central4}};
    cmd->add_option("--scheme", cfg.scheme, "difference stencil for q")
        ->transform(CLI::CheckedTransformer(schemes, CLI::ignore_case))
        ->default_str("central2");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"seashell: inverse Sturm-Liouville reconstruction on [0,pi] "
                 "with certified error bounds"};
    app.set_version_flag("--version", std::string("seashell ") + SEASHELL_VERSION);
    app.require_subcommand(1);

    RunConfig cfg;

    auto* rec = app.add_subcommand(
        "reconstruct", "recover q, h, H from spectral data (CSV + JSON sidecar)");
    rec->add_option("input", cfg.input, "spectral data JSON")->required();
    rec->add_option("-o,--output", cfg.output, "output CSV path")->required();
    add_grid_flags(rec, cfg);

    auto* fwd = app.add_subcommand(
        "forward", "solve the forward problem: potential spec JSON -> spectral data JSON");
    fwd->add_option("input", cfg.input, "potential spec JSON")->required();
    fwd->add_option("-o,--output", cfg.output, "output spectral data JSON")->required();

    auto* rt = app.add_subcommand(
        "roundtrip", "forward -> reconstruct -> forward, report e_N and boundary deltas");
    rt->add_option("input", cfg.input, "potential spec JSON")->required();
    rt->add_option("-o,--output", cfg.output, "output report JSON")->required();
    add_grid_flags(rt, cfg);

    auto* crt = app.add_subcommand(
        "certify", "emit the a-priori error certificate for Omega_{0,M} data");
    crt->add_option("input", cfg.input, "spectral data JSON")->required();
    crt->add_option("-o,--output", cfg.output, "certificate JSON path");
    double m_value = 0.0;
    auto* m_opt = crt->add_option("--M", m_value, "l^2 bound on the remainders");

    auto* det = app.add_subcommand(
        "detect", "finite-rank detection under the trivial-tail promise");
    det->add_option("input", cfg.input, "spectral data JSON")->required();
    det->add_option("-o,--output", cfg.output, "optional JSON output");
    std::size_t n_tilde = 0;
    auto* nt_opt = det->add_option("--ntilde", n_tilde,
                                   "promise window: this many consecutive trivial "
                                   "pairs imply a trivial tail")
                       ->check(CLI::PositiveNumber);
    double tol = 0.0;
    auto* tol_opt =
        det->add_option("--trivial-tol", tol, "tolerance for the trivial-pair test")
            ->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    if (rec->parsed()) cfg.command = Command::reconstruct;
    if (fwd->parsed()) cfg.command = Command::forward;
    if (rt->parsed()) cfg.command = Command::roundtrip;
    if (crt->parsed()) {
        cfg.command = Command::certify;
        if (m_opt->count() > 0) cfg.M = m_value;
    }
    if (det->parsed()) {
        cfg.command = Command::detect;
        if (nt_opt->count() > 0) cfg.n_tilde = n_tilde;
        if (tol_opt->count() > 0) cfg.trivial_tol = tol;
    }
    return seashell::run(cfg);
}
