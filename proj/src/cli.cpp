#include "seashell/cli.hpp"

#include <iostream>
#include <stdexcept>
#include <string>

#include "seashell/certify.hpp"
#include "seashell/errors.hpp"
#include "seashell/forward_oracle.hpp"
#include "seashell/io.hpp"
#include "seashell/reconstruction.hpp"
#include "seashell/spectral_data.hpp"

namespace seashell {

namespace {

std::string sidecar_path(const std::string& csv_path) {
    const std::string ext = ".csv";
    if (csv_path.size() > ext.size() &&
        csv_path.compare(csv_path.size() - ext.size(), ext.size(), ext) == 0)
        return csv_path.substr(0, csv_path.size() - ext.size()) + ".json";
    return csv_path + ".json";
}

void require_output(const RunConfig& cfg) {
    if (cfg.output.empty())
        throw ValidationError("this command requires an output path");
}

void run_reconstruct(const RunConfig& cfg) {
    require_output(cfg);
    const SpectralData data = read_spectral_data(cfg.input);
    ReconstructOptions opts;
    opts.shift = cfg.shift;
    opts.scheme = cfg.scheme;
    const Reconstruction rec = reconstruct(data, cfg.m, opts);
    write_file(cfg.output, reconstruction_csv(rec));
    write_file(sidecar_path(cfg.output), reconstruction_sidecar_json(rec));
}

void run_forward(const RunConfig& cfg) {
    require_output(cfg);
    const PotentialInput in = read_potential_spec(cfg.input);
    write_spectral_data(make_spectral_data(in.spec, in.count), cfg.output);
}

void run_roundtrip(const RunConfig& cfg) {
    require_output(cfg);
    const PotentialInput in = read_potential_spec(cfg.input);
    const SpectralData data = make_spectral_data(in.spec, in.count);

    ReconstructOptions opts;
    opts.shift = cfg.shift;
    opts.scheme = cfg.scheme;
    const Reconstruction rec = reconstruct(data, cfg.m, opts);

    const PotentialSpec rebuilt = PotentialSpec::sampled(rec.q, rec.h, rec.H);
    const std::vector<double> mu = eigenvalues(rebuilt, in.count);

    RoundtripReport rep;
    rep.e_n = spectral_error(data.lambda, mu);
    rep.h_in = in.spec.h;
    rep.H_in = in.spec.H;
    rep.h_rec = rec.h;
    rep.H_rec = rec.H;
    rep.varpi = rec.varpi;
    rep.count = in.count;
    rep.m = cfg.m;
    write_file(cfg.output, roundtrip_report_json(rep));
}

void run_certify(const RunConfig& cfg) {
    const SpectralData data = read_spectral_data(cfg.input);
    std::optional<double> M = cfg.M ? cfg.M : data.M;
    if (!M)
        throw ValidationError("certify needs M (--M flag or \"M\" in the data file)");
    const Certificate cert = certify(data, *M, data.size());
    std::cout << certificate_summary(cert);
    if (!cfg.output.empty()) write_file(cfg.output, certificate_json(cert));
}

void run_detect(const RunConfig& cfg) {
    if (!cfg.n_tilde)
        throw ValidationError("detect needs --ntilde");
    const SpectralData data = read_spectral_data(cfg.input);
    const std::size_t n =
        detect_finite_rank(data, *cfg.n_tilde, cfg.trivial_tol.value_or(0.0));
    std::cout << n << "\n";
    if (!cfg.output.empty())
        write_file(cfg.output, "{\n  \"N\": " + std::to_string(n) + "\n}\n");
}

} // namespace

int run(const RunConfig& cfg) {
    try {
        switch (cfg.command) {
            case Command::reconstruct: run_reconstruct(cfg); break;
            case Command::forward: run_forward(cfg); break;
            case Command::roundtrip: run_roundtrip(cfg); break;
            case Command::certify: run_certify(cfg); break;
            case Command::detect: run_detect(cfg); break;
        }
        return 0;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CertificateError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

} // namespace seashell
