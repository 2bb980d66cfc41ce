#include "seashell/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "seashell/errors.hpp"

namespace seashell {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ValidationError(std::string("malformed JSON in ") + what);
    return j;
}

std::vector<double> number_array(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw ValidationError(std::string("missing or non-array field \"") + key + "\"");
    std::vector<double> v;
    for (const auto& e : j.at(key)) {
        if (!e.is_number())
            throw ValidationError(std::string("non-numeric entry in \"") + key + "\"");
        v.push_back(e.get<double>());
    }
    return v;
}

std::optional<double> optional_number(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    if (!j.at(key).is_number())
        throw ValidationError(std::string("field \"") + key + "\" must be a number or null");
    return j.at(key).get<double>();
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot open output file: " + path);
    out << contents;
    if (!out) throw ValidationError("failed writing output file: " + path);
}

SpectralData parse_spectral_data(const std::string& json_text) {
    const json j = parse_json(json_text, "spectral data");
    SpectralData data;
    data.lambda = number_array(j, "lambda");
    data.alpha = number_array(j, "alpha");
    data.M = optional_number(j, "M");
    data.omega_hint = optional_number(j, "omega_hint");
    data.check();
    return data;
}

SpectralData read_spectral_data(const std::string& path) {
    return parse_spectral_data(read_file(path));
}

std::string spectral_data_json(const SpectralData& data) {
    json j;
    j["lambda"] = data.lambda;
    j["alpha"] = data.alpha;
    j["M"] = data.M ? json(*data.M) : json(nullptr);
    j["omega_hint"] = data.omega_hint ? json(*data.omega_hint) : json(nullptr);
    return j.dump(2) + "\n";
}

void write_spectral_data(const SpectralData& data, const std::string& path) {
    write_file(path, spectral_data_json(data));
}

PotentialInput parse_potential_spec(const std::string& json_text) {
    const json j = parse_json(json_text, "potential spec");
    PotentialInput in;

    const bool has_builtin = j.contains("builtin") && !j.at("builtin").is_null();
    const bool has_samples = j.contains("samples") && !j.at("samples").is_null();
    if (has_builtin == has_samples)
        throw ValidationError("potential spec needs exactly one of \"builtin\" or \"samples\"");

    const double h = optional_number(j, "h").value_or(0.0);
    const double H = optional_number(j, "H").value_or(0.0);

    if (has_samples) {
        in.spec = PotentialSpec::sampled(number_array(j, "samples"), h, H);
    } else {
        const std::string name = j.at("builtin").get<std::string>();
        Builtin kind;
        if (name == "zero") kind = Builtin::zero;
        else if (name == "constant") kind = Builtin::constant;
        else if (name == "bump") kind = Builtin::bump;
        else if (name == "step") kind = Builtin::step;
        else if (name == "hat") kind = Builtin::hat;
        else throw ValidationError("unknown builtin potential: " + name);
        const double c = optional_number(j, "constant").value_or(0.0);
        in.spec = PotentialSpec::builtin(kind, c, h, H);
    }

    const auto count = optional_number(j, "count");
    if (!count || *count < 1.0)
        throw ValidationError("potential spec needs a positive \"count\"");
    in.count = static_cast<std::size_t>(*count);
    return in;
}

PotentialInput read_potential_spec(const std::string& path) {
    return parse_potential_spec(read_file(path));
}

std::string reconstruction_csv(const Reconstruction& rec) {
    std::string out = "x,q,k_diag\n";
    for (std::size_t i = 0; i < rec.grid.size(); ++i) {
        out += fmt17(rec.grid[i]);
        out += ',';
        out += fmt17(rec.q[i]);
        out += ',';
        out += fmt17(rec.k_diag[i]);
        out += '\n';
    }
    return out;
}

std::string reconstruction_sidecar_json(const Reconstruction& rec) {
    json j;
    j["h"] = rec.h;
    j["H"] = rec.H;
    j["varpi"] = rec.varpi;
    j["N"] = rec.n_used;
    return j.dump(2) + "\n";
}

std::string certificate_json(const Certificate& cert) {
    json j;
    j["M"] = cert.M;
    j["C_M1"] = cert.C1;
    j["C_Omega"] = cert.C_omega;
    j["c_eta"] = cert.c_eta;
    j["J"] = cert.J;
    j["delta_J"] = cert.delta_J;
    j["a_J"] = cert.a_J;
    j["C_M2"] = cert.C2;
    j["N0"] = cert.N0;
    j["N"] = cert.N;
    j["bound_q"] = cert.bound_q;
    j["bound_h"] = cert.bound_h;
    j["bound_H"] = cert.bound_H;
    return j.dump(2) + "\n";
}

std::string certificate_summary(const Certificate& cert) {
    std::ostringstream out;
    out << "certificate issued for N = " << cert.N << " data pairs (M = " << cert.M
        << ")\n"
        << "  constants: C_M1 = " << cert.C1 << ", C_M2 = " << cert.C2
        << " (J = " << cert.J << ", a_J = " << cert.a_J
        << ", delta_J = " << cert.delta_J << ")\n"
        << "  threshold: N_0 = " << cert.N0 << "\n"
        << "  |q_N - q|  <= " << cert.bound_q << "  (W^{-1,inf})\n"
        << "  |h_N - h|  <= " << cert.bound_h << "\n"
        << "  |H_N - H|  <= " << cert.bound_H << "\n";
    return out.str();
}

std::string roundtrip_report_json(const RoundtripReport& rep) {
    json j;
    j["e_N"] = rep.e_n;
    j["h_in"] = rep.h_in;
    j["H_in"] = rep.H_in;
    j["h_rec"] = rep.h_rec;
    j["H_rec"] = rep.H_rec;
    j["varpi"] = rep.varpi;
    j["count"] = rep.count;
    j["m"] = rep.m;
    return j.dump(2) + "\n";
}

} // namespace seashell
