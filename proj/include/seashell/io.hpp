#ifndef SEASHELL_IO_HPP
#define SEASHELL_IO_HPP

#include <cstddef>
#include <string>

#include "seashell/certify.hpp"
#include "seashell/forward_oracle.hpp"
#include "seashell/reconstruction.hpp"
#include "seashell/spectral_data.hpp"

namespace seashell {

// Spectral data JSON: {"lambda":[...], "alpha":[...], "M": number|null, "omega_hint": number|null}
SpectralData parse_spectral_data(const std::string& json_text);
SpectralData read_spectral_data(const std::string& path);
std::string spectral_data_json(const SpectralData& data);
void write_spectral_data(const SpectralData& data, const std::string& path);

// Potential spec JSON: {"builtin":"zero|constant|bump|step|hat", "constant":c}
// or {"samples":[...]}, plus "h", "H" and the pair count "count".
struct PotentialInput {
    PotentialSpec spec;
    std::size_t count = 0;
};
PotentialInput parse_potential_spec(const std::string& json_text);
PotentialInput read_potential_spec(const std::string& path);

// CSV "x,q,k_diag" with 17 significant digits, plus the JSON sidecar
// {"h","H","varpi","N"}.
std::string reconstruction_csv(const Reconstruction& rec);
std::string reconstruction_sidecar_json(const Reconstruction& rec);

std::string certificate_json(const Certificate& cert);
std::string certificate_summary(const Certificate& cert);

struct RoundtripReport {
    double e_n = 0.0;
    double h_in = 0.0, H_in = 0.0;
    double h_rec = 0.0, H_rec = 0.0;
    double varpi = 0.0;
    std::size_t count = 0;
    std::size_t m = 0;
};
std::string roundtrip_report_json(const RoundtripReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace seashell

#endif
