#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ergent/dynamics.hpp"
#include "ergent/errors.hpp"
#include "ergent/entanglement.hpp"
#include "ergent/experiments.hpp"
#include "ergent/multicharge.hpp"
#include "ergent/spectra.hpp"
#include "ergent/states.hpp"
#include "ergent/transfer.hpp"

namespace ergent::io {

// Numbers in CSV output are printed with "%.17g": lossless round-trip and
// byte-identical across runs.
std::string format_double(double x);

std::string spectrum_csv(const Spectrum& s);        // header: index,energy
std::string profile_csv(const StateProfile& phi);   // header: index,re,im
std::string return_series_csv(const ReturnSeries& rs);  // header: t,re,im,p
std::string gram_csv(const GramMatrix& g);          // expanded; header: j,k,re,im
std::string sweep_csv(const SweepResult& result);
std::string ramp_csv(const RampScan& scan);
std::string capacity_csv(const std::vector<CapacityRow>& rows, double epsilon,
                         double gamma, double kappa);

nlohmann::json spectrum_json(const Spectrum& s);
Spectrum spectrum_from_json(const nlohmann::json& j);

nlohmann::json profile_json(const StateProfile& phi);
StateProfile profile_from_json(const nlohmann::json& j, bool* renormalized = nullptr);

nlohmann::json return_series_json(const ReturnSeries& rs);

// Toeplitz Grams are stored compressed (first row + first column) with an
// expansion flag; general Grams store full entries.
nlohmann::json gram_json(const GramMatrix& g);
GramMatrix gram_from_json(const nlohmann::json& j);

nlohmann::json purity_report_json(const PurityReport& rep);
nlohmann::json transfer_diagnostics_json(const TransferDiagnostics& diag);

ChargeSet charge_set_from_json(const nlohmann::json& j);

// Strict parse: unknown keys are rejected.
SweepSpec sweep_spec_from_json(const nlohmann::json& j);

nlohmann::json error_json(errc code, const std::string& message);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// CSV profile loader, one "index,re,im" row per amplitude.
StateProfile profile_from_csv(const std::string& text, bool* renormalized = nullptr);

// Dense complex matrix as JSON: [[ [re,im], ... ], ...].
Eigen::MatrixXcd complex_matrix_from_json(const nlohmann::json& j);

}  // namespace ergent::io
