#include "ergent/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ergent/errors.hpp"

namespace ergent::io {

using nlohmann::json;

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& what) {
    require(j.is_object(), errc::configuration, what + " must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        require(allowed.count(it.key()) > 0, errc::configuration,
                what + ": unknown key \"" + it.key() + "\"");
}

json complex_to_json(const std::complex<double>& z) {
    return json::array({z.real(), z.imag()});
}

std::complex<double> complex_from_json(const json& j) {
    require(j.is_array() && j.size() == 2, errc::malformed_input,
            "complex numbers are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string spectrum_csv(const Spectrum& s) {
    std::ostringstream out;
    out << "index,energy\n";
    for (int n = 0; n < s.d_B(); ++n)
        out << n << ',' << format_double(s.energies[n]) << '\n';
    return out.str();
}

std::string profile_csv(const StateProfile& phi) {
    std::ostringstream out;
    out << "index,re,im\n";
    for (int n = 0; n < phi.d_B(); ++n)
        out << n << ',' << format_double(phi.amplitudes[n].real()) << ','
            << format_double(phi.amplitudes[n].imag()) << '\n';
    return out.str();
}

std::string return_series_csv(const ReturnSeries& rs) {
    std::ostringstream out;
    out << "t,re,im,p\n";
    for (std::size_t i = 0; i < rs.times.size(); ++i)
        out << format_double(rs.times[i]) << ',' << format_double(rs.amplitudes[i].real())
            << ',' << format_double(rs.amplitudes[i].imag()) << ','
            << format_double(rs.probabilities[i]) << '\n';
    return out.str();
}

std::string gram_csv(const GramMatrix& g) {
    std::ostringstream out;
    out << "j,k,re,im\n";
    for (int j = 0; j < g.d_A; ++j)
        for (int k = 0; k < g.d_A; ++k)
            out << j << ',' << k << ',' << format_double(g.entries(j, k).real()) << ','
                << format_double(g.entries(j, k).imag()) << '\n';
    return out.str();
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "ensemble,profile,d_A,d_B,t0,n_real,mean_purity,sem_purity,mean_eta2,"
           "excess_times_dB\n";
    for (const auto& r : result.rows)
        out << r.ensemble << ',' << r.profile << ',' << r.d_A << ',' << r.d_B << ','
            << format_double(r.t0) << ',' << r.n_real << ','
            << format_double(r.mean_purity) << ',' << format_double(r.sem_purity) << ','
            << format_double(r.mean_eta2) << ',' << format_double(r.excess_times_dB)
            << '\n';
    return out.str();
}

std::string ramp_csv(const RampScan& scan) {
    std::ostringstream out;
    out << "t,mean_sff\n";
    for (std::size_t i = 0; i < scan.times.size(); ++i)
        out << format_double(scan.times[i]) << ',' << format_double(scan.mean_sff[i])
            << '\n';
    return out.str();
}

std::string capacity_csv(const std::vector<CapacityRow>& rows, double epsilon,
                         double gamma, double kappa) {
    std::ostringstream out;
    out << "case,d_A,epsilon,gamma,kappa,min_dB\n";
    for (const auto& r : rows) {
        auto line = [&](const char* name, double bound) {
            out << name << ',' << r.d_A << ',' << format_double(epsilon) << ','
                << format_double(gamma) << ',' << format_double(kappa) << ','
                << format_double(bound) << '\n';
        };
        line("ergodic_smooth", r.ergodic_smooth);
        line("generic_or_infiniteT", r.rmt_generic);
        line("poisson_generic", r.poisson_generic);
    }
    return out.str();
}

json spectrum_json(const Spectrum& s) {
    return json{{"d_B", s.d_B()},
                {"ensemble", ensemble_name(s.ensemble)},
                {"unfolded", s.unfolded},
                {"energies", s.energies}};
}

Spectrum spectrum_from_json(const json& j) {
    check_keys(j, {"d_B", "ensemble", "unfolded", "energies"}, "spectrum");
    require(j.contains("energies"), errc::malformed_input, "spectrum: missing energies");
    Spectrum s;
    s.energies = j.at("energies").get<std::vector<double>>();
    s.ensemble = j.contains("ensemble")
                     ? ensemble_from_name(j.at("ensemble").get<std::string>())
                     : Spectrum::Ensemble::custom;
    s.unfolded = j.value("unfolded", false);
    if (j.contains("d_B"))
        require(j.at("d_B").get<int>() == s.d_B(), errc::malformed_input,
                "spectrum: d_B does not match the energy count");
    s.validate();
    return s;
}

json profile_json(const StateProfile& phi) {
    json amps = json::array();
    for (const auto& a : phi.amplitudes) amps.push_back(complex_to_json(a));
    return json{{"d_B", phi.d_B()}, {"profile", profile_name(phi.tag)},
                {"amplitudes", amps}};
}

StateProfile profile_from_json(const json& j, bool* renormalized) {
    check_keys(j, {"d_B", "profile", "amplitudes"}, "profile");
    require(j.contains("amplitudes"), errc::malformed_input, "profile: missing amplitudes");
    std::vector<std::complex<double>> amps;
    for (const auto& a : j.at("amplitudes")) amps.push_back(complex_from_json(a));
    StateProfile phi = custom_profile(std::move(amps), renormalized);
    if (j.contains("profile")) phi.tag = profile_from_name(j.at("profile").get<std::string>());
    if (j.contains("d_B"))
        require(j.at("d_B").get<int>() == phi.d_B(), errc::malformed_input,
                "profile: d_B does not match the amplitude count");
    return phi;
}

json return_series_json(const ReturnSeries& rs) {
    json amps = json::array();
    for (const auto& a : rs.amplitudes) amps.push_back(complex_to_json(a));
    return json{{"times", rs.times},
                {"amplitudes", amps},
                {"probabilities", rs.probabilities}};
}

json gram_json(const GramMatrix& g) {
    json out{{"d_A", g.d_A}, {"t0", g.t0}, {"toeplitz", g.toeplitz}};
    if (g.toeplitz) {
        json row = json::array(), col = json::array();
        for (int k = 0; k < g.d_A; ++k) {
            row.push_back(complex_to_json(g.entries(0, k)));
            col.push_back(complex_to_json(g.entries(k, 0)));
        }
        out["first_row"] = row;
        out["first_col"] = col;
    } else {
        json rows = json::array();
        for (int j = 0; j < g.d_A; ++j) {
            json row = json::array();
            for (int k = 0; k < g.d_A; ++k) row.push_back(complex_to_json(g.entries(j, k)));
            rows.push_back(row);
        }
        out["entries"] = rows;
    }
    return out;
}

GramMatrix gram_from_json(const json& j) {
    check_keys(j, {"d_A", "t0", "toeplitz", "first_row", "first_col", "entries"}, "gram");
    GramMatrix g;
    g.d_A = j.at("d_A").get<int>();
    g.t0 = j.at("t0").get<double>();
    g.toeplitz = j.at("toeplitz").get<bool>();
    require(g.d_A >= 1, errc::malformed_input, "gram: d_A must be >= 1");
    g.entries.resize(g.d_A, g.d_A);
    if (g.toeplitz) {
        const auto& row = j.at("first_row");
        const auto& col = j.at("first_col");
        require(int(row.size()) == g.d_A && int(col.size()) == g.d_A, errc::malformed_input,
                "gram: generator length mismatch");
        for (int jj = 0; jj < g.d_A; ++jj)
            for (int k = 0; k < g.d_A; ++k)
                g.entries(jj, k) = k >= jj ? complex_from_json(row[k - jj])
                                           : complex_from_json(col[jj - k]);
    } else {
        const auto& rows = j.at("entries");
        require(int(rows.size()) == g.d_A, errc::malformed_input, "gram: row count mismatch");
        for (int jj = 0; jj < g.d_A; ++jj) {
            require(int(rows[jj].size()) == g.d_A, errc::malformed_input,
                    "gram: column count mismatch");
            for (int k = 0; k < g.d_A; ++k) g.entries(jj, k) = complex_from_json(rows[jj][k]);
        }
    }
    g.validate();
    return g;
}

json purity_report_json(const PurityReport& rep) {
    json higher = json::object();
    for (const auto& [alpha, value] : rep.higher_purities)
        higher[std::to_string(alpha)] = value;
    return json{{"purity_formula", rep.purity_formula},
                {"purity_direct", rep.purity_direct},
                {"purity_gram", rep.purity_gram},
                {"eta2", rep.eta2},
                {"higher_purities", higher},
                {"max_discrepancy", rep.max_discrepancy}};
}

json transfer_diagnostics_json(const TransferDiagnostics& diag) {
    return json{{"gram_eigenvalues", diag.gram_eigenvalues},
                {"r_max", diag.r_max},
                {"r_min", diag.r_min},
                {"worst_case_error", diag.worst_case_error},
                {"eta2", diag.eta2},
                {"bd_product", diag.bd_product}};
}

ChargeSet charge_set_from_json(const json& j) {
    check_keys(j, {"qA", "QB"}, "charge set");
    require(j.contains("qA") && j.contains("QB"), errc::malformed_input,
            "charge set needs qA and QB tables");
    auto load = [](const json& table, const char* name) {
        require(table.is_array() && !table.empty(), errc::malformed_input,
                std::string(name) + " must be a non-empty array of rows");
        const std::size_t cols = table[0].size();
        require(cols >= 1, errc::malformed_input, std::string(name) + " has empty rows");
        Eigen::MatrixXd m(table.size(), cols);
        for (std::size_t r = 0; r < table.size(); ++r) {
            require(table[r].is_array() && table[r].size() == cols, errc::malformed_input,
                    std::string(name) + " rows have inconsistent lengths");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = table[r][c].get<double>();
        }
        return m;
    };
    ChargeSet charges;
    charges.a_eigenvalues = load(j.at("qA"), "qA");
    charges.b_eigenvalues = load(j.at("QB"), "QB");
    charges.validate();
    return charges;
}

SweepSpec sweep_spec_from_json(const json& j) {
    check_keys(j,
               {"ensembles", "profiles", "d_A_list", "d_B_list", "t0", "n_realizations",
                "base_seed", "gaussian_center_frac", "gaussian_sigma_frac",
                "gibbs_beta_span", "cross_check_direct"},
               "sweep config");
    for (const char* key : {"ensembles", "profiles", "d_A_list", "d_B_list",
                            "n_realizations", "base_seed"})
        require(j.contains(key), errc::configuration,
                std::string("sweep config: missing key \"") + key + "\"");
    SweepSpec spec;
    for (const auto& e : j.at("ensembles"))
        spec.ensembles.push_back(ensemble_from_name(e.get<std::string>()));
    for (const auto& p : j.at("profiles"))
        spec.profiles.push_back(profile_from_name(p.get<std::string>()));
    spec.d_A_list = j.at("d_A_list").get<std::vector<int>>();
    spec.d_B_list = j.at("d_B_list").get<std::vector<int>>();
    if (j.contains("t0")) {
        if (j.at("t0").is_string()) {
            require(j.at("t0").get<std::string>() == "auto", errc::configuration,
                    "sweep config: t0 must be a positive number or \"auto\"");
            spec.t0_auto = true;
        } else {
            spec.t0_auto = false;
            spec.t0_value = j.at("t0").get<double>();
        }
    }
    spec.n_realizations = j.at("n_realizations").get<int>();
    spec.base_seed = j.at("base_seed").get<std::uint64_t>();
    spec.gaussian_center_frac = j.value("gaussian_center_frac", spec.gaussian_center_frac);
    spec.gaussian_sigma_frac = j.value("gaussian_sigma_frac", spec.gaussian_sigma_frac);
    spec.gibbs_beta_span = j.value("gibbs_beta_span", spec.gibbs_beta_span);
    spec.cross_check_direct = j.value("cross_check_direct", spec.cross_check_direct);
    spec.validate();
    return spec;
}

json error_json(errc code, const std::string& message) {
    return json{{"error",
                 {{"kind", errc_name(code)},
                  {"message", message},
                  {"exit", exit_status_for(code)}}}};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), errc::io_failure, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    require(out.good(), errc::io_failure, "cannot write " + path);
    out << content;
    require(out.good(), errc::io_failure, "write failed for " + path);
}

StateProfile profile_from_csv(const std::string& text, bool* renormalized) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::complex<double>> amps;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("index", 0) == 0) continue;  // header
        }
        int idx;
        double re, im;
        require(std::sscanf(line.c_str(), "%d,%lf,%lf", &idx, &re, &im) == 3,
                errc::malformed_input, "profile CSV: bad row \"" + line + "\"");
        amps.emplace_back(re, im);
    }
    return custom_profile(std::move(amps), renormalized);
}

Eigen::MatrixXcd complex_matrix_from_json(const json& j) {
    require(j.is_array() && !j.empty(), errc::malformed_input,
            "matrix must be a non-empty array of rows");
    const std::size_t cols = j[0].size();
    Eigen::MatrixXcd m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
        require(j[r].is_array() && j[r].size() == cols, errc::malformed_input,
                "matrix rows have inconsistent lengths");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

}  // namespace ergent::io
