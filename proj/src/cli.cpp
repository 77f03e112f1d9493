#include "ergent/cli.hpp"

#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ergent/dynamics.hpp"
#include "ergent/entanglement.hpp"
#include "ergent/errors.hpp"
#include "ergent/experiments.hpp"
#include "ergent/io.hpp"
#include "ergent/multicharge.hpp"
#include "ergent/rng.hpp"
#include "ergent/spectra.hpp"
#include "ergent/states.hpp"
#include "ergent/svg.hpp"
#include "ergent/transfer.hpp"

namespace ergent {

namespace {

using nlohmann::json;

class Params {
  public:
    Params(const std::map<std::string, std::string>& kv, std::set<std::string> allowed)
        : kv_(kv) {
        for (const auto& [key, value] : kv_)
            require(allowed.count(key) > 0, errc::configuration,
                    "unknown parameter \"" + key + "\"");
    }

    bool has(const std::string& key) const { return kv_.count(key) > 0; }

    std::string str(const std::string& key, const std::string& fallback = "") const {
        auto it = kv_.find(key);
        return it == kv_.end() ? fallback : it->second;
    }

    std::string required_str(const std::string& key) const {
        require(has(key), errc::configuration, "missing required parameter \"" + key + "\"");
        return kv_.at(key);
    }

    long long integer(const std::string& key, long long fallback) const {
        if (!has(key)) return fallback;
        return parse_int(key, kv_.at(key));
    }

    long long required_int(const std::string& key) const {
        return parse_int(key, required_str(key));
    }

    double number(const std::string& key, double fallback) const {
        if (!has(key)) return fallback;
        return parse_double(key, kv_.at(key));
    }

    std::uint64_t seed(const std::string& key, std::uint64_t fallback) const {
        if (!has(key)) return fallback;
        return static_cast<std::uint64_t>(parse_int(key, kv_.at(key)));
    }

    std::vector<int> int_list(const std::string& key) const {
        std::vector<int> out;
        std::stringstream ss(required_str(key));
        std::string item;
        while (std::getline(ss, item, ','))
            out.push_back(static_cast<int>(parse_int(key, item)));
        require(!out.empty(), errc::configuration, "empty list for \"" + key + "\"");
        return out;
    }

  private:
    static long long parse_int(const std::string& key, const std::string& text) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(text, &pos);
            require(pos == text.size(), errc::configuration, "");
            return v;
        } catch (...) {
            fail(errc::configuration, "parameter \"" + key + "\" is not an integer: " + text);
        }
    }
    static double parse_double(const std::string& key, const std::string& text) {
        try {
            std::size_t pos = 0;
            double v = std::stod(text, &pos);
            require(pos == text.size(), errc::configuration, "");
            return v;
        } catch (...) {
            fail(errc::configuration, "parameter \"" + key + "\" is not a number: " + text);
        }
    }

    std::map<std::string, std::string> kv_;
};

std::string resolve_output(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("ERGENT_OUT_DIR");
    if (!dir || !*dir) return path;
    std::string d(dir);
    if (d.back() != '/') d += '/';
    return d + path;
}

void check_format(const std::string& format, std::set<std::string> allowed) {
    require(allowed.count(format) > 0, errc::configuration,
            "unsupported format \"" + format + "\" for this subcommand");
}

struct SpectrumArgs {
    Spectrum spectrum;
    double spacing = 1.0;
};

// Builds the working spectrum from --ensemble/--d-b/--seed/--spacing or a
// user Hamiltonian/spectrum file.
SpectrumArgs build_spectrum(const Params& p) {
    SpectrumArgs out;
    out.spacing = p.number("spacing", 1.0);
    if (p.has("hamiltonian_file")) {
        json j = json::parse(io::read_text_file(p.required_str("hamiltonian_file")));
        out.spectrum = diagonalize_hermitian(io::complex_matrix_from_json(j)).spectrum;
        return out;
    }
    if (p.has("spectrum_file")) {
        json j = json::parse(io::read_text_file(p.required_str("spectrum_file")));
        out.spectrum = io::spectrum_from_json(j);
        return out;
    }
    auto ensemble = ensemble_from_name(p.str("ensemble", "gue"));
    int d_B = static_cast<int>(p.required_int("d_b"));
    std::uint64_t seed = p.seed("seed", 1);
    switch (ensemble) {
        case Spectrum::Ensemble::gue:
            out.spectrum = sample_gue_spectrum(d_B, seed);
            break;
        case Spectrum::Ensemble::poisson:
            out.spectrum = sample_poisson_spectrum(d_B, out.spacing, seed);
            break;
        case Spectrum::Ensemble::picket_fence:
            out.spectrum = picket_fence_spectrum(d_B, out.spacing);
            break;
        case Spectrum::Ensemble::custom:
            fail(errc::configuration,
                 "ensemble \"custom\" requires --hamiltonian-file or --spectrum-file");
    }
    return out;
}

StateProfile build_profile(const Params& p, const Spectrum& s, std::uint64_t seed) {
    if (p.has("profile_file")) {
        std::string path = p.required_str("profile_file");
        bool renorm = false;
        StateProfile phi;
        if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
            phi = io::profile_from_csv(io::read_text_file(path), &renorm);
        else
            phi = io::profile_from_json(json::parse(io::read_text_file(path)), &renorm);
        require(phi.d_B() == s.d_B(), errc::pairing_mismatch,
                "profile file length does not match d_B");
        return phi;
    }
    auto tag = profile_from_name(p.str("profile", "flat"));
    switch (tag) {
        case StateProfile::Profile::flat:
            return flat_state(s.d_B());
        case StateProfile::Profile::gaussian: {
            double e0 = p.number("e0", s.min_energy() + 0.5 * s.span());
            double sigma = p.number("sigma", 0.125 * s.span());
            return gaussian_wavepacket(s, e0, sigma);
        }
        case StateProfile::Profile::gibbs:
            return coherent_gibbs_state(s, p.number("beta", 4.0 / s.span()));
        case StateProfile::Profile::haar_random:
            return haar_random_state(s.d_B(), seed);
        case StateProfile::Profile::custom:
            fail(errc::configuration, "profile \"custom\" requires --profile-file");
    }
    fail(errc::configuration, "unreachable profile tag");
}

// Resolves --t0: explicit value (spectrum used as-is), "auto" (unfold,
// ramp-window rule), or "auto-exact" (picket fence: one full Fourier
// period 2 pi / (d_B spacing); other ensembles fall back to "auto").
struct ResolvedProtocol {
    Spectrum spectrum;
    double t0 = 0.0;
};

ResolvedProtocol resolve_t0(const Params& p, const SpectrumArgs& sa, int d_A) {
    ResolvedProtocol out;
    std::string t0_spec = p.str("t0", "auto");
    if (t0_spec == "auto-exact" &&
        sa.spectrum.ensemble == Spectrum::Ensemble::picket_fence) {
        out.spectrum = sa.spectrum;
        out.t0 = 2.0 * std::numbers::pi / (sa.spectrum.d_B() * sa.spacing);
        return out;
    }
    if (t0_spec == "auto" || t0_spec == "auto-exact") {
        out.spectrum = unfold(sa.spectrum);
        out.t0 = sweep_auto_t0(d_A, out.spectrum.d_B(), out.spectrum.d_B());
        return out;
    }
    try {
        std::size_t pos = 0;
        out.t0 = std::stod(t0_spec, &pos);
        require(pos == t0_spec.size() && out.t0 > 0.0, errc::configuration, "");
    } catch (const Error&) {
        throw;
    } catch (...) {
        fail(errc::configuration, "t0 must be a positive number, \"auto\" or \"auto-exact\"");
    }
    require(out.t0 > 0.0, errc::configuration, "t0 must be positive");
    out.spectrum = sa.spectrum;
    return out;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
    Params p(cfg.parameters, {"ensemble", "d_b", "seed", "spacing", "unfold",
                              "hamiltonian_file", "spectrum_file"});
    std::string format = cfg.format.empty() ? "csv" : cfg.format;
    check_format(format, {"csv", "json"});
    SpectrumArgs sa = build_spectrum(p);
    Spectrum s = p.str("unfold", "false") == "true" ? unfold(sa.spectrum) : sa.spectrum;
    std::ostringstream summary;
    summary << "spectrum ensemble=" << ensemble_name(s.ensemble) << " d_B=" << s.d_B()
            << " span=" << s.span();
    if (s.d_B() >= 2 && s.span() > 0.0) summary << " t_H=" << heisenberg_time(s);
    if (s.d_B() >= 3) summary << " spacing_ratio=" << spacing_ratio_statistic(s);
    if (!cfg.output_path.empty()) {
        std::string path = resolve_output(cfg.output_path);
        io::write_text_file(path, format == "csv" ? io::spectrum_csv(s)
                                                  : io::spectrum_json(s).dump(2) + "\n");
        summary << " -> " << path;
    }
    out << summary.str() << '\n';
    return 0;
}

int cmd_purity(const RunConfig& cfg, std::ostream& out) {
    Params p(cfg.parameters,
             {"ensemble", "profile", "d_a", "d_b", "seed", "t0", "spacing", "beta", "e0",
              "sigma", "hamiltonian_file", "spectrum_file", "profile_file"});
    std::string format = cfg.format.empty() ? "json" : cfg.format;
    check_format(format, {"json"});
    int d_A = static_cast<int>(p.required_int("d_a"));
    SpectrumArgs sa = build_spectrum(p);
    ResolvedProtocol rp = resolve_t0(p, sa, d_A);
    std::uint64_t seed = p.seed("seed", 1);
    StateProfile phi = build_profile(p, rp.spectrum, derive_seed(seed, 1));
    ProtocolConfig pc{d_A, rp.t0, rp.spectrum, phi};
    PurityReport rep = purity_report(pc);
    out << "purity=" << io::format_double(rep.purity_formula) << " eta2="
        << io::format_double(rep.eta2) << " t0=" << io::format_double(rp.t0)
        << " max_discrepancy=" << io::format_double(rep.max_discrepancy) << '\n';
    if (!cfg.output_path.empty()) {
        json j = io::purity_report_json(rep);
        j["d_A"] = d_A;
        j["d_B"] = rp.spectrum.d_B();
        j["t0"] = rp.t0;
        j["ensemble"] = ensemble_name(rp.spectrum.ensemble);
        j["profile"] = profile_name(phi.tag);
        io::write_text_file(resolve_output(cfg.output_path), j.dump(2) + "\n");
    }
    return 0;
}

int cmd_transfer(const RunConfig& cfg, std::ostream& out) {
    Params p(cfg.parameters,
             {"ensemble", "profile", "d_a", "d_b", "seed", "t0", "spacing", "beta", "e0",
              "sigma", "hamiltonian_file", "spectrum_file", "profile_file"});
    std::string format = cfg.format.empty() ? "json" : cfg.format;
    check_format(format, {"json"});
    int d_A = static_cast<int>(p.required_int("d_a"));
    SpectrumArgs sa = build_spectrum(p);
    ResolvedProtocol rp = resolve_t0(p, sa, d_A);
    StateProfile phi = build_profile(p, rp.spectrum, derive_seed(p.seed("seed", 1), 1));
    GramMatrix g = krylov_gram(rp.spectrum, phi, rp.t0, d_A);
    TransferDiagnostics diag = transfer_diagnostics(g);
    BhatiaDavisCheck bd = bhatia_davis_check(diag);
    out << "worst_case_error=" << io::format_double(diag.worst_case_error)
        << " eta2=" << io::format_double(diag.eta2)
        << " bhatia_davis=" << (bd.holds ? "holds" : "violated")
        << " slack=" << io::format_double(bd.slack) << '\n';
    if (!cfg.output_path.empty()) {
        json j = io::transfer_diagnostics_json(diag);
        j["bhatia_davis_holds"] = bd.holds;
        j["bhatia_davis_slack"] = bd.slack;
        j["gram"] = io::gram_json(g);
        io::write_text_file(resolve_output(cfg.output_path), j.dump(2) + "\n");
    }
    return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Params p(cfg.parameters, {"config", "threads"});
    std::string format = cfg.format.empty() ? "csv" : cfg.format;
    check_format(format, {"csv"});
    json j = json::parse(io::read_text_file(p.required_str("config")),
                         nullptr, true, /*ignore_comments=*/false);
    SweepSpec spec = io::sweep_spec_from_json(j);
    int threads = static_cast<int>(p.integer("threads", 0));
    SweepResult result = run_purity_sweep(spec, threads);
    for (const auto& e : result.errors)
        err << json{{"row_error",
                     {{"ensemble", e.ensemble},
                      {"profile", e.profile},
                      {"d_A", e.d_A},
                      {"d_B", e.d_B},
                      {"message", e.message}}}}
                   .dump()
            << '\n';
    std::string csv = io::sweep_csv(result);
    if (!cfg.output_path.empty())
        io::write_text_file(resolve_output(cfg.output_path), csv);
    else
        out << csv;
    out << "sweep rows=" << result.rows.size() << " row_errors=" << result.errors.size()
        << '\n';
    return 0;
}

int cmd_ramp(const RunConfig& cfg, std::ostream& out) {
    Params p(cfg.parameters, {"ensemble", "d_b", "t_min", "t_max", "points", "n_real",
                              "seed", "fit_lo", "fit_hi", "threads"});
    std::string format = cfg.format.empty() ? "csv" : cfg.format;
    check_format(format, {"csv", "svg"});
    auto ensemble = ensemble_from_name(p.str("ensemble", "gue"));
    int d_B = static_cast<int>(p.required_int("d_b"));
    double t_min = p.number("t_min", 0.0);
    double t_max = p.number("t_max", 3.0 * 2.0 * std::numbers::pi);
    int points = static_cast<int>(p.integer("points", 120));
    require(points >= 2 && t_max > t_min, errc::configuration, "bad ramp grid");
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = t_min + (t_max - t_min) * i / (points - 1);
    RampScan scan = ramp_scan(ensemble, d_B, grid,
                              static_cast<int>(p.integer("n_real", 20)),
                              p.seed("seed", 1), static_cast<int>(p.integer("threads", 0)));
    std::ostringstream summary;
    summary << "ramp ensemble=" << ensemble_name(ensemble) << " d_B=" << d_B
            << " points=" << points;
    if (p.has("fit_lo") || p.has("fit_hi")) {
        LinearFit fit = fit_window(scan, p.number("fit_lo", t_min), p.number("fit_hi", t_max));
        summary << " fit_slope=" << io::format_double(fit.slope)
                << " fit_intercept=" << io::format_double(fit.intercept);
    }
    if (!cfg.output_path.empty()) {
        std::string path = resolve_output(cfg.output_path);
        if (format == "csv") {
            io::write_text_file(path, io::ramp_csv(scan));
        } else {
            // unfolded spectra: mark the Heisenberg time on the plot
            double t_h = 2.0 * std::numbers::pi;
            SvgSeries series{{}, "mean K(t)"};
            for (std::size_t i = 0; i < scan.times.size(); ++i)
                series.points.emplace_back(scan.times[i], scan.mean_sff[i]);
            SvgOptions opt;
            opt.title = "spectral form factor";
            opt.x_label = "t";
            opt.y_label = "K(t)";
            opt.log_y = true;
            opt.x_markers.emplace_back(t_h, "t_H");
            io::write_text_file(path, emit_svg({series}, opt));
        }
        summary << " -> " << path;
    }
    out << summary.str() << '\n';
    return 0;
}

int cmd_capacity(const RunConfig& cfg, std::ostream& out) {
    Params p(cfg.parameters, {"d_a", "epsilon", "gamma", "kappa"});
    std::string format = cfg.format.empty() ? "csv" : cfg.format;
    check_format(format, {"csv"});
    auto d_A_list = p.int_list("d_a");
    double epsilon = p.number("epsilon", 0.1);
    double gamma = p.number("gamma", 1.0);
    double kappa = p.number("kappa", 0.0);
    auto rows = capacity_comparison(d_A_list, epsilon, gamma, kappa);
    std::string csv = io::capacity_csv(rows, epsilon, gamma, kappa);
    out << csv;
    for (const auto& r : rows)
        out << "d_A=" << r.d_A
            << " generic/smooth=" << io::format_double(r.generic_over_smooth)
            << " poisson/rmt=" << io::format_double(r.poisson_over_rmt) << '\n';
    if (!cfg.output_path.empty())
        io::write_text_file(resolve_output(cfg.output_path), csv);
    return 0;
}

int cmd_multicharge(const RunConfig& cfg, std::ostream& out) {
    Params p(cfg.parameters, {"charges", "t0", "profile", "profile_file", "seed"});
    std::string format = cfg.format.empty() ? "json" : cfg.format;
    check_format(format, {"json"});
    json j = json::parse(io::read_text_file(p.required_str("charges")));
    ChargeSet charges = io::charge_set_from_json(j);
    double t0 = p.number("t0", 1.0);
    StateProfile phi;
    std::string tag = p.str("profile", "flat");
    if (p.has("profile_file")) {
        bool renorm = false;
        phi = io::profile_from_json(
            json::parse(io::read_text_file(p.required_str("profile_file"))), &renorm);
        require(phi.d_B() == charges.d_B(), errc::pairing_mismatch,
                "profile file length does not match the QB table");
    } else if (tag == "flat") {
        phi = flat_state(charges.d_B());
    } else if (tag == "haar_random") {
        phi = haar_random_state(charges.d_B(), p.seed("seed", 1));
    } else {
        fail(errc::configuration,
             "multicharge profiles are flat, haar_random, or --profile-file");
    }
    GramMatrix g = multicharge_gram(charges, phi, t0);
    auto [purity, e2] = multicharge_purity(charges, phi, t0);
    out << "multicharge purity=" << io::format_double(purity)
        << " eta2=" << io::format_double(e2) << " K=" << charges.num_charges() << '\n';
    if (!cfg.output_path.empty()) {
        json o{{"purity", purity}, {"eta2", e2}, {"gram", io::gram_json(g)}};
        io::write_text_file(resolve_output(cfg.output_path), o.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.subcommand == "spectrum") return cmd_spectrum(config, out);
        if (config.subcommand == "purity") return cmd_purity(config, out);
        if (config.subcommand == "transfer") return cmd_transfer(config, out);
        if (config.subcommand == "sweep") return cmd_sweep(config, out, err);
        if (config.subcommand == "ramp") return cmd_ramp(config, out);
        if (config.subcommand == "capacity") return cmd_capacity(config, out);
        if (config.subcommand == "multicharge") return cmd_multicharge(config, out);
        fail(errc::configuration, "unknown subcommand \"" + config.subcommand + "\"");
    } catch (const Error& e) {
        err << io::error_json(e.code(), e.what()).dump() << '\n';
        return exit_status_for(e.code());
    } catch (const json::exception& e) {
        err << io::error_json(errc::malformed_input, e.what()).dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << io::error_json(errc::configuration, e.what()).dump() << '\n';
        return 2;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"entanglement generation through ergodic dynamics: spectra, Krylov "
                 "Gram matrices, purity, operator-transfer diagnostics"};
    app.require_subcommand(1);

    struct SubSpec {
        const char* name;
        const char* description;
        std::vector<std::pair<std::string, const char*>> options;
        std::vector<std::pair<std::string, const char*>> flags;
    };
    const std::vector<SubSpec> subs = {
        {"spectrum",
         "generate or import an eigenvalue spectrum",
         {{"ensemble", "gue | poisson | picket_fence"},
          {"d-b", "complex-system dimension"},
          {"seed", "RNG seed"},
          {"spacing", "mean level spacing"},
          {"hamiltonian-file", "JSON Hermitian matrix to diagonalize"},
          {"spectrum-file", "JSON spectrum to import"}},
         {{"unfold", "rescale to unit mean spacing"}}},
        {"purity",
         "purity of the protocol state by all routes",
         {{"ensemble", "gue | poisson | picket_fence"},
          {"profile", "flat | gaussian | gibbs | haar_random"},
          {"d-a", "control-register dimension"},
          {"d-b", "complex-system dimension"},
          {"seed", "RNG seed"},
          {"t0", "kick step: number, auto, or auto-exact"},
          {"spacing", "mean level spacing"},
          {"beta", "gibbs inverse temperature"},
          {"e0", "gaussian center"},
          {"sigma", "gaussian width"},
          {"hamiltonian-file", "JSON Hermitian matrix"},
          {"spectrum-file", "JSON spectrum"},
          {"profile-file", "JSON or CSV amplitudes"}},
         {}},
        {"transfer",
         "Gram-spectrum operator-transfer diagnostics",
         {{"ensemble", "gue | poisson | picket_fence"},
          {"profile", "flat | gaussian | gibbs | haar_random"},
          {"d-a", "control-register dimension"},
          {"d-b", "complex-system dimension"},
          {"seed", "RNG seed"},
          {"t0", "kick step: number, auto, or auto-exact"},
          {"spacing", "mean level spacing"},
          {"beta", "gibbs inverse temperature"},
          {"e0", "gaussian center"},
          {"sigma", "gaussian width"},
          {"hamiltonian-file", "JSON Hermitian matrix"},
          {"spectrum-file", "JSON spectrum"},
          {"profile-file", "JSON or CSV amplitudes"}},
         {}},
        {"sweep",
         "ensemble-averaged purity over a config grid",
         {{"config", "sweep JSON config"}, {"threads", "worker cap (0 = all cores)"}},
         {}},
        {"ramp",
         "ensemble-averaged spectral form factor scan",
         {{"ensemble", "gue | poisson | picket_fence"},
          {"d-b", "complex-system dimension"},
          {"t-min", "grid start"},
          {"t-max", "grid end"},
          {"points", "grid size"},
          {"n-real", "realizations"},
          {"seed", "RNG seed"},
          {"fit-lo", "linear-fit window start"},
          {"fit-hi", "linear-fit window end"},
          {"threads", "worker cap"}},
         {}},
        {"capacity",
         "minimum d_B bounds for operator transfer",
         {{"d-a", "comma-separated control dimensions"},
          {"epsilon", "relative transfer error, in (0,1)"},
          {"gamma", "purity-criterion exponent"},
          {"kappa", "log exponent"}},
         {}},
        {"multicharge",
         "purity and Gram matrix of a multicharge coupling",
         {{"charges", "JSON charge tables {\"qA\": [[..]], \"QB\": [[..]]}"},
          {"t0", "kick step"},
          {"profile", "flat | haar_random"},
          {"profile-file", "JSON amplitudes"},
          {"seed", "RNG seed"}},
         {}},
    };

    RunConfig config;
    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, std::map<std::string, bool>> flag_values;
    std::map<std::string, std::pair<std::string, std::string>> out_fmt;

    for (const auto& sub : subs) {
        CLI::App* s = app.add_subcommand(sub.name, sub.description);
        for (const auto& [opt, help] : sub.options) {
            std::string key = opt;
            std::replace(key.begin(), key.end(), '-', '_');
            s->add_option_function<std::string>(
                "--" + opt,
                [&values, name = std::string(sub.name), key](const std::string& v) {
                    values[name][key] = v;
                },
                help);
        }
        for (const auto& [flg, help] : sub.flags) {
            std::string key = flg;
            std::replace(key.begin(), key.end(), '-', '_');
            s->add_flag_function(
                "--" + flg,
                [&flag_values, name = std::string(sub.name), key](std::int64_t) {
                    flag_values[name][key] = true;
                },
                help);
        }
        s->add_option_function<std::string>(
            "--output",
            [&out_fmt, name = std::string(sub.name)](const std::string& v) {
                out_fmt[name].first = v;
            },
            "artifact path (ERGENT_OUT_DIR prefixes relative paths)");
        s->add_option_function<std::string>(
            "--format",
            [&out_fmt, name = std::string(sub.name)](const std::string& v) {
                out_fmt[name].second = v;
            },
            "csv | json | svg (subcommand-dependent)");
        s->callback([&config, name = std::string(sub.name)] { config.subcommand = name; });
    }

    std::vector<const char*> argv;
    argv.push_back("ergent");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << io::error_json(errc::configuration, e.what()).dump() << '\n';
        return 2;
    }

    config.parameters = values[config.subcommand];
    for (const auto& [key, set] : flag_values[config.subcommand])
        if (set) config.parameters[key] = "true";
    config.output_path = out_fmt[config.subcommand].first;
    config.format = out_fmt[config.subcommand].second;
    return run(config, out, err);
}

}  // namespace ergent
