// Command-line front end: sudden-death sweeps, measure comparisons, and
// simulated tomography. Emits CSV (9 significant digits) or JSON (full
// round-trip precision) for plotting.

#include <CLI11.hpp>
#include <json.hpp>

#include <entsim/channels.hpp>
#include <entsim/esd.hpp>
#include <entsim/io.hpp>
#include <entsim/mcompare.hpp>
#include <entsim/measures.hpp>
#include <entsim/optics.hpp>
#include <entsim/states.hpp>
#include <entsim/tomography.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string resolve_out(const std::string& path) {
    if (path.empty()) return path;
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    if (const char* dir = std::getenv("ENTSIM_OUT_DIR")) {
        return (std::filesystem::path(dir) / p).string();
    }
    return path;
}

// Emits rows either as CSV to `path` (or stdout when empty) or as a JSON
// array of objects keyed by the header names.
void emit_table(const std::string& path, const std::string& format, const std::string& header,
                const std::vector<std::vector<double>>& rows) {
    std::vector<std::string> cols;
    {
        std::stringstream ss(header);
        std::string c;
        while (std::getline(ss, c, ',')) cols.push_back(c);
    }
    std::string out;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json obj;
            for (size_t i = 0; i < row.size(); ++i) obj[cols.at(i)] = row[i];
            arr.push_back(obj);
        }
        out = arr.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << header << "\n";
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) os << ",";
                os << entsim::csv_number(row[i]);
            }
            os << "\n";
        }
        out = os.str();
    }
    if (path.empty()) {
        std::cout << out;
    } else {
        std::ofstream f(resolve_out(path));
        if (!f) throw ConfigError("cannot open output file: " + path);
        f << out;
    }
}

// Grid-ordered parallel map: results land at their grid index no matter
// which worker finishes first.
template <typename F>
std::vector<std::vector<double>> parallel_rows(int n, int jobs, F&& fn) {
    std::vector<std::vector<double>> rows(static_cast<size_t>(n));
    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = fn(i);
        return rows;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            rows[static_cast<size_t>(i)] = fn(i);
        }
    };
    std::vector<std::future<void>> futs;
    for (int j = 0; j < jobs; ++j) futs.push_back(std::async(std::launch::async, worker));
    for (auto& f : futs) f.get();
    return rows;
}

struct FamilySpec {
    std::string family = "x";
    double u = 0.2, v = 0.4;
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, z = 0.0;
    double x = 0.25;
    std::vector<double> ratios;   // qutrit level-decay ratios

    entsim::DensityMatrix state() const {
        if (family == "x") {
            if (!(u > 0.0 && u < 1.0)) throw ConfigError("x family needs 0 < u < 1");
            if (!(v > 0.0)) throw ConfigError("x family needs v > 0 (separable otherwise)");
            if (v * v > u * (1.0 - u) + 1e-12)
                throw ConfigError("x family needs v^2 <= u(1-u)");
            return entsim::x_state(u, {v, 0.0});
        }
        if (family == "general-outer") return entsim::general_x_state_rho2(a, b, c, d, {z, 0.0});
        if (family == "general-inner") return entsim::general_x_state_rho1(a, b, c, d, {z, 0.0});
        if (family == "qubit-qutrit-I") return entsim::qubit_qutrit_state_I(x);
        if (family == "qubit-qutrit-II") return entsim::qubit_qutrit_state_II(x);
        if (family == "two-qutrit") return entsim::two_qutrit_state(x);
        throw ConfigError("unknown family: " + family);
    }

    entsim::DampingModel model() const {
        if (family == "qubit-qutrit-I" || family == "qubit-qutrit-II") {
            double r1 = ratios.size() > 0 ? ratios[0] : 0.8;
            double r2 = ratios.size() > 1 ? ratios[1] : 0.6;
            return entsim::DampingModel::qubit_qutrit(r1, r2);
        }
        if (family == "two-qutrit") {
            double r1 = ratios.size() > 0 ? ratios[0] : 0.75;
            double r2 = ratios.size() > 1 ? ratios[1] : 1.0;
            return entsim::DampingModel::qutrit_pair(r1, r2);
        }
        return entsim::DampingModel::qubit_pair();
    }
};

entsim::LuoPair parse_luo(const std::string& spec) {
    auto comma = spec.find(',');
    if (comma == std::string::npos) throw ConfigError("--luo expects two names, e.g. sx,f01");
    try {
        return {entsim::luo_from_name(spec.substr(0, comma)),
                entsim::luo_from_name(spec.substr(comma + 1))};
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
}

std::string regime_letter(entsim::Regime r) {
    switch (r) {
        case entsim::Regime::Avoid: return "avoid";
        case entsim::Regime::Delay: return "delay";
        case entsim::Regime::Hasten: return "hasten";
        default: return "neutral";
    }
}

void add_family_flags(CLI::App* cmd, FamilySpec& fam) {
    cmd->add_option("--family", fam.family,
                    "state family: x, general-outer, general-inner, "
                    "qubit-qutrit-I, qubit-qutrit-II, two-qutrit")
        ->capture_default_str();
    cmd->add_option("--u", fam.u, "ground population of the x family")->capture_default_str();
    cmd->add_option("--v", fam.v, "coherence magnitude of the x family")->capture_default_str();
    cmd->add_option("--a", fam.a, "doubly-excited population (general X)");
    cmd->add_option("--b", fam.b, "|eg> population (general X)");
    cmd->add_option("--c", fam.c, "|ge> population (general X)");
    cmd->add_option("--d", fam.d, "ground population (general X)");
    cmd->add_option("--z", fam.z, "coherence magnitude (general X)");
    cmd->add_option("--x", fam.x, "mixing parameter of the qutrit families")
        ->capture_default_str();
    cmd->add_option("--ratios", fam.ratios, "qutrit level decay ratios r1,r2")
        ->delimiter(',');
}

int cmd_esd(const FamilySpec& fam, const std::string& mode, const std::string& luo_spec,
            bool sweep, int grid, int jobs, const std::string& out, const std::string& format) {
    auto rho = fam.state();
    rho.validate();
    auto model = fam.model();

    std::optional<entsim::LuoPair> luo;
    if (!luo_spec.empty()) {
        luo = parse_luo(luo_spec);
    } else if (mode == "double-not") {
        luo = entsim::LuoPair{entsim::Luo::SigmaX, entsim::Luo::SigmaX};
    } else if (mode == "single-not") {
        luo = entsim::LuoPair{entsim::Luo::SigmaX, entsim::Luo::Identity};
    } else if (mode != "none") {
        throw ConfigError("unknown --mode: " + mode);
    }

    auto p_end = entsim::esd_point(rho, model);
    std::printf("p_end %s\n",
                p_end ? entsim::csv_number(*p_end).c_str() : "none (asymptotic decay)");

    if (fam.family == "x") {
        entsim::XStateEsd cf{fam.u, fam.v};
        std::printf("closed_form p0 %s\n", entsim::csv_number(cf.p_end()).c_str());
        if (mode == "double-not")
            std::printf("closed_form pA %s pB %s\n",
                        entsim::csv_number(cf.pA_double()).c_str(),
                        entsim::csv_number(cf.pB_double()).c_str());
        if (mode == "single-not")
            std::printf("closed_form pA %s pB %s\n",
                        entsim::csv_number(cf.pA_single()).c_str(),
                        entsim::csv_number(cf.pB_single()).c_str());
    }

    if (luo) {
        auto b = entsim::manipulation_boundaries(rho, model, *luo, grid);
        std::printf("regimes avoid=%s delay=%s hasten=%s\n", b.any_avoid ? "yes" : "no",
                    b.any_delay ? "yes" : "no", b.any_hasten ? "yes" : "no");
        if (b.avoid_below)
            std::printf("avoid_below %s\n", entsim::csv_number(*b.avoid_below).c_str());
        if (b.delay_below)
            std::printf("delay_below %s\n", entsim::csv_number(*b.delay_below).c_str());
        if (sweep) {
            if (!p_end) throw NumericError("no death point to sweep before");
            double hi = *p_end;
            auto rows = parallel_rows(grid, jobs, [&](int i) -> std::vector<double> {
                double p_n = hi * (i + 0.5) / grid;
                auto death = entsim::esd_point_after(rho, model, p_n, *luo);
                auto reg = entsim::classify_manipulation(rho, model, p_n, *luo);
                return {p_n, death ? *death : 1.0, static_cast<double>(reg)};
            });
            emit_table(out, format, "p_n,p_end,regime", rows);
        }
    } else if (sweep) {
        auto rows = parallel_rows(grid, jobs, [&](int i) -> std::vector<double> {
            double p = static_cast<double>(i) / (grid - 1);
            auto ev = entsim::evolve(rho, model, p);
            return {p, entsim::negativity(ev), entsim::purity_of(ev.mat)};
        });
        emit_table(out, format, "p,negativity,purity", rows);
    }
    (void)regime_letter;
    return kExitOk;
}

int cmd_compare(bool optimize, int grid, const std::vector<double>& c0_list,
                const std::string& out, const std::string& format) {
    std::vector<std::vector<double>> rows;
    auto push = [&](double c0) {
        auto r = entsim::compare_qubit_pure(c0);
        rows.push_back({r.c0, r.neg, r.logneg, r.eof, 100 * r.q_neg, 100 * r.q_logneg,
                        100 * r.q_eof, 100 * r.d_nl, 100 * r.d_el, 100 * r.d_ne});
    };
    if (!c0_list.empty()) {
        for (double c0 : c0_list) {
            if (!(c0 > 0.0 && c0 < 1.0)) throw ConfigError("--c0 values must lie in (0,1)");
            push(c0);
        }
    } else {
        for (int i = 1; i < grid; ++i) push(static_cast<double>(i) / grid);
    }
    emit_table(out, format, "c0,N,LN,EOF,QN,QL,QE,dQNL,dQEL,dQNE", rows);
    if (optimize) {
        auto report = [&](const char* name, auto f) {
            auto m = entsim::local_maxima(f, 1e-4, 1.0 - 1e-4);
            if (m.empty()) throw NumericError("no interior maximum found");
            std::printf("%s max %.2f%% at c0 %.4f\n", name, 100 * m.front().value,
                        m.front().arg);
        };
        report("dQNL", [](double c) { return entsim::compare_qubit_pure(c).d_nl; });
        report("dQEL", [](double c) { return entsim::compare_qubit_pure(c).d_el; });
        report("dQNE", [](double c) { return entsim::compare_qubit_pure(c).d_ne; });
    }
    return kExitOk;
}

int cmd_qutrit(bool optimize, int grid, const std::vector<std::string>& points,
               const std::string& out, const std::string& format) {
    std::vector<std::vector<double>> rows;
    auto push = [&](double c0, double c1) {
        auto r = entsim::compare_qutrit_pure(c0, c1);
        rows.push_back({r.c0, r.c1, r.entropy, r.neg, r.conc, 100 * r.q_entropy, 100 * r.q_neg,
                        100 * r.q_conc, 100 * r.d_ne, 100 * r.d_ec, 100 * r.d_nc});
    };
    if (!points.empty()) {
        for (const auto& s : points) {
            auto colon = s.find(':');
            if (colon == std::string::npos)
                throw ConfigError("--point expects c0:c1, e.g. 0.3:0.8");
            push(std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1)));
        }
    } else {
        for (int i = 1; i < grid; ++i)
            for (int j = 1; j < grid; ++j) {
                double c0 = static_cast<double>(i) / grid;
                double c1 = static_cast<double>(j) / grid;
                if (c0 * c0 + c1 * c1 < 1.0) push(c0, c1);
            }
    }
    emit_table(out, format, "c0,c1,E,N,C,QE,QN,QC,dQNE,dQEC,dQNC", rows);
    if (optimize) {
        // The gaps are symmetric under permutations of the Schmidt
        // coefficients, so report |gap| at the canonical representative
        // with the two largest coefficients first.
        auto report = [&](const char* name, auto f) {
            auto m = entsim::max_over_qutrit_simplex(
                [&](double a, double b) { return std::abs(f(a, b)); });
            double c2sq = std::max(0.0, 1.0 - m.c0 * m.c0 - m.c1 * m.c1);
            std::array<double, 3> t{m.c0, m.c1, std::sqrt(c2sq)};
            std::sort(t.begin(), t.end());
            std::printf("%s max %.2f%% at c0 %.4f c1 %.4f\n", name, 100 * m.value, t[1], t[2]);
        };
        report("dQNE",
               [](double a, double b) { return entsim::compare_qutrit_pure(a, b).d_ne; });
        report("dQEC",
               [](double a, double b) { return entsim::compare_qutrit_pure(a, b).d_ec; });
        report("dQNC",
               [](double a, double b) { return entsim::compare_qutrit_pure(a, b).d_nc; });
    }
    return kExitOk;
}

entsim::DensityMatrix parse_tomo_state(const std::string& spec) {
    if (spec == "bell") {
        entsim::SchmidtState s{{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}, {2, 2}};
        return entsim::schmidt_pure_density(s);
    }
    if (spec.rfind("x:", 0) == 0) {
        auto rest = spec.substr(2);
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw ConfigError("--state x:u,v");
        double u = std::stod(rest.substr(0, comma));
        double v = std::stod(rest.substr(comma + 1));
        return entsim::x_state(u, {v, 0.0});
    }
    if (spec.rfind("schmidt:", 0) == 0) {
        double c0 = std::stod(spec.substr(8));
        entsim::SchmidtState s{{c0, std::sqrt(1.0 - c0 * c0)}, {2, 2}};
        return entsim::schmidt_pure_density(s);
    }
    throw ConfigError("unknown --state: " + spec + " (use bell, x:u,v, schmidt:c0)");
}

int cmd_tomo(const std::string& state_spec, double flux, std::optional<std::uint64_t> seed,
             bool noiseless, const std::string& decohere, const std::string& out,
             const std::string& report_path) {
    auto rho = parse_tomo_state(state_spec);
    if (!decohere.empty()) {
        auto colon = decohere.find(':');
        if (colon == std::string::npos) throw ConfigError("--decohere expects dt:tau (fs)");
        double dt = std::stod(decohere.substr(0, colon));
        double tau = std::stod(decohere.substr(colon + 1));
        double env = entsim::coherence_envelope(dt, tau);
        int n = rho.dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) rho.mat(i, j) *= env;
    }
    if (noiseless) seed.reset();
    auto records = entsim::simulate_counts(rho, flux, seed);
    if (!out.empty()) entsim::write_tomo_records(resolve_out(out), records);

    auto fit = entsim::mle_reconstruct(records);
    if (!fit.converged) {
        std::fprintf(stderr, "likelihood fit did not converge after %d iterations\n",
                     fit.iterations);
        return kExitNumeric;
    }
    nlohmann::json report = entsim::density_to_json(fit.rho);
    report["fidelity_vs_target"] = entsim::fidelity(fit.rho, rho);
    report["concurrence"] = entsim::concurrence(fit.rho);
    report["purity"] = entsim::purity_of(fit.rho.mat);
    report["likelihood"] = fit.likelihood;
    if (seed) report["seed"] = *seed;
    std::string text = report.dump(2) + "\n";
    if (report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(resolve_out(report_path));
        if (!f) throw ConfigError("cannot open report file: " + report_path);
        f << text;
    }
    std::printf("fidelity_vs_target %s\n",
                entsim::csv_number(report["fidelity_vs_target"].get<double>()).c_str());
    return kExitOk;
}

int cmd_optics(double pump_nm, double pump_bw_nm, double signal_nm, double signal_bw_nm,
               double delay_fs, const std::string& out, const std::string& format) {
    if (pump_nm <= 0 || signal_nm <= 0 || pump_bw_nm <= 0 || signal_bw_nm <= 0)
        throw ConfigError("wavelengths and bandwidths must be positive");
    double tau_p = entsim::coherence_time(pump_nm * 1e-9, pump_bw_nm * 1e-9);
    double tau_s = entsim::coherence_time(signal_nm * 1e-9, signal_bw_nm * 1e-9);
    double lc_s = entsim::coherence_length(signal_nm * 1e-9, signal_bw_nm * 1e-9);
    double theta = entsim::bbo_phase_match_angle(pump_nm * 1e-3);
    double env = entsim::coherence_envelope(delay_fs * 1e-15, tau_p);
    std::printf("pump_coherence_time_fs %s\n", entsim::csv_number(tau_p * 1e15).c_str());
    std::printf("signal_coherence_time_fs %s\n", entsim::csv_number(tau_s * 1e15).c_str());
    std::printf("signal_coherence_length_um %s\n", entsim::csv_number(lc_s * 1e6).c_str());
    std::printf("phase_match_angle_deg %s\n",
                entsim::csv_number(theta * 180.0 / 3.14159265358979323846).c_str());
    std::printf("delay_envelope %s\n", entsim::csv_number(env).c_str());
    std::printf("no_ne_pump %s %s\n",
                entsim::csv_number(entsim::bbo_n_ordinary(pump_nm * 1e-3)).c_str(),
                entsim::csv_number(entsim::bbo_n_extraordinary(pump_nm * 1e-3)).c_str());
    if (!out.empty()) {
        emit_table(out, format,
                   "pump_coherence_time_fs,signal_coherence_time_fs,"
                   "signal_coherence_length_um,phase_match_angle_deg,delay_envelope",
                   {{tau_p * 1e15, tau_s * 1e15, lc_s * 1e6,
                     theta * 180.0 / 3.14159265358979323846, env}});
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement-dynamics simulator: sudden-death sweeps, measure "
                 "comparison, and simulated state tomography"};
    app.set_config("--config", "", "flat key=value config file; flags override it");
    app.require_subcommand(1);
    app.fallthrough();

    std::string out, format = "csv";
    int jobs = 1;
    app.add_option("--out", out, "output file (default: stdout; relative paths resolve "
                                 "against $ENTSIM_OUT_DIR)");
    app.add_option("--format", format, "csv or json")->capture_default_str();
    app.add_option("--jobs", jobs, "sweep worker threads")->capture_default_str();

    FamilySpec fam;
    std::string mode = "none", luo_spec;
    bool sweep = false;
    int esd_grid = 200;
    auto* esd = app.add_subcommand("esd", "death points and manipulation boundaries");
    add_family_flags(esd, fam);
    esd->add_option("--mode", mode, "none, double-not, or single-not")->capture_default_str();
    esd->add_option("--luo", luo_spec, "local unitary pair, e.g. sx,f01 or i,f02");
    esd->add_flag("--sweep", sweep, "write the full p_n sweep table");
    esd->add_option("--grid", esd_grid, "sweep grid points")->capture_default_str();

    auto* manip = app.add_subcommand("manipulate", "esd with a required unitary pair");
    FamilySpec mfam;
    std::string mluo;
    bool msweep = false;
    int mgrid = 200;
    add_family_flags(manip, mfam);
    manip->add_option("--luo", mluo, "local unitary pair, e.g. sx,f01")->required();
    manip->add_flag("--sweep", msweep, "write the full p_n sweep table");
    manip->add_option("--grid", mgrid, "sweep grid points")->capture_default_str();

    bool copt = false;
    int cgrid = 200;
    std::vector<double> c0_list;
    auto* cmp = app.add_subcommand("compare", "two-qubit pure-state measure comparison");
    cmp->add_flag("--optimize", copt, "report the three deviation maxima");
    cmp->add_option("--grid", cgrid, "c0 grid points")->capture_default_str();
    cmp->add_option("--c0", c0_list, "explicit c0 values")->delimiter(',');

    bool qopt = false;
    int qgrid = 40;
    std::vector<std::string> qpoints;
    auto* qut = app.add_subcommand("qutrit", "two-qutrit pure-state measure comparison");
    qut->add_flag("--optimize", qopt, "report the three deviation maxima");
    qut->add_option("--grid", qgrid, "simplex grid resolution")->capture_default_str();
    qut->add_option("--point", qpoints, "explicit c0:c1 pairs");

    std::string tstate = "bell", decohere, report_path;
    double flux = 1e4;
    std::uint64_t seed_val = 0;
    bool noiseless = false;
    auto* tomo = app.add_subcommand("tomo", "simulate counts and fit a density matrix");
    tomo->add_option("--state", tstate, "bell, x:u,v, or schmidt:c0")->capture_default_str();
    tomo->add_option("--flux", flux, "expected counts per analyzer setting")
        ->capture_default_str();
    auto* seed_opt = tomo->add_option("--seed", seed_val, "Poisson noise seed");
    tomo->add_flag("--noiseless", noiseless, "use exact expected counts");
    tomo->add_option("--decohere", decohere, "dt:tau (fs): damp coherences by exp(-dt/tau)");
    tomo->add_option("--report", report_path, "fit-report JSON path (default: stdout)");

    double pump_nm = 405.0, pump_bw = 1.2, sig_nm = 810.0, sig_bw = 10.0, delay_fs = 0.0;
    auto* opt = app.add_subcommand("optics", "down-conversion coherence properties");
    opt->add_option("--pump-nm", pump_nm, "pump centre wavelength")->capture_default_str();
    opt->add_option("--pump-bw-nm", pump_bw, "pump bandwidth")->capture_default_str();
    opt->add_option("--signal-nm", sig_nm, "signal centre wavelength")->capture_default_str();
    opt->add_option("--signal-bw-nm", sig_bw, "signal bandwidth")->capture_default_str();
    opt->add_option("--delay-fs", delay_fs, "relative delay for the envelope")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (esd->parsed())
            return cmd_esd(fam, mode, luo_spec, sweep, esd_grid, jobs, out, format);
        if (manip->parsed())
            return cmd_esd(mfam, "none", mluo, msweep, mgrid, jobs, out, format);
        if (cmp->parsed()) return cmd_compare(copt, cgrid, c0_list, out, format);
        if (qut->parsed()) return cmd_qutrit(qopt, qgrid, qpoints, out, format);
        if (tomo->parsed()) {
            std::optional<std::uint64_t> seed;
            if (*seed_opt) seed = seed_val;
            return cmd_tomo(tstate, flux, seed, noiseless, decohere, out, report_path);
        }
        if (opt->parsed())
            return cmd_optics(pump_nm, pump_bw, sig_nm, sig_bw, delay_fs, out, format);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return kExitNumeric;
    }
    return kExitConfig;
}
