// dicke_cli.cpp — point queries, grids, sweeps, and oracle comparison from the command line
#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "dicke/normal_phase.hpp"
#include "dicke/oracle.hpp"
#include "dicke/superradiant.hpp"
#include "dicke/sweep.hpp"

namespace {

using dicke::sweep::format_double;

// Flat key=value configuration: each key mirrors a long flag without the
// leading dashes. File entries are injected as "--key=value" tokens for keys
// the command line did not set, so explicit flags always win.
std::vector<std::string> merge_config_args(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) throw dicke::error(dicke::errc::config_error, "cannot read config file " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string{};
            const auto b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw dicke::error(dicke::errc::config_error,
                               path + ":" + std::to_string(line_no) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw dicke::error(dicke::errc::config_error,
                               path + ":" + std::to_string(line_no) + ": empty key");
        const std::string flag = "--" + key;
        const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (!given) args.push_back(flag + "=" + value);
    }
    return args;
}

struct ModelCli {
    double wc = 1.0;
    double wa = 1.0;
    double lambda = 0.0;
    double ratio = 0.0;
    int n_atoms = 1;
    double spin_j = 0.0; // 0 = default sector N/2
    double sz = 0.0;     // 0 = default −2j
    bool sz_set = false;

    dicke::Params params() const {
        dicke::Params p;
        p.omega_c = wc;
        p.omega_a = wa;
        p.n_atoms = n_atoms;
        if (spin_j > 0.0) p.spin_j = spin_j;
        p.sz_expect = sz_set ? sz : -2.0 * p.spin();
        return p.with_couplings(lambda, ratio * lambda);
    }
};

void add_model_options(CLI::App* cmd, ModelCli& m, std::string& config_path) {
    cmd->add_option("--wc", m.wc, "cavity frequency");
    cmd->add_option("--wa", m.wa, "atomic transition frequency");
    cmd->add_option("--lambda", m.lambda, "co-rotating coupling lambda-");
    cmd->add_option("--ratio", m.ratio, "coupling ratio lambda+/lambda-")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--n-atoms", m.n_atoms, "number of atoms N")->check(CLI::PositiveNumber);
    cmd->add_option("--spin-j", m.spin_j, "collective spin sector (default N/2)");
    cmd->add_option("--sz", m.sz, "<Sz> parameter (default -2j)")
        ->each([&m](const std::string&) { m.sz_set = true; });
    cmd->add_option("--config", config_path,
                    "flat key=value configuration file; explicit flags take precedence");
}

void print_kv(const char* key, double value) {
    std::printf("%s = %s\n", key, format_double(value).c_str());
}

dicke::Branch parse_branch(const std::string& s) {
    return s == "a0" ? dicke::Branch::a_zero : dicke::Branch::a_plus_4c;
}

dicke::A0Form parse_form(const std::string& s) {
    return s == "verbatim" ? dicke::A0Form::verbatim : dicke::A0Form::derived;
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        g.push_back(steps <= 1 ? lo : lo + (hi - lo) * i / (steps - 1));
    return g;
}

int run(int argc, char** argv) {
    CLI::App app{"normal/superradiant phase structure of the Dicke model with "
                 "independent co- and counter-rotating couplings"};
    app.require_subcommand(1);

    std::string branch_str = "a4c";
    std::string config_path;
    std::string form_str = "derived";
    std::string format_str = "csv";
    std::string out_path;

    // critical
    auto* critical = app.add_subcommand("critical", "critical coupling at a fixed ratio");
    ModelCli crit_model;
    add_model_options(critical, crit_model, config_path);
    critical->add_option("--branch", branch_str, "condition branch (a0|a4c)")
        ->check(CLI::IsMember({"a0", "a4c"}));
    critical->add_option("--eq37", form_str, "A-branch coupling-space form (verbatim|derived)")
        ->check(CLI::IsMember({"verbatim", "derived"}));

    // gap
    auto* gap = app.add_subcommand("gap", "normal-phase coefficients, gap, ground energy");
    ModelCli gap_model;
    add_model_options(gap, gap_model, config_path);
    double gap_lmin = 0.0, gap_lmax = 0.0;
    int gap_steps = 0;
    gap->add_option("--lambda-min", gap_lmin, "profile start");
    gap->add_option("--lambda-max", gap_lmax, "profile end");
    gap->add_option("--lambda-steps", gap_steps, "profile points (0 = single point)");
    gap->add_option("--out", out_path, "write the profile as CSV to this path");

    // superradiant
    auto* sr = app.add_subcommand("superradiant", "broken-phase angle, displacement, energy");
    ModelCli sr_model;
    add_model_options(sr, sr_model, config_path);

    // ed
    auto* edc = app.add_subcommand("ed", "exact diagonalization at one point");
    ModelCli ed_model;
    add_model_options(edc, ed_model, config_path);
    int ed_nmax = 60;
    edc->add_option("--nmax", ed_nmax, "photon cutoff")->check(CLI::NonNegativeNumber);

    // convergence
    auto* conv = app.add_subcommand("convergence", "cutoff convergence of the ground energy");
    ModelCli conv_model;
    add_model_options(conv, conv_model, config_path);
    int conv_start = 20;
    double conv_tol = 1e-8;
    conv->add_option("--nmax", conv_start, "starting photon cutoff");
    conv->add_option("--tol", conv_tol, "ground-energy tolerance");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "2-D (ratio × lambda) phase-diagram sweep");
    ModelCli sweep_model;
    add_model_options(sweep_cmd, sweep_model, config_path);
    dicke::sweep::Config sweep_cfg;
    bool sweep_ed = false;
    int sweep_nmax = 60;
    sweep_cmd->add_option("--lambda-min", sweep_cfg.lambda.min, "lambda grid start");
    sweep_cmd->add_option("--lambda-max", sweep_cfg.lambda.max, "lambda grid end");
    sweep_cmd->add_option("--lambda-steps", sweep_cfg.lambda.steps, "lambda grid points");
    sweep_cmd->add_option("--ratio-min", sweep_cfg.ratio.min, "ratio grid start");
    sweep_cmd->add_option("--ratio-max", sweep_cfg.ratio.max, "ratio grid end");
    sweep_cmd->add_option("--ratio-steps", sweep_cfg.ratio.steps, "ratio grid points");
    sweep_cmd->add_flag("--ed", sweep_ed, "evaluate the exact-diagonalization oracle per point");
    sweep_cmd->add_option("--nmax", sweep_nmax, "oracle photon cutoff");
    sweep_cmd->add_option("--eq37", form_str, "A-branch coupling-space form (verbatim|derived)")
        ->check(CLI::IsMember({"verbatim", "derived"}));
    sweep_cmd->add_option("--format", format_str, "output format (csv|json-doc)")
        ->check(CLI::IsMember({"csv", "json-doc"}));
    sweep_cmd->add_option("--out", out_path, "output path")->required();

    // compare
    auto* cmp = app.add_subcommand("compare", "analytic critical coupling vs the oracle crossover");
    ModelCli cmp_model;
    add_model_options(cmp, cmp_model, config_path);
    dicke::sweep::Config cmp_cfg;
    std::vector<int> cmp_nlist{6, 12};
    int cmp_nmax = 60;
    double cmp_threshold = 0.1;
    cmp->add_option("--lambda-min", cmp_cfg.lambda.min, "crossover grid start");
    cmp->add_option("--lambda-max", cmp_cfg.lambda.max, "crossover grid end");
    cmp->add_option("--lambda-steps", cmp_cfg.lambda.steps, "crossover grid points");
    cmp->add_option("--n-list", cmp_nlist, "atom numbers to compare")->delimiter(',');
    cmp->add_option("--nmax", cmp_nmax, "oracle photon cutoff");
    cmp->add_option("--threshold", cmp_threshold, "photon-fraction crossover threshold");
    cmp->add_option("--out", out_path, "write the report to this path instead of stdout");

    try {
        std::vector<std::string> args = merge_config_args(argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (*critical) {
        const dicke::Params p = crit_model.params();
        const dicke::CriticalPoint cp = dicke::critical_lambda(
            parse_branch(branch_str), crit_model.ratio, p, parse_form(form_str));
        std::printf("branch = %s\n", branch_str.c_str());
        print_kv("ratio", crit_model.ratio);
        print_kv("lambda_c", cp.lambda_c);
        print_kv("omega_c_squared", cp.omega_c_squared);
        print_kv("v_star", cp.v_star);
        if (parse_branch(branch_str) == dicke::Branch::a_zero) {
            std::printf("form = %s\n", form_str.c_str());
        }
        return 0;
    }

    if (*gap) {
        const dicke::Params p = gap_model.params();
        if (gap_steps > 0) {
            const auto grid = linear_grid(gap_lmin, gap_lmax, gap_steps);
            const auto profile = dicke::normal_gap_profile(p, grid);
            std::string body = "lambda_minus,gap,ground_energy\n";
            for (const auto& pt : profile)
                body += format_double(pt.lambda) + "," + format_double(pt.gap) + "," +
                        format_double(pt.ground_energy) + "\n";
            if (out_path.empty()) {
                std::fputs(body.c_str(), stdout);
            } else {
                std::FILE* f = std::fopen(out_path.c_str(), "wb");
                if (!f) throw dicke::error(dicke::errc::io_error, "cannot open " + out_path);
                std::fwrite(body.data(), 1, body.size(), f);
                std::fclose(f);
            }
            return 0;
        }
        const dicke::DickeCoefficients dc = dicke::dicke_coefficients(p);
        const dicke::BogoliubovSolution sol = dicke::bogoliubov(
            dc.a_coeff, 0.25 * (dc.a_plus_4c - dc.a_coeff), dicke::dicke_ground_b(p));
        print_kv("a_coeff", dc.a_coeff);
        print_kv("a_plus_4c", dc.a_plus_4c);
        print_kv("gap", sol.gap);
        print_kv("ground_energy", sol.ground_energy);
        print_kv("beta", sol.beta);
        std::printf("at_boundary = %s\n", sol.at_boundary ? "true" : "false");
        return 0;
    }

    if (*sr) {
        const dicke::Params p = sr_model.params();
        const dicke::SuperradiantSolution sol = dicke::superradiant_solution(p);
        print_kv("cos2theta_sq", sol.cos2theta_sq);
        print_kv("alpha_sq_per_n", sol.alpha_sq_per_n);
        print_kv("epsilon", sol.epsilon);
        std::printf("at_boundary = %s\n", sol.at_boundary ? "true" : "false");
        return 0;
    }

    if (*edc) {
        const dicke::Params p = ed_model.params();
        const dicke::ed::BasisDescriptor basis(ed_nmax, p.spin());
        const dicke::ed::SpectrumResult res = dicke::ed::spectrum(p, basis);
        std::printf("dimension = %zu\n", basis.dimension());
        print_kv("e0", res.eigenvalues[0]);
        print_kv("gap", res.gap);
        print_kv("photon_number", res.photon_number);
        print_kv("sz_ground", res.sz_ground);
        print_kv("parity", dicke::ed::parity_expectation(basis, res.ground_vector));
        print_kv("residual", res.residual);
        for (const auto& w : res.warnings) std::printf("warning: %s\n", w.c_str());
        return 0;
    }

    if (*conv) {
        const dicke::Params p = conv_model.params();
        const dicke::ed::ConvergenceResult res =
            dicke::ed::converge_cutoff(p, conv_start, conv_tol);
        std::printf("n_max = %d\n", res.n_max);
        print_kv("e0", res.spectrum.eigenvalues[0]);
        print_kv("last_delta", res.last_delta);
        return 0;
    }

    if (*sweep_cmd) {
        sweep_cfg.omega_c = sweep_model.wc;
        sweep_cfg.omega_a = sweep_model.wa;
        sweep_cfg.n_atoms = sweep_model.n_atoms;
        if (sweep_model.spin_j > 0.0) sweep_cfg.spin_j = sweep_model.spin_j;
        if (sweep_model.sz_set) sweep_cfg.sz = sweep_model.sz;
        sweep_cfg.a0_form = parse_form(form_str);
        sweep_cfg.ed_enabled = sweep_ed;
        sweep_cfg.ed_nmax = sweep_nmax;
        sweep_cfg.format = format_str == "csv" ? dicke::sweep::Format::csv
                                               : dicke::sweep::Format::json_doc;
        sweep_cfg.out_path = out_path;
        const auto rows = dicke::sweep::run_sweep(sweep_cfg);
        dicke::sweep::emit(rows, sweep_cfg, sweep_cfg.format, out_path);
        std::printf("wrote %zu rows to %s\n", rows.size(), out_path.c_str());
        return 0;
    }

    if (*cmp) {
        cmp_cfg.omega_c = cmp_model.wc;
        cmp_cfg.omega_a = cmp_model.wa;
        cmp_cfg.n_atoms = cmp_model.n_atoms;
        cmp_cfg.ratio = {cmp_model.ratio, cmp_model.ratio, 1};
        cmp_cfg.ed_enabled = true;
        cmp_cfg.ed_nmax = cmp_nmax;
        cmp_cfg.n_list = cmp_nlist;
        cmp_cfg.threshold = cmp_threshold;
        const auto report = dicke::sweep::compare_report(cmp_cfg);
        const std::string text = dicke::sweep::format_compare_report(report);
        if (out_path.empty()) {
            std::fputs(text.c_str(), stdout);
        } else {
            std::FILE* f = std::fopen(out_path.c_str(), "wb");
            if (!f) throw dicke::error(dicke::errc::io_error, "cannot open " + out_path);
            std::fwrite(text.data(), 1, text.size(), f);
            std::fclose(f);
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dicke::error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", e.tag(), e.what());
        return dicke::errc_is_invalid_input(e.code()) ? 2 : 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
