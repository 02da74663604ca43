#include "dicke/sweep.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "dicke/superradiant.hpp"

namespace dicke::sweep {

namespace {

constexpr double quiet_nan = std::numeric_limits<double>::quiet_NaN();

std::string cell(double value, const std::string& tag) {
    return tag.empty() ? format_double(value) : tag;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(c);
        } else if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

// Value cell for the json document: number, tag string, or null.
std::string json_cell(double value, const std::string& tag) {
    if (!tag.empty()) return "\"" + json_escape(tag) + "\"";
    return format_double(value);
}

const char* branch_name(Branch b) { return b == Branch::a_zero ? "a0" : "a4c"; }
const char* form_name(A0Form f) { return f == A0Form::derived ? "derived" : "verbatim"; }
const char* format_name(Format f) { return f == Format::csv ? "csv" : "json-doc"; }

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double Config::sz_value() const {
    if (sz) return *sz;
    return -2.0 * (spin_j ? *spin_j : 0.5 * n_atoms);
}

Params Config::base_params() const {
    Params p;
    p.omega_c = omega_c;
    p.omega_a = omega_a;
    p.n_atoms = n_atoms;
    p.spin_j = spin_j;
    p.sz_expect = sz_value();
    return p;
}

void Config::validate() const {
    try {
        base_params().validate();
    } catch (const error& e) {
        throw error(errc::config_error, std::string("invalid parameters: ") + e.what());
    }
    if (lambda.steps < 1 || ratio.steps < 1)
        throw error(errc::config_error, "grid steps must be >= 1");
    if (!(lambda.min <= lambda.max) || lambda.min < 0.0)
        throw error(errc::config_error, "lambda range must satisfy 0 <= min <= max");
    if (!(ratio.min <= ratio.max) || ratio.min < 0.0 || ratio.max > 1.0)
        throw error(errc::config_error, "ratio range must lie inside [0, 1]");
    if (lambda.steps > 1 && lambda.min == lambda.max)
        throw error(errc::config_error, "lambda range is empty but asks for several steps");
    if (ed_enabled) {
        if (ed_nmax < 0) throw error(errc::config_error, "ed_nmax must be >= 0");
        if (!(ed_tol > 0.0)) throw error(errc::config_error, "ed_tol must be > 0");
        if (!(threshold > 0.0 && threshold < 1.0))
            throw error(errc::config_error, "threshold must lie in (0, 1)");
        for (int n : n_list)
            if (n < 1) throw error(errc::config_error, "n_list entries must be >= 1");
    }
}

namespace {

Row evaluate_point(const Config& cfg, double rho, double lam) {
    Row row;
    row.lambda_minus = lam;
    row.rho = rho;
    row.n_atoms = cfg.n_atoms;
    row.sz = cfg.sz_value();

    const Params p = cfg.base_params().with_couplings(lam, rho * lam);

    try {
        row.lambda_c_a0 = critical_lambda(Branch::a_zero, rho, p, cfg.a0_form).lambda_c;
    } catch (const error& e) {
        row.lambda_c_a0 = quiet_nan;
        row.lambda_c_a0_tag = e.tag();
    }
    try {
        row.lambda_c_a4c = critical_lambda(Branch::a_plus_4c, rho, p).lambda_c;
    } catch (const error& e) {
        row.lambda_c_a4c = quiet_nan;
        row.lambda_c_a4c_tag = e.tag();
    }

    const DickeCoefficients dc = dicke_coefficients(p);
    row.a_coeff = dc.a_coeff;
    row.a_plus_4c = dc.a_plus_4c;

    const double product = dc.a_coeff * dc.a_plus_4c;
    if (std::fabs(product) <= boundary_tolerance * std::max(dc.a_coeff * dc.a_coeff, 1.0))
        row.phase = "critical";
    else
        row.phase = dc.a_plus_4c > 0.0 ? "normal" : "superradiant";

    try {
        const double c = 0.25 * (dc.a_plus_4c - dc.a_coeff);
        row.normal_gap = bogoliubov(dc.a_coeff, c).gap;
    } catch (const error& e) {
        row.normal_gap = quiet_nan;
        row.normal_gap_tag = e.tag();
    }

    try {
        row.sr_epsilon = superradiant_solution(p).epsilon;
    } catch (const error& e) {
        row.sr_epsilon = quiet_nan;
        row.sr_tag = e.tag();
    }

    if (cfg.ed_enabled) {
        row.ed_present = true;
        try {
            const ed::BasisDescriptor basis(cfg.ed_nmax, p.spin());
            ed::SolverOptions opts;
            opts.parallel = 0; // grid points already run concurrently
            const ed::SpectrumResult sr = ed::spectrum(p, basis, opts);
            row.ed_e0 = sr.eigenvalues[0];
            row.ed_photon_per_n = sr.photon_number / p.n_atoms;
            row.ed_sz = sr.sz_ground;
        } catch (const error& e) {
            row.ed_e0 = row.ed_photon_per_n = row.ed_sz = quiet_nan;
            row.ed_tag = e.tag();
        }
    }
    return row;
}

} // namespace

std::vector<Row> run_sweep(const Config& cfg) {
    cfg.validate();
    const int n_points = cfg.ratio.steps * cfg.lambda.steps;
    std::vector<Row> rows(static_cast<std::size_t>(n_points));

#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n_points; ++k) {
        const int ir = k / cfg.lambda.steps;
        const int il = k % cfg.lambda.steps;
        rows[static_cast<std::size_t>(k)] =
            evaluate_point(cfg, cfg.ratio.at(ir), cfg.lambda.at(il));
    }
    return rows;
}

CompareReport compare_report(const Config& cfg) {
    cfg.validate();
    if (!cfg.ed_enabled)
        throw error(errc::config_error, "compare requires the exact-diagonalization oracle");

    const double rho = cfg.ratio.at(0);
    std::vector<double> grid(static_cast<std::size_t>(cfg.lambda.steps));
    for (int i = 0; i < cfg.lambda.steps; ++i)
        grid[static_cast<std::size_t>(i)] = cfg.lambda.at(i);

    CompareReport report;
    for (int n : cfg.n_list) {
        CompareEntry entry;
        entry.n_atoms = n;
        entry.n_max = cfg.ed_nmax;
        Params p = cfg.base_params();
        p.n_atoms = n;
        p.spin_j.reset();
        p.sz_expect = -static_cast<double>(n);
        p = p.with_couplings(grid.back(), rho * grid.back());
        try {
            entry.lambda_c = critical_lambda(Branch::a_plus_4c, rho, p).lambda_c;
            const double t0 = omp_get_wtime();
            const ed::CrossoverResult cr =
                ed::crossover_estimate(p, grid, cfg.threshold, cfg.ed_nmax);
            entry.seconds = omp_get_wtime() - t0;
            entry.lambda_star = cr.lambda_star;
            entry.rel_deviation = std::fabs(cr.lambda_star - entry.lambda_c) / entry.lambda_c;

            // Re-evaluate the analytic point at the oracle's own <Sz> near λ*.
            double sz_near = quiet_nan;
            double best = std::numeric_limits<double>::infinity();
            for (const auto& pt : cr.profile) {
                const double dist = std::fabs(pt.lambda - cr.lambda_star);
                if (dist < best) {
                    best = dist;
                    sz_near = pt.sz_per_n * n;
                }
            }
            Params q = p;
            q.sz_expect = sz_near;
            entry.lambda_c_ed_sz = sz_near < 0.0
                                       ? critical_lambda(Branch::a_plus_4c, rho, q).lambda_c
                                       : quiet_nan;
        } catch (const error& e) {
            entry.lambda_star = entry.rel_deviation = entry.lambda_c_ed_sz = quiet_nan;
            entry.tag = e.tag();
        }
        report.entries.push_back(entry);
    }

    std::vector<double> form_rhos;
    if (cfg.ratio.steps > 1) {
        for (int i = 0; i < cfg.ratio.steps; ++i) form_rhos.push_back(cfg.ratio.at(i));
    } else {
        form_rhos = {0.0, 0.25, 0.5, 0.75, 0.9};
    }
    Params base = cfg.base_params();
    if (!(base.sz_expect < 0.0)) base.sz_expect = -static_cast<double>(cfg.n_atoms);
    for (double r : form_rhos) {
        if (r >= 1.0) continue;
        A0FormRow row;
        row.rho = r;
        row.lambda_c_derived = critical_lambda(Branch::a_zero, r, base, A0Form::derived).lambda_c;
        row.lambda_c_verbatim =
            critical_lambda(Branch::a_zero, r, base, A0Form::verbatim).lambda_c;
        report.a0_forms.push_back(row);
    }
    return report;
}

std::string format_compare_report(const CompareReport& report) {
    std::ostringstream os;
    os << "n_atoms lambda_c lambda_star rel_deviation lambda_c_at_ed_sz n_max seconds tag\n";
    for (const auto& e : report.entries) {
        os << e.n_atoms << ' ' << cell(e.lambda_c, e.tag) << ' '
           << cell(e.lambda_star, e.tag) << ' ' << cell(e.rel_deviation, e.tag) << ' '
           << cell(e.lambda_c_ed_sz, e.tag) << ' ' << e.n_max << ' '
           << format_double(e.seconds) << ' ' << (e.tag.empty() ? "-" : e.tag) << '\n';
    }
    os << "\na0 critical-coupling forms\n";
    os << "rho lambda_c_derived lambda_c_verbatim\n";
    for (const auto& r : report.a0_forms)
        os << format_double(r.rho) << ' ' << format_double(r.lambda_c_derived) << ' '
           << format_double(r.lambda_c_verbatim) << '\n';
    return os.str();
}

std::string to_csv(const std::vector<Row>& rows) {
    std::string out =
        "lambda_minus,rho,n_atoms,sz,lambda_c_a0,lambda_c_a4c,a_coeff,a_plus_4c,"
        "normal_gap,sr_epsilon,ed_e0,ed_photon_per_n,ed_sz,phase\n";
    for (const Row& r : rows) {
        out += format_double(r.lambda_minus);
        out += ',';
        out += format_double(r.rho);
        out += ',';
        out += std::to_string(r.n_atoms);
        out += ',';
        out += format_double(r.sz);
        out += ',';
        out += cell(r.lambda_c_a0, r.lambda_c_a0_tag);
        out += ',';
        out += cell(r.lambda_c_a4c, r.lambda_c_a4c_tag);
        out += ',';
        out += format_double(r.a_coeff);
        out += ',';
        out += format_double(r.a_plus_4c);
        out += ',';
        out += cell(r.normal_gap, r.normal_gap_tag);
        out += ',';
        out += cell(r.sr_epsilon, r.sr_tag);
        out += ',';
        if (r.ed_present) {
            out += cell(r.ed_e0, r.ed_tag);
            out += ',';
            out += cell(r.ed_photon_per_n, r.ed_tag);
            out += ',';
            out += cell(r.ed_sz, r.ed_tag);
        } else {
            out += ",,";
        }
        out += ',';
        out += r.phase;
        out += '\n';
    }
    return out;
}

std::string to_json_doc(const std::vector<Row>& rows, const Config& cfg) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"schema_version\": \"1\",\n";
    os << "  \"config\": {\n";
    os << "    \"omega_c\": " << format_double(cfg.omega_c) << ",\n";
    os << "    \"omega_a\": " << format_double(cfg.omega_a) << ",\n";
    os << "    \"n_atoms\": " << cfg.n_atoms << ",\n";
    os << "    \"spin_j\": " << (cfg.spin_j ? format_double(*cfg.spin_j) : "null") << ",\n";
    os << "    \"sz\": " << format_double(cfg.sz_value()) << ",\n";
    os << "    \"lambda\": {\"min\": " << format_double(cfg.lambda.min)
       << ", \"max\": " << format_double(cfg.lambda.max) << ", \"steps\": " << cfg.lambda.steps
       << "},\n";
    os << "    \"ratio\": {\"min\": " << format_double(cfg.ratio.min)
       << ", \"max\": " << format_double(cfg.ratio.max) << ", \"steps\": " << cfg.ratio.steps
       << "},\n";
    os << "    \"branch\": \"" << branch_name(cfg.branch) << "\",\n";
    os << "    \"a0_form\": \"" << form_name(cfg.a0_form) << "\",\n";
    os << "    \"ed_enabled\": " << (cfg.ed_enabled ? "true" : "false") << ",\n";
    os << "    \"ed_nmax\": " << cfg.ed_nmax << ",\n";
    os << "    \"ed_tol\": " << format_double(cfg.ed_tol) << ",\n";
    os << "    \"n_list\": [";
    for (std::size_t i = 0; i < cfg.n_list.size(); ++i)
        os << (i ? ", " : "") << cfg.n_list[i];
    os << "],\n";
    os << "    \"threshold\": " << format_double(cfg.threshold) << ",\n";
    os << "    \"format\": \"" << format_name(cfg.format) << "\"\n";
    os << "  },\n";
    os << "  \"rows\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        os << "    {\"lambda_minus\": " << format_double(r.lambda_minus)
           << ", \"rho\": " << format_double(r.rho) << ", \"n_atoms\": " << r.n_atoms
           << ", \"sz\": " << format_double(r.sz)
           << ", \"lambda_c_a0\": " << json_cell(r.lambda_c_a0, r.lambda_c_a0_tag)
           << ", \"lambda_c_a4c\": " << json_cell(r.lambda_c_a4c, r.lambda_c_a4c_tag)
           << ", \"a_coeff\": " << format_double(r.a_coeff)
           << ", \"a_plus_4c\": " << format_double(r.a_plus_4c)
           << ", \"normal_gap\": " << json_cell(r.normal_gap, r.normal_gap_tag)
           << ", \"sr_epsilon\": " << json_cell(r.sr_epsilon, r.sr_tag);
        if (r.ed_present) {
            os << ", \"ed_e0\": " << json_cell(r.ed_e0, r.ed_tag)
               << ", \"ed_photon_per_n\": " << json_cell(r.ed_photon_per_n, r.ed_tag)
               << ", \"ed_sz\": " << json_cell(r.ed_sz, r.ed_tag);
        } else {
            os << ", \"ed_e0\": null, \"ed_photon_per_n\": null, \"ed_sz\": null";
        }
        os << ", \"phase\": \"" << r.phase << "\"}";
        os << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "  ]\n";
    os << "}\n";
    return os.str();
}

void emit(const std::vector<Row>& rows, const Config& cfg, Format format,
          const std::string& path) {
    if (rows.empty()) throw error(errc::config_error, "refusing to emit an empty dataset");
    const std::string body = format == Format::csv ? to_csv(rows) : to_json_doc(rows, cfg);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::io_error, "cannot open '" + path + "' for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.flush();
    if (!out) throw error(errc::io_error, "short write to '" + path + "'");
}

} // namespace dicke::sweep
