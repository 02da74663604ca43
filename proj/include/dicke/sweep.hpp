// sweep.hpp — grid sweeps, analytic-vs-oracle comparison, and file emission
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dicke/normal_phase.hpp"
#include "dicke/oracle.hpp"

namespace dicke::sweep {

enum class Format { csv, json_doc };

struct Range {
    double min = 0.0;
    double max = 0.0;
    int steps = 1; // number of grid points, >= 1

    double at(int i) const {
        return steps <= 1 ? min : min + (max - min) * i / (steps - 1);
    }
};

struct Config {
    double omega_c = 1.0;
    double omega_a = 1.0;
    int n_atoms = 1;
    std::optional<double> spin_j;
    std::optional<double> sz; // defaults to −2j (= −N for the default sector)

    Range lambda{0.0, 1.0, 11};
    Range ratio{1.0, 1.0, 1};

    Branch branch = Branch::a_plus_4c;
    A0Form a0_form = A0Form::derived;

    bool ed_enabled = false;
    int ed_nmax = 60;
    double ed_tol = 1e-8;
    std::vector<int> n_list{6, 12};
    double threshold = 0.1;

    std::string out_path;
    Format format = Format::csv;

    double sz_value() const;
    Params base_params() const;
    void validate() const; // throws ConfigError
};

// One grid point. Numeric fields carry NaN when the matching tag is set; the
// emitters print the tag in place of the value.
struct Row {
    double lambda_minus = 0.0;
    double rho = 0.0;
    int n_atoms = 1;
    double sz = 0.0;

    double lambda_c_a0 = 0.0;
    std::string lambda_c_a0_tag;
    double lambda_c_a4c = 0.0;
    std::string lambda_c_a4c_tag;

    double a_coeff = 0.0;
    double a_plus_4c = 0.0;

    double normal_gap = 0.0;
    std::string normal_gap_tag;

    double sr_epsilon = 0.0;
    std::string sr_tag;

    bool ed_present = false;
    double ed_e0 = 0.0;
    double ed_photon_per_n = 0.0;
    double ed_sz = 0.0;
    std::string ed_tag;

    std::string phase; // normal | critical | superradiant
};

// One row per grid point, in grid-index order (ratio major, lambda minor)
// regardless of how the points were scheduled. Per-point failures become row
// tags and never abort the sweep.
std::vector<Row> run_sweep(const Config& cfg);

struct CompareEntry {
    int n_atoms = 0;
    double lambda_c = 0.0;        // analytic, at <Sz> = −N
    double lambda_c_ed_sz = 0.0;  // analytic, re-evaluated at the oracle's ground-state <Sz>
    double lambda_star = 0.0;     // oracle crossover
    double rel_deviation = 0.0;
    int n_max = 0;
    double seconds = 0.0;
    std::string tag;
};

struct A0FormRow {
    double rho = 0.0;
    double lambda_c_derived = 0.0;
    double lambda_c_verbatim = 0.0;
};

struct CompareReport {
    std::vector<CompareEntry> entries;
    std::vector<A0FormRow> a0_forms;
};

// Oracle crossover vs the analytic critical coupling per N, plus the table of
// the two A-branch coupling-space forms. Requires ED to be enabled.
CompareReport compare_report(const Config& cfg);
std::string format_compare_report(const CompareReport& report);

// Deterministic emitters: 12 significant digits, '.' decimal point, '\n' line ends.
std::string to_csv(const std::vector<Row>& rows);
std::string to_json_doc(const std::vector<Row>& rows, const Config& cfg);

// Writes the dataset to `path` in the requested format; throws IoError on
// failure and ConfigError on an empty dataset. Byte-identical output for
// identical input.
void emit(const std::vector<Row>& rows, const Config& cfg, Format format,
          const std::string& path);

std::string format_double(double v); // %.12g

} // namespace dicke::sweep
