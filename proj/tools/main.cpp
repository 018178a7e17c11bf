// Command-line surface of the spectral-gap laboratory: model solves, sweeps,
// geodesic-ball spectra, geometry checks, the verification suite, reference
// table reproduction, and plots with CSV twins.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <future>
#include <iostream>
#include <sstream>

#include <specgap/ball.hpp>
#include <specgap/gap_analysis.hpp>
#include <specgap/geometry.hpp>
#include <specgap/modulus.hpp>
#include <specgap/report.hpp>
#include <specgap/tables.hpp>
#include <specgap/verify.hpp>

#ifndef SPECGAP_DEFAULT_DATA_FILE
#define SPECGAP_DEFAULT_DATA_FILE "data/reference_gap_tables.csv"
#endif

namespace {

using specgap::CsvTable;
using specgap::fmt10;
using specgap::round10;
using json = nlohmann::ordered_json;

struct CommonOpts {
    std::string format = "table";
    std::string out;
};

void emit(const CommonOpts& c, const std::string& text) {
    if (c.out.empty())
        std::cout << text;
    else
        specgap::write_file(c.out, text);
}

specgap::Method parse_method(const std::string& m) {
    if (m == "tridiag") return specgap::Method::Tridiag;
    if (m == "shooting") return specgap::Method::Shooting;
    if (m == "both") return specgap::Method::Both;
    throw specgap::PreconditionError("unknown method: " + m);
}

json solve_json(const specgap::GapReport& g) {
    json j;
    j["n"] = g.params.n;
    j["K"] = round10(g.params.K);
    j["D"] = round10(g.params.D);
    j["lambda1"] = round10(g.lambda1);
    j["lambda2"] = round10(g.lambda2);
    j["gap"] = round10(g.gap);
    j["normalized_gap"] = round10(g.normalized_gap);
    j["method"] = to_string(g.solve.method);
    j["grid_m"] = g.solve.grid.m;
    j["residual"] = round10(g.solve.residual);
    return j;
}

int cmd_solve(const CommonOpts& c, const specgap::ModelParams& p, const specgap::SolveOptions& so) {
    const specgap::GapReport g = specgap::gap_report(p, so);
    if (c.format == "json") {
        emit(c, solve_json(g).dump(2) + "\n");
    } else if (c.format == "csv") {
        CsvTable t;
        t.header = {"n", "K", "D", "lambda1", "lambda2", "gap", "normalized_gap",
                    "method", "grid_m", "residual"};
        t.rows.push_back({std::to_string(p.n), fmt10(p.K), fmt10(p.D), fmt10(g.lambda1),
                          fmt10(g.lambda2), fmt10(g.gap), fmt10(g.normalized_gap),
                          to_string(g.solve.method), std::to_string(g.solve.grid.m),
                          fmt10(g.solve.residual)});
        emit(c, t.to_string());
    } else {
        std::ostringstream o;
        o << "model problem n=" << p.n << " K=" << fmt10(p.K) << " D=" << fmt10(p.D) << "\n"
          << "  lambda_1        = " << fmt10(g.lambda1) << "\n"
          << "  lambda_2        = " << fmt10(g.lambda2) << "\n"
          << "  gap             = " << fmt10(g.gap) << "\n"
          << "  normalized gap  = " << fmt10(g.normalized_gap) << "\n"
          << "  method          = " << to_string(g.solve.method)
          << ", grid m = " << g.solve.grid.m
          << ", ode defect = " << fmt10(g.solve.residual) << "\n";
        if (g.solve.method == specgap::Method::Both)
            o << "  method agreement = " << fmt10(g.solve.method_agreement) << "\n";
        if (g.solve.near_singular)
            o << "  note: D is near pi/sqrt(K); finite-difference accuracy degrades there\n";
        emit(c, o.str());
    }
    return 0;
}

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> out;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

specgap::SweepResult run_sweep(specgap::SweepAxis axis, const std::vector<double>& values,
                               const specgap::ModelParams& base, const specgap::SolveOptions& so,
                               int jobs) {
    if (jobs <= 1) return specgap::sweep(axis, values, base, so);
    // fan points across workers; assembly stays input-ordered
    std::vector<std::future<specgap::GapReport>> futs;
    for (double v : values)
        futs.push_back(std::async(std::launch::async, [=] {
            specgap::ModelParams p = base;
            if (axis == specgap::SweepAxis::D)
                p.D = v;
            else
                p.n = static_cast<int>(std::lround(v));
            return specgap::gap_report(p, so);
        }));
    specgap::SweepResult out;
    out.axis = axis;
    out.values = values;
    for (auto& f : futs) out.reports.push_back(f.get());
    // verdict logic matches the sequential path
    bool up = false, down = false;
    for (std::size_t i = 1; i < out.reports.size(); ++i) {
        const double d = out.reports[i].normalized_gap - out.reports[i - 1].normalized_gap;
        if (d > 1e-9) up = true;
        else if (d < -1e-9) down = true;
    }
    out.verdict = up && down    ? specgap::Monotonicity::NonMonotone
                  : up          ? specgap::Monotonicity::Increasing
                  : down        ? specgap::Monotonicity::Decreasing
                                : specgap::Monotonicity::Flat;
    return out;
}

CsvTable sweep_csv(const specgap::SweepResult& s) {
    CsvTable t;
    t.header = {to_string(s.axis), "lambda1", "lambda2", "gap", "normalized_gap"};
    for (std::size_t i = 0; i < s.reports.size(); ++i) {
        const specgap::GapReport& g = s.reports[i];
        t.rows.push_back({fmt10(s.values[i]), fmt10(g.lambda1), fmt10(g.lambda2), fmt10(g.gap),
                          fmt10(g.normalized_gap)});
    }
    return t;
}

int cmd_sweep(const CommonOpts& c, specgap::SweepAxis axis, const std::vector<double>& values,
              const specgap::ModelParams& base, const specgap::SolveOptions& so, int jobs) {
    const specgap::SweepResult s = run_sweep(axis, values, base, so, jobs);
    if (c.format == "json") {
        json j;
        j["axis"] = to_string(s.axis);
        j["base"] = {{"n", base.n}, {"K", round10(base.K)}, {"D", round10(base.D)}};
        j["points"] = json::array();
        for (std::size_t i = 0; i < s.reports.size(); ++i) {
            const specgap::GapReport& g = s.reports[i];
            j["points"].push_back({{"value", round10(s.values[i])},
                                   {"lambda1", round10(g.lambda1)},
                                   {"lambda2", round10(g.lambda2)},
                                   {"gap", round10(g.gap)},
                                   {"normalized_gap", round10(g.normalized_gap)}});
        }
        j["verdict"] = to_string(s.verdict);
        emit(c, j.dump(2) + "\n");
    } else if (c.format == "csv") {
        emit(c, sweep_csv(s).to_string());
    } else {
        std::ostringstream o;
        o << "sweep over " << to_string(s.axis) << " (n=" << base.n << ", K=" << fmt10(base.K)
          << ")\n";
        o << "  " << to_string(s.axis) << "        normalized gap\n";
        for (std::size_t i = 0; i < s.reports.size(); ++i)
            o << "  " << fmt10(s.values[i]) << "    " << fmt10(s.reports[i].normalized_gap)
              << "\n";
        o << "verdict: normalized gap " << to_string(s.verdict) << "\n";
        emit(c, o.str());
    }
    return 0;
}

int cmd_ball(const CommonOpts& c, const specgap::BallSpec& spec) {
    const specgap::BallSpectrum b = specgap::ball_spectrum(spec);
    const bool comparable = spec.K == 0.0 || spec.diameter() <= M_PI / 2.0 + 1e-12;
    specgap::GapComparison gc;
    if (comparable) gc = specgap::gap_comparison_check(spec);
    if (c.format == "json") {
        json j;
        j["n"] = spec.n;
        j["K"] = round10(spec.K);
        j["R"] = round10(spec.R);
        j["lambda1"] = round10(b.lambda1);
        j["lambda2"] = round10(b.lambda2);
        j["mode2_ell"] = b.mode2_ell;
        j["mode2_radial_index"] = b.mode2_radial_index;
        j["gap"] = round10(b.lambda2 - b.lambda1);
        if (comparable) {
            j["comparison"] = {{"model_lambda1", round10(gc.model_lambda1)},
                               {"model_lambda2", round10(gc.model_lambda2)},
                               {"gap_margin", round10(gc.gap_margin)},
                               {"domain_margin", round10(gc.domain_margin)},
                               {"sharp_l1_margin", round10(gc.sharp_l1_margin)},
                               {"sharp_l2_margin", round10(gc.sharp_l2_margin)},
                               {"all_hold", gc.all_hold}};
        }
        emit(c, j.dump(2) + "\n");
    } else if (c.format == "csv") {
        CsvTable t;
        t.header = {"n", "K", "R", "lambda1", "lambda2", "mode2_ell", "mode2_radial_index"};
        t.rows.push_back({std::to_string(spec.n), fmt10(spec.K), fmt10(spec.R), fmt10(b.lambda1),
                          fmt10(b.lambda2), std::to_string(b.mode2_ell),
                          std::to_string(b.mode2_radial_index)});
        emit(c, t.to_string());
    } else {
        std::ostringstream o;
        o << "geodesic ball n=" << spec.n << " K=" << fmt10(spec.K) << " R=" << fmt10(spec.R)
          << "\n"
          << "  lambda_1 = " << fmt10(b.lambda1) << "  (ell=0, first radial mode)\n"
          << "  lambda_2 = " << fmt10(b.lambda2) << "  (ell=" << b.mode2_ell
          << ", radial index " << b.mode2_radial_index << ")\n"
          << "  gap      = " << fmt10(b.lambda2 - b.lambda1) << "\n";
        if (comparable) {
            o << "  model gap at D=2R: " << fmt10(gc.model_lambda2 - gc.model_lambda1)
              << "  (gap margin " << fmt10(gc.gap_margin) << ")\n"
              << "  lambda_1 vs model lambda_1: margin " << fmt10(gc.domain_margin) << "\n"
              << "  lambda_1 vs n*model: margin " << fmt10(gc.sharp_l1_margin) << "\n";
            if (gc.sharp_l2_applies)
                o << "  lambda_2 vs n*model + 3 pi^2/D^2: margin " << fmt10(gc.sharp_l2_margin)
                  << "\n";
            o << "  all comparison inequalities hold: " << (gc.all_hold ? "yes" : "NO") << "\n";
        } else {
            o << "  (comparison inequalities need 2R <= pi/2 for K = 1)\n";
        }
        emit(c, o.str());
    }
    return 0;
}

int cmd_geometry(const CommonOpts& c) {
    struct Row {
        double K, d0, coeff, target_dr, en_start, en_end, target_b6, normal, roundtrip;
    };
    std::vector<Row> rows;
    for (double K : {1.0, -1.0})
        for (double d0 : {0.3, 1.0, 2.0}) {
            specgap::ModelPoint x, y;
            if (K > 0) {
                x = specgap::make_point(1.0, {1, 0, 0, 0});
                y = specgap::make_point(1.0, {std::cos(d0), std::sin(d0), 0, 0});
            } else {
                x = specgap::make_point(-1.0, {0, 0, 0, 1});
                y = specgap::make_point(-1.0, {std::sinh(d0), 0, 0, std::cosh(d0)});
            }
            const specgap::VariationProbe pr = specgap::make_probe(x, y, 1);
            const double coeff = specgap::dr_expansion_check(pr);
            const specgap::SecondDerivReport sd = specgap::second_derivative_in_r_check(pr);
            const specgap::ModelPoint z = specgap::exp_map(x, pr.e_n, d0 / 3);
            const double rt = std::abs(specgap::distance(x, z) - d0 / 3);
            rows.push_back({K, d0, coeff, -specgap::tn(K, d0 / 2), sd.en_coeff_start,
                            sd.en_coeff_end, sd.target, sd.max_normal_component, rt});
        }
    if (c.format == "json") {
        json j = json::array();
        for (const Row& r : rows)
            j.push_back({{"K", round10(r.K)},
                         {"d0", round10(r.d0)},
                         {"dr_r2_coefficient", round10(r.coeff)},
                         {"dr_r2_target", round10(r.target_dr)},
                         {"second_deriv_en_start", round10(r.en_start)},
                         {"second_deriv_en_end", round10(r.en_end)},
                         {"second_deriv_target", round10(r.target_b6)},
                         {"max_normal_component", round10(r.normal)},
                         {"roundtrip_defect", round10(r.roundtrip)}});
        emit(c, j.dump(2) + "\n");
    } else if (c.format == "csv") {
        CsvTable t;
        t.header = {"K", "d0", "dr_r2_coefficient", "dr_r2_target", "second_deriv_en_start",
                    "second_deriv_en_end", "second_deriv_target", "max_normal_component",
                    "roundtrip_defect"};
        for (const Row& r : rows)
            t.rows.push_back({fmt10(r.K), fmt10(r.d0), fmt10(r.coeff), fmt10(r.target_dr),
                              fmt10(r.en_start), fmt10(r.en_end), fmt10(r.target_b6),
                              fmt10(r.normal), fmt10(r.roundtrip)});
        emit(c, t.to_string());
    } else {
        std::ostringstream o;
        o << "two-endpoint geodesic variation checks\n";
        for (const Row& r : rows)
            o << "  K=" << fmt10(r.K) << " d0=" << fmt10(r.d0) << ": d_r r^2-coeff "
              << fmt10(r.coeff) << " (target " << fmt10(r.target_dr) << "), e_n coeff "
              << fmt10(r.en_end) << " (target " << fmt10(r.target_b6) << "), max normal "
              << fmt10(r.normal) << ", roundtrip " << fmt10(r.roundtrip) << "\n";
        emit(c, o.str());
    }
    return 0;
}

int cmd_verify(const CommonOpts& c, const specgap::VerifyOptions& vo) {
    const std::vector<specgap::CheckResult> results = specgap::run_verification(vo);
    const bool ok = specgap::all_passed(results);
    if (c.format == "json") {
        json j;
        j["checks"] = json::array();
        for (const auto& r : results)
            j["checks"].push_back({{"name", r.name},
                                   {"pass", r.pass},
                                   {"informational", r.informational},
                                   {"margin", round10(r.margin)},
                                   {"detail", r.detail}});
        j["all_passed"] = ok;
        emit(c, j.dump(2) + "\n");
    } else if (c.format == "csv") {
        CsvTable t;
        t.header = {"name", "pass", "informational", "margin", "detail"};
        for (const auto& r : results) {
            std::string detail = r.detail;
            for (char& ch : detail)
                if (ch == ',') ch = ';';
            t.rows.push_back({r.name, r.pass ? "1" : "0", r.informational ? "1" : "0",
                              fmt10(r.margin), detail});
        }
        emit(c, t.to_string());
    } else {
        std::ostringstream o;
        for (const auto& r : results)
            o << (r.pass ? "PASS " : "FAIL ") << (r.informational ? "(info) " : "") << r.name
              << "  margin=" << fmt10(r.margin) << "  " << r.detail << "\n";
        o << (ok ? "all properties passed" : "PROPERTY FAILURES PRESENT") << "\n";
        emit(c, o.str());
    }
    return ok ? 0 : 2;
}

int cmd_reproduce_tables(const CommonOpts& c, const std::string& data_path) {
    const specgap::GoldenTables gt = specgap::load_golden_tables(data_path);
    const specgap::TableDiff diff = specgap::reproduce_tables(gt);
    if (c.format == "json") {
        json j;
        j["reference_subdivisions"] = diff.reference_subdivisions;
        j["cells"] = json::array();
        for (const auto& cell : diff.cells)
            j["cells"].push_back({{"table", cell.table},
                                  {"n", cell.n},
                                  {"D", round10(cell.D)},
                                  {"published", round10(cell.published)},
                                  {"reproduced", round10(cell.reproduced)},
                                  {"converged", round10(cell.converged)},
                                  {"tolerance", round10(cell.tol)},
                                  {"reproduction_ok", cell.reproduction_ok},
                                  {"converged_within_tol", cell.converged_within_tol},
                                  {"note", cell.note}});
        j["all_reproduced"] = diff.all_reproduced;
        emit(c, j.dump(2) + "\n");
    } else if (c.format == "csv") {
        CsvTable t;
        t.header = {"table", "n", "D", "published", "reproduced", "converged",
                    "tolerance", "reproduction_ok", "converged_within_tol"};
        for (const auto& cell : diff.cells)
            t.rows.push_back({cell.table, std::to_string(cell.n), fmt10(cell.D),
                              fmt10(cell.published), fmt10(cell.reproduced),
                              fmt10(cell.converged), fmt10(cell.tol),
                              cell.reproduction_ok ? "1" : "0",
                              cell.converged_within_tol ? "1" : "0"});
        emit(c, t.to_string());
    } else {
        std::ostringstream o;
        o << "reference tables vs recomputation (reference grid: h = D/"
          << diff.reference_subdivisions << ", plain second-order differences)\n";
        for (const auto& cell : diff.cells) {
            o << "  " << cell.table << " n=" << cell.n << " D=" << fmt10(cell.D)
              << ": published " << fmt10(cell.published) << ", reproduced "
              << fmt10(cell.reproduced) << " (|diff| "
              << fmt10(std::abs(cell.reproduced - cell.published)) << "), converged "
              << fmt10(cell.converged) << (cell.reproduction_ok ? "" : "  REPRODUCTION-FAIL");
            if (!cell.note.empty()) o << "\n      note: " << cell.note;
            o << "\n";
        }
        o << (diff.all_reproduced ? "all cells reproduced within tolerance"
                                  : "CELLS EXCEEDED TOLERANCE")
          << "\n";
        emit(c, o.str());
    }
    return diff.all_reproduced ? 0 : 2;
}

int cmd_plot(const CommonOpts& c, const std::string& kind, const specgap::ModelParams& p,
             specgap::SweepAxis axis, std::vector<double> values,
             const specgap::SolveOptions& so) {
    namespace plotting = specgap::plotting;
    const std::string prefix = c.out.empty() ? "specgap_plot" : c.out;
    if (kind == "gap-sweep") {
        if (values.empty())
            for (int i = 0; i < 25; ++i) values.push_back(0.2 + i * (3.0 - 0.2) / 24.0);
        std::vector<plotting::Series> series;
        CsvTable t;
        t.header = {to_string(axis)};
        std::vector<std::vector<double>> cols;
        const std::vector<int> ns = axis == specgap::SweepAxis::D ? std::vector<int>{2, 3, 4}
                                                                  : std::vector<int>{p.n};
        for (int n : ns) {
            specgap::ModelParams base = p;
            base.n = n;
            const specgap::SweepResult s = specgap::sweep(axis, values, base, so);
            plotting::Series ser;
            ser.label = "n=" + std::to_string(n);
            ser.x = values;
            for (const auto& g : s.reports) ser.y.push_back(g.normalized_gap);
            series.push_back(ser);
            t.header.push_back("normalized_gap_n" + std::to_string(n));
            cols.push_back(series.back().y);
        }
        for (std::size_t i = 0; i < values.size(); ++i) {
            std::vector<std::string> row{fmt10(values[i])};
            for (const auto& col : cols) row.push_back(fmt10(col[i]));
            t.rows.push_back(row);
        }
        specgap::write_file(prefix + ".svg",
                            plotting::render_svg("normalized gap vs " + to_string(axis),
                                                 to_string(axis), "D^2 gap / pi^2", series));
        specgap::write_file(prefix + ".csv", t.to_string());
    } else if (kind == "profiles") {
        const specgap::SolveReport rep = specgap::solve_model(p, so);
        const specgap::Grid& g = rep.grid;
        std::vector<double> s_nodes = g.nodes();
        plotting::Series e1{"phi_1", s_nodes, rep.pairs[0].samples};
        plotting::Series e2{"phi_2", s_nodes, rep.pairs[1].samples};
        specgap::write_file(prefix + "_eigenfunctions.svg",
                            plotting::render_svg("model eigenfunctions", "s", "phi", {e1, e2}));
        CsvTable t;
        t.header = {"s", "phi1", "phi2"};
        for (int i = 0; i < g.m; ++i)
            t.rows.push_back({fmt10(g.node(i)), fmt10(rep.pairs[0].samples[i]),
                              fmt10(rep.pairs[1].samples[i])});
        specgap::write_file(prefix + "_eigenfunctions.csv", t.to_string());

        const specgap::LogDerivativeProfile prof = specgap::log_derivative_profile(rep);
        const specgap::RatioProfile ratio = specgap::ratio_profile(rep);
        plotting::Series fs{"f = (log phi_1)'", {}, {}};
        for (std::size_t k = 0; k < prof.idx.size(); ++k) {
            const double s = prof.grid.node(prof.idx[k]);
            if (s < 0) continue;
            fs.x.push_back(s);
            fs.y.push_back(prof.f[k]);
        }
        plotting::Series ws{"w = phi_2/phi_1", {}, {}};
        for (std::size_t k = 0; k < ratio.idx.size(); ++k) {
            ws.x.push_back(ratio.grid.node(ratio.idx[k]));
            ws.y.push_back(ratio.w[k]);
        }
        specgap::write_file(prefix + "_moduli.svg",
                            plotting::render_svg("log-derivative and ratio profiles", "s",
                                                 "value", {fs, ws}));
        CsvTable tm;
        tm.header = {"s", "f", "w"};
        const std::size_t rows = std::max(fs.x.size(), ws.x.size());
        for (std::size_t i = 0; i < rows; ++i) {
            std::vector<std::string> row;
            row.push_back(i < fs.x.size() ? fmt10(fs.x[i]) : "");
            row.push_back(i < fs.y.size() ? fmt10(fs.y[i]) : "");
            row.push_back(i < ws.y.size() ? fmt10(ws.y[i]) : "");
            tm.rows.push_back(row);
        }
        specgap::write_file(prefix + "_moduli.csv", tm.to_string());
    } else {
        throw specgap::PreconditionError("plot: unknown kind '" + kind +
                                         "' (use gap-sweep or profiles)");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral-gap laboratory for constant-curvature model operators"};
    app.require_subcommand(1);

    CommonOpts common;
    specgap::ModelParams params;
    specgap::SolveOptions so;
    std::string method = "both";
    double radius = 0.5;
    std::string sweep_axis = "D";
    std::string sweep_values;
    std::string filter;
    std::string data_file = SPECGAP_DEFAULT_DATA_FILE;
    std::string plot_kind = "gap-sweep";
    double inject_lambda2 = 0.0;
    int jobs = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "table, csv or json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        cmd->add_option("--out", common.out, "output path (default: stdout)");
    };
    auto add_model = [&](CLI::App* cmd) {
        cmd->add_option("--n", params.n, "dimension (>= 1)");
        cmd->add_option("--K", params.K, "sectional curvature");
        cmd->add_option("--D", params.D, "diameter of the model interval");
        cmd->add_option("--grid", so.grid_m, "interior nodes of the coarse grid");
        cmd->add_option("--method", method, "tridiag, shooting or both")
            ->check(CLI::IsMember({"tridiag", "shooting", "both"}));
        cmd->add_option("--tol", so.tol, "eigenvalue tolerance");
    };

    CLI::App* solve = app.add_subcommand("solve", "first two model eigenvalues and the gap");
    add_model(solve);
    add_common(solve);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "gap sweep along D or n");
    add_model(sweep_cmd);
    add_common(sweep_cmd);
    sweep_cmd->add_option("--sweep-axis", sweep_axis, "D or n")
        ->check(CLI::IsMember({"D", "n"}));
    sweep_cmd->add_option("--sweep-values", sweep_values, "comma-separated values")->required();
    sweep_cmd->add_option("--jobs", jobs, "worker count for sweep points");

    CLI::App* ball = app.add_subcommand("ball", "Dirichlet spectrum of a geodesic ball");
    ball->add_option("--n", params.n, "dimension (>= 2)");
    ball->add_option("--K", params.K, "curvature (0 or 1)");
    ball->add_option("--radius", radius, "ball radius")->required();
    add_common(ball);

    CLI::App* geom = app.add_subcommand("geometry", "geodesic-variation identity checks");
    add_common(geom);

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify);
    verify->add_option("--filter", filter, "only checks whose name contains this substring");
    verify->add_option("--grid", so.grid_m, "grid size used by the suite");
    verify->add_option("--inject-lambda2", inject_lambda2,
                       "harness self-test: bias added to every model lambda_2");

    CLI::App* tables = app.add_subcommand("reproduce-tables",
                                          "recompute the reference normalized-gap tables");
    add_common(tables);
    tables->add_option("--data", data_file, "reference table data file");

    CLI::App* plot = app.add_subcommand("plot", "SVG plots with CSV twins");
    add_model(plot);
    add_common(plot);
    plot->add_option("--kind", plot_kind, "gap-sweep or profiles")
        ->check(CLI::IsMember({"gap-sweep", "profiles"}));
    plot->add_option("--sweep-axis", sweep_axis, "D or n")->check(CLI::IsMember({"D", "n"}));
    plot->add_option("--sweep-values", sweep_values, "comma-separated values");

    CLI11_PARSE(app, argc, argv);

    try {
        so.method = parse_method(method);
        if (solve->parsed()) return cmd_solve(common, params, so);
        if (sweep_cmd->parsed()) {
            const specgap::SweepAxis axis =
                sweep_axis == "D" ? specgap::SweepAxis::D : specgap::SweepAxis::N;
            return cmd_sweep(common, axis, parse_values(sweep_values), params, so, jobs);
        }
        if (ball->parsed()) {
            specgap::BallSpec spec{params.n, params.K, radius};
            return cmd_ball(common, spec);
        }
        if (geom->parsed()) return cmd_geometry(common);
        if (verify->parsed()) {
            specgap::VerifyOptions vo;
            vo.filter = filter;
            vo.lambda2_bias = inject_lambda2;
            vo.grid_m = so.grid_m;
            return cmd_verify(common, vo);
        }
        if (tables->parsed()) return cmd_reproduce_tables(common, data_file);
        if (plot->parsed()) {
            const specgap::SweepAxis axis =
                sweep_axis == "D" ? specgap::SweepAxis::D : specgap::SweepAxis::N;
            return cmd_plot(common, plot_kind, params, axis, parse_values(sweep_values), so);
        }
    } catch (const specgap::PreconditionError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 1;
    } catch (const specgap::DomainError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
