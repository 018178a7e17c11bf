#include <specgap/tables.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include <specgap/gap_analysis.hpp>
#include <specgap/tridiag.hpp>

namespace specgap {

GoldenTables load_golden_tables(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open reference table file: " + path);
    GoldenTables gt;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string tag;
        std::getline(ss, tag, ',');
        if (tag == "t1") {
            std::string d, v2, v4;
            std::getline(ss, d, ',');
            std::getline(ss, v2, ',');
            std::getline(ss, v4, ',');
            gt.t1_D.push_back(std::stod(d));
            gt.t1_n2.push_back(std::stod(v2));
            gt.t1_n4.push_back(std::stod(v4));
        } else if (tag == "t2") {
            std::string n, v;
            std::getline(ss, n, ',');
            std::getline(ss, v, ',');
            gt.t2_n.push_back(std::stoi(n));
            gt.t2_val.push_back(std::stod(v));
        } else if (tag == "t2_D") {
            std::string v;
            std::getline(ss, v, ',');
            gt.t2_D = std::stod(v);
        } else {
            throw std::runtime_error("reference table file: unknown row tag '" + tag + "'");
        }
    }
    if (gt.t1_D.empty() || gt.t2_n.empty())
        throw std::runtime_error("reference table file: missing rows");
    return gt;
}

double reference_scheme_gap(const ModelParams& p, int subdivisions) {
    const Grid g = Grid::over(-p.D / 2, p.D / 2, subdivisions - 1);
    const SymTridiag T = build_normal_form_matrix(p, g);
    const std::vector<double> v = eig_tridiag_smallest_values(T, 2);
    return p.D * p.D * (v[1] - v[0]) / (M_PI * M_PI);
}

namespace {

CellReport make_cell(const std::string& table, int n, double D, double published, double tol,
                     int subdivisions) {
    const ModelParams p{n, 1.0, D};
    CellReport c;
    c.table = table;
    c.n = n;
    c.D = D;
    c.published = published;
    c.tol = tol;
    c.reproduced = reference_scheme_gap(p, subdivisions);

    SolveOptions opt;
    const GapReport gr = gap_report(p, opt);
    c.converged = gr.normalized_gap;

    c.reproduction_ok = std::abs(c.reproduced - published) <= tol;
    c.converged_within_tol = std::abs(c.converged - published) <= tol;
    if (!c.converged_within_tol) {
        std::ostringstream os;
        os << "published cell reflects the reference grid's discretization bias near the "
              "potential singularity; converged value differs by "
           << (c.converged - published);
        c.note = os.str();
    } else if (std::abs(c.converged - published) > 1e-6) {
        std::ostringstream os;
        os << "published digits carry the reference grid's O(h^2) bias "
           << (published - c.converged);
        c.note = os.str();
    }
    return c;
}

}  // namespace

TableDiff reproduce_tables(const GoldenTables& gt, int reference_subdivisions) {
    TableDiff out;
    out.reference_subdivisions = reference_subdivisions;
    for (std::size_t i = 0; i < gt.t1_D.size(); ++i) {
        const double D = gt.t1_D[i];
        const double tol = (D <= 3.1) ? 2e-4 : 5e-4;
        out.cells.push_back(make_cell("D-table", 2, D, gt.t1_n2[i], tol, reference_subdivisions));
        out.cells.push_back(make_cell("D-table", 4, D, gt.t1_n4[i], tol, reference_subdivisions));
    }
    for (std::size_t i = 0; i < gt.t2_n.size(); ++i)
        out.cells.push_back(
            make_cell("n-table", gt.t2_n[i], gt.t2_D, gt.t2_val[i], 2e-4, reference_subdivisions));
    out.all_reproduced = true;
    for (const CellReport& c : out.cells) out.all_reproduced = out.all_reproduced && c.reproduction_ok;
    return out;
}

}  // namespace specgap
