// floquet: command-line front end for the Floquet toolkit.
//
// Exit status: 0 on success, 2 on numeric-regime errors, 1 on I/O, parse and usage errors
// (and from `verify` when a check fails).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "floquet/acceptance.hpp"
#include "floquet/config.hpp"
#include "floquet/errors.hpp"
#include "floquet/lyapunov.hpp"
#include "floquet/monodromy.hpp"
#include "floquet/oracle.hpp"
#include "floquet/output.hpp"
#include "floquet/parallel.hpp"
#include "floquet/ramifications.hpp"
#include "floquet/reference.hpp"
#include "floquet/spectrum.hpp"

using nlohmann::json;
using namespace floquet;

namespace {

struct RunConfig {
    std::string spec_path;
    std::string format = "json";
    std::string output;
    std::string plot_data;
    int threads = 0;
    double tol = 1e-12;
};

struct Emitted {
    json doc;
    std::optional<CsvTable> table;  // CSV view; commands without one fall back to JSON
};

Complex parse_lambda(const std::string& text) {
    // "re" or "re,im"
    std::istringstream in(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re)) throw ConfigError("cannot parse lambda '" + text + "'");
    if (in >> comma) {
        if (comma != ',' || !(in >> im)) throw ConfigError("cannot parse lambda '" + text + "'");
    }
    return {re, im};
}

Parity parse_parity(const std::string& s) {
    if (s == "periodic") return Parity::periodic;
    if (s == "antiperiodic") return Parity::antiperiodic;
    throw ConfigError("parity must be periodic or antiperiodic");
}

void check_tol(double tol) {
    if (!(tol >= 1e-13 && tol <= 1e-3)) throw ConfigError("tol must lie in [1e-13, 1e-3]");
}

OperatorSpec load(const RunConfig& cfg) {
    if (cfg.spec_path.empty()) throw ConfigError("--spec is required");
    return load_spec(cfg.spec_path);
}

json sample_json(const LyapunovSample& s) {
    json d;
    d["lambda"] = complex_json(s.lambda);
    d["growth_exponent"] = s.z0;
    json br = json::array();
    for (size_t i = 0; i < s.branches.size(); ++i)
        br.push_back({{"label", s.labels[i]}, {"value", complex_json(s.branches[i])}});
    d["branches"] = br;
    json mult = json::array();
    for (const auto& [t, ti] : s.multipliers) mult.push_back({complex_json(t), complex_json(ti)});
    d["multipliers"] = mult;
    json nu = json::array();
    for (const Complex& f : s.nu_coeffs) nu.push_back(complex_json(f));
    d["nu_coeffs"] = nu;
    d["rho"] = complex_json(s.rho);
    d["rho_resultant"] = complex_json(s.rho_resultant);
    d["d_plus"] = complex_json(s.d_plus);
    d["d_minus"] = complex_json(s.d_minus);
    d["degenerate"] = s.degenerate;
    d["min_separation"] = s.min_separation;
    return d;
}

json edge_json(const EndpointClassification& e) {
    json d{{"kind", edge_kind_name(e.kind)}, {"location", e.location}, {"residual", e.residual}};
    if (e.index >= 0) {
        d["index"] = e.index;
        d["sign"] = sign_name(e.sign);
        d["multiplicity"] = e.multiplicity;
    }
    return d;
}

// ---- subcommands ----

Emitted cmd_monodromy(const RunConfig& cfg, const std::string& lambda_text, const std::string& engine, bool scaled) {
    const OperatorSpec spec = load(cfg);
    MonodromyOptions opt;
    opt.tol = cfg.tol;
    opt.scaled = scaled;
    if (engine == "taylor") opt.engine = Engine::taylor_chain;
    else if (engine == "rk") opt.engine = Engine::runge_kutta;
    else throw ConfigError("engine must be taylor or rk");
    const Complex lambda = parse_lambda(lambda_text);
    const MonodromyResult m = monodromy(spec, lambda, opt);

    Emitted out;
    json rows = json::array();
    CsvTable table{{"row", "col", "re", "im"}, {}};
    for (int i = 0; i < m.matrix.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.matrix.cols(); ++j) {
            row.push_back(complex_json(m.matrix(i, j)));
            table.rows.push_back({i, j, m.matrix(i, j).real(), m.matrix(i, j).imag()});
        }
        rows.push_back(row);
    }
    out.doc = {{"lambda", complex_json(lambda)},
               {"p", m.p},
               {"engine", engine},
               {"scaled", scaled},
               {"matrix", rows},
               {"log_scale", m.log_scale},
               {"step_count", m.step_count},
               {"local_error_estimate", m.local_error_estimate},
               {"symplectic_defect", symplectic_defect(m)},
               {"determinant", complex_json(monodromy_determinant(m))}};
    out.table = table;
    return out;
}

Emitted cmd_lyapunov(const RunConfig& cfg, const std::string& lambda_text, bool anchor) {
    const OperatorSpec spec = load(cfg);
    std::vector<LyapunovSample> path{branches(spec, parse_lambda(lambda_text), cfg.tol)};
    if (anchor) match_labels(path);
    const LyapunovSample& s = path.front();
    Emitted out;
    out.doc = sample_json(s);
    CsvTable table{{"label", "re", "im"}, {}};
    for (size_t i = 0; i < s.branches.size(); ++i)
        table.rows.push_back({s.labels[i], s.branches[i].real(), s.branches[i].imag()});
    out.table = table;
    return out;
}

Emitted cmd_lyapunov_path(const RunConfig& cfg, const std::string& from, const std::string& to, int points) {
    if (points < 2) throw ConfigError("--points must be at least 2");
    const OperatorSpec spec = load(cfg);
    const Complex a = parse_lambda(from), b = parse_lambda(to);
    std::vector<LyapunovSample> path(points);
    parallel_for(points, [&](size_t i) {
        const double t = static_cast<double>(i) / (points - 1);
        path[i] = branches(spec, a + t * (b - a), cfg.tol);
    });
    match_labels(path);
    const int p = spec.p();
    Emitted out;
    json samples = json::array();
    CsvTable table{{"re_lambda", "im_lambda"}, {}};
    for (int j = 1; j <= p; ++j) {
        table.header.push_back("re_delta_" + std::to_string(j));
        table.header.push_back("im_delta_" + std::to_string(j));
    }
    for (const auto& s : path) {
        json d{{"lambda", complex_json(s.lambda)}, {"rho", complex_json(s.rho)}};
        json br = json::array();
        std::vector<json> row{s.lambda.real(), s.lambda.imag()};
        for (int j = 1; j <= p; ++j) {
            const Complex v = branch_value(s, j);
            br.push_back(complex_json(v));
            row.push_back(v.real());
            row.push_back(v.imag());
        }
        d["branches"] = br;  // indexed by label
        samples.push_back(d);
        table.rows.push_back(row);
    }
    out.doc = {{"from", complex_json(a)}, {"to", complex_json(b)}, {"samples", samples}};
    out.table = table;
    return out;
}

void write_plot_data(const OperatorSpec& spec, double lo, double hi, int grid, double tol, const std::string& path) {
    const int p = spec.p();
    const std::vector<double> nodes = energy_nodes(lo, hi, grid, p);
    std::vector<LyapunovSample> samples(nodes.size());
    parallel_for(nodes.size(), [&](size_t i) { samples[i] = branches(spec, nodes[i], tol); });
    CsvTable table{{"lambda"}, {}};
    for (int j = 1; j <= p; ++j) {
        table.header.push_back("re_delta_" + std::to_string(j));
        table.header.push_back("im_delta_" + std::to_string(j));
    }
    table.header.push_back("re_rho");
    table.header.push_back("im_rho");
    for (const auto& s : samples) {
        std::vector<json> row{s.lambda.real()};
        for (const Complex& d : s.branches) {  // descending Re Delta
            row.push_back(d.real());
            row.push_back(d.imag());
        }
        row.push_back(s.rho.real());
        row.push_back(s.rho.imag());
        table.rows.push_back(row);
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << dump_csv(table);
}

Emitted cmd_bands(const RunConfig& cfg, double lo, double hi, int grid) {
    const OperatorSpec spec = load(cfg);
    SpectrumOptions opt;
    opt.tol = cfg.tol;
    const BandScan scan = band_scan(spec, lo, hi, grid, opt);
    Emitted out;
    json bands = json::array(), gaps = json::array();
    CsvTable table{{"type", "lo", "hi", "multiplicity", "lo_kind", "hi_kind"}, {}};
    for (const auto& b : scan.bands) {
        bands.push_back({{"lo", b.lo},
                         {"hi", b.hi},
                         {"multiplicity", b.multiplicity},
                         {"edge_lo", edge_json(b.edge_lo)},
                         {"edge_hi", edge_json(b.edge_hi)}});
        table.rows.push_back({"band", b.lo, b.hi, b.multiplicity, edge_kind_name(b.edge_lo.kind),
                              edge_kind_name(b.edge_hi.kind)});
    }
    for (const auto& g : scan.gaps) {
        gaps.push_back({{"lo", g.lo}, {"hi", g.hi}});
        table.rows.push_back({"gap", g.lo, g.hi, 0, "", ""});
    }
    out.doc = {{"range", {lo, hi}}, {"grid", grid}, {"bands", bands}, {"gaps", gaps}, {"evaluations", scan.evaluations}};
    out.table = table;
    if (!cfg.plot_data.empty()) write_plot_data(spec, lo, hi, grid, cfg.tol, cfg.plot_data);
    return out;
}

Emitted cmd_eigs(const RunConfig& cfg, int count, const std::string& parity_text) {
    if (count < 1) throw ConfigError("--count must be positive");
    const OperatorSpec spec = load(cfg);
    const Parity parity = parse_parity(parity_text);
    SpectrumOptions opt;
    opt.tol = cfg.tol;
    auto eigs = periodic_eigenvalues(spec, count / 2 + 1, parity, opt);
    if (static_cast<int>(eigs.size()) > count) eigs.resize(count);
    Emitted out;
    json list = json::array();
    CsvTable table{{"index", "sign", "lambda", "prediction", "residual"}, {}};
    for (const auto& e : eigs) {
        json d = edge_json(e);
        double pred = 0.0;
        if (e.index >= 1) pred = eigenvalue_asymptotic(spec, e.index, e.sign).value.real();
        d["prediction"] = pred;
        list.push_back(d);
        table.rows.push_back({e.index, sign_name(e.sign), e.location, pred, e.residual});
    }
    out.doc = {{"parity", parity_name(parity)}, {"eigenvalues", list}};
    out.table = table;
    return out;
}

Emitted cmd_predict(const RunConfig& cfg, int n_lo, int n_hi) {
    if (n_lo < 1 || n_hi < n_lo) throw ConfigError("need 1 <= --n-lo <= --n-hi");
    const OperatorSpec spec = load(cfg);
    const int p = spec.p();
    const RootSystem rs = root_system(p);
    Emitted out;
    json omega = json::array();
    for (const Complex& w : rs.omega) omega.push_back(complex_json(w));
    json eig = json::array(), ram = json::array();
    CsvTable table{{"kind", "k", "n", "sign", "value", "error_order"}, {}};
    for (int n = n_lo; n <= n_hi; ++n) {
        for (Sign s : {Sign::minus, Sign::plus}) {
            const auto a = eigenvalue_asymptotic(spec, n, s);
            eig.push_back({{"n", n}, {"sign", sign_name(s)}, {"value", a.value.real()}, {"error_order", a.error_order}});
            table.rows.push_back({"eigenvalue", 0, n, sign_name(s), a.value.real(), a.error_order});
        }
        for (int k = 1; k <= p - 1; ++k)
            for (Sign s : {Sign::minus, Sign::plus}) {
                const auto a = ramification_asymptotic(spec, k, n, s);
                ram.push_back({{"k", k},
                               {"n", n},
                               {"sign", sign_name(s)},
                               {"value", a.value.real()},
                               {"error_order", a.error_order},
                               {"unperturbed", unperturbed_ramification(k, n, p)}});
                table.rows.push_back({"ramification", k, n, sign_name(s), a.value.real(), a.error_order});
            }
    }
    json gaps = json::array(), splits = json::array();
    for (int n = n_lo; n <= n_hi; ++n) {
        gaps.push_back({{"n", n}, {"width", gap_width_prediction(spec, n)}});
        for (int k = 1; k <= p - 1; ++k)
            splits.push_back({{"k", k},
                              {"n", n},
                              {"split", ramification_split_prediction(spec, k, n)},
                              {"split_leading", ramification_split_leading(spec, k, n)}});
    }
    out.doc = {{"p", p},
               {"omega", omega},
               {"c", rs.c},
               {"eigenvalues", eig},
               {"ramifications", ram},
               {"gap_widths", gaps},
               {"ramification_splits", splits}};
    out.table = table;
    return out;
}

Emitted cmd_ramifications(const RunConfig& cfg, int k, int n_lo, int n_hi, double beta, bool no_parity) {
    const OperatorSpec spec = load(cfg);
    const int p = spec.p();
    if (k < 1 || k > p - 1) throw IndexOutOfRange("k must lie in 1..p-1");
    if (n_lo < 0 || n_hi < n_lo) throw ConfigError("need 0 <= --n-lo <= --n-hi");
    RamificationOptions opt;
    opt.tol = cfg.tol;
    std::vector<SearchBox> boxes;
    for (int n = n_lo; n <= n_hi; ++n) boxes.push_back(make_box(p, k, n, beta));
    std::vector<std::vector<Ramification>> found(boxes.size());
    parallel_for(boxes.size(), [&](size_t i) { found[i] = find_ramifications(spec, boxes[i], opt); });

    const ClusterLayout layout = cluster_boxes(p, build_boxes(p, std::min(n_lo, 0), n_hi, beta), !no_parity);
    Emitted out;
    json list = json::array();
    CsvTable table{{"k", "n", "sign", "re", "im", "multiplicity", "winding", "newton_residual"}, {}};
    for (size_t i = 0; i < boxes.size(); ++i)
        for (const auto& r : found[i]) {
            list.push_back({{"k", r.k},
                            {"n", r.n},
                            {"sign", sign_name(r.sign)},
                            {"location", complex_json(r.location)},
                            {"is_real", r.is_real},
                            {"multiplicity", r.multiplicity},
                            {"winding_certificate", r.winding_certificate},
                            {"newton_residual", r.newton_residual},
                            {"contour_median", r.contour_median},
                            {"prediction", r.n >= 1 ? ramification_asymptotic(spec, r.k, r.n, r.sign).value.real() : 0.0}});
            table.rows.push_back({r.k, r.n, sign_name(r.sign), r.location.real(), r.location.imag(), r.multiplicity,
                                  r.winding_certificate, r.newton_residual});
        }
    json clusters = json::array();
    for (const auto& c : layout.clusters) {
        json members = json::array();
        for (const auto& [mk, mn] : c.members) members.push_back({mk, mn});
        clusters.push_back({{"id", c.id}, {"members", members}, {"re_min", c.re_min}, {"re_max", c.re_max}});
    }
    out.doc = {{"k", k}, {"beta", beta}, {"ramifications", list}, {"clusters", clusters}, {"separators", layout.separators}};
    out.table = table;
    return out;
}

Emitted cmd_galerkin(const RunConfig& cfg, const std::string& parity_text, int modes) {
    const OperatorSpec spec = load(cfg);
    const Parity parity = parse_parity(parity_text);
    const std::vector<double> eigs = galerkin_eigs(spec, parity, modes);
    Emitted out;
    out.doc = {{"parity", parity_name(parity)}, {"modes", modes}, {"eigenvalues", eigs}};
    CsvTable table{{"index", "lambda"}, {}};
    for (size_t i = 0; i < eigs.size(); ++i) table.rows.push_back({static_cast<int>(i), eigs[i]});
    out.table = table;
    return out;
}

Emitted cmd_example1(const RunConfig& cfg, int p, const std::string& lambda_text) {
    const OperatorSpec spec = cfg.spec_path.empty() ? chebyshev_spec(p) : load(cfg);
    if (!spec.is_constant()) throw ConfigError("example1 needs constant coefficients");
    std::vector<double> q;
    for (int j = 1; j <= spec.p(); ++j) q.push_back(spec.q(j).amplitude(0).real());
    const Complex lambda = parse_lambda(lambda_text);
    const std::vector<Complex> closed = constant_coeff_multipliers(q, lambda);
    const std::vector<Complex> numeric = matrix_eigenvalues(monodromy(spec, lambda, cfg.tol));
    Emitted out;
    json a = json::array(), b = json::array();
    CsvTable table{{"source", "re", "im", "abs"}, {}};
    for (const Complex& t : closed) {
        a.push_back(complex_json(t));
        table.rows.push_back({"closed_form", t.real(), t.imag(), std::abs(t)});
    }
    for (const Complex& t : numeric) {
        b.push_back(complex_json(t));
        table.rows.push_back({"monodromy", t.real(), t.imag(), std::abs(t)});
    }
    json qs = json::array();
    for (double v : q) qs.push_back(v);
    out.doc = {{"p", spec.p()}, {"q", qs}, {"lambda", complex_json(lambda)}, {"closed_form", a}, {"monodromy", b}};
    out.table = table;
    return out;
}

Emitted cmd_example2(const RunConfig& cfg, int p, double amplitude, const std::string& lambda_text) {
    // hill potential: q1 of --spec when given, otherwise amplitude * cos 2 pi t
    const TrigPoly hq = cfg.spec_path.empty() ? TrigPoly::cosine(1, amplitude) : load(cfg).q(1);
    const Complex lambda = parse_lambda(lambda_text);
    const std::vector<Complex> hill = hill_power_branches(hq, p, lambda, cfg.tol);
    Emitted out;
    json h = json::array();
    CsvTable table{{"source", "label", "re", "im"}, {}};
    for (int j = 0; j < p; ++j) {
        h.push_back(complex_json(hill[j]));
        table.rows.push_back({"hill", j + 1, hill[j].real(), hill[j].imag()});
    }
    out.doc = {{"p", p}, {"lambda", complex_json(lambda)}, {"hill_branches", h}};
    if (p == 2) {
        std::vector<LyapunovSample> path{branches(hill_square_spec(hq), lambda, cfg.tol)};
        match_labels(path);
        json d = json::array();
        for (int j = 1; j <= 2; ++j) {
            const Complex v = branch_value(path.front(), j);
            d.push_back(complex_json(v));
            table.rows.push_back({"direct", j, v.real(), v.imag()});
        }
        out.doc["direct_branches"] = d;
        out.doc["expanded_spec"] = json::parse(spec_to_json(hill_square_spec(hq)));
    }
    out.table = table;
    return out;
}

Emitted cmd_verify(const std::vector<int>& ids, bool timings, bool& all_passed) {
    const std::vector<CheckResult> results = run_acceptance(ids.empty() ? acceptance_ids() : ids);
    Emitted out;
    json checks = json::array();
    CsvTable table{{"id", "name", "passed", "detail"}, {}};
    all_passed = true;
    for (const auto& r : results) {
        json metrics = json::object();
        for (const auto& [k, v] : r.metrics) metrics[k] = v;
        json d{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"residuals", metrics}};
        if (timings) d["seconds"] = r.seconds;
        checks.push_back(d);
        table.rows.push_back({r.id, r.name, r.passed, r.detail});
        all_passed = all_passed && r.passed;
        std::fprintf(stderr, "[%s] %2d %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str());
    }
    out.doc = {{"checks", checks}, {"passed", all_passed}};
    out.table = table;
    return out;
}

void emit(const RunConfig& cfg, const Emitted& e) {
    std::string text;
    if (cfg.format == "csv" && e.table) text = dump_csv(*e.table);
    else text = dump_json(e.doc);
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.output);
    if (!f) throw std::runtime_error("cannot write " + cfg.output);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Floquet spectra, Lyapunov branches and ramifications of periodic even-order operators"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--threads", cfg.threads, "Parallel lambda-sweep width (0: all cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output,-o", cfg.output, "Write output to this file instead of stdout");
    app.add_option("--tol", cfg.tol, "Integration tolerance, in [1e-13, 1e-3]");

    auto spec_opt = [&](CLI::App* sub, bool required = true) {
        auto* o = sub->add_option("--spec", cfg.spec_path, "Operator spec file (JSON or TOML)");
        if (required) o->required()->check(CLI::ExistingFile);
        else o->check(CLI::ExistingFile);
    };

    std::string lambda = "0", from, to, engine = "taylor", parity = "periodic";
    bool scaled = false, anchor = false, no_parity = false, timings = false;
    int points = 33, grid = 400, count = 8, n_lo = 1, n_hi = 8, k = 1, modes = 128, p = 2;
    double lo = -10.0, hi = 100.0, beta = 0.3, amplitude = 1.0;
    std::vector<int> ids;

    auto* mono = app.add_subcommand("monodromy", "Monodromy matrix M(1, lambda)");
    spec_opt(mono);
    mono->add_option("--lambda", lambda, "Spectral parameter, re[,im]")->required();
    mono->add_option("--engine", engine, "taylor or rk");
    mono->add_flag("--scaled", scaled, "Return the scaled matrix Z^{-1} M Z");

    auto* lyap = app.add_subcommand("lyapunov", "Lyapunov branches, multipliers, rho and D(+-1) at one lambda");
    spec_opt(lyap);
    lyap->add_option("--lambda", lambda, "Spectral parameter, re[,im]")->required();
    lyap->add_flag("--anchor", anchor, "Label branches by the unperturbed cosh(z Omega_j)");

    auto* lpath = app.add_subcommand("lyapunov-path", "Labeled branches along a straight lambda path");
    spec_opt(lpath);
    lpath->add_option("--from", from, "Start, re[,im]")->required();
    lpath->add_option("--to", to, "End, re[,im]")->required();
    lpath->add_option("--points", points, "Number of path points");

    auto* bands = app.add_subcommand("bands", "Spectral bands and gaps on a real interval");
    spec_opt(bands);
    bands->add_option("--lo", lo, "Lower end of the scan");
    bands->add_option("--hi", hi, "Upper end of the scan");
    bands->add_option("--grid", grid, "Sample nodes, uniform in sign(lambda)|lambda|^{1/2p}");
    bands->add_option("--emit-plot-data", cfg.plot_data, "CSV file for (lambda, Delta_j, rho) columns");

    auto* eigs = app.add_subcommand("eigs", "Periodic or antiperiodic eigenvalues");
    spec_opt(eigs);
    eigs->add_option("--count", count, "Number of eigenvalues");
    eigs->add_option("--parity", parity, "periodic or antiperiodic");

    auto* predict = app.add_subcommand("predict", "Closed-form and asymptotic predictions");
    spec_opt(predict);
    predict->add_option("--n-lo", n_lo, "First index");
    predict->add_option("--n-hi", n_hi, "Last index");

    auto* ram = app.add_subcommand("ramifications", "Zeros of rho in the search boxes (k, n)");
    spec_opt(ram);
    ram->add_option("--k", k, "Sector index, 1..p-1");
    ram->add_option("--n-lo", n_lo, "First box index");
    ram->add_option("--n-hi", n_hi, "Last box index");
    ram->add_option("--beta", beta, "Box radius in z");
    ram->add_flag("--no-parity-check", no_parity, "Allow clusters that mix box signs");

    auto* oracle = app.add_subcommand("oracle", "Independent reference computations");
    oracle->require_subcommand(1);
    oracle->fallthrough();
    auto* gal = oracle->add_subcommand("galerkin", "Fourier-Galerkin eigenvalues");
    spec_opt(gal);
    gal->add_option("--parity", parity, "periodic or antiperiodic");
    gal->add_option("--modes", modes, "Truncation N");
    auto* ex1 = oracle->add_subcommand("example1", "Constant coefficients: closed-form vs monodromy multipliers");
    spec_opt(ex1, false);
    ex1->add_option("--p", p, "Order for the default Chebyshev spec");
    ex1->add_option("--lambda", lambda, "Spectral parameter, re[,im]");
    auto* ex2 = oracle->add_subcommand("example2", "Powers of a Hill operator");
    spec_opt(ex2, false);
    ex2->add_option("--p", p, "Power");
    ex2->add_option("--amplitude", amplitude, "Hill potential amplitude * cos 2 pi t (without --spec)");
    ex2->add_option("--lambda", lambda, "Spectral parameter, re[,im]");

    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    verify->add_option("--checks", ids, "Check ids, comma separated (default: all)")->delimiter(',');
    verify->add_flag("--timings", timings, "Include wall-clock seconds (output no longer byte-stable)");

    // global options may follow the subcommand
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
    for (CLI::App* sub : oracle->get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        check_tol(cfg.tol);
        set_thread_count(cfg.threads);
        bool passed = true;
        Emitted out;
        if (*mono) out = cmd_monodromy(cfg, lambda, engine, scaled);
        else if (*lyap) out = cmd_lyapunov(cfg, lambda, anchor);
        else if (*lpath) out = cmd_lyapunov_path(cfg, from, to, points);
        else if (*bands) out = cmd_bands(cfg, lo, hi, grid);
        else if (*eigs) out = cmd_eigs(cfg, count, parity);
        else if (*predict) out = cmd_predict(cfg, n_lo, n_hi);
        else if (*ram) out = cmd_ramifications(cfg, k, n_lo, n_hi, beta, no_parity);
        else if (*gal) out = cmd_galerkin(cfg, parity, modes);
        else if (*ex1) out = cmd_example1(cfg, p, lambda);
        else if (*ex2) out = cmd_example2(cfg, p, amplitude, lambda);
        else if (*verify) out = cmd_verify(ids, timings, passed);
        emit(cfg, out);
        return passed ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.numeric() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
