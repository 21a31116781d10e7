#include "hjps/cli.hpp"

#include "hjps/classify.hpp"
#include "hjps/dualcurve.hpp"
#include "hjps/enumeration.hpp"
#include "hjps/heisenberg.hpp"
#include "hjps/jps.hpp"
#include "hjps/polynomial.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hjps::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

json monomial_json(const Monomial& m) {
    json out = json::array();
    for (int e : m.exponents) out.push_back(e);
    return out;
}

json table_json(const BracketTable& t) {
    json entries = json::array();
    for (int i = 0; i < t.vars(); ++i)
        for (int j = i + 1; j < t.vars(); ++j)
            entries.push_back({{"i", i}, {"j", j}, {"bracket", to_string(t.upper(i, j))}});
    return entries;
}

void emit(std::ostream& out, const json& payload) {
    out << payload.dump(2) << '\n';
}

CasimirSet load_casimirs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open Casimir file: " + path);
    return read_casimir_set(in);
}

// --- SVG plotting -----------------------------------------------------------

std::string svg_num(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", v);
    return buffer;
}

struct Canvas {
    double min_x, max_x, min_y, max_y;
    static constexpr double size = 640.0;
    static constexpr double margin = 56.0;

    double sx(double x) const {
        return margin + (x - min_x) / (max_x - min_x) * (size - 2 * margin);
    }
    double sy(double y) const {
        return size - margin - (y - min_y) / (max_y - min_y) * (size - 2 * margin);
    }
};

// Segment of the line c + a*x + b*y = 0 inside the canvas data rectangle.
std::optional<std::array<double, 4>> clip_line(const Canvas& cv, double c, double a, double b) {
    std::vector<std::array<double, 2>> hits;
    auto push = [&](double x, double y) {
        if (x < cv.min_x - 1e-9 || x > cv.max_x + 1e-9) return;
        if (y < cv.min_y - 1e-9 || y > cv.max_y + 1e-9) return;
        for (const auto& h : hits)
            if (std::abs(h[0] - x) < 1e-9 && std::abs(h[1] - y) < 1e-9) return;
        hits.push_back({x, y});
    };
    if (std::abs(b) > 1e-12) {
        push(cv.min_x, -(c + a * cv.min_x) / b);
        push(cv.max_x, -(c + a * cv.max_x) / b);
    }
    if (std::abs(a) > 1e-12) {
        push(-(c + b * cv.min_y) / a, cv.min_y);
        push(-(c + b * cv.max_y) / a, cv.max_y);
    }
    if (hits.size() < 2) return std::nullopt;
    return std::array<double, 4>{hits[0][0], hits[0][1], hits[1][0], hits[1][1]};
}

void plot_triangle_svg(std::ostream& out, long r) {
    const auto points = triangle_lattice_points(r);
    const auto rows = eliminated_rows(3, r);
    Canvas cv{-1.0, 3.0 * r + 1.0, -1.0, 3.0 * r + 1.0};
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    out << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
    for (const auto& row : rows) {
        const auto segment = clip_line(cv, to_double(row[0]), to_double(row[1]),
                                       to_double(row[2]));
        if (!segment) continue;
        out << "<line x1=\"" << svg_num(cv.sx((*segment)[0])) << "\" y1=\""
            << svg_num(cv.sy((*segment)[1])) << "\" x2=\"" << svg_num(cv.sx((*segment)[2]))
            << "\" y2=\"" << svg_num(cv.sy((*segment)[3]))
            << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    }
    for (const auto& [x, y] : points)
        out << "<circle cx=\"" << svg_num(cv.sx(static_cast<double>(x))) << "\" cy=\""
            << svg_num(cv.sy(static_cast<double>(y)))
            << "\" r=\"4\" fill=\"#1f5fbf\"/>\n";
    out << "<text x=\"20\" y=\"28\" font-family=\"monospace\" font-size=\"16\">T_" << r
        << ": n=3 r=" << r << " lattice points: " << points.size() << "</text>\n";
    out << "</svg>\n";
}

void plot_polytope4_svg(std::ostream& out, long r) {
    const auto compositions = enumerate_compositions(4, r);
    const auto vertices = reference_vertices(4, r);
    const auto rows = eliminated_rows(4, r);

    // Active constraint sets decide vertex adjacency (shared facet pair).
    std::vector<std::vector<int>> active(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v)
        for (std::size_t k = 0; k < rows.size(); ++k) {
            Rational value = rows[k][0];
            for (int j = 0; j < 3; ++j)
                value += rows[k][static_cast<std::size_t>(j) + 1] *
                         vertices[v][static_cast<std::size_t>(j)];
            if (value == 0) active[v].push_back(static_cast<int>(k));
        }

    // Generic orthographic direction; the polytope has an edge parallel to
    // (1,1,1), so the symmetric isometric view would collapse it.
    const auto project = [](double x, double y, double z) {
        return std::array<double, 2>{0.82 * x - 0.55 * y + 0.12 * z,
                                     0.20 * x + 0.38 * y - 0.90 * z};
    };

    std::vector<std::array<double, 2>> projected;
    for (const auto& s : compositions)
        projected.push_back(project(static_cast<double>(s[0]), static_cast<double>(s[1]),
                                    static_cast<double>(s[2])));
    std::vector<std::array<double, 2>> corner;
    for (const auto& v : vertices)
        corner.push_back(project(to_double(v[0]), to_double(v[1]), to_double(v[2])));

    double min_u = 1e300, max_u = -1e300, min_v = 1e300, max_v = -1e300;
    auto widen = [&](const std::array<double, 2>& q) {
        min_u = std::min(min_u, q[0]);
        max_u = std::max(max_u, q[0]);
        min_v = std::min(min_v, q[1]);
        max_v = std::max(max_v, q[1]);
    };
    for (const auto& q : projected) widen(q);
    for (const auto& q : corner) widen(q);
    Canvas cv{min_u - 1.0, max_u + 1.0, min_v - 1.0, max_v + 1.0};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    out << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
    for (std::size_t u = 0; u < vertices.size(); ++u)
        for (std::size_t w = u + 1; w < vertices.size(); ++w) {
            int shared = 0;
            for (int ka : active[u])
                for (int kb : active[w])
                    if (ka == kb) ++shared;
            if (shared < 2) continue;
            out << "<line x1=\"" << svg_num(cv.sx(corner[u][0])) << "\" y1=\""
                << svg_num(cv.sy(corner[u][1])) << "\" x2=\"" << svg_num(cv.sx(corner[w][0]))
                << "\" y2=\"" << svg_num(cv.sy(corner[w][1]))
                << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
        }
    for (const auto& q : projected)
        out << "<circle cx=\"" << svg_num(cv.sx(q[0])) << "\" cy=\"" << svg_num(cv.sy(q[1]))
            << "\" r=\"3\" fill=\"#1f5fbf\"/>\n";
    for (const auto& q : corner)
        out << "<circle cx=\"" << svg_num(cv.sx(q[0])) << "\" cy=\"" << svg_num(cv.sy(q[1]))
            << "\" r=\"4\" fill=\"#bf3f1f\"/>\n";
    out << "<text x=\"20\" y=\"28\" font-family=\"monospace\" font-size=\"16\">T_4 projection: "
           "n=4 r=" << r << " lattice points: " << compositions.size() << "</text>\n";
    out << "</svg>\n";
}

// --- subcommands -------------------------------------------------------------

int run_basis(std::ostream& out, int n, long r, bool as_json, bool with_orbits) {
    const HBasisReport basis = h_basis(n, r);
    if (as_json) {
        json payload = {
            {"n", basis.n},
            {"r", basis.r},
            {"degree", basis.degree},
            {"tau_offset", tau_offset(n)},
            {"dimension", basis.monomial_dimension},
            {"invariant_dimension", basis.orbit_dimension},
        };
        json monomials = json::array();
        for (const Monomial& m : basis.monomials) monomials.push_back(monomial_json(m));
        payload["monomials"] = monomials;
        if (with_orbits) {
            json orbits = json::array();
            for (const auto& orbit : basis.orbits) {
                json one = json::array();
                for (const Monomial& m : orbit) one.push_back(monomial_json(m));
                orbits.push_back(one);
            }
            payload["orbits"] = orbits;
        }
        emit(out, payload);
        return kExitOk;
    }
    out << "H-basis n=" << n << " r=" << r << " (degree " << basis.degree << ")\n";
    out << "dimension           " << basis.monomial_dimension << '\n';
    out << "invariant dimension " << basis.orbit_dimension << '\n';
    if (with_orbits) {
        for (std::size_t k = 0; k < basis.orbits.size(); ++k) {
            Polynomial sum(n);
            for (const Monomial& m : basis.orbits[k]) sum.add_term(m, 1);
            out << "orbit " << k << ": " << to_string(sum) << '\n';
        }
    } else {
        for (const Monomial& m : basis.monomials)
            out << to_string(Polynomial::term(m, 1)) << '\n';
    }
    return kExitOk;
}

int run_count(std::ostream& out, std::ostream& err, int n, long r, const std::string& method) {
    const auto parsed = parse_count_method(method);
    if (!parsed) {
        err << "unknown method: " << method << '\n';
        return kExitUsage;
    }
    CountReport report;
    try {
        report = count_lattice_points(n, r, *parsed);
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    json payload = {{"n", n}, {"r", r}, {"method", method}, {"count", report.count}};
    // The two independent routes must agree whenever both are in reach.
    if (static_cast<long>(n) * r <= 24) {
        try {
            const long via_compositions = static_cast<long>(enumerate_compositions(n, r).size());
            const long via_filter = static_cast<long>(monomial_filter(n, r).size());
            payload["cross_check"] = {{"compositions", via_compositions},
                                      {"monomial_filter", via_filter},
                                      {"agree", via_compositions == via_filter}};
            if (via_compositions != via_filter) {
                emit(out, payload);
                return kExitCheckFailed;
            }
        } catch (const std::invalid_argument&) {
            // One of the routes is out of enumeration reach; nothing to compare.
        }
    }
    emit(out, payload);
    return kExitOk;
}

int run_poincare(std::ostream& out, int max_r) {
    json payload = {
        {"max_r", max_r},
        {"series", "(1+t^3+t^6)/(1-t^3)^3"},
        {"coefficients", poincare_coefficients(max_r)},
    };
    emit(out, payload);
    return kExitOk;
}

int run_bracket(std::ostream& out, std::ostream& err, const std::string& path,
                const std::vector<int>& pair) {
    CasimirSet casimirs;
    try {
        casimirs = load_casimirs(path);
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    json payload = {{"n", casimirs.n}};
    json sources = json::array();
    for (const Polynomial& q : casimirs.casimirs) sources.push_back(to_string(q));
    payload["casimirs"] = sources;
    if (!pair.empty()) {
        const int i = pair[0];
        const int j = pair[1];
        if (i < 0 || i >= casimirs.n || j < 0 || j >= casimirs.n) {
            err << "pair indices out of range\n";
            return kExitUsage;
        }
        const Polynomial entry = jacobian_bracket(casimirs, Polynomial::variable(casimirs.n, i),
                                                  Polynomial::variable(casimirs.n, j));
        payload["i"] = i;
        payload["j"] = j;
        payload["bracket"] = to_string(entry);
    } else {
        payload["entries"] = table_json(bracket_table(casimirs));
    }
    emit(out, payload);
    return kExitOk;
}

int run_check(std::ostream& out, std::ostream& err, const std::string& path, int sign) {
    CasimirSet casimirs;
    try {
        casimirs = load_casimirs(path);
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    BracketTable table = bracket_table(casimirs);
    if (sign == -1) {
        BracketTable flipped(table.vars());
        for (int i = 0; i < table.vars(); ++i)
            for (int j = i + 1; j < table.vars(); ++j) flipped.set(i, j, -table.upper(i, j));
        table = flipped;
    }
    const InvarianceReport invariance = check_h_invariance(table);
    const JacobiReport jacobi = check_jacobi(table);
    const bool casimir_ok = check_casimir(casimirs, table);

    json failures = json::array();
    for (const InvarianceFailure& f : invariance.failures)
        failures.push_back({{"i", f.i},
                            {"j", f.j},
                            {"reason", f.reason},
                            {"witness", to_string(f.witness)}});
    json payload = {
        {"n", casimirs.n},
        {"sign", sign},
        {"sigma_ok", invariance.sigma_ok},
        {"tau_ok", invariance.tau_ok},
        {"degree_signature_ok", invariance.degree_signature_ok},
        {"jacobi_ok", jacobi.ok},
        {"casimir_ok", casimir_ok},
        {"failures", failures},
        {"table", table_json(table)},
    };
    emit(out, payload);
    const bool all_ok = invariance.all_ok() && jacobi.ok && casimir_ok;
    return all_ok ? kExitOk : kExitCheckFailed;
}

int run_dual(std::ostream& out, std::ostream& err, const std::string& gamma_text, int samples,
             std::uint64_t seed, double tol) {
    Rational gamma;
    try {
        gamma = parse_rational(gamma_text);
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    std::vector<TangentSample> tangents;
    SexticFit fit;
    try {
        tangents = sample_tangents(to_double(gamma), samples, seed);
        fit = fit_dual_sextic(tangents);
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    double euler_max = 0.0;
    for (const TangentSample& s : tangents) {
        const double dot = s.line[0] * s.point[0] + s.line[1] * s.point[1] +
                           s.line[2] * s.point[2];
        euler_max = std::max(euler_max, std::abs(dot));
    }
    const bool pass = fit.residual < tol;
    json payload = {
        {"gamma", to_string(gamma)},
        {"samples", samples},
        {"seed", seed},
        {"tol", tol},
        {"coefficients", fit.coeffs},
        {"residual", fit.residual},
        {"euler_max", euler_max},
        {"pass", pass},
    };
    emit(out, payload);
    return pass ? kExitOk : kExitCheckFailed;
}

int run_polytope(std::ostream& out, std::ostream& err, int n, long r,
                 const std::string& plot_path) {
    const ConstraintSystem system = constraint_system(n, r);
    json payload = {
        {"n", n},
        {"r", r},
        {"tau_offset", tau_offset(n)},
        {"weight_target", *system.weight},
    };
    json rows = json::array();
    for (const auto& row : system.rows) rows.push_back(row);
    payload["rows"] = rows;
    json reduced = json::array();
    for (const auto& row : eliminated_rows(n, r)) {
        json one = json::array();
        for (const Rational& value : row) one.push_back(to_string(value));
        reduced.push_back(one);
    }
    payload["eliminated_rows"] = reduced;
    payload["count"] = enumerate_compositions(n, r).size();

    bool vertices_verified = true;
    if (n == 3 || n == 4) {
        const auto vertices = reference_vertices(n, r);
        const VertexCheck check = check_polytope_vertices(n, r, vertices);
        json list = json::array();
        for (const auto& v : vertices) {
            json one = json::array();
            for (const Rational& coordinate : v) one.push_back(to_string(coordinate));
            list.push_back(one);
        }
        payload["vertices"] = list;
        payload["vertices_verified"] = check.ok;
        vertices_verified = check.ok;
    }

    if (!plot_path.empty()) {
        if (n != 3 && n != 4) {
            err << "plotting supports n=3 (triangle) and n=4 (projection) only\n";
            return kExitUsage;
        }
        std::ofstream file(plot_path);
        if (!file) {
            err << "cannot open plot output: " << plot_path << '\n';
            return kExitUsage;
        }
        if (n == 3)
            plot_triangle_svg(file, r);
        else
            plot_polytope4_svg(file, r);
        payload["plot"] = plot_path;
    }
    emit(out, payload);
    return vertices_verified ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heisenberg-invariant Jacobian Poisson structures"};
    app.require_subcommand(1);

    int basis_n = 3;
    long basis_r = 1;
    bool basis_json = false;
    bool basis_orbits = false;
    auto* basis_cmd = app.add_subcommand("basis", "admissible Casimir monomials and sigma-orbits");
    basis_cmd->add_option("--n", basis_n, "variable count")->required();
    basis_cmd->add_option("--r", basis_r, "degree step (degree = n*r)")->required();
    basis_cmd->add_flag("--json", basis_json, "emit JSON");
    basis_cmd->add_flag("--orbits", basis_orbits, "include sigma-orbits");

    int count_n = 3;
    long count_r = 1;
    std::string count_method;
    auto* count_cmd = app.add_subcommand("count", "lattice-point counts by route");
    count_cmd->add_option("--n", count_n, "variable count")->required();
    count_cmd->add_option("--r", count_r, "degree step")->required();
    count_cmd->add_option("--method", count_method,
                          "closed-form | triangle | compositions | monomial-filter")
        ->required();

    int poincare_max_r = 10;
    auto* poincare_cmd = app.add_subcommand("poincare", "Poincare series coefficients");
    poincare_cmd->add_option("--max-r", poincare_max_r, "largest r (coefficient of t^{3r})")
        ->required();

    std::string bracket_file;
    std::vector<int> bracket_pair;
    auto* bracket_cmd = app.add_subcommand("bracket", "Jacobian bracket table of a Casimir file");
    bracket_cmd->add_option("--casimirs", bracket_file, "Casimir file")->required();
    bracket_cmd->add_option("--pair", bracket_pair, "single generator pair i j")->expected(2);

    std::string check_file;
    int check_sign = 1;
    auto* check_cmd = app.add_subcommand("check", "run all structure checkers");
    check_cmd->add_option("--casimirs", check_file, "Casimir file")->required();
    check_cmd->add_option("--sign", check_sign, "table-wide sign, -1 or 1")
        ->check(CLI::IsMember({-1, 1}));

    std::string dual_gamma;
    int dual_samples = 24;
    std::uint64_t dual_seed = 1;
    double dual_tol = 1e-8;
    auto* dual_cmd = app.add_subcommand("dual", "fit tangent lines of the cubic into the sextic family");
    dual_cmd->add_option("--gamma", dual_gamma, "cubic parameter, rational p/q")->required();
    dual_cmd->add_option("--samples", dual_samples, "tangent sample count");
    dual_cmd->add_option("--seed", dual_seed, "sampling seed");
    dual_cmd->add_option("--tol", dual_tol, "residual acceptance threshold");

    int polytope_n = 3;
    long polytope_r = 1;
    std::string polytope_plot;
    auto* polytope_cmd = app.add_subcommand("polytope", "constraint systems, counts and plots");
    polytope_cmd->add_option("--n", polytope_n, "variable count")->required();
    polytope_cmd->add_option("--r", polytope_r, "degree step")->required();
    polytope_cmd->add_option("--plot", polytope_plot, "write an SVG to this path");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(basis_cmd))
            return run_basis(out, basis_n, basis_r, basis_json, basis_orbits);
        if (app.got_subcommand(count_cmd))
            return run_count(out, err, count_n, count_r, count_method);
        if (app.got_subcommand(poincare_cmd)) return run_poincare(out, poincare_max_r);
        if (app.got_subcommand(bracket_cmd))
            return run_bracket(out, err, bracket_file, bracket_pair);
        if (app.got_subcommand(check_cmd)) return run_check(out, err, check_file, check_sign);
        if (app.got_subcommand(dual_cmd))
            return run_dual(out, err, dual_gamma, dual_samples, dual_seed, dual_tol);
        if (app.got_subcommand(polytope_cmd))
            return run_polytope(out, err, polytope_n, polytope_r, polytope_plot);
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    err << "no subcommand given\n";
    return kExitUsage;
}

}  // namespace hjps::cli
