// Command-line front end: evaluate chain kernels, print polynomial and
// boundary-value tables, and run the symbolic / numeric verification suites.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 unsupported
// request.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hspot/chain_kernel.hpp"
#include "hspot/lemmas.hpp"
#include "hspot/numeric_harness.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

/// Exact rational from a plain decimal literal such as "-1.25".
hspot::Rational decimal_to_rational(const std::string& text) {
    std::string t = text;
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    auto dot = t.find('.');
    std::string digits = (dot == std::string::npos) ? t : t.substr(0, dot) + t.substr(dot + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("not a decimal number: '" + text + "'");
    hspot::BigInt num(digits);
    hspot::BigInt den(1);
    if (dot != std::string::npos)
        for (size_t i = 0; i < t.size() - dot - 1; ++i) den *= 10;
    hspot::Rational r(num, den);
    return neg ? -r : r;
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw UsageError("cannot open output file '" + path + "'");
    return file;
}

/// Exact on-axis value of A_n (B_n vanishes there); x0 as exact rational.
hspot::SymbolicConstant exact_axis_a(int n, int m, const hspot::Rational& x0) {
    using namespace hspot;
    SymbolicConstant two_over_sigma = SymbolicConstant::rational(2) / sphere_area(m + 1);
    if (n <= -1) {
        const int k = -n;
        Rational lead = poly_P(k).coeff(k, 0).eval(m);
        return two_over_sigma * SymbolicConstant::rational(lead * rational_pow(x0, 1 - m - k));
    }
    if (n == 0)
        return -two_over_sigma *
               SymbolicConstant::rational(rational_pow(x0, 1 - m) / (m - 1));
    if (n == 1)
        return two_over_sigma *
               SymbolicConstant::rational(rational_pow(x0, 2 - m) / ((m - 1) * (m - 2)));
    return -two_over_sigma *
           SymbolicConstant::rational(rational_pow(x0, 3 - m) /
                                      ((m - 1) * (m - 2) * (m - 3)));
}

int cmd_eval(int n, int m, const std::string& point_csv, int kmax, std::ostream& os) {
    using namespace hspot;
    if (n > 2) {
        std::cerr << "upstream closed form unavailable for n = " << n
                  << " (no general expression is known beyond n = 2)\n";
        return kExitUnsupported;
    }
    if (n < -kmax) {
        std::cerr << "n = " << n << " below the configured downstream depth --kmax " << kmax
                  << "\n";
        return kExitUnsupported;
    }
    auto tokens = split_csv(point_csv);
    if (static_cast<int>(tokens.size()) != m + 1)
        throw UsageError("--point needs m+1 = " + std::to_string(m + 1) + " coordinates");
    std::vector<double> coords;
    std::vector<Rational> exact;
    for (const auto& t : tokens) {
        exact.push_back(decimal_to_rational(t));
        coords.push_back(to_double(exact.back()));
    }
    if (!(coords[0] > 0)) throw UsageError("--point must have x0 > 0");
    HalfSpacePoint p(coords[0], {coords.begin() + 1, coords.end()});

    try {
        KernelValue kv = eval_chain(n, m, p);
        Multivector c = eval_C(n, m, p);
        os.precision(15);
        os << "n=" << n << " m=" << m << " x0=" << coords[0] << " |xvec|=" << p.xvec_norm()
           << "\n";
        const bool on_axis = p.xvec_norm() == 0.0;
        os << "A_" << n << " = " << kv.a;
        if (on_axis) {
            SymbolicConstant ea = exact_axis_a(n, m, exact[0]);
            os << "   (exact: " << ea.to_string() << ")";
        }
        os << "\n";
        os << "B_" << n << " = (";
        for (int i = 0; i < m; ++i) os << (i ? "," : "") << (kv.b[i] + 0.0);
        os << ")";
        if (on_axis) os << "   (exact: 0)";
        os << "\n";
        os << "C_" << n << " = " << c.to_string() << "\n";
        if (on_axis) {
            SymbolicConstant half_a =
                exact_axis_a(n, m, exact[0]) * SymbolicConstant(Rational(1, 2), 0);
            os << "C_" << n << " exact scalar part = " << half_a.to_string() << "\n";
        }
        return kExitPass;
    } catch (const DimensionTooSmall& e) {
        throw UsageError(e.what());
    }
}

int cmd_table_poly(const std::string& kind, int k, const std::string& m_spec, std::ostream& os) {
    using namespace hspot;
    if (kind != "P" && kind != "Q") throw UsageError("--poly must be P or Q");
    if (k < 0 || (kind == "P" && k < 1)) throw UsageError("invalid --k for poly " + kind);
    BivarPoly poly = (kind == "P") ? poly_P(k) : poly_Q(k);
    os << "t_pow,u_pow,coefficient\n";
    for (const auto& [key, c] : poly.display_terms()) {
        os << key.first << "," << 2 * key.second << ",";
        if (m_spec == "symbolic") {
            os << c.to_string() << "\n";
        } else {
            const int m = std::stoi(m_spec);
            os << c.eval(m) << "\n";
        }
    }
    return kExitPass;
}

int cmd_table_boundary(int n, int m, std::ostream& os) {
    using namespace hspot;
    auto [a, b] = boundary_value(n, m);
    os << "part,expression\n";
    os << "a," << a.to_string() << "\n";
    os << "b," << b.to_string() << "\n";
    auto emit_rep = [&](const char* tag, const BoundaryDistribution& d) {
        if (d.has_delta_type()) {
            os << tag << ",(delta-type; no regular representative)\n";
            return;
        }
        RepresentativeValue rep = representative_value(d, 1.0);
        os.precision(15);
        os << tag << "," << (std::string(tag) == "a_at_r1" ? rep.scalar : rep.radial) << "\n";
    };
    emit_rep("a_at_r1", a);
    emit_rep("b_at_r1", b);
    return kExitPass;
}

int run_symbolic_verify(int m, std::optional<int> n_filter, bool csv, std::ostream& os) {
    using namespace hspot;
    auto checks = run_symbolic_suite(m, n_filter);
    if (csv) os << "test_id,n,m,lhs,rhs,status\n";
    int fails = 0;
    for (const auto& c : checks) {
        if (csv)
            os << c.id << "," << c.n << "," << c.m << "," << c.lhs << "," << c.rhs << ","
               << status_name(c.status) << "\n";
        else
            os << "[" << status_name(c.status) << "] " << c.id << " (n=" << c.n << ", m=" << c.m
               << "): " << (c.lhs.empty() ? c.note : c.lhs + "  ==  " + c.rhs) << "\n";
        if (c.status == CheckStatus::Fail) ++fails;
    }
    return fails ? kExitVerifyFail : kExitPass;
}

int run_numeric_verify(int m, int nmin, int nmax, int points, double h, double tol,
                       std::uint64_t seed, bool csv, std::ostream& os) {
    using namespace hspot;
    std::vector<ResidualReport> rows;
    for (int n = nmin; n <= std::min(nmax, 2); ++n) {
        if (m < chain_c_floor(n)) continue;
        rows.push_back(check_monogenic(n, m, points, h, tol, seed));
        if (n - 1 <= 2 && n - 1 >= nmin - 1 && m >= chain_c_floor(n - 1))
            rows.push_back(check_chain_step(n, m, points, h, tol, seed));
        rows.push_back(check_homogeneity(n, m, std::min(points, 50), seed));
        if (m == 3) rows.push_back(check_rotation(n, std::min(points, 50), seed));
    }
    for (int n : {-2, 0, 1, 2}) {
        if (n < nmin || n > nmax || m < chain_c_floor(n)) continue;
        for (char comp : {'A', 'B'}) {
            try {
                auto lim = boundary_limit_study(n, m, comp, {0.1, 0.05, 0.01, 0.005}, 1e-3);
                rows.insert(rows.end(), lim.begin(), lim.end());
            } catch (const UnsupportedError&) {
                // delta-type limit: not a pointwise check
            }
        }
    }
    if (m == 2) {
        auto demo = poisson_quadrature_check(PoissonDemoConfig{});
        rows.insert(rows.end(), demo.begin(), demo.end());
        rows.push_back(check_kernel_transport());
    }
    if (csv) os << residual_csv_header() << "\n";
    int fails = 0;
    for (const auto& r : rows) {
        if (csv) {
            os << residual_csv_row(r) << "\n";
        } else {
            os.precision(6);
            os << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.test_id << " n=" << r.n
               << " m=" << r.m << " at " << r.h_or_x0 << ": residual " << r.residual
               << " (order " << r.order << ")\n";
        }
        if (!r.pass) ++fails;
    }
    return fails ? kExitVerifyFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hspot: harmonic and monogenic potential chain in upper half-space"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate A_n, B_n, C_n at a point");
    int eval_n = -1, eval_m = 3, eval_kmax = 8;
    std::string eval_point;
    eval->add_option("--n", eval_n, "chain index")->required();
    eval->add_option("--m", eval_m, "boundary dimension (m >= 2)")->required();
    eval->add_option("--point", eval_point, "x0,x1,...,xm (m+1 coordinates, x0 > 0)")->required();
    eval->add_option("--kmax", eval_kmax, "configured downstream depth (default 8)");

    // verify
    auto* verify = app.add_subcommand("verify", "run symbolic and/or numeric verification");
    std::string suite = "all", out_path;
    int verify_m = 3, nmin = -4, nmax = 2, points = 200;
    double h = 1e-4, tol = 1e-6;
    std::uint64_t seed = 0;
    std::optional<int> n_filter;
    int n_filter_raw = 0;
    verify->add_option("--suite", suite, "symbolic | numeric | all")
        ->check(CLI::IsMember({"symbolic", "numeric", "all"}));
    verify->add_option("--m", verify_m, "boundary dimension");
    auto* nopt = verify->add_option("--n", n_filter_raw, "restrict symbolic checks to level n");
    verify->add_option("--nmin", nmin, "smallest chain index for numeric checks");
    verify->add_option("--nmax", nmax, "largest chain index for numeric checks");
    verify->add_option("--points", points, "sample points per numeric check");
    verify->add_option("--step", h, "finite-difference step");
    verify->add_option("--tol", tol, "residual tolerance (env HSPOT_TOL overrides)");
    verify->add_option("--seed", seed, "RNG seed for sample points (default 0)");
    verify->add_option("--out", out_path, "write the report to a file");
    std::string format = "csv";
    verify->add_option("--format", format, "csv | text")
        ->check(CLI::IsMember({"csv", "text"}));

    // table
    auto* table = app.add_subcommand("table", "polynomial / boundary-distribution tables");
    std::string poly_kind, table_m = "symbolic";
    int table_k = 1, boundary_n = 0;
    auto* popt = table->add_option("--poly", poly_kind, "P or Q coefficient table");
    auto* bopt = table->add_flag("--boundary", "boundary distributions a_n, b_n");
    table->add_option("--k", table_k, "polynomial index");
    table->add_option("--n", boundary_n, "chain index for --boundary");
    table->add_option("--m", table_m, "dimension (integer) or 'symbolic' for --poly");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval->parsed()) {
            if (eval_m < 2) throw UsageError("--m must be >= 2");
            return cmd_eval(eval_n, eval_m, eval_point, eval_kmax, std::cout);
        }
        if (verify->parsed()) {
            if (*nopt) n_filter = n_filter_raw;
            tol = hspot::tolerance_from_env(tol);
            std::ofstream file;
            std::ostream& os = open_sink(out_path, file);
            const bool csv = format == "csv";
            int rc = kExitPass;
            if (suite == "symbolic" || suite == "all")
                rc = std::max(rc, run_symbolic_verify(verify_m, n_filter, csv, os));
            if (suite == "numeric" || suite == "all") {
                if (suite == "all") os << "\n";
                rc = std::max(rc,
                              run_numeric_verify(verify_m, nmin, nmax, points, h, tol, seed, csv, os));
            }
            return rc;
        }
        if (table->parsed()) {
            if (*popt && *bopt) throw UsageError("choose one of --poly or --boundary");
            if (*popt) return cmd_table_poly(poly_kind, table_k, table_m, std::cout);
            if (*bopt) {
                if (table_m == "symbolic")
                    throw UsageError("--boundary needs an integer --m");
                return cmd_table_boundary(boundary_n, std::stoi(table_m), std::cout);
            }
            throw UsageError("table: need --poly or --boundary");
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hspot::UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const hspot::DimensionTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
