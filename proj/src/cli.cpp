// Command-line driver: convolutions, cumulants, R-transform sweeps, bound
// certification, and the two convergence experiments. All numeric output
// is CSV with 17 significant digits; identical inputs produce
// byte-identical output (timings are zeroed unless --timing is given).

#include "finfree/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "finfree/analytic.hpp"
#include "finfree/convolution.hpp"
#include "finfree/io.hpp"
#include "finfree/measures.hpp"

namespace finfree::cli {

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegree = 3;
constexpr int kExitDomain = 4;
constexpr int kExitCertificate = 5;

struct DegreeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = text.find(',', start);
        const std::string tok = text.substr(start, pos == std::string::npos ? pos : pos - start);
        if (!tok.empty()) out.push_back(std::stoi(tok));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (out.empty()) throw std::domain_error("--n-list: no degrees given");
    for (int n : out)
        if (n < 1) throw std::domain_error("--n-list: degrees must be positive");
    return out;
}

// "lo:hi:count", points evenly spaced and inclusive of both ends.
std::vector<double> parse_s_grid(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::domain_error("--s-grid: expected lo:hi:count");
    const double lo = std::stod(text.substr(0, c1));
    const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const int count = std::stoi(text.substr(c2 + 1));
    if (count < 1 || hi < lo) throw std::domain_error("--s-grid: malformed range");
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = lo;
    } else {
        for (int i = 0; i < count; ++i) out[i] = lo + (hi - lo) * i / (count - 1);
    }
    return out;
}

// Output destination: --out file or the provided stream.
class OutputTarget {
  public:
    OutputTarget(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        } else {
            stream_ = &fallback;
        }
    }
    std::ostream& stream() { return stream_ ? *stream_ : file_; }

  private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

std::string csv(double x) { return format_number(x); }

double elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Least-squares slope of log|delta| against log N over the largest half of
// the rows (pre-asymptotic small-N rows are discarded).
double fit_loglog_slope(const std::vector<std::pair<int, double>>& rows) {
    const std::size_t take = (rows.size() + 1) / 2;
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = rows.size() - take; i < rows.size(); ++i) {
        const double mag = std::abs(rows[i].second);
        if (mag > 1e-300) pts.push_back({std::log(double(rows[i].first)), std::log(mag)});
    }
    if (pts.size() < 2) throw std::domain_error("slope fit: not enough usable rows");
    Eigen::MatrixXd a(pts.size(), 2);
    Eigen::VectorXd b(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        a(i, 0) = 1.0;
        a(i, 1) = pts[i].first;
        b[i] = pts[i].second;
    }
    return a.colPivHouseholderQr().solve(b)[1];
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

template <typename Scalar>
void do_convolve(const std::string& p_path, const std::string& q_path, const std::string& out_path,
                 std::ostream& fallback) {
    const MonicPoly<Scalar> p = io::load_poly<Scalar>(p_path);
    const MonicPoly<Scalar> q = io::load_poly<Scalar>(q_path);
    if (p.degree != q.degree)
        throw DegreeMismatch("convolve: degree mismatch (" + std::to_string(p.degree) + " vs " +
                             std::to_string(q.degree) + ")");
    OutputTarget target(out_path, fallback);
    io::write_poly_json(boxplus(p, q), target.stream());
}

template <typename Scalar>
void do_cumulants(const std::string& poly_path, int max_n, bool check, const std::string& out_path,
                  std::ostream& fallback) {
    const MonicPoly<Scalar> p = io::load_poly<Scalar>(poly_path);
    if (max_n == 0) max_n = p.degree;
    if (max_n < 1 || max_n > p.degree)
        throw std::domain_error("cumulants: --max-n must lie in [1, degree]");

    const CumulantVector<Scalar> kappa = finite_cumulants_logseries(p);
    const int check_n = check ? std::min(max_n, oracles::kPartitionCap) : 0;
    CumulantVector<Scalar> mob{};
    if (check) {
        mob = finite_cumulants_mobius(p, check_n);
        for (int n = 1; n <= check_n; ++n) {
            if constexpr (is_exact_v<Scalar>) {
                if (!(mob.kappa[n - 1] == kappa.kappa[n - 1]))
                    throw std::runtime_error("cumulants: Moebius cross-check failed at n=" +
                                             std::to_string(n));
            } else {
                const double a = to_double(kappa.kappa[n - 1]), b = to_double(mob.kappa[n - 1]);
                if (std::abs(a - b) > 1e-9 * std::max({1.0, std::abs(a), std::abs(b)}))
                    throw std::runtime_error("cumulants: Moebius cross-check failed at n=" +
                                             std::to_string(n));
            }
        }
    }

    OutputTarget target(out_path, fallback);
    std::ostream& out = target.stream();
    out << (check ? "n,kappa,kappa_mobius\n" : "n,kappa\n");
    for (int n = 1; n <= max_n; ++n) {
        out << n << "," << csv(to_double(kappa.kappa[n - 1]));
        if (check) {
            if (n <= check_n)
                out << "," << csv(to_double(mob.kappa[n - 1]));
            else
                out << ",";
        }
        out << "\n";
    }
}

template <typename Scalar>
void do_rtransform(const std::string& poly_path, const std::string& grid_spec,
                   const std::string& out_path, std::ostream& fallback) {
    const MonicPoly<Scalar> p = io::load_poly<Scalar>(poly_path);
    const std::vector<double> grid = parse_s_grid(grid_spec);
    OutputTarget target(out_path, fallback);
    std::ostream& out = target.stream();

    if (p.has_roots()) {
        const MonicPoly<double> pd = [&] {
            if constexpr (is_exact_v<Scalar>) return to_double_poly(p);
            else return p;
        }();
        out << "s,r_finite,r_limit,delta\n";
        for (double s : grid) {
            const double rf = to_double(finite_r(p, Scalar(s)));
            const TiltContext ctx = saddle(pd, s);
            const double rl = voiculescu_r(ctx);
            out << csv(s) << "," << csv(rf) << "," << csv(rl) << "," << csv(rf - rl) << "\n";
        }
    } else {
        out << "s,r_finite\n";
        for (double s : grid) out << csv(s) << "," << csv(to_double(finite_r(p, Scalar(s)))) << "\n";
    }
}

int do_bounds(const std::string& poly_path, double s, const std::string& out_path,
              std::ostream& fallback) {
    const MonicPoly<double> p = io::load_poly<double>(poly_path);
    const TiltContext ctx = saddle(p, s);
    const BoundCertificate certs[] = {
        certify_integral_sandwich(ctx),
        certify_kernel_bounds(ctx),
        certify_r_gap(p, ctx),
    };
    OutputTarget target(out_path, fallback);
    std::ostream& out = target.stream();
    out << "certificate,lower,value,upper,slack,holds\n";
    bool all_hold = true;
    for (const auto& c : certs) {
        out << c.name << "," << csv(c.lower) << "," << csv(c.value) << "," << csv(c.upper) << ","
            << csv(c.slack) << "," << (c.holds ? "yes" : "no") << "\n";
        all_hold = all_hold && c.holds;
    }
    return all_hold ? 0 : kExitCertificate;
}

void do_converge(const std::string& measure_spec, const std::string& n_list_spec, double s,
                 bool timing, const std::string& out_path, std::ostream& fallback) {
    const ReferenceMeasure mu = parse_measure(measure_spec);
    const std::vector<int> n_list = parse_n_list(n_list_spec);
    const double alpha = alpha_of(mu);
    if (!(s > 0) || s > 0.9 * alpha)
        throw std::domain_error("converge: s must lie in (0, 0.9*alpha], alpha = " +
                                format_number(alpha));

    OutputTarget target(out_path, fallback);
    std::ostream& out = target.stream();
    out << "N,s,r_finite,r_limit,delta,lower,upper,runtime_ms\n";
    std::vector<std::pair<int, double>> deltas;
    for (int n : n_list) {
        const auto t0 = std::chrono::steady_clock::now();
        const MonicPoly<double> p = quantile_poly(mu, n);
        const double rf = finite_r(p, s);
        const TiltContext ctx = saddle(p, s);
        const double rl = voiculescu_r(ctx);
        const double delta = rf - rl;
        const BoundCertificate gap = certify_r_gap(p, ctx);
        deltas.push_back({n, delta});
        const double ms = timing ? elapsed_ms(t0) : 0.0;
        out << n << "," << csv(s) << "," << csv(rf) << "," << csv(rl) << "," << csv(delta) << ","
            << csv(gap.lower) << "," << csv(gap.upper) << "," << csv(ms) << "\n";
    }
    out << "# slope," << csv(fit_loglog_slope(deltas)) << "\n";
}

void do_boxplus_converge(const std::string& mu_spec, const std::string& nu_spec,
                         const std::string& n_list_spec, const std::string& grid_spec,
                         const std::string& out_path, std::ostream& fallback) {
    const ReferenceMeasure mu = parse_measure(mu_spec);
    const ReferenceMeasure nu = parse_measure(nu_spec);
    const std::vector<int> n_list = parse_n_list(n_list_spec);
    const std::vector<double> grid = parse_s_grid(grid_spec);

    const double b = std::max(-support_bounds(mu).first, -support_bounds(nu).first);
    for (double s : grid)
        if (!(s > 0) || s > 0.5 / b + 1e-12)
            throw std::domain_error("boxplus-converge: s grid must stay inside (0, 1/(2b)], b = " +
                                    format_number(b));

    OutputTarget target(out_path, fallback);
    std::ostream& out = target.stream();
    out << "N,max_abs_deviation,min_gap\n";
    for (int n : n_list) {
        const MonicPoly<double> p = quantile_poly(mu, n);
        const MonicPoly<double> q = quantile_poly(nu, n);
        const MonicPoly<double> r = boxplus(p, q);
        double max_dev = 0.0, min_gap = kInf;
        for (double s : grid) {
            const double rr = finite_r(r, s);
            const double target_r = r_transform(mu, s) + r_transform(nu, s);
            max_dev = std::max(max_dev, std::abs(rr - target_r));
            min_gap = std::min(min_gap, rr - finite_r(p, s) - finite_r(q, s));
        }
        out << n << "," << csv(max_dev) << "," << csv(min_gap) << "\n";
    }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite free probability numerics"};
    app.require_subcommand(1);

    std::string p_path, q_path, poly_path, out_path;
    std::string measure_spec, mu_spec, nu_spec, n_list_spec, s_grid_spec;
    double s_value = 0.0;
    int max_n = 0;
    bool exact = false, check = false, timing = false;

    auto* convolve = app.add_subcommand("convolve", "finite free additive convolution of two polynomials");
    convolve->add_option("p", p_path, "first polynomial (roots file or JSON)")->required();
    convolve->add_option("q", q_path, "second polynomial (roots file or JSON)")->required();
    convolve->add_option("--out", out_path, "output JSON path (default stdout)");
    convolve->add_flag("--exact", exact, "exact rational arithmetic");

    auto* cumulants = app.add_subcommand("cumulants", "finite free cumulants kappa_1..kappa_n");
    cumulants->add_option("poly", poly_path, "polynomial (roots file or JSON)")->required();
    cumulants->add_option("--max-n", max_n, "highest cumulant order (default: degree)");
    cumulants->add_flag("--check", check, "cross-check against the set-partition route");
    cumulants->add_option("--out", out_path, "output CSV path (default stdout)");
    cumulants->add_flag("--exact", exact, "exact rational arithmetic");

    auto* rtransform = app.add_subcommand("rtransform", "finite R-transform over an s grid");
    rtransform->add_option("poly", poly_path, "polynomial (roots file or JSON)")->required();
    rtransform->add_option("--s-grid", s_grid_spec, "grid lo:hi:count")->required();
    rtransform->add_option("--out", out_path, "output CSV path (default stdout)");
    rtransform->add_flag("--exact", exact, "exact rational arithmetic");

    auto* bounds = app.add_subcommand("bounds", "certify the quantitative R-transform bounds");
    bounds->add_option("poly", poly_path, "polynomial roots file")->required();
    bounds->add_option("--s", s_value, "tilt parameter in (0, alpha)")->required();
    bounds->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* converge = app.add_subcommand("converge", "finite vs limiting R-transform over degrees");
    converge->add_option("--measure", measure_spec, "measure spec, e.g. uniform:-2:-1")->required();
    converge->add_option("--n-list", n_list_spec, "comma-separated degrees")->required();
    converge->add_option("--s", s_value, "tilt parameter")->required();
    converge->add_flag("--timing", timing, "emit real timings (breaks byte determinism)");
    converge->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* boxconv = app.add_subcommand("boxplus-converge",
                                       "convolution R-transform against the free-convolution target");
    boxconv->add_option("--mu", mu_spec, "first measure spec")->required();
    boxconv->add_option("--nu", nu_spec, "second measure spec")->required();
    boxconv->add_option("--n-list", n_list_spec, "comma-separated degrees")->required();
    boxconv->add_option("--s-grid", s_grid_spec, "grid lo:hi:count")->required();
    boxconv->add_option("--out", out_path, "output CSV path (default stdout)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (convolve->parsed()) {
            if (exact)
                do_convolve<Rational>(p_path, q_path, out_path, out);
            else
                do_convolve<double>(p_path, q_path, out_path, out);
        } else if (cumulants->parsed()) {
            if (exact)
                do_cumulants<Rational>(poly_path, max_n, check, out_path, out);
            else
                do_cumulants<double>(poly_path, max_n, check, out_path, out);
        } else if (rtransform->parsed()) {
            if (exact)
                do_rtransform<Rational>(poly_path, s_grid_spec, out_path, out);
            else
                do_rtransform<double>(poly_path, s_grid_spec, out_path, out);
        } else if (bounds->parsed()) {
            return do_bounds(poly_path, s_value, out_path, out);
        } else if (converge->parsed()) {
            do_converge(measure_spec, n_list_spec, s_value, timing, out_path, out);
        } else if (boxconv->parsed()) {
            do_boxplus_converge(mu_spec, nu_spec, n_list_spec, s_grid_spec, out_path, out);
        }
        return 0;
    } catch (const io::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DegreeMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitDegree;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace finfree::cli
