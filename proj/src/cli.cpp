#include "coeffbounds/cli.hpp"

#include "coeffbounds/bounds.hpp"
#include "coeffbounds/checks.hpp"
#include "coeffbounds/coeffs.hpp"
#include "coeffbounds/schwarz.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace coeffbounds {

namespace {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Same rounding as the text output, so both formats carry identical values.
double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

void kv(std::ostream& out, const char* key, const std::string& value) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-11s %s", key, value.c_str());
    out << buf << "\n";
}

const char* branch_name(A3Branch b) { return b == A3Branch::Small ? "Small" : "Large"; }
const char* branch_name(A4Branch b) { return b == A4Branch::Case1 ? "Case1" : "Case2"; }

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 1;
};

// "x" for a single point or "lo:hi:steps" for an inclusive grid.
Range parse_range(const std::string& text) {
    Range r;
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        r.lo = r.hi = std::stod(text);
        r.steps = 1;
        return r;
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw std::invalid_argument("range must be VALUE or LO:HI:STEPS");
    r.lo = std::stod(text.substr(0, c1));
    r.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    r.steps = std::stoi(text.substr(c2 + 1));
    if (r.steps < 1) throw std::invalid_argument("range steps must be >= 1");
    return r;
}

double range_at(const Range& r, int i) {
    if (r.steps == 1) return r.lo;
    return r.lo + (r.hi - r.lo) * double(i) / double(r.steps - 1);
}

int cmd_bounds(std::ostream& out, double alpha, double gamma, const std::string& format) {
    const Params p(alpha, gamma);
    const BoundReport r = bound_report(p);
    const Thresholds th = thresholds(alpha);
    const Region reg = classify({r.mu, r.nu});
    if (format == "json") {
        nlohmann::ordered_json j;
        j["alpha"] = round12(alpha);
        j["gamma"] = round12(gamma);
        j["a2_bound"] = round12(r.a2_bound);
        j["a3_bound"] = round12(r.a3_bound);
        j["a3_branch"] = branch_name(r.a3_branch);
        j["a4_bound"] = round12(r.a4_bound);
        j["a4_branch"] = branch_name(r.a4_branch);
        j["mu"] = round12(r.mu);
        j["nu"] = round12(r.nu);
        j["region"] = std::string(region_name(reg));
        j["gamma_half"] = round12(th.gamma_half);
        j["gamma_2"] = round12(th.gamma_2);
        j["gamma_4"] = round12(th.gamma_4);
        j["gamma_nu"] = round12(th.gamma_nu);
        j["gamma_a3"] = round12(th.gamma_a3);
        out << j.dump(2) << "\n";
        return 0;
    }
    kv(out, "alpha", fmt12(alpha));
    kv(out, "gamma", fmt12(gamma));
    kv(out, "a2_bound", fmt12(r.a2_bound));
    kv(out, "a3_bound", fmt12(r.a3_bound));
    kv(out, "a3_branch", branch_name(r.a3_branch));
    kv(out, "a4_bound", fmt12(r.a4_bound));
    kv(out, "a4_branch", branch_name(r.a4_branch));
    kv(out, "mu", fmt12(r.mu));
    kv(out, "nu", fmt12(r.nu));
    kv(out, "region", std::string(region_name(reg)));
    kv(out, "gamma_half", fmt12(th.gamma_half));
    kv(out, "gamma_2", fmt12(th.gamma_2));
    kv(out, "gamma_4", fmt12(th.gamma_4));
    kv(out, "gamma_nu", fmt12(th.gamma_nu));
    kv(out, "gamma_a3", fmt12(th.gamma_a3));
    return 0;
}

const std::vector<std::string> kQuantities = {"a2", "a3", "a4", "mu", "nu",
                                              "thresholds", "gamma_star", "beta"};

std::vector<std::string> columns_for(const std::vector<std::string>& quantities) {
    std::vector<std::string> cols;
    for (const std::string& q : quantities) {
        if (q == "thresholds") {
            for (const char* c : {"gamma_half", "gamma_2", "gamma_4", "gamma_nu", "gamma_a3"})
                cols.emplace_back(c);
        } else {
            cols.push_back(q);
        }
    }
    return cols;
}

// Cell value; empty when the quantity is undefined at this alpha
// (gamma_star and beta need alpha < 2/pi).
std::optional<double> cell_value(const std::string& col, double alpha, double gamma) {
    const Params p(alpha, gamma);
    if (col == "a2") return bound_a2(p);
    if (col == "a3") return bound_a3(p).first;
    if (col == "a4") return bound_a4(p).first;
    if (col == "mu") return mu_nu(p).mu;
    if (col == "nu") return mu_nu(p).nu;
    const Thresholds th = thresholds(alpha);
    if (col == "gamma_half") return th.gamma_half;
    if (col == "gamma_2") return th.gamma_2;
    if (col == "gamma_4") return th.gamma_4;
    if (col == "gamma_nu") return th.gamma_nu;
    if (col == "gamma_a3") return th.gamma_a3;
    if (alpha >= 2.0 / std::numbers::pi) return std::nullopt;
    if (col == "gamma_star") return gamma_star(alpha);
    if (col == "beta") return beta_star(alpha);
    return std::nullopt;
}

int cmd_table(std::ostream& out, std::ostream& err, const Range& arange, const Range& grange,
              const std::vector<std::string>& quantities, const std::string& format,
              const std::string& out_path) {
    if (!(arange.lo > 0.0 && arange.hi < 1.0))
        throw std::domain_error("alpha must lie in (0,1)");
    if (!(grange.lo > 0.0 && grange.hi <= 1.0))
        throw std::domain_error("gamma must lie in (0,1]");
    for (const std::string& q : quantities)
        if (std::find(kQuantities.begin(), kQuantities.end(), q) == kQuantities.end())
            throw std::invalid_argument("unknown quantity: " + q);

    const std::vector<std::string> cols = columns_for(quantities);
    std::ostringstream body;
    if (format == "csv") {
        body << "alpha,gamma";
        for (const std::string& c : cols) body << "," << c;
        body << "\n";
        for (int i = 0; i < arange.steps; ++i) {
            const double a = range_at(arange, i);
            for (int j = 0; j < grange.steps; ++j) {
                const double g = range_at(grange, j);
                body << fmt12(a) << "," << fmt12(g);
                for (const std::string& c : cols) {
                    const auto v = cell_value(c, a, g);
                    body << "," << (v ? fmt12(*v) : std::string());
                }
                body << "\n";
            }
        }
    } else {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int i = 0; i < arange.steps; ++i) {
            const double a = range_at(arange, i);
            for (int j = 0; j < grange.steps; ++j) {
                const double g = range_at(grange, j);
                nlohmann::ordered_json row;
                row["alpha"] = round12(a);
                row["gamma"] = round12(g);
                for (const std::string& c : cols) {
                    const auto v = cell_value(c, a, g);
                    if (v)
                        row[c] = round12(*v);
                    else
                        row[c] = nullptr;
                }
                rows.push_back(std::move(row));
            }
        }
        body << rows.dump(2) << "\n";
    }

    if (out_path.empty()) {
        out << body.str();
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot write " << out_path << "\n";
        return 2;
    }
    f << body.str();
    if (!f.good()) {
        err << "error: cannot write " << out_path << "\n";
        return 2;
    }
    return 0;
}

int cmd_verify(std::ostream& out, std::ostream& err, const std::string& suite, std::uint64_t seed,
               long budget, const std::string& out_path) {
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.budget = budget;
    cfg.samples = int(std::min<long>(budget, 100000000));
    const std::vector<CheckReport> reports = run_suite(suite, cfg);
    for (const CheckReport& r : reports) out << summary_line(r) << "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << out_path << "\n";
            return 2;
        }
        f << suite_json(suite, cfg, reports);
    }
    return all_pass(reports) ? 0 : 1;
}

int cmd_extremal(std::ostream& out, double alpha, double gamma, int index, int order) {
    const Params p(alpha, gamma);
    if (order < 4) throw std::invalid_argument("order must be at least 4");
    const CoeffVector f = extremal_function(p, index, std::size_t(order));
    kv(out, "alpha", fmt12(alpha));
    kv(out, "gamma", fmt12(gamma));
    kv(out, "i", std::to_string(index));
    kv(out, "order", std::to_string(order));
    for (int k = 2; k <= order; ++k) {
        char key[16];
        std::snprintf(key, sizeof key, "a_%d", k);
        kv(out, key, fmt12(f.coef(std::size_t(k)).real()));
    }

    const double a = alpha, g = gamma;
    const double b2 = bound_a2(p);
    const double small3 = 2.0 * g / (2.0 - a);
    const double large3 = 2.0 * (3.0 - a) * g * g / ((1.0 - a) * (1.0 - a) * (2.0 - a));
    const double case1 = 2.0 * g / (3.0 - a);
    const double case2 = case1 * mu_nu(p).nu;
    std::vector<std::string> attained;
    auto matches = [](double x, double y) { return std::abs(x - y) <= 1e-9 * std::max(1.0, y); };
    if (matches(std::abs(f.coef(2)), b2)) attained.push_back("a2 bound");
    if (matches(std::abs(f.coef(3)), small3)) attained.push_back("a3 Small branch");
    if (matches(std::abs(f.coef(3)), large3)) attained.push_back("a3 Large branch");
    if (matches(std::abs(f.coef(4)), case1)) attained.push_back("a4 Case1 branch");
    if (matches(std::abs(f.coef(4)), case2)) attained.push_back("a4 Case2 branch");
    std::string joined;
    for (std::size_t i = 0; i < attained.size(); ++i)
        joined += (i ? "; " : "") + attained[i];
    kv(out, "attains", joined.empty() ? "none" : joined);
    return 0;
}

int cmd_phi(std::ostream& out, double mu, double nu, bool with_oracle, long budget,
            std::uint64_t seed) {
    const MuNu mn{mu, nu};
    kv(out, "mu", fmt12(mu));
    kv(out, "nu", fmt12(nu));
    kv(out, "region", std::string(region_name(classify(mn))));
    const auto value = phi(mn);
    kv(out, "phi", value ? fmt12(*value) : "uncovered");
    if (with_oracle) {
        const double found = phi_oracle(mn, budget, seed);
        kv(out, "oracle", fmt12(found));
        if (value) kv(out, "gap", fmt12(*value - found));
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sharp bounds on the initial coefficients a2, a3, a4 for normalized analytic\n"
                 "functions subject to an argument condition, with a verification suite."};
    app.require_subcommand(1);

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the three sharp bounds at one point");
    double b_alpha = 0.0, b_gamma = 0.0;
    std::string b_format = "text";
    bounds_cmd->add_option("--alpha", b_alpha, "alpha in (0,1)")->required();
    bounds_cmd->add_option("--gamma", b_gamma, "gamma in (0,1]")->required();
    bounds_cmd->add_option("--format", b_format)->check(CLI::IsMember({"text", "json"}));

    // table
    auto* table_cmd = app.add_subcommand("table", "Grid evaluation written as CSV or JSON");
    std::string t_alpha = "0.5", t_gamma = "0.5", t_format = "csv", t_out;
    std::vector<std::string> t_quant = {"a2", "a3", "a4"};
    table_cmd->add_option("--alpha", t_alpha, "alpha value or LO:HI:STEPS");
    table_cmd->add_option("--gamma", t_gamma, "gamma value or LO:HI:STEPS");
    table_cmd->add_option("--quantities", t_quant,
                          "subset of a2,a3,a4,mu,nu,thresholds,gamma_star,beta")
        ->delimiter(',');
    table_cmd->add_option("--format", t_format)->check(CLI::IsMember({"csv", "json"}));
    table_cmd->add_option("--out", t_out, "output path (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification checks");
    std::string v_suite = "all", v_out;
    std::uint64_t v_seed = 1;
    long v_budget = 100000;
    std::string suites_help = "one of: all";
    for (const std::string& s : suite_names()) suites_help += ", " + s;
    verify_cmd->add_option("--suite", v_suite, suites_help);
    verify_cmd->add_option("--seed", v_seed);
    verify_cmd->add_option("--budget", v_budget, "samples / optimizer evaluations per check");
    verify_cmd->add_option("--out", v_out, "write the JSON report here");

    // extremal
    auto* ext_cmd = app.add_subcommand("extremal", "Coefficients of an extremal function");
    double e_alpha = 0.0, e_gamma = 0.0;
    int e_index = 1, e_order = 8;
    ext_cmd->add_option("--alpha", e_alpha)->required();
    ext_cmd->add_option("--gamma", e_gamma)->required();
    ext_cmd->add_option("--i", e_index, "which extremal function (1, 2 or 3)")->required();
    ext_cmd->add_option("--order", e_order, "series truncation order (default 8)");

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "Functional bound at (mu, nu), optionally brute-forced");
    double p_mu_pos = 0.0, p_nu_pos = 0.0, p_mu = 0.0, p_nu = 0.0;
    long p_oracle_budget = 0, p_budget = 100000;
    std::uint64_t p_seed = 1;
    auto* p_mu_pos_opt = phi_cmd->add_option("MU", p_mu_pos);
    auto* p_nu_pos_opt = phi_cmd->add_option("NU", p_nu_pos);
    auto* p_mu_opt = phi_cmd->add_option("--mu", p_mu);
    auto* p_nu_opt = phi_cmd->add_option("--nu", p_nu);
    auto* p_oracle_opt =
        phi_cmd->add_option("--oracle", p_oracle_budget, "run the brute-force search")
            ->expected(0, 1);
    phi_cmd->add_option("--budget", p_budget);
    phi_cmd->add_option("--seed", p_seed);

    // classify
    auto* cls_cmd = app.add_subcommand("classify", "Region of the (mu, nu) plane");
    double c_mu_pos = 0.0, c_nu_pos = 0.0, c_mu = 0.0, c_nu = 0.0;
    auto* c_mu_pos_opt = cls_cmd->add_option("MU", c_mu_pos);
    auto* c_nu_pos_opt = cls_cmd->add_option("NU", c_nu_pos);
    auto* c_mu_opt = cls_cmd->add_option("--mu", c_mu);
    auto* c_nu_opt = cls_cmd->add_option("--nu", c_nu);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("coeffbounds");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (bounds_cmd->parsed()) return cmd_bounds(out, b_alpha, b_gamma, b_format);
        if (table_cmd->parsed())
            return cmd_table(out, err, parse_range(t_alpha), parse_range(t_gamma), t_quant,
                             t_format, t_out);
        if (verify_cmd->parsed()) return cmd_verify(out, err, v_suite, v_seed, v_budget, v_out);
        if (ext_cmd->parsed()) return cmd_extremal(out, e_alpha, e_gamma, e_index, e_order);
        if (phi_cmd->parsed()) {
            if (!*p_mu_opt && !*p_mu_pos_opt) throw std::invalid_argument("mu is required");
            if (!*p_nu_opt && !*p_nu_pos_opt) throw std::invalid_argument("nu is required");
            const double mu = *p_mu_opt ? p_mu : p_mu_pos;
            const double nu = *p_nu_opt ? p_nu : p_nu_pos;
            const bool with_oracle = p_oracle_opt->count() > 0;
            const long budget = p_oracle_budget > 0 ? p_oracle_budget : p_budget;
            return cmd_phi(out, mu, nu, with_oracle, budget, p_seed);
        }
        if (cls_cmd->parsed()) {
            if (!*c_mu_opt && !*c_mu_pos_opt) throw std::invalid_argument("mu is required");
            if (!*c_nu_opt && !*c_nu_pos_opt) throw std::invalid_argument("nu is required");
            const double mu = *c_mu_opt ? c_mu : c_mu_pos;
            const double nu = *c_nu_opt ? c_nu : c_nu_pos;
            out << region_name(classify({mu, nu})) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand given\n";
    return 2;
}

} // namespace coeffbounds
