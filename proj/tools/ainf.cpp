#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ainf/charts.hpp"
#include "ainf/error.hpp"
#include "ainf/fiber.hpp"
#include "ainf/io.hpp"
#include "ainf/isomorphism.hpp"
#include "ainf/potential.hpp"
#include "ainf/quotient.hpp"
#include "ainf/validate.hpp"
#include "ainf/verify.hpp"

using namespace ainf;
using io::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* const schema_help = R"(Input files (JSON):
  config   {"family": "power_law", "beta": 2.0, "truncation": 10000}
           {"family": "finite", "centers": [[t, re, im], ...]}
           {"family": "axial", "prefix": [a_1, ...], "scale": 1, "exponent": 2}
           {"family": "general", "centers": [[t, re, im], ...],
            "tails": [{"base": [re, im], "sign": 1, "scale": 1, "exponent": 2, "first": 1}],
            "fibers": [{"z": [re, im], "order": "omega_down" | "omega_up" | "omega_both" | {"finite": k}}],
            "working_radius": 50}
  section  {"deviations": [{"z": [re, im], "gap": [lower | null, upper | null]}], "unit": [[re, im], ...]}
           gap ends are center indices, null for -inf / +inf; unit lists the coefficients of P in exp(P(q))
  iso      {"config_a": <config or path>, "config_b": <config or path>, "disk": 100}
Points are written t,re,im and complex numbers re,im.
)";

struct Globals {
    std::uint64_t seed = 0;
    double eps = 1e-12;
    double disk = 100.0;
    std::int64_t truncation = 0;
    std::string out;
};

std::vector<double> parse_numbers(const std::string& text, std::size_t count, const char* what)
{
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
        }
    }
    if (out.size() != count) throw UsageError(std::string(what) + " needs " + std::to_string(count) + " numbers");
    return out;
}

ImHPoint parse_point(const std::string& text)
{
    const auto v = parse_numbers(text, 3, "point");
    return {v[0], {v[1], v[2]}};
}

Complex parse_complex(const std::string& text)
{
    const auto v = parse_numbers(text, 2, "complex number");
    return {v[0], v[1]};
}

class Runner {
public:
    explicit Runner(const Globals& g) : g_(g) {}

    Configuration config(const std::string& path) const
    {
        auto c = io::load_config(path);
        return adjust(c);
    }

    Configuration config(const json& j) const
    {
        auto c = j.is_string() ? io::load_config(j.get<std::string>()) : io::config_from_json(j);
        return adjust(c);
    }

    io::RunManifest manifest(const std::string& command, std::vector<Configuration> configs,
                             std::map<std::string, double> tolerances = {}) const
    {
        io::RunManifest m;
        m.command = command;
        for (const auto& c : configs) m.config_digests.push_back(io::digest(c));
        m.seed = g_.seed;
        m.tolerances = std::move(tolerances);
        m.version = io::tool_version;
        return m;
    }

    void emit_json(json body, const io::RunManifest& m) const
    {
        body["manifest"] = m.to_json();
        write(body.dump(2) + "\n");
    }

    void emit_csv(const std::string& header, const std::vector<std::string>& rows, const io::RunManifest& m) const
    {
        std::string text = m.comment_block() + header + "\n";
        for (const auto& r : rows) text += r + "\n";
        write(text);
    }

    void write(const std::string& text) const
    {
        if (g_.out.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream file(g_.out);
        if (!file) fail(ErrorKind::InvalidArgument, "cannot write '" + g_.out + "'");
        file << text;
    }

    const Globals& globals() const { return g_; }

private:
    Configuration adjust(const Configuration& c) const
    {
        return g_.truncation > 0 && !c.is_finite() ? c.with_truncation(g_.truncation) : c;
    }

    const Globals& g_;
};

std::string csv(std::initializer_list<double> values)
{
    std::string out;
    for (double v : values) out += (out.empty() ? "" : ",") + format_double(v);
    return out;
}

json class_json(const QuotientClass& c, const Configuration& config)
{
    json j{{"z", io::complex_to_json(c.z)}};
    if (c.is_fixed()) {
        j["fixed"] = std::get<FixedClass>(c.position).n;
    } else {
        const auto [lo, hi] = gap_bounds(config, c.gap());
        j["gap"] = io::gap_to_json(c.gap());
        j["gap_values"] = {std::isfinite(lo) ? json(lo) : json(nullptr), std::isfinite(hi) ? json(hi) : json(nullptr)};
    }
    return j;
}

Multiplier multiplier_for(const Configuration& config, const io::SectionFile& s)
{
    return Multiplier(section_divisor(config, s.section), s.unit);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Computations on hyper-Kaehler manifolds of type A-infinity"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer(schema_help);
    Globals g;
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--eps", g.eps, "absolute error target")->check(CLI::PositiveNumber);
    app.add_option("--disk", g.disk, "working disk radius")->check(CLI::PositiveNumber);
    app.add_option("--truncation", g.truncation, "override the configuration's truncation")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "write output to this path instead of stdout");
    const Runner run(g);

    std::string config_path, config_b, section_path, section2_path, iso_path, suite = "all";
    std::string point_text, z_text = "0,0", p_text, q_text = "0,0";
    double theta = 0.0, from_t = 0.0, to_t = 0.0, beta = 0.0;
    double rho_min = 1e2, rho_max = 1e4;
    int grid_points = 21;
    double samples = 1e6;
    unsigned threads = 0;

    auto* validate_cmd = app.add_subcommand("validate", "genericity, summability and chart admissibility");
    validate_cmd->add_option("--config", config_path)->required();

    auto* phi_cmd = app.add_subcommand("phi", "Gibbons-Hawking potential at a point");
    phi_cmd->add_option("--config", config_path)->required();
    phi_cmd->add_option("--point", point_text, "t,re,im")->required();

    auto* flow_cmd = app.add_subcommand("flow", "integral of Phi along a vertical segment, two ways");
    flow_cmd->add_option("--config", config_path)->required();
    flow_cmd->add_option("--z", z_text, "re,im");
    flow_cmd->add_option("--from", from_t)->required();
    flow_cmd->add_option("--to", to_t)->required();

    auto* classify_cmd = app.add_subcommand("classify-point", "quotient class of a point");
    classify_cmd->add_option("--config", config_path)->required();
    classify_cmd->add_option("--point", point_text, "t,re,im")->required();

    auto* k_cmd = app.add_subcommand("k-divisor", "signed count of fiber points between two sections");
    k_cmd->add_option("--config", config_path)->required();
    k_cmd->add_option("--s1", section_path, "section file (default: base section)");
    k_cmd->add_option("--s2", section2_path, "section file")->required();

    auto* chart_cmd = app.add_subcommand("chart", "chart coordinates (p, q) of a point");
    chart_cmd->add_option("--config", config_path)->required();
    chart_cmd->add_option("--section", section_path, "section file (default: base section)");
    chart_cmd->add_option("--point", point_text, "t,re,im")->required();
    chart_cmd->add_option("--theta", theta, "fiber phase");

    auto* invert_cmd = app.add_subcommand("invert", "point with given chart coordinates");
    invert_cmd->add_option("--config", config_path)->required();
    invert_cmd->add_option("--section", section_path, "section file (default: base section)");
    invert_cmd->add_option("--p", p_text, "re,im")->required();
    invert_cmd->add_option("--q", q_text, "re,im");

    auto* transition_cmd = app.add_subcommand("transition", "transition map between two charts");
    transition_cmd->add_option("--config", config_path)->required();
    transition_cmd->add_option("--s1", section_path)->required();
    transition_cmd->add_option("--s2", section2_path)->required();
    transition_cmd->add_option("--p", p_text, "re,im")->required();
    transition_cmd->add_option("--q", q_text, "re,im");

    auto* isom_cmd = app.add_subcommand("isom", "decide whether X(a) and X(b) are isomorphic");
    isom_cmd->add_option("--config-a", config_path)->required();
    isom_cmd->add_option("--config-b", config_b)->required();

    auto* map_cmd = app.add_subcommand("map-point", "image of a point under H(h, phi0)");
    map_cmd->add_option("--iso", iso_path)->required();
    map_cmd->add_option("--point", point_text, "t,re,im")->required();
    map_cmd->add_option("--theta", theta, "fiber phase");

    auto* growth_cmd = app.add_subcommand("growth", "Monte Carlo volume growth and fitted exponent");
    auto* growth_config = growth_cmd->add_option("--config", config_path);
    growth_cmd->add_option("--beta", beta, "power law exponent instead of --config")->excludes(growth_config);
    growth_cmd->add_option("--rho-min", rho_min);
    growth_cmd->add_option("--rho-max", rho_max);
    growth_cmd->add_option("--points", grid_points, "log-spaced grid size")->check(CLI::Range(3, 10000));
    growth_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
    growth_cmd->add_option("--threads", threads, "0: hardware concurrency");

    auto* verify_cmd = app.add_subcommand("verify", "bundled invariant suites");
    verify_cmd->add_option("--suite", suite, "core, potential, quotient, charts, isomorphism or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << schema_help;
        return 2;
    }

    try {
        if (*validate_cmd) {
            const auto c = run.config(config_path);
            const auto r = validate(c);
            json dups = json::array();
            for (const auto& [a, b] : r.duplicates) dups.push_back({a, b});
            run.emit_json({{"generic", r.generic},
                           {"summability_bound", r.summability_bound},
                           {"chart_admissible", r.chart_admissible},
                           {"duplicates", dups},
                           {"zero_real_part", r.zero_real_part},
                           {"violations", r.violations},
                           {"enumerated", r.enumerated}},
                          run.manifest("validate", {c}));
        } else if (*phi_cmd) {
            const auto c = run.config(config_path);
            const auto v = phi(c, parse_point(point_text), g.eps);
            run.emit_json({{"value", v.value}, {"error_bound", v.error_bound}}, run.manifest("phi", {c}, {{"eps", g.eps}}));
        } else if (*flow_cmd) {
            const auto c = run.config(config_path);
            const Complex z = parse_complex(z_text);
            const auto quad = flow_log_g(c, z, from_t, to_t, g.eps);
            const auto closed = F_lambda(c, to_t, from_t, z, g.eps);
            run.emit_json({{"flow", {{"value", quad.value}, {"error_bound", quad.error_bound}}},
                           {"F_lambda", {{"value", closed.value}, {"error_bound", closed.error_bound}}}},
                          run.manifest("flow", {c}, {{"eps", g.eps}}));
        } else if (*classify_cmd) {
            const auto c = run.config(config_path);
            run.emit_json(class_json(class_of(c, parse_point(point_text)), c), run.manifest("classify-point", {c}));
        } else if (*k_cmd) {
            const auto c = run.config(config_path);
            const auto s1 = section_path.empty() ? io::SectionFile{} : io::load_section(section_path);
            const auto s2 = io::load_section(section2_path);
            const double disk = c.family() == Family::GeneralAxialFibered ? std::min(g.disk, c.working_radius()) : g.disk;
            const auto k = k_divisor(c, s1.section, s2.section, disk);
            json entries = json::array();
            for (const auto& [z, v] : k.support()) entries.push_back({{"z", io::complex_to_json(z)}, {"k", v}});
            run.emit_json({{"k", entries}}, run.manifest("k-divisor", {c}, {{"disk", disk}}));
        } else if (*chart_cmd) {
            const auto c = run.config(config_path);
            const auto s = section_path.empty() ? io::SectionFile{} : io::load_section(section_path);
            const Chart chart(c, s.section, multiplier_for(c, s), g.eps);
            const auto pq = chart.forward({parse_point(point_text), theta});
            run.emit_csv("p_re,p_im,q_re,q_im", {csv({pq.p.real(), pq.p.imag(), pq.q.real(), pq.q.imag()})},
                         run.manifest("chart", {c}, {{"eps", g.eps}}));
        } else if (*invert_cmd) {
            const auto c = run.config(config_path);
            const auto s = section_path.empty() ? io::SectionFile{} : io::load_section(section_path);
            const Chart chart(c, s.section, multiplier_for(c, s), g.eps);
            const auto x = chart.inverse({parse_complex(p_text), parse_complex(q_text)});
            run.emit_csv("t,q_re,q_im,theta", {csv({x.zeta.t, x.zeta.z.real(), x.zeta.z.imag(), x.theta})},
                         run.manifest("invert", {c}, {{"eps", g.eps}}));
        } else if (*transition_cmd) {
            const auto c = run.config(config_path);
            const auto s1 = io::load_section(section_path), s2 = io::load_section(section2_path);
            const auto pq = transition(multiplier_for(c, s1), multiplier_for(c, s2),
                                       {parse_complex(p_text), parse_complex(q_text)});
            run.emit_csv("p_re,p_im,q_re,q_im", {csv({pq.p.real(), pq.p.imag(), pq.q.real(), pq.q.imag()})},
                         run.manifest("transition", {c}));
        } else if (*isom_cmd) {
            const auto a = run.config(config_path), b = run.config(config_b);
            const auto cert = isom_exists(a, b, g.disk);
            json fibers = json::array();
            for (const auto& f : cert.fibers)
                fibers.push_back({{"z", io::complex_to_json(f.z)},
                                  {"target_z", io::complex_to_json(f.target_z)},
                                  {"order_a", io::order_type_to_json(f.source)},
                                  {"order_b", io::order_type_to_json(f.target)},
                                  {"matches", f.matches}});
            json body{{"isomorphic", cert.isomorphic}, {"fibers", fibers}, {"shift", io::complex_to_json(cert.shift)}};
            if (!cert.isomorphic) body["obstruction"] = cert.obstruction;
            run.emit_json(body, run.manifest("isom", {a, b}, {{"disk", g.disk}}));
        } else if (*map_cmd) {
            const json spec = io::read_json_file(iso_path);
            if (!spec.contains("config_a") || !spec.contains("config_b"))
                fail(ErrorKind::InvalidConfig, "iso file needs config_a and config_b");
            const auto a = run.config(spec.at("config_a")), b = run.config(spec.at("config_b"));
            const double disk = spec.value("disk", g.disk);
            const auto data = make_isomorphism(a, b, disk);
            const auto y = apply_H(data, {parse_point(point_text), theta}, g.eps);
            run.emit_csv("t,q_re,q_im,theta", {csv({y.zeta.t, y.zeta.z.real(), y.zeta.z.imag(), y.theta})},
                         run.manifest("map-point", {a, b}, {{"disk", disk}, {"eps", g.eps}}));
        } else if (*growth_cmd) {
            if (config_path.empty() && beta == 0.0) throw UsageError("growth needs --config or --beta");
            const auto c = config_path.empty() ? Configuration::power_law(beta) : run.config(config_path);
            if (!(rho_min > 0) || !(rho_max > rho_min)) throw UsageError("need 0 < rho-min < rho-max");
            std::vector<double> grid(static_cast<std::size_t>(grid_points));
            for (int i = 0; i < grid_points; ++i)
                grid[static_cast<std::size_t>(i)] =
                    i == grid_points - 1 ? rho_max
                                         : rho_min * std::pow(rho_max / rho_min, static_cast<double>(i) / (grid_points - 1));
            GrowthOptions opt;
            opt.threads = threads;
            const auto fit = growth_exponent(c, grid, static_cast<std::int64_t>(samples), g.seed, opt);
            std::vector<std::string> rows;
            for (std::size_t i = 0; i < fit.rho.size(); ++i)
                rows.push_back(csv({fit.rho[i], fit.W[i], std::log(fit.rho[i]), std::log(fit.W[i])}));
            rows.push_back("slope," + format_double(fit.slope) + ",stderr," + format_double(fit.slope_stderr));
            run.emit_csv("rho,W,logrho,logW", rows,
                         run.manifest("growth", {c}, {{"samples", samples}, {"relative_accuracy", opt.relative_accuracy}}));
        } else if (*verify_cmd) {
            std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            std::string text;
            bool ok = true;
            for (const auto& n : names) {
                const auto r = run_suite(n, g.seed);
                for (const auto& c : r.checks)
                    text += (c.passed ? "PASS " : "FAIL ") + n + ": " + c.name + " (" + format_double(c.metric) + ")\n";
                ok = ok && r.passed();
            }
            text += ok ? "all checks passed\n" : "some checks failed\n";
            run.write(text);
            return ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << schema_help;
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
