#include "trisect/cli.hpp"

#include "trisect/engine.hpp"
#include "trisect/methods.hpp"
#include "trisect/render.hpp"
#include "trisect/script.hpp"
#include "trisect/verifier.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace trisect::cli {

namespace {

namespace fs = std::filesystem;
using methods::MethodId;
using verifier::sig_digits;

#ifndef TRISECT_SCRIPT_DIR
#define TRISECT_SCRIPT_DIR ""
#endif

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

scalar::Backend resolve_backend(const std::string& flag) {
    std::string text = flag;
    if (text.empty()) {
        if (const char* env = std::getenv("GEOM_BACKEND"); env && *env) text = env;
    }
    if (text.empty()) return scalar::make_backend(scalar::BackendKind::machine);
    try {
        return scalar::parse_backend(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad backend '") + text + "': " + e.what());
    }
}

MethodId resolve_method(const std::string& text) {
    if (auto m = methods::parse_method(text)) return *m;
    throw UsageError("unknown method '" + text + "' (expected method1, method2 or method3)");
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& items) {
    std::map<std::string, std::string> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        if (!out.emplace(name, item.substr(eq + 1)).second) throw UsageError("parameter '" + name + "' given twice");
    }
    return out;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (!part.empty()) out.push_back(part);
    }
    return out;
}

fs::path locate_script(const std::string& path) {
    if (fs::exists(path)) return path;
    const fs::path bundled = fs::path(TRISECT_SCRIPT_DIR) / path;
    if (!std::string(TRISECT_SCRIPT_DIR).empty() && fs::exists(bundled)) return bundled;
    throw UsageError("cannot open script '" + path + "'");
}

script::ConstructionProgram load_script(const std::string& path) {
    const fs::path where = locate_script(path);
    std::ifstream in(where, std::ios::binary);
    if (!in) throw UsageError("cannot open script '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return script::parse({buf.str(), where.filename().string()});
    } catch (const script::ScriptError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// Engine failures: a missing or malformed binding is the caller's mistake.
[[noreturn]] void rethrow_execution(const engine::ExecutionError& e) {
    if (e.code() == engine::ExecErrc::missing_binding) throw UsageError(e.what());
    throw Failure(e.what());
}

std::string point_text(double x, double y) { return "(" + sig_digits(x) + ", " + sig_digits(y) + ")"; }

template <typename Real>
engine::Execution<Real> execute_script(const script::ConstructionProgram& program,
                                       const std::map<std::string, std::string>& params,
                                       const scalar::Backend& backend) {
    try {
        return engine::execute(program, engine::bind<Real>(params), backend);
    } catch (const engine::ExecutionError& e) {
        rethrow_execution(e);
    }
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << data;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Failure("cannot write '" + path + "'");
    f << data;
    if (!f.flush()) throw Failure("cannot write '" + path + "'");
}

struct RunArgs {
    std::string script;
    std::vector<std::string> params;
    std::string export_angles;
    std::string backend;
};

int cmd_run(const RunArgs& a, std::ostream& out) {
    const scalar::Backend backend = resolve_backend(a.backend);
    const auto program = load_script(a.script);
    const auto params = parse_params(a.params);
    const auto wanted = split_list(a.export_angles);
    std::string text;
    scalar::with_backend(backend, [&]<typename Real>() {
        const auto exec = execute_script<Real>(program, params, backend);
        std::ostringstream os;
        if (!wanted.empty()) {
            for (std::size_t i = 0; i < wanted.size(); ++i) {
                const auto* obj = exec.env.find(wanted[i]);
                const auto* mark = obj ? std::get_if<engine::AngleMark<Real>>(obj) : nullptr;
                if (!mark) throw UsageError("'" + wanted[i] + "' is not an angle of " + a.script);
                os << (i ? " " : "") << wanted[i] << '=' << sig_digits(scalar::to_double(mark->value.value));
            }
            os << '\n';
        } else {
            for (const auto& name : exec.env.exports()) {
                const auto* obj = exec.env.find(name);
                if (const auto* p = std::get_if<geom::Point<Real>>(obj)) {
                    os << name << '=' << point_text(scalar::to_double(p->x), scalar::to_double(p->y)) << '\n';
                } else if (const auto* m = std::get_if<engine::AngleMark<Real>>(obj)) {
                    os << name << '=' << sig_digits(scalar::to_double(m->value.value)) << '\n';
                }
            }
        }
        text = os.str();
    });
    out << text;
    return Exit::ok;
}

struct VerifyArgs {
    std::string method;
    std::optional<double> from, to, step, tol;
    std::string format = "text";
    std::string output;
    std::string backend;
    bool exterior = false;
    bool serial = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const MethodId id = resolve_method(a.method);
    const auto format = verifier::parse_format(a.format);
    if (!format) throw UsageError("unknown format '" + a.format + "' (expected text, json-lines or csv)");
    if (a.tol && !(*a.tol > 0)) throw UsageError("--tol must be positive");
    verifier::SweepOptions opts;
    opts.backend = resolve_backend(a.backend);
    opts.run.exterior = a.exterior;
    opts.tolerance = a.tol;
    const auto def = methods::default_grid(id, opts.run);
    const verifier::Grid grid{a.from.value_or(def.start), a.to.value_or(def.stop), a.step.value_or(def.step)};
    verifier::SweepReport rep;
    try {
        rep = a.serial ? verifier::sweep_reference(id, grid, opts) : verifier::sweep(id, grid, opts);
    } catch (const verifier::VerifyError& e) {
        throw UsageError(e.what());
    }
    std::ostringstream os;
    verifier::write_report(os, rep, *format);
    write_output(a.output, os.str(), out);
    return rep.all_pass() && rep.excluded.empty() ? Exit::ok : Exit::failure;
}

struct RenderArgs {
    std::string target;
    std::optional<std::string> theta;
    std::vector<std::string> params;
    std::string output;
    std::string backend;
    bool exterior = false;
    render::RenderOptions svg;
    bool no_labels = false, no_arcs = false, no_circles = false;
};

int cmd_render(const RenderArgs& a, std::ostream& out) {
    const scalar::Backend backend = resolve_backend(a.backend);
    render::RenderOptions svg = a.svg;
    svg.show_labels = !a.no_labels;
    svg.show_angle_arcs = !a.no_arcs;
    svg.show_construction_circles = !a.no_circles;
    const auto method = methods::parse_method(a.target);
    auto params = parse_params(a.params);
    if (a.theta) {
        if (params.count("theta")) throw UsageError("theta given both as --theta and --param");
        params["theta"] = *a.theta;
    }

    std::string doc;
    scalar::with_backend(backend, [&]<typename Real>() {
        std::optional<engine::Execution<Real>> exec;
        if (method) {
            if (!params.count("theta")) throw UsageError("render " + a.target + " needs --theta");
            if (params.size() != 1) throw UsageError("built-in methods take only theta");
            Real theta;
            try {
                theta = scalar::from_decimal<Real>(params["theta"]);
            } catch (const std::exception&) {
                throw UsageError("--theta expects a number, got '" + params["theta"] + "'");
            }
            methods::RunOptions run;
            run.exterior = a.exterior;
            try {
                exec = methods::run_method_full<Real>(*method, {theta}, backend, run).execution;
            } catch (const methods::MethodError& e) {
                throw UsageError(e.what());
            } catch (const engine::ExecutionError& e) {
                rethrow_execution(e);
            }
        } else {
            exec = execute_script<Real>(load_script(a.target), params, backend);
        }
        try {
            doc = render::to_svg(exec->trace, exec->env, svg);
        } catch (const render::RenderError& e) {
            if (e.code() == render::RenderErrc::invalid_options) throw UsageError(e.what());
            throw Failure(e.what());
        }
    });
    write_output(a.output, doc, out);
    return Exit::ok;
}

struct SeedArgs {
    std::string method;
    double beta = 0;
    std::string backend;
};

int cmd_seed(const SeedArgs& a, std::ostream& out) {
    const MethodId id = resolve_method(a.method);
    const scalar::Backend backend = resolve_backend(a.backend);
    bool pass = false;
    scalar::with_backend(backend, [&]<typename Real>() {
        const Real target(a.beta);
        methods::AngleDeg<Real> theta;
        try {
            theta = methods::inverse_seed<Real>(id, {target});
        } catch (const methods::MethodError& e) {
            throw UsageError(e.what());
        }
        Real back;
        try {
            back = methods::beta_of(methods::run_method<Real>(id, theta, backend));
        } catch (const engine::ExecutionError& e) {
            rethrow_execution(e);
        }
        const double diff = std::fabs(scalar::to_double(back - target));
        pass = diff <= verifier::kAngleTolerance;
        out << "theta=" << sig_digits(scalar::to_double(theta.value))
            << " roundtrip_beta=" << sig_digits(scalar::to_double(back)) << (pass ? " pass" : " fail") << '\n';
    });
    return pass ? Exit::ok : Exit::failure;
}

struct FixedArgs {
    std::string method;
    std::string backend;
    bool exterior = false;
};

int cmd_fixed_points(const FixedArgs& a, std::ostream& out) {
    const MethodId id = resolve_method(a.method);
    const scalar::Backend backend = resolve_backend(a.backend);
    methods::RunOptions run;
    run.exterior = a.exterior;
    const auto roots = verifier::find_fixed_points(id, backend, run);
    if (roots.empty()) out << methods::short_name(id) << ": none\n";
    for (double r : roots) out << methods::short_name(id) << ": theta=" << sig_digits(r) << '\n';
    return Exit::ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Straightedge-and-compass construction engine and trisection checker", "trisect"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run", "Execute a .gcs script and print its exports");
    run_cmd->add_option("script", run.script, "Script path")->required();
    run_cmd->add_option("--param", run.params, "Parameter binding name=value (repeatable)");
    run_cmd->add_option("--export-angles", run.export_angles, "Comma-separated angle names to print on one line");
    run_cmd->add_option("--backend", run.backend, "machine or bigfloat:<bits>");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Sweep a method over a grid and check every claim");
    verify_cmd->add_option("method", verify.method, "method1, method2 or method3")->required();
    verify_cmd->add_option("--from", verify.from, "First grid angle, degrees");
    verify_cmd->add_option("--to", verify.to, "Last grid angle, degrees");
    verify_cmd->add_option("--step", verify.step, "Grid step, degrees");
    verify_cmd->add_option("--format", verify.format, "text, json-lines or csv");
    verify_cmd->add_option("--tol", verify.tol, "Override every claim tolerance");
    verify_cmd->add_option("-o,--output", verify.output, "Output file (default stdout)");
    verify_cmd->add_option("--backend", verify.backend, "machine or bigfloat:<bits>");
    verify_cmd->add_flag("--exterior", verify.exterior, "method1: admit angles in (60, 90)");
    verify_cmd->add_flag("--serial", verify.serial, "Use the single-threaded sweep");

    RenderArgs rnd;
    auto* render_cmd = app.add_subcommand("render", "Draw a method or script as SVG");
    render_cmd->add_option("target", rnd.target, "method1, method2, method3 or a script path")->required();
    render_cmd->add_option("--theta", rnd.theta, "Given angle, degrees");
    render_cmd->add_option("--param", rnd.params, "Parameter binding name=value (repeatable)");
    render_cmd->add_option("-o,--output", rnd.output, "Output file (default stdout)");
    render_cmd->add_option("--backend", rnd.backend, "machine or bigfloat:<bits>");
    render_cmd->add_option("--width", rnd.svg.width, "Canvas width, px");
    render_cmd->add_option("--height", rnd.svg.height, "Canvas height, px");
    render_cmd->add_option("--margin", rnd.svg.margin, "Canvas margin, px");
    render_cmd->add_option("--stroke-width", rnd.svg.stroke_width, "Stroke width, px");
    render_cmd->add_option("--font-size", rnd.svg.font_size, "Label font size, px");
    render_cmd->add_flag("--no-labels", rnd.no_labels, "Omit point labels");
    render_cmd->add_flag("--no-angle-arcs", rnd.no_arcs, "Omit angle arcs");
    render_cmd->add_flag("--no-circles", rnd.no_circles, "Omit construction circles");
    render_cmd->add_flag("--exterior", rnd.exterior, "method1: admit angles in (60, 90)");

    SeedArgs seed;
    auto* seed_cmd = app.add_subcommand("seed", "Given angle whose construction yields a target beta");
    seed_cmd->add_option("method", seed.method, "method1, method2 or method3")->required();
    seed_cmd->add_option("--beta", seed.beta, "Target derived angle, degrees")->required();
    seed_cmd->add_option("--backend", seed.backend, "machine or bigfloat:<bits>");

    FixedArgs fixed;
    auto* fixed_cmd = app.add_subcommand("fixed-points", "Angles where the derived angle equals the given angle");
    fixed_cmd->add_option("method", fixed.method, "method1, method2 or method3")->required();
    fixed_cmd->add_option("--backend", fixed.backend, "machine or bigfloat:<bits>");
    fixed_cmd->add_flag("--exterior", fixed.exterior, "method1: admit angles in (60, 90)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    try {
        if (*run_cmd) return cmd_run(run, out);
        if (*verify_cmd) return cmd_verify(verify, out);
        if (*render_cmd) return cmd_render(rnd, out);
        if (*seed_cmd) return cmd_seed(seed, out);
        if (*fixed_cmd) return cmd_fixed_points(fixed, out);
    } catch (const UsageError& e) {
        err << "trisect: " << e.what() << '\n';
        return Exit::usage;
    } catch (const Failure& e) {
        err << "trisect: " << e.what() << '\n';
        return Exit::failure;
    } catch (const std::exception& e) {
        err << "trisect: " << e.what() << '\n';
        return Exit::failure;
    }
    return Exit::usage;
}

}  // namespace trisect::cli
