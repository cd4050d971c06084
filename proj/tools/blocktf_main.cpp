// blocktf: reduce block diagrams to transfer functions, derive them from
// ODEs, analyze stability, transform signals and cross-validate everything
// numerically. See README.md for the file formats.

#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blocktf/dialysis.hpp"
#include "blocktf/dsl.hpp"
#include "blocktf/jsonio.hpp"
#include "blocktf/simul.hpp"
#include "blocktf/verify.hpp"

namespace {

using namespace blocktf;

struct Output {
    std::string results_json = "{}";
    std::string human;
    std::vector<std::string> warnings;
    int exit_code = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_or_stdout(const std::string& path, const std::string& data, Output& out) {
    if (path.empty()) {
        out.human = data;
        out.results_json = "{\"csv\":\"" + JsonWriter::escape(data) + "\"}";
    } else {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error("cannot write file: " + path);
        f << data;
        out.human = "wrote " + path + "\n";
        out.results_json = "{\"path\":\"" + JsonWriter::escape(path) + "\"}";
    }
}

RatFunc tf_from_arg(const std::string& arg) { return parse_block("tf(" + arg + ")").tf(); }

std::complex<double> parse_point(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rat_from_string(item));
    if (out.empty()) throw Error("empty coefficient list");
    return out;
}

std::vector<double> uniform_grid(double t_end, double dt) {
    auto n = static_cast<std::size_t>(std::llround(t_end / dt));
    std::vector<double> grid(n + 1);
    for (std::size_t i = 0; i <= n; ++i) grid[i] = static_cast<double>(i) * dt;
    return grid;
}

Output cmd_reduce(const std::string& path) {
    Output out;
    RatFunc r = reduce(parse_block(read_file(path)));
    out.human = r.to_string() + "\n";
    JsonWriter w;
    w.begin_object().key("tf").value(r.to_string()).end_object();
    out.results_json = w.str();
    return out;
}

Output cmd_tf(const std::string& out_coeffs, const std::string& in_coeffs) {
    Output out;
    LinODE ode(parse_rat_list(out_coeffs), parse_rat_list(in_coeffs));
    RatFunc h = transfer_function(ode);
    out.human = h.to_string() + "\n";
    JsonWriter w;
    w.begin_object().key("tf").value(h.to_string()).end_object();
    out.results_json = w.str();
    return out;
}

Output cmd_stability(const std::string& path, const std::string& tf_arg, double tol) {
    Output out;
    RatFunc r = tf_arg.empty() ? reduce(parse_block(read_file(path))) : tf_from_arg(tf_arg);
    StabilityVerdict v = classify(r, tol);
    out.results_json = v.to_json();
    out.human = v.to_json() + "\n";
    return out;
}

Output cmd_laplace(const std::string& signal_text, const std::string& at) {
    Output out;
    Signal g = parse_signal(signal_text);
    SDomainExpr F = laplace(g);
    ExpOrderWitness w = exp_order_witness(g);

    JsonWriter jw;
    jw.begin_object();
    jw.key("signal").value(g.to_string());
    jw.key("transform").value(F.to_string());
    jw.key("witness").begin_object().key("M").value(w.M).key("a").value(w.a).end_object();
    std::ostringstream human;
    human << "L[" << g.to_string() << "] = " << F.to_string() << "\n";
    human << "exponential order: |g(t)| <= " << JsonWriter::format_double(w.M) << " * exp("
          << JsonWriter::format_double(w.a) << " t)\n";
    if (!at.empty()) {
        std::complex<double> s0 = parse_point(at);
        if (!lt_exists(g, s0))
            throw MathError("s0 outside the region of convergence (Re s <= witness a)");
        std::complex<double> sym = F.eval(s0);
        double horizon = default_horizon(g, s0, 1e-9);
        std::complex<double> num = numeric_lt(g, s0, horizon, 4000);
        jw.key("at").begin_array().value(s0.real()).value(s0.imag()).end_array();
        jw.key("symbolic").begin_array().value(sym.real()).value(sym.imag()).end_array();
        jw.key("quadrature").begin_array().value(num.real()).value(num.imag()).end_array();
        jw.key("abs_diff").value(std::abs(sym - num));
        human << "F(s0) symbolic  = " << JsonWriter::format_double(sym.real()) << " + "
              << JsonWriter::format_double(sym.imag()) << "i\n";
        human << "F(s0) quadrature = " << JsonWriter::format_double(num.real()) << " + "
              << JsonWriter::format_double(num.imag()) << "i\n";
        human << "|diff| = " << JsonWriter::format_double(std::abs(sym - num)) << "\n";
    }
    jw.end_object();
    out.results_json = jw.str();
    out.human = human.str();
    return out;
}

Output cmd_simulate(const std::string& path, const std::string& tf_arg, const std::string& kind_name,
                    double t_end, double dt, const std::string& output) {
    Output out;
    RatFunc r = tf_arg.empty() ? reduce(parse_block(read_file(path))) : tf_from_arg(tf_arg);
    ResponseKind kind = kind_name == "impulse" ? ResponseKind::impulse : ResponseKind::step;
    std::vector<double> grid = uniform_grid(t_end, dt);
    std::vector<double> y = time_response(r, kind, grid);
    Trajectory traj;
    traj.dt = dt;
    traj.times = grid;
    traj.states.reserve(y.size());
    for (double v : y) traj.states.push_back({v});
    write_file_or_stdout(output, traj.to_csv({"y"}), out);
    return out;
}

Output cmd_dialysis(const std::string& kA, const std::string& kTA, const std::string& kL,
                    const std::string& kTL, bool check_theorems, bool do_simulate, double t_end,
                    double dt, double ufr, const std::string& v0_text, const std::string& output) {
    Output out;
    ArmsTrunkParams params(rat_from_string(kA), rat_from_string(kTA));
    JsonWriter jw;
    jw.begin_object();
    std::ostringstream human;

    RatFunc tf = transfer_function(build_arms_trunk_ode(params));
    jw.key("tf").value(tf.to_string());
    human << "arms-trunk transfer function: " << tf.to_string() << "\n";

    if (check_theorems) {
        TheoremReport rep = theorem_checks(params);
        jw.key("theorems").begin_object();
        jw.key("routes_agree").value(rep.routes_agree);
        jw.key("unity_kta_form").value(rep.unity_kta_form);
        jw.key("stable").value(rep.stable);
        jw.key("verdict").raw(rep.verdict.to_json());
        if (!rep.discrepancy_note.empty()) jw.key("note").value(rep.discrepancy_note);
        jw.end_object();
        human << "theorem checks: routes_agree=" << (rep.routes_agree ? "true" : "false")
              << " unity_kta_form=" << (rep.unity_kta_form ? "true" : "false")
              << " stable=" << (rep.stable ? "true" : "false") << "\n";
        if (!rep.discrepancy_note.empty()) {
            human << "note: " << rep.discrepancy_note << "\n";
            out.warnings.push_back(rep.discrepancy_note);
        }
    }

    if (do_simulate) {
        Rat kl = kL.empty() ? rat_from_string(kA) : rat_from_string(kL);
        Rat ktl = kTL.empty() ? rat_from_string(kTA) : rat_from_string(kTL);
        CompartmentModel model(rat_to_double(params.kA), rat_to_double(kl), rat_to_double(params.kTA),
                               rat_to_double(ktl), [ufr](double) { return ufr; });
        std::vector<double> v0;
        {
            std::stringstream ss(v0_text);
            std::string item;
            while (std::getline(ss, item, ',')) v0.push_back(std::stod(item));
        }
        DialysisRun run = simulate_dialysis(model, v0, t_end, dt);
        if (run.negative_volume) out.warnings.push_back("negative volume encountered along the trajectory");
        std::string csv = run.trajectory.to_csv({"VA", "VT", "VL"});
        if (output.empty()) {
            human << csv;
            jw.key("csv").value(csv);
        } else {
            std::ofstream f(output, std::ios::binary);
            if (!f) throw Error("cannot write file: " + output);
            f << csv;
            human << "wrote " << output << "\n";
            jw.key("path").value(output);
        }
        jw.key("negative_volume").value(run.negative_volume);
    }
    jw.end_object();
    out.results_json = jw.str();
    out.human = human.str();
    return out;
}

Output cmd_verify(double tol_scale, const std::string& only) {
    Output out;
    std::vector<CheckResult> results = run_verification(tol_scale, only);
    if (results.empty()) throw Error("no verification check named '" + only + "'");
    bool all_pass = true;
    JsonWriter jw;
    jw.begin_object().key("checks").begin_array();
    std::ostringstream human;
    for (const CheckResult& r : results) {
        all_pass = all_pass && r.pass;
        jw.begin_object();
        jw.key("name").value(r.name);
        jw.key("pass").value(r.pass);
        jw.key("detail").value(r.detail);
        jw.end_object();
        human << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
    }
    jw.end_array().key("all_pass").value(all_pass).end_object();
    human << (all_pass ? "all checks passed" : "verification FAILED") << "\n";
    out.results_json = jw.str();
    out.human = human.str();
    out.exit_code = all_pass ? 0 : 3;
    return out;
}

std::string render_report(const std::string& command, const std::string& digest, const Output& out) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value(command);
    w.key("inputs_digest").value(digest);
    w.key("results").raw(out.results_json);
    w.key("warnings").begin_array();
    for (const std::string& warning : out.warnings) w.value(warning);
    w.end_array();
    w.key("exit_code").value(out.exit_code);
    w.end_object();
    return w.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-diagram calculus for s-domain transfer functions"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit a machine-readable JSON report");

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a .bdg block diagram to one transfer function");
    std::string reduce_path;
    reduce_cmd->add_option("file", reduce_path, "block diagram file")->required();

    auto* tf_cmd = app.add_subcommand("tf", "transfer function of a linear ODE (zero initial conditions)");
    tf_cmd->alias("ode");
    std::string tf_out, tf_in;
    tf_cmd->add_option("--out", tf_out, "output-side coefficients a0,a1,... (ascending)")->required();
    tf_cmd->add_option("--in", tf_in, "input-side coefficients b0,b1,... (ascending)")->required();

    auto* stab_cmd = app.add_subcommand("stability", "stability verdict with pole evidence");
    std::string stab_path, stab_tf;
    double stab_tol = 1e-9;
    stab_cmd->add_option("file", stab_path, "block diagram file");
    stab_cmd->add_option("--tf", stab_tf, "transfer function literal 'num;den'");
    stab_cmd->add_option("--tol", stab_tol, "on-axis tolerance on Re(pole)");

    auto* lap_cmd = app.add_subcommand("laplace", "symbolic Laplace transform of a catalog signal");
    std::string lap_signal, lap_at;
    lap_cmd->add_option("--signal", lap_signal, "signal expression, e.g. '3*step + 2*exp(-2)'")->required();
    lap_cmd->add_option("--at", lap_at, "evaluate at s0 = re,im and compare with quadrature");

    auto* sim_cmd = app.add_subcommand("simulate", "step/impulse response by partial-fraction inversion");
    std::string sim_path, sim_tf, sim_kind = "step", sim_output;
    double sim_t_end = 10.0, sim_dt = 1e-3;
    sim_cmd->add_option("file", sim_path, "block diagram file");
    sim_cmd->add_option("--tf", sim_tf, "transfer function literal 'num;den'");
    sim_cmd->add_option("--kind", sim_kind, "step or impulse")->check(CLI::IsMember({"step", "impulse"}));
    sim_cmd->add_option("--t-end", sim_t_end, "simulation horizon");
    sim_cmd->add_option("--dt", sim_dt, "time step");
    sim_cmd->add_option("--output", sim_output, "CSV path (stdout when omitted)");

    auto* dia_cmd = app.add_subcommand("dialysis", "arms-trunk case study and 3-compartment simulation");
    std::string dia_kA = "0.1", dia_kTA = "0.05", dia_kL, dia_kTL, dia_v0 = "1,1,1", dia_output;
    bool dia_check = false, dia_sim = false;
    double dia_t_end = 10.0, dia_dt = 1e-3, dia_ufr = 0.0;
    dia_cmd->add_option("--kA", dia_kA, "arms -> trunk rate (rational)");
    dia_cmd->add_option("--kTA", dia_kTA, "trunk -> arms rate (rational)");
    dia_cmd->add_option("--kL", dia_kL, "legs -> trunk rate (defaults to kA)");
    dia_cmd->add_option("--kTL", dia_kTL, "trunk -> legs rate (defaults to kTA)");
    dia_cmd->add_flag("--check-theorems", dia_check, "verify the transfer-function chain");
    dia_cmd->add_flag("--simulate", dia_sim, "integrate the three-compartment model");
    dia_cmd->add_option("--t-end", dia_t_end, "simulation horizon");
    dia_cmd->add_option("--dt", dia_dt, "time step");
    dia_cmd->add_option("--ufr", dia_ufr, "constant withdrawal rate from the trunk");
    dia_cmd->add_option("--v0", dia_v0, "initial volumes VA,VT,VL");
    dia_cmd->add_option("--output", dia_output, "CSV path (stdout when omitted)");

    auto* ver_cmd = app.add_subcommand("verify", "run the full cross-validation and property suite");
    double ver_tol_scale = 1.0;
    std::string ver_only;
    ver_cmd->add_option("--tol-scale", ver_tol_scale, "diagnostic tolerance multiplier (default 1)");
    ver_cmd->add_option("--only", ver_only, "run a single named check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    std::string command;
    std::string digest_input;
    for (int i = 1; i < argc; ++i) {
        digest_input += argv[i];
        digest_input += '\n';
    }

    Output out;
    try {
        if (reduce_cmd->parsed()) {
            command = "reduce";
            out = cmd_reduce(reduce_path);
        } else if (tf_cmd->parsed()) {
            command = "tf";
            out = cmd_tf(tf_out, tf_in);
        } else if (stab_cmd->parsed()) {
            command = "stability";
            if (stab_path.empty() && stab_tf.empty()) throw Error("stability needs a file or --tf");
            out = cmd_stability(stab_path, stab_tf, stab_tol);
        } else if (lap_cmd->parsed()) {
            command = "laplace";
            out = cmd_laplace(lap_signal, lap_at);
        } else if (sim_cmd->parsed()) {
            command = "simulate";
            if (sim_path.empty() && sim_tf.empty()) throw Error("simulate needs a file or --tf");
            out = cmd_simulate(sim_path, sim_tf, sim_kind, sim_t_end, sim_dt, sim_output);
        } else if (dia_cmd->parsed()) {
            command = "dialysis";
            out = cmd_dialysis(dia_kA, dia_kTA, dia_kL, dia_kTL, dia_check, dia_sim, dia_t_end, dia_dt,
                               dia_ufr, dia_v0, dia_output);
        } else if (ver_cmd->parsed()) {
            command = "verify";
            out = cmd_verify(ver_tol_scale, ver_only);
        }
    } catch (const MathError& e) {
        out.exit_code = 2;
        out.results_json = "{\"error\":\"" + JsonWriter::escape(e.what()) + "\"}";
        out.human = std::string("math error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        out.exit_code = 1;
        out.results_json = "{\"error\":\"" + JsonWriter::escape(e.what()) + "\"}";
        out.human = std::string("error: ") + e.what() + "\n";
    }

    if (json) {
        std::cout << render_report(command, fnv1a_digest(digest_input), out) << "\n";
    } else {
        (out.exit_code == 0 ? std::cout : std::cerr) << out.human;
    }
    return out.exit_code;
}
