#include "oqho/cli.hpp"

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "oqho/asymptotics.hpp"
#include "oqho/covariance.hpp"
#include "oqho/errors.hpp"
#include "oqho/interconnect.hpp"
#include "oqho/linalg.hpp"
#include "oqho/model_io.hpp"
#include "oqho/onemode.hpp"
#include "oqho/report.hpp"

namespace oqho {

namespace {

const char* command_name(RunConfig::Command c) {
    switch (c) {
        case RunConfig::Command::validate: return "validate";
        case RunConfig::Command::spectrum: return "spectrum";
        case RunConfig::Command::decoherence: return "decoherence";
        case RunConfig::Command::bound: return "bound";
        case RunConfig::Command::asymptotics: return "asymptotics";
        case RunConfig::Command::covariance: return "covariance";
        case RunConfig::Command::sweep: return "sweep";
        case RunConfig::Command::onemode: return "onemode";
        case RunConfig::Command::interconnect: return "interconnect";
    }
    return "?";
}

void emit(const RunConfig& config, const std::string& text) {
    if (config.output.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        write_file(config.output, text);
    }
}

JValue report_head(const RunConfig& config, const std::string& input_bytes) {
    JValue doc = JValue::object();
    doc.set("schema_version", JValue::integer(1));
    doc.set("command", JValue::string(command_name(config.command)));
    doc.set("input_digest", JValue::string(fnv1a_hex(input_bytes)));
    return doc;
}

JValue cmd_validate(const OscillatorModel& model) {
    auto rep = validate(model);
    JValue checks = JValue::object();
    checks.set("dims_even", JValue::boolean(rep.dims_even));
    checks.set("theta_antisymmetric", JValue::boolean(rep.theta_antisymmetric));
    checks.set("r_symmetric", JValue::boolean(rep.r_symmetric));
    checks.set("theta_nonsingular", JValue::boolean(rep.theta_nonsingular));
    checks.set("r_positive_definite", JValue::boolean(rep.r_positive_definite));
    JValue out = JValue::object();
    out.set("n", JValue::integer(static_cast<long long>(model.n)));
    out.set("m", JValue::integer(static_cast<long long>(model.m)));
    out.set("checks", std::move(checks));
    out.set("all_passed", JValue::boolean(rep.all()));
    return out;
}

JValue cmd_spectrum(const OscillatorModel& model) {
    auto spectral = spectral_structure(model);
    JValue out = JValue::object();
    out.set("omegas", to_json(spectral.omegas));
    out.set("period", JValue::number(spectral.period));
    out.set("eigenvectors", to_json(spectral.V));
    return out;
}

JValue cmd_decoherence(const OscillatorModel& model, NormKind norm) {
    auto res = decoherence_time(model, norm);
    JValue out = JValue::object();
    out.set("tau_star", JValue::number(res.tau_star));
    out.set("norm", JValue::string(std::string(norm_kind_name(norm))));
    out.set("ratio", JValue::number(res.ratio));
    JValue bracket = JValue::array();
    bracket.push(JValue::number(res.bracket_lo));
    bracket.push(JValue::number(res.bracket_hi));
    out.set("bracket", std::move(bracket));
    return out;
}

JValue bound_json(const LyapunovBound& b) {
    JValue out = JValue::object();
    out.set("bound", JValue::number(b.bound));
    out.set("lambda", JValue::number(b.lambda));
    out.set("n_kind", JValue::string(b.n_kind));
    out.set("N", to_json(b.N));
    out.set("Gamma", to_json(b.Gamma));
    return out;
}

JValue asymptotics_json(const AsymptoticsReport& rep) {
    JValue out = JValue::object();
    out.set("omegas", to_json(rep.omegas));
    out.set("mus", to_json(rep.mus));
    out.set("omega_mu_products", to_json(rep.omega_mu_products));
    out.set("stable_weak_coupling", JValue::boolean(rep.stable_weak_coupling));
    out.set("margin", JValue::number(rep.margin));
    out.set("lead_coefficient", JValue::number(rep.lead));
    out.set("eps_hat", JValue::number(rep.eps_hat));
    out.set("eps_tilde", JValue::number(rep.eps_tilde));
    out.set("epsilon", JValue::number(rep.epsilon));
    out.set("eps_ratio", JValue::number(rep.eps_ratio));
    if (rep.epsilon > 0.0) out.set("tau_hat", JValue::number(rep.tau_hat));
    return out;
}

JValue cmd_covariance(const OscillatorModel& model, const RunConfig& config) {
    auto res = steady_covariance(model);
    JValue out = JValue::object();
    out.set("P", to_json(res.P));
    out.set("residual", JValue::number(res.residual));
    out.set("psd_quantum", JValue::boolean(res.psd_quantum));
    out.set("min_quantum_eigenvalue", JValue::number(res.min_quantum_eig));
    if (model.coupling) {
        try {
            auto lim = weak_coupling_limit(model);
            out.set("Pi", to_json(lim.Pi));
            JValue contribs = JValue::array();
            for (const auto& c : lim.contributions) {
                JValue jc = JValue::object();
                jc.set("mode", JValue::integer(static_cast<long long>(c.k + 1)));
                jc.set("omega_mu", JValue::number(c.omega_mu));
                jc.set("weight", JValue::number(c.weight));
                jc.set("term", to_json(c.term));
                contribs.push(std::move(jc));
            }
            out.set("mode_contributions", std::move(contribs));
        } catch (const Error& e) {
            out.set("weak_coupling_limit_error", JValue::string(e.name()));
        }
    }
    if (config.t_end) {
        auto ss = build_state_space(model);
        const double dt = config.dt ? *config.dt : 0.01 / frobenius_norm(ss.A);
        auto traj = transient_covariance(model, RealMatrix(model.n, model.n), *config.t_end, dt);
        JValue tr = JValue::object();
        tr.set("t_end", JValue::number(traj.back().t));
        tr.set("dt", JValue::number(dt));
        tr.set("P_final", to_json(traj.back().P));
        tr.set("gap_to_steady", JValue::number(frobenius_norm(traj.back().P - res.P)));
        out.set("transient", std::move(tr));
    }
    return out;
}

std::string cmd_sweep(const OscillatorModel& model, const RunConfig& config) {
    if (!(config.eps_min < config.eps_max) || config.steps < 2)
        throw ValidationError("sweep: requires eps-min < eps-max and steps >= 2");
    std::vector<double> eps(config.steps);
    const double span = config.eps_max - config.eps_min;
    for (int i = 0; i < config.steps; ++i)
        eps[i] = config.eps_min + span * static_cast<double>(i) /
                                      static_cast<double>(config.steps - 1);
    auto rows = lyapunov_exponent_sweep(model, eps);
    std::string csv = "epsilon,exact_lyapunov,asymptotic_approx\n";
    for (const auto& r : rows) {
        csv += format_number(r.epsilon);
        csv += ',';
        csv += format_number(r.exact);
        csv += ',';
        csv += format_number(r.approx);
        csv += '\n';
    }
    return csv;
}

JValue cmd_onemode(const OscillatorModel& model) {
    auto p = extract_params(model);
    JValue out = JValue::object();
    out.set("theta", JValue::number(p.theta_original));
    out.set("rescaled", JValue::boolean(p.rescaled));
    out.set("gamma", JValue::number(p.gamma));
    out.set("omega", JValue::number(p.omega));
    out.set("mu", JValue::number(p.mu));
    out.set("epsilon", JValue::number(p.epsilon));
    auto [l1, l2] = exact_spectrum(p, p.epsilon);
    out.set("spectrum", to_json(std::vector<Complex>{l1, l2}));
    if (p.gamma > 0.0) {
        auto wd = weighted_decay(p, p.epsilon > 0.0 ? p.epsilon : 1.0, 0.0);
        out.set("eps_threshold", JValue::number(wd.eps_threshold));
        if (p.epsilon > 0.0) {
            out.set("tau_r", JValue::number(wd.tau_r));
            out.set("P", to_json(exact_covariance(p, p.epsilon)));
        }
    }
    return out;
}

JValue cmd_interconnect(const NetworkDescription& desc, const RunConfig& config) {
    auto net = assemble(desc.sub1, desc.sub2, desc.R12, desc.epsilon);
    auto rep = analyze_closed_loop(net, static_cast<std::size_t>(config.lambda_grid));
    JValue out = JValue::object();
    out.set("n", JValue::integer(static_cast<long long>(net.model.n)));
    out.set("m", JValue::integer(static_cast<long long>(net.model.m)));
    out.set("epsilon", JValue::number(net.epsilon));
    out.set("omegas", to_json(rep.asymptotics.omegas));
    out.set("mus", to_json(rep.asymptotics.mus));
    out.set("sigmas", to_json(rep.asymptotics.sigmas));
    out.set("K", to_json(rep.asymptotics.K));
    out.set("stable_weak_coupling", JValue::boolean(rep.verdict.stable));
    out.set("margin", JValue::number(rep.verdict.margin));
    out.set("lead_coefficient", JValue::number(rep.threshold_set.lead));
    out.set("eps_hat", JValue::number(rep.threshold_set.eps_hat));
    out.set("eps_tilde", JValue::number(rep.threshold_set.eps_tilde));
    if (net.epsilon > 0.0) out.set("tau_hat", JValue::number(rep.tau_hat));
    JValue dec = JValue::object();
    dec.set("tau_star", JValue::number(rep.decoherence.tau_star));
    dec.set("norm", JValue::string("frobenius"));
    out.set("decoherence", std::move(dec));
    out.set("bound", bound_json(rep.bound));
    JValue cov = JValue::object();
    cov.set("P", to_json(rep.covariance.P));
    cov.set("residual", JValue::number(rep.covariance.residual));
    cov.set("psd_quantum", JValue::boolean(rep.covariance.psd_quantum));
    out.set("covariance", std::move(cov));
    return out;
}

}  // namespace

int run(const RunConfig& config) {
    try {
        const std::string input_bytes = read_file(config.input);

        if (config.command == RunConfig::Command::sweep) {
            emit(config, cmd_sweep(parse_model(input_bytes), config));
            return 0;
        }

        JValue doc = report_head(config, input_bytes);
        JValue result;
        switch (config.command) {
            case RunConfig::Command::validate:
                result = cmd_validate(parse_model(input_bytes));
                break;
            case RunConfig::Command::spectrum:
                result = cmd_spectrum(parse_model(input_bytes));
                break;
            case RunConfig::Command::decoherence:
                result = cmd_decoherence(parse_model(input_bytes), config.norm);
                break;
            case RunConfig::Command::bound:
                result = bound_json(optimize_bound(parse_model(input_bytes),
                                                   static_cast<std::size_t>(config.lambda_grid)));
                break;
            case RunConfig::Command::asymptotics:
                result = asymptotics_json(analyze_asymptotics(parse_model(input_bytes)));
                break;
            case RunConfig::Command::covariance:
                result = cmd_covariance(parse_model(input_bytes), config);
                break;
            case RunConfig::Command::onemode:
                result = cmd_onemode(parse_model(input_bytes));
                break;
            case RunConfig::Command::interconnect:
                result = cmd_interconnect(parse_network(input_bytes), config);
                break;
            case RunConfig::Command::sweep:
                break;  // handled above
        }
        doc.set("result", std::move(result));
        emit(config, doc.dump() + "\n");
        return 0;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 2;
    }
}

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"moment-level decoherence analysis for open quantum harmonic oscillators"};
    app.require_subcommand(1);

    RunConfig config;
    std::string norm_flag = "frobenius";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", config.input, "input JSON file")->required();
        sub->add_option("--output", config.output, "output path (default: stdout)");
    };

    auto* validate_cmd = app.add_subcommand("validate", "structural checks of a model file");
    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenfrequencies and eigenvectors");
    auto* decoherence_cmd =
        app.add_subcommand("decoherence", "commutator-decay time of a stable model");
    auto* bound_cmd = app.add_subcommand("bound", "optimised Lyapunov upper bound");
    auto* asymptotics_cmd =
        app.add_subcommand("asymptotics", "weak-coupling damping coefficients and thresholds");
    auto* covariance_cmd =
        app.add_subcommand("covariance", "invariant covariance and weak-coupling limit");
    auto* sweep_cmd =
        app.add_subcommand("sweep", "CSV of exact vs asymptotic Lyapunov exponent");
    auto* onemode_cmd = app.add_subcommand("onemode", "closed-form single-mode analysis");
    auto* interconnect_cmd =
        app.add_subcommand("interconnect", "assemble and analyse a two-oscillator feedback loop");

    for (auto* sub : {validate_cmd, spectrum_cmd, decoherence_cmd, bound_cmd, asymptotics_cmd,
                      covariance_cmd, sweep_cmd, onemode_cmd, interconnect_cmd})
        add_common(sub);

    decoherence_cmd->add_option("--norm", norm_flag, "frobenius | weighted")
        ->check(CLI::IsMember({"frobenius", "weighted"}));
    bound_cmd->add_option("--lambda-grid", config.lambda_grid, "geometric grid size")
        ->check(CLI::PositiveNumber);
    interconnect_cmd->add_option("--lambda-grid", config.lambda_grid, "geometric grid size")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--eps-min", config.eps_min, "smallest coupling strength");
    sweep_cmd->add_option("--eps-max", config.eps_max, "largest coupling strength");
    sweep_cmd->add_option("--steps", config.steps, "number of grid points");
    covariance_cmd->add_option("--t-end", config.t_end, "also integrate the transient to t-end");
    covariance_cmd->add_option("--dt", config.dt, "transient integrator step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (validate_cmd->parsed()) config.command = RunConfig::Command::validate;
    if (spectrum_cmd->parsed()) config.command = RunConfig::Command::spectrum;
    if (decoherence_cmd->parsed()) config.command = RunConfig::Command::decoherence;
    if (bound_cmd->parsed()) config.command = RunConfig::Command::bound;
    if (asymptotics_cmd->parsed()) config.command = RunConfig::Command::asymptotics;
    if (covariance_cmd->parsed()) config.command = RunConfig::Command::covariance;
    if (sweep_cmd->parsed()) config.command = RunConfig::Command::sweep;
    if (onemode_cmd->parsed()) config.command = RunConfig::Command::onemode;
    if (interconnect_cmd->parsed()) config.command = RunConfig::Command::interconnect;
    config.norm = norm_flag == "weighted" ? NormKind::r_weighted : NormKind::frobenius;

    return run(config);
}

}  // namespace oqho
