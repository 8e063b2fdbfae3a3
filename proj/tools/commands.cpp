#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "acceptance.hpp"
#include "disclose/stochastic.hpp"
#include "disclose/switching.hpp"
#include "disclose/zone.hpp"
#include "svg.hpp"
#include "table.hpp"

namespace disclose::cli {

using equilibrium::Regime;

namespace {

std::string schedule_text(const RunConfig& cfg) {
    if (cfg.schedule == "constant") return "constant " + format_sig(cfg.rho);
    if (cfg.schedule == "charge") return "charge " + format_sig(cfg.charge);
    return cfg.schedule;
}

std::vector<std::string> model_comments(const std::string& command,
                                        const RunConfig& cfg) {
    return {
        "disclose " + command,
        "lambda = " + format_sig(cfg.params.lambda),
        "sigma = " + format_sig(cfg.params.sigma),
        "kappa = " + format_sig(cfg.params.kappa),
        "beta = " + format_sig(cfg.params.beta),
    };
}

}  // namespace

std::string render_curve(const RunConfig& cfg) {
    const auto s = cfg.make_schedule();
    const auto& p = cfg.params;

    std::vector<double> ts(static_cast<std::size_t>(cfg.grid));
    std::vector<double> gs(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        ts[i] = static_cast<double>(i) / (cfg.grid - 1);
        gs[i] = cfg.theta ? equilibrium::trend_with_switch(
                                ts[i], *cfg.theta, cfg.make_regime(), p, s)
                          : equilibrium::trend_sparing(ts[i], p, s);
    }
    const double cutoff = gs.back();  // terminal trend = lower disclosure cutoff

    auto comments = model_comments("curve", cfg);
    comments.push_back("schedule = " + schedule_text(cfg));
    if (cfg.theta) {
        comments.push_back("regime = " + cfg.regime);
        comments.push_back("theta = " + format_sig(*cfg.theta));
    }
    comments.push_back("grid = " + std::to_string(cfg.grid));

    if (cfg.format == "svg") {
        Series curve{"gamma", ts, gs};
        Series cut{"lower cutoff", {0.0, 1.0}, {cutoff, cutoff}};
        return render_line_chart("trend value of the silent firm", "t",
                                 "gamma", {curve, cut});
    }
    Table t;
    t.comments = std::move(comments);
    t.header = {"t", "gamma", "lower_cutoff"};
    for (std::size_t i = 0; i < ts.size(); ++i)
        t.rows.push_back({format_sig(ts[i]), format_sig(gs[i]), format_sig(cutoff)});
    return render_csv(t);
}

std::string render_switch(const RunConfig& cfg) {
    if (cfg.format == "svg")
        throw std::runtime_error("switch emits a single row; use --format csv");
    const auto s = cfg.make_schedule();
    const auto sol = cfg.make_regime() == Regime::candid_first
                         ? switching::theta_candid_first(cfg.params, s)
                         : switching::theta_sparing_first(cfg.params, s);

    Table t;
    t.comments = model_comments("switch", cfg);
    t.comments.push_back("schedule = " + schedule_text(cfg));
    if (!sol.exists)
        t.comments.push_back(sol.corner == switching::Corner::at_zero
                                 ? "corner: theta = 0, sparing never pays"
                                 : "corner: theta = 1, switch never occurs");
    t.header = {"regime", "theta", "foc_residual"};
    t.rows.push_back(
        {cfg.regime, format_sig(sol.theta), format_sig(sol.foc_residual)});
    return render_csv(t);
}

std::string render_zone(const RunConfig& cfg) {
    const auto report = zone::build_report(cfg.params);

    auto comments = model_comments("zone", cfg);
    comments.push_back("c_step = 0.01");
    comments.push_back("d_increment = 0.1");
    comments.push_back("c_bar = " + format_sig(report.cbar));
    comments.push_back("underline_c = " + (report.c_under
                                               ? format_sig(*report.c_under)
                                               : std::string("none")));

    if (cfg.format == "svg") {
        Series loss{"a_loss", {}, {}};
        Series gain{"a_gain", {}, {}};
        for (const auto& row : report.rows) {
            loss.x.push_back(row.c);
            loss.y.push_back(row.a_loss);
            gain.x.push_back(row.c);
            gain.y.push_back(row.a_gain);
        }
        return render_line_chart("incremental disclosure areas by charge", "c",
                                 "area", {loss, gain});
    }
    Table t;
    t.comments = std::move(comments);
    t.header = {"c", "theta", "a_loss", "a_gain", "label"};
    for (const auto& row : report.rows)
        t.rows.push_back({format_sig(row.c), format_sig(row.theta),
                          format_sig(row.a_loss), format_sig(row.a_gain),
                          zone::label_name(row.label)});
    return render_csv(t);
}

std::string render_scienter(const RunConfig& cfg) {
    const Regime regime = cfg.make_regime();
    const bool sparing = regime == Regime::sparing_first;
    // figure-scale grids: start at the admissibility bound, 100 points at
    // spacing 1/8 for sparing-first, 10 points at spacing 1 for candid-first
    const double step = sparing ? 0.125 : 1.0;
    const int points = sparing ? 100 : 10;
    const double start =
        stochastic::admissible_lambda_bound(regime, cfg.params);

    std::vector<double> lam(points), mc(points), se(points), closed(points);
    for (int i = 0; i < points; ++i) {
        equilibrium::ModelParams p = cfg.params;
        p.lambda = start + step * i;
        stochastic::SimConfig sim;
        sim.samples = cfg.samples;
        sim.seed = cfg.seed;
        sim.mode = regime;
        sim.params = p;
        const auto r = stochastic::scienter_prob_mc(sim);
        lam[i] = p.lambda;
        mc[i] = r.estimate;
        se[i] = r.std_error;
        closed[i] = stochastic::scienter_prob_closed(regime, p);
    }

    if (cfg.format == "svg") {
        Series sim_series{"prob_mc", lam, mc};
        Series closed_series{"prob_closed", lam, closed};
        return render_line_chart("scienter probability (" + cfg.regime + ")",
                                 "lambda", "probability",
                                 {sim_series, closed_series});
    }
    Table t;
    t.comments = {"disclose scienter",
                  "sigma = " + format_sig(cfg.params.sigma),
                  "kappa = " + format_sig(cfg.params.kappa),
                  "beta = " + format_sig(cfg.params.beta),
                  "regime = " + cfg.regime,
                  "lambda_start = " + format_sig(start),
                  "lambda_step = " + format_sig(step),
                  "samples = " + std::to_string(cfg.samples),
                  "seed = " + std::to_string(cfg.seed)};
    t.header = {"lambda", "prob_mc", "stderr", "prob_closed"};
    for (int i = 0; i < points; ++i)
        t.rows.push_back({format_sig(lam[i]), format_sig(mc[i]),
                          format_sig(se[i]), format_sig(closed[i])});
    return render_csv(t);
}

std::string render_mills(const RunConfig& cfg) {
    // lambda = i/8 for i = 1..100: same density as the sparing scienter grid,
    // wide enough to show the ratio crossing 1 at lambda = sigma^2/(2 g(1))
    std::vector<double> lam(100), ratio(100);
    for (int i = 1; i <= 100; ++i) {
        equilibrium::ModelParams p = cfg.params;
        p.lambda = i / 8.0;
        lam[i - 1] = p.lambda;
        ratio[i - 1] = stochastic::mills_ratio_BC(p);
    }
    if (cfg.format == "svg") {
        Series s{"ratio", lam, ratio};
        return render_line_chart("terminal below:above population ratio",
                                 "lambda", "ratio", {s});
    }
    Table t;
    t.comments = {"disclose mills", "sigma = " + format_sig(cfg.params.sigma),
                  "lambda = i/8, i = 1..100"};
    t.header = {"lambda", "ratio"};
    for (int i = 0; i < 100; ++i)
        t.rows.push_back({format_sig(lam[i]), format_sig(ratio[i])});
    return render_csv(t);
}

int dispatch(const std::string& command, const RunConfig& cfg) {
    try {
        if (command == "selftest")
            return run_acceptance(std::cout) == 0 ? 0 : 1;

        std::string artifact;
        if (command == "curve") artifact = render_curve(cfg);
        else if (command == "switch") artifact = render_switch(cfg);
        else if (command == "zone") artifact = render_zone(cfg);
        else if (command == "scienter") artifact = render_scienter(cfg);
        else if (command == "mills") artifact = render_mills(cfg);
        else throw std::runtime_error("unknown command: " + command);

        if (cfg.out_path.empty()) {
            std::cout << artifact;
            return 0;
        }
        std::ofstream out(cfg.out_path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open output file: " + cfg.out_path);
        out.write(artifact.data(),
                  static_cast<std::streamsize>(artifact.size()));
        out.flush();
        if (!out) {
            out.close();
            std::remove(cfg.out_path.c_str());
            throw std::runtime_error("failed writing output file: " +
                                     cfg.out_path);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace disclose::cli
