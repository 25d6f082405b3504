#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <entconc/entconc.hpp>

namespace {

using namespace entconc;

struct StateSource {
    std::vector<double> family;
    std::vector<double> pure;
    std::string bell;
    std::string file;
};

void add_state_options(CLI::App* cmd, StateSource& src) {
    cmd->add_option("--family", src.family,
                    "eps1,eps2,phi,gamma mixed-family parameters")
        ->delimiter(',');
    cmd->add_option("--pure", src.pure, "eps1,eps2,phi pure-state parameters")->delimiter(',');
    cmd->add_option("--bell", src.bell, "Bell state: phi+ phi- psi+ psi-");
    cmd->add_option("--file", src.file, "JSON state file");
}

DensityMatrix resolve_state(const StateSource& src) {
    const int sources = int(!src.family.empty()) + int(!src.pure.empty()) +
                        int(!src.bell.empty()) + int(!src.file.empty());
    if (sources != 1)
        throw ValidationError("provide exactly one of --family, --pure, --bell, --file");
    if (!src.family.empty()) {
        if (src.family.size() != 4) throw ValidationError("--family needs eps1,eps2,phi,gamma");
        StateFamilyParams p;
        p.eps1 = src.family[0];
        p.eps2 = src.family[1];
        p.phi = src.family[2];
        p.gamma = src.family[3];
        return mixed_family(p);
    }
    if (!src.pure.empty()) {
        if (src.pure.size() != 3) throw ValidationError("--pure needs eps1,eps2,phi");
        StateFamilyParams p;
        p.eps1 = src.pure[0];
        p.eps2 = src.pure[1];
        p.phi = src.pure[2];
        return pure_vv_hh(p);
    }
    if (!src.bell.empty()) {
        if (src.bell == "phi+") return bell_state(Bell::phi_plus);
        if (src.bell == "phi-") return bell_state(Bell::phi_minus);
        if (src.bell == "psi+") return bell_state(Bell::psi_plus);
        if (src.bell == "psi-") return bell_state(Bell::psi_minus);
        throw ValidationError("unknown Bell label '" + src.bell + "'");
    }
    std::ifstream in(src.file);
    if (!in) throw ValidationError("cannot read state file " + src.file);
    nlohmann::json j;
    in >> j;
    return state_from_json(j);
}

struct Sink {
    std::string path;
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw ValidationError("cannot write " + path);
        out << text;
    }
};

std::string fmt_matrix(const ComplexMatrix& m) {
    std::ostringstream os;
    char buf[64];
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) {
            const Complex v = m(r, c);
            if (std::abs(v.imag()) >= 5e-4)
                std::snprintf(buf, sizeof buf, "%7.3f%+.3fi", v.real(), v.imag());
            else
                std::snprintf(buf, sizeof buf, "%7.3f", v.real());
            os << buf << (c + 1 == m.dim() ? "" : " ");
        }
        os << '\n';
    }
    return os.str();
}

std::string fmt_metrics(const EntanglementMetrics& m) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "concurrence %.6f\neof         %.6f\nentropy     %.6f\npurity      %.6f\n",
                  m.concurrence, m.eof, m.entropy, m.purity);
    return buf;
}

nlohmann::json metrics_json(const EntanglementMetrics& m) {
    return {{"concurrence", m.concurrence},
            {"eof", m.eof},
            {"entropy", m.entropy},
            {"purity", m.purity}};
}

nlohmann::json settings_json(const BeamSplitterSettings& s) {
    return {{"eta_va", s.eta_va}, {"eta_ha", s.eta_ha}, {"eta_vb", s.eta_vb},
            {"eta_hb", s.eta_hb}};
}

BeamSplitterSettings settings_from(const std::vector<double>& eta) {
    if (eta.size() != 4) throw ValidationError("--eta needs va,ha,vb,hb");
    BeamSplitterSettings s{eta[0], eta[1], eta[2], eta[3]};
    s.validate();
    return s;
}

int run_analyze(const StateSource& src, const std::string& format, const Sink& sink) {
    DensityMatrix rho = resolve_state(src);
    EntanglementMetrics m = metrics(rho);
    ValidationReport rep = validate(rho.matrix());
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json j{{"metrics", metrics_json(m)},
                         {"validation",
                          {{"hermiticity_deviation", rep.hermiticity_deviation},
                           {"trace_deviation", rep.trace_deviation},
                           {"min_eigenvalue", rep.min_eigenvalue},
                           {"ok", rep.ok()}}}};
        os << j.dump(2) << '\n';
    } else if (format == "csv") {
        char buf[256];
        os << "concurrence,eof,entropy,purity\n";
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", m.concurrence, m.eof,
                      m.entropy, m.purity);
        os << buf;
    } else {
        os << "state:\n" << fmt_matrix(rho.matrix()) << fmt_metrics(m);
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "validation  %s (hermiticity %.2e, trace %.2e, min eigenvalue %.2e)\n",
                      rep.ok() ? "ok" : "FAILED", rep.hermiticity_deviation, rep.trace_deviation,
                      rep.min_eigenvalue);
        os << buf;
    }
    sink.write(os.str());
    return 0;
}

int run_transform(const StateSource& src, const std::vector<double>& eta,
                  const std::string& format, const Sink& sink) {
    BeamSplitterSettings s = settings_from(eta);
    ProtocolOutcome out = bs_transform(resolve_state(src), s);
    EntanglementMetrics m = metrics(out.state);
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json j{{"state", state_to_json(out.state)},
                         {"success_probability", out.success_probability},
                         {"metrics", metrics_json(m)}};
        os << j.dump(2) << '\n';
    } else if (format == "csv") {
        char buf[320];
        os << "success_probability,concurrence,eof,entropy,purity\n";
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      out.success_probability, m.concurrence, m.eof, m.entropy, m.purity);
        os << buf;
    } else {
        char buf[128];
        os << "output state:\n" << fmt_matrix(out.state.matrix());
        std::snprintf(buf, sizeof buf, "success probability %.6f\n", out.success_probability);
        os << buf << fmt_metrics(m);
    }
    sink.write(os.str());
    return 0;
}

int run_sweep(const StateSource& src, int n, const std::string& format, const Sink& sink) {
    SweepCurve curve = sweep_state(resolve_state(src), n);
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json pts = nlohmann::json::array();
        for (const SweepPoint& p : curve.points)
            pts.push_back({{"eta_v", p.eta_v},
                           {"entropy", p.entropy},
                           {"eof", p.eof},
                           {"probability", p.probability}});
        os << nlohmann::json{{"points", pts}, {"skipped", curve.skipped}}.dump(2) << '\n';
    } else if (format == "human") {
        SweepPoint tp = turning_point(curve);
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "%zu points (%d skipped)\nbest eof %.6f at eta_v %.6f "
                      "(entropy %.6f, probability %.6f)\n",
                      curve.points.size(), curve.skipped, tp.eof, tp.eta_v, tp.entropy,
                      tp.probability);
        os << buf;
    } else {
        write_csv(os, curve);
    }
    sink.write(os.str());
    return 0;
}

int run_optimize(const StateSource& src, const std::string& mode_name, int n,
                 const std::string& format, const Sink& sink) {
    OptimizeMode mode;
    if (mode_name == "one_knob")
        mode = OptimizeMode::one_knob;
    else if (mode_name == "all_four")
        mode = OptimizeMode::all_four;
    else
        throw ValidationError("--mode must be one_knob or all_four");
    DensityMatrix rho = resolve_state(src);
    EntanglementMetrics init = metrics(rho);
    SweepPoint best = optimize_eof(rho, mode, n);
    Classification cls = classify(init, best.eof, best.entropy);
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json j{{"initial", metrics_json(init)},
                         {"best",
                          {{"eta_v", best.eta_v},
                           {"settings", settings_json(best.settings)},
                           {"entropy", best.entropy},
                           {"eof", best.eof},
                           {"probability", best.probability}}},
                         {"classification", to_string(cls)},
                         {"mode", mode_name}};
        os << j.dump(2) << '\n';
    } else if (format == "csv") {
        char buf[400];
        os << "eta_va,eta_ha,eta_vb,eta_hb,entropy,eof,probability,classification\n";
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s\n",
                      best.settings.eta_va, best.settings.eta_ha, best.settings.eta_vb,
                      best.settings.eta_hb, best.entropy, best.eof, best.probability,
                      to_string(cls));
        os << buf;
    } else {
        char buf[512];
        std::snprintf(buf, sizeof buf,
                      "settings    eta_va %.6f  eta_ha %.6f  eta_vb %.6f  eta_hb %.6f\n"
                      "eof         %.6f -> %.6f\n"
                      "entropy     %.6f -> %.6f\n"
                      "probability %.6f\n"
                      "classification %s\n",
                      best.settings.eta_va, best.settings.eta_ha, best.settings.eta_vb,
                      best.settings.eta_hb, init.eof, best.eof, init.entropy, best.entropy,
                      best.probability, to_string(cls));
        os << buf;
    }
    sink.write(os.str());
    return 0;
}

int run_reproduce(const std::string& format, const Sink& sink) {
    StateFamilyParams p;
    p.eps1 = 1.0;
    p.eps2 = 0.1;
    p.phi = 0.0;
    p.gamma = 0.30;
    DensityMatrix input = mixed_family(p);
    const double r = std::sqrt(0.1);
    BeamSplitterSettings s{r, 1.0, r, 1.0};
    ProtocolOutcome out = bs_transform(input, s);
    EntanglementMetrics mi = metrics(input);
    EntanglementMetrics mo = metrics(out.state);

    struct Leg {
        const char* name;
        double got, want, tol;
    };
    const Leg legs[] = {
        {"input VV population", input(0, 0).real(), 0.297, 5e-4},
        {"input corner coherence", input(0, 3).real(), 0.030, 5e-4},
        {"input VH population", input(1, 1).real(), 0.350, 5e-4},
        {"input HH population", input(3, 3).real(), 0.003, 5e-4},
        {"output VV population", out.state(0, 0).real(), 0.039, 5e-4},
        {"output VH population", out.state(1, 1).real(), 0.461, 5e-4},
        {"input eof", mi.eof, 0.52, 0.01},
        {"output eof", mo.eof, 0.78, 0.01},
        {"input entropy", mi.entropy, 0.30, 0.01},
        {"output entropy", mo.entropy, 0.20, 0.01},
        {"success probability", out.success_probability, 0.076, 0.002},
    };

    bool all_ok = true;
    std::ostringstream os;
    nlohmann::json jlegs = nlohmann::json::array();
    for (const Leg& leg : legs) {
        const bool ok = std::abs(leg.got - leg.want) <= leg.tol;
        all_ok = all_ok && ok;
        if (format == "json") {
            jlegs.push_back({{"name", leg.name},
                             {"measured", leg.got},
                             {"expected", leg.want},
                             {"tolerance", leg.tol},
                             {"ok", ok}});
        } else {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%-24s %11.6f  expected %6.3f +/- %g  [%s]\n",
                          leg.name, leg.got, leg.want, leg.tol, ok ? "ok" : "MISMATCH");
            os << buf;
        }
    }
    if (format == "json") {
        nlohmann::json j{{"input", state_to_json(input)},
                         {"input_metrics", metrics_json(mi)},
                         {"output", state_to_json(out.state)},
                         {"output_metrics", metrics_json(mo)},
                         {"success_probability", out.success_probability},
                         {"checks", jlegs},
                         {"ok", all_ok}};
        sink.write(j.dump(2) + "\n");
    } else {
        std::ostringstream full;
        char buf[128];
        full << "input state:\n" << fmt_matrix(input.matrix()) << fmt_metrics(mi);
        std::snprintf(buf, sizeof buf, "applied settings: eta_va = eta_vb = %.6f, eta_ha = eta_hb = 1\n", r);
        full << buf << "output state:\n" << fmt_matrix(out.state.matrix()) << fmt_metrics(mo);
        std::snprintf(buf, sizeof buf, "success probability %.6f\n\n", out.success_probability);
        full << buf << os.str();
        full << (all_ok ? "all checks passed\n" : "golden mismatch\n");
        sink.write(full.str());
    }
    return all_ok ? 0 : 3;
}

int run_werner_demo(std::vector<double> pure, int n, const std::string& format,
                    const Sink& sink) {
    if (pure.empty()) pure = {1.0, 0.5, 0.0};
    if (pure.size() != 3) throw ValidationError("--pure needs eps1,eps2,phi");
    StateFamilyParams p;
    p.eps1 = pure[0];
    p.eps2 = pure[1];
    p.phi = pure[2];
    DensityMatrix ingredient = pure_vv_hh(p);
    DensityMatrix bell = bell_state(Bell::phi_plus);

    struct Row {
        double fraction, initial_eof, best_eof, initial_entropy, best_entropy, bound;
    };
    std::vector<Row> rows;
    for (int k = 1; k <= 10; ++k) {
        const double f = k / 10.0;
        DensityMatrix w = werner(f, ingredient);
        EntanglementMetrics init = metrics(w);
        SweepPoint best = optimize_eof(w, OptimizeMode::one_knob, n);
        const double bound = eof(werner(f, bell));
        rows.push_back({f, init.eof, best.eof, init.entropy, best.entropy, bound});
    }

    std::ostringstream os;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const Row& row : rows)
            arr.push_back({{"fraction", row.fraction},
                           {"initial_eof", row.initial_eof},
                           {"best_eof", row.best_eof},
                           {"initial_entropy", row.initial_entropy},
                           {"best_entropy", row.best_entropy},
                           {"bell_ingredient_eof", row.bound},
                           {"bounded", row.best_eof <= row.bound + 1e-9}});
        os << arr.dump(2) << '\n';
    } else if (format == "csv") {
        os << "fraction,initial_eof,best_eof,initial_entropy,best_entropy,"
              "bell_ingredient_eof\n";
        char buf[400];
        for (const Row& row : rows) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                          row.fraction, row.initial_eof, row.best_eof, row.initial_entropy,
                          row.best_entropy, row.bound);
            os << buf;
        }
    } else {
        os << "fraction  eof      best eof  entropy  best S   bell-ingredient bound\n";
        char buf[160];
        for (const Row& row : rows) {
            std::snprintf(buf, sizeof buf, "%8.1f  %.5f  %.6f  %.5f  %.5f  %.6f %s\n",
                          row.fraction, row.initial_eof, row.best_eof, row.initial_entropy,
                          row.best_entropy, row.bound,
                          row.best_eof <= row.bound + 1e-9 ? "(bounded)" : "(EXCEEDED)");
            os << buf;
        }
    }
    sink.write(os.str());
    return 0;
}

}

int main(int argc, char** argv) {
    CLI::App app{"beam-splitter entanglement concentration toolkit"};
    app.require_subcommand(1);

    StateSource analyze_src, transform_src, sweep_src, optimize_src;
    std::vector<double> transform_eta, werner_pure;
    std::string analyze_fmt = "human", transform_fmt = "human", sweep_fmt = "csv",
                optimize_fmt = "human", reproduce_fmt = "human", werner_fmt = "human";
    std::string analyze_out, transform_out, sweep_out, optimize_out, reproduce_out, werner_out;
    std::string optimize_mode = "one_knob";
    int sweep_n = 512, optimize_n = 512, werner_n = 512;

    auto add_format = [](CLI::App* cmd, std::string& fmt, std::string& out) {
        cmd->add_option("--format", fmt, "json, csv or human")
            ->check(CLI::IsMember({"json", "csv", "human"}));
        cmd->add_option("--out", out, "write to file instead of stdout");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "entanglement and purity measures");
    add_state_options(analyze, analyze_src);
    add_format(analyze, analyze_fmt, analyze_out);

    CLI::App* transform = app.add_subcommand("transform", "apply beam-splitter settings");
    add_state_options(transform, transform_src);
    transform->add_option("--eta", transform_eta, "va,ha,vb,hb transmission coefficients")
        ->delimiter(',')
        ->required();
    add_format(transform, transform_fmt, transform_out);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "trace the one-knob filtering curve");
    add_state_options(sweep_cmd, sweep_src);
    sweep_cmd->add_option("-n", sweep_n, "grid points");
    add_format(sweep_cmd, sweep_fmt, sweep_out);

    CLI::App* optimize = app.add_subcommand("optimize", "maximize entanglement of formation");
    add_state_options(optimize, optimize_src);
    optimize->add_option("--mode", optimize_mode, "one_knob or all_four");
    optimize->add_option("-n", optimize_n, "grid points");
    add_format(optimize, optimize_fmt, optimize_out);

    CLI::App* reproduce =
        app.add_subcommand("reproduce", "run the worked concentration example with golden checks");
    add_format(reproduce, reproduce_fmt, reproduce_out);

    CLI::App* werner_demo =
        app.add_subcommand("werner-demo", "Werner-state filtering against the pure-state bound");
    werner_demo->add_option("--pure", werner_pure, "eps1,eps2,phi ingredient state")
        ->delimiter(',');
    werner_demo->add_option("-n", werner_n, "grid points");
    add_format(werner_demo, werner_fmt, werner_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze) return run_analyze(analyze_src, analyze_fmt, {analyze_out});
        if (*transform)
            return run_transform(transform_src, transform_eta, transform_fmt, {transform_out});
        if (*sweep_cmd) return run_sweep(sweep_src, sweep_n, sweep_fmt, {sweep_out});
        if (*optimize)
            return run_optimize(optimize_src, optimize_mode, optimize_n, optimize_fmt,
                                {optimize_out});
        if (*reproduce) return run_reproduce(reproduce_fmt, {reproduce_out});
        if (*werner_demo) return run_werner_demo(werner_pure, werner_n, werner_fmt, {werner_out});
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
