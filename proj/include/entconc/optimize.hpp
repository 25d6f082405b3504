#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "measures.hpp"
#include "protocol.hpp"

namespace entconc {

struct SweepPoint {
    double eta_v = 1.0;
    BeamSplitterSettings settings;
    double entropy = 0.0;
    double eof = 0.0;
    double probability = 0.0;
};

struct SweepCurve {
    std::vector<SweepPoint> points;
    int skipped = 0;
};

enum class OptimizeMode { one_knob, all_four };

enum class Classification { concentration, distillation, purification, degradation, none };

inline const char* to_string(Classification c) {
    switch (c) {
        case Classification::concentration: return "concentration";
        case Classification::distillation: return "distillation";
        case Classification::purification: return "purification";
        case Classification::degradation: return "degradation";
        case Classification::none: return "none";
    }
    return "none";
}

// The single-parameter filter: attenuate V in both arms by the same amount,
// pass H untouched.
inline BeamSplitterSettings one_knob_settings(double eta_v) {
    return {eta_v, 1.0, eta_v, 1.0};
}

inline SweepPoint evaluate_point(const DensityMatrix& rho, const BeamSplitterSettings& s) {
    ProtocolOutcome out = bs_transform(rho, s);
    SweepPoint p;
    p.eta_v = s.eta_va;
    p.settings = s;
    p.entropy = entropy_log4(out.state);
    p.eof = eof(out.state);
    p.probability = out.success_probability;
    return p;
}

// Evaluate the one-knob filter on the grid eta_v = k/n, k = 1..n. Grid points
// whose post-selection probability vanishes are counted, not emitted.
inline SweepCurve sweep_state(const DensityMatrix& rho, int n) {
    if (n < 2) throw ValidationError("sweep needs at least 2 grid points");
    SweepCurve curve;
    curve.points.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        try {
            curve.points.push_back(evaluate_point(rho, one_knob_settings(double(k) / n)));
        } catch (const DegeneratePostSelection&) {
            ++curve.skipped;
        }
    }
    return curve;
}

inline SweepCurve sweep(const StateFamilyParams& p, int n) {
    return sweep_state(mixed_family(p), n);
}

// Point of maximum entanglement of formation along a sweep. Ties within
// tolerance fall to the lower-entropy point, then to the larger eta_v (which
// carries the higher success probability on these curves).
inline SweepPoint turning_point(const SweepCurve& curve) {
    if (curve.points.size() < 3)
        throw ValidationError("turning point needs at least 3 sweep points");
    const SweepPoint* best = &curve.points.front();
    for (const SweepPoint& p : curve.points) {
        if (p.eof > best->eof + tol::improvement) {
            best = &p;
        } else if (p.eof >= best->eof - tol::improvement) {
            if (p.entropy < best->entropy - tol::improvement)
                best = &p;
            else if (p.entropy <= best->entropy + tol::improvement && p.eta_v > best->eta_v)
                best = &p;
        }
    }
    return *best;
}

namespace detail {

inline double golden_max(const std::function<double(double)>& f, double a, double b,
                         double width) {
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > width) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

// EOF after filtering; degenerate settings rank below every attainable value.
inline double eof_objective(const DensityMatrix& rho, const BeamSplitterSettings& s) {
    try {
        return eof(bs_transform(rho, s).state);
    } catch (const DegeneratePostSelection&) {
        return -1.0;
    }
}

inline constexpr std::array<double BeamSplitterSettings::*, 4> knobs{
    &BeamSplitterSettings::eta_va, &BeamSplitterSettings::eta_ha,
    &BeamSplitterSettings::eta_vb, &BeamSplitterSettings::eta_hb};

}

// Settings maximizing the output entanglement of formation. one_knob scans
// the symmetric V-filter on a k/n grid and refines the best cell by golden
// section; all_four runs cyclic coordinate descent over the four
// coefficients with the same scan-then-refine step per coordinate. Returns
// the identity settings when nothing beats them meaningfully.
inline SweepPoint optimize_eof(const DensityMatrix& rho,
                               OptimizeMode mode = OptimizeMode::one_knob, int n = 512) {
    if (n < 2) throw ValidationError("optimization grid needs at least 2 points");
    const SweepPoint ident = evaluate_point(rho, BeamSplitterSettings::identity());
    SweepPoint best = ident;

    if (mode == OptimizeMode::one_knob) {
        int best_k = n;
        double best_f = -1.0;
        for (int k = 1; k <= n; ++k) {
            const double f = detail::eof_objective(rho, one_knob_settings(double(k) / n));
            if (f > best_f) {
                best_f = f;
                best_k = k;
            }
        }
        const double lo = double(std::max(1, best_k - 1)) / n;
        const double hi = double(std::min(n, best_k + 1)) / n;
        const double eta = detail::golden_max(
            [&](double x) { return detail::eof_objective(rho, one_knob_settings(x)); }, lo, hi,
            tol::golden_width);
        if (detail::eof_objective(rho, one_knob_settings(eta)) >= best_f)
            best = evaluate_point(rho, one_knob_settings(eta));
        else if (best_f > -1.0)
            best = evaluate_point(rho, one_knob_settings(double(best_k) / n));
    } else {
        BeamSplitterSettings s = BeamSplitterSettings::identity();
        double current = ident.eof;
        const int coarse = 64;
        for (int cycle = 0; cycle < 200; ++cycle) {
            const double cycle_start = current;
            for (auto knob : detail::knobs) {
                auto with = [&](double v) {
                    BeamSplitterSettings t = s;
                    t.*knob = v;
                    return t;
                };
                int scan_best = -1;
                double scan_f = current;
                for (int k = 1; k <= coarse; ++k) {
                    const double f = detail::eof_objective(rho, with(double(k) / coarse));
                    if (f > scan_f) {
                        scan_f = f;
                        scan_best = k;
                    }
                }
                if (scan_best < 0) continue;
                const double lo = double(std::max(1, scan_best - 1)) / coarse;
                const double hi = double(std::min(coarse, scan_best + 1)) / coarse;
                const double v = detail::golden_max(
                    [&](double x) { return detail::eof_objective(rho, with(x)); }, lo, hi,
                    tol::golden_width);
                const double fv = detail::eof_objective(rho, with(v));
                if (fv >= scan_f) {
                    s.*knob = v;
                    current = fv;
                } else {
                    s.*knob = double(scan_best) / coarse;
                    current = scan_f;
                }
            }
            if (current - cycle_start < tol::descent_stop) break;
        }
        if (current > -1.0) best = evaluate_point(rho, s);
    }

    if (best.eof <= ident.eof + tol::improvement) return ident;
    return best;
}

struct ConcentrationReport {
    EntanglementMetrics initial;
    SweepPoint best;
    Classification classification = Classification::none;
    bool achievable = false;
};

// What a given filtered point does relative to the input, judged on the
// entanglement of formation and the mixedness together.
inline Classification classify(const EntanglementMetrics& initial, double eof_final,
                               double entropy_final) {
    const double de = eof_final - initial.eof;
    const double ds = entropy_final - initial.entropy;
    const double t = tol::improvement;
    if (de > t && ds < -t) return Classification::concentration;
    if (de > t) return Classification::distillation;
    if (ds < -t) return Classification::purification;
    if (de < -t && ds > t) return Classification::degradation;
    return Classification::none;
}

// Search for settings that raise the entanglement of formation while lowering
// the entropy. When such settings exist the best of them (by EOF) is
// reported; otherwise the report carries the unrestricted EOF optimum and
// its classification, with achievable = false.
inline ConcentrationReport find_concentration(const DensityMatrix& rho,
                                              OptimizeMode mode = OptimizeMode::one_knob,
                                              int n = 512) {
    ConcentrationReport rep;
    rep.initial = metrics(rho);
    const double e0 = rep.initial.eof;
    const double s0 = rep.initial.entropy;
    auto feasible = [&](const SweepPoint& p) {
        return p.eof > e0 + tol::improvement && p.entropy < s0 - tol::improvement;
    };

    std::optional<SweepPoint> pick;
    if (mode == OptimizeMode::all_four) {
        SweepPoint cand = optimize_eof(rho, OptimizeMode::all_four, n);
        if (feasible(cand)) pick = cand;
    }
    if (!pick) {
        std::optional<SweepPoint> best_grid;
        int best_k = -1;
        for (int k = 1; k <= n; ++k) {
            try {
                SweepPoint p = evaluate_point(rho, one_knob_settings(double(k) / n));
                if (feasible(p) && (!best_grid || p.eof > best_grid->eof)) {
                    best_grid = p;
                    best_k = k;
                }
            } catch (const DegeneratePostSelection&) {
            }
        }
        if (best_grid) {
            const double lo = double(std::max(1, best_k - 1)) / n;
            const double hi = double(std::min(n, best_k + 1)) / n;
            const double eta = detail::golden_max(
                [&](double x) { return detail::eof_objective(rho, one_knob_settings(x)); }, lo,
                hi, tol::golden_width);
            try {
                SweepPoint refined = evaluate_point(rho, one_knob_settings(eta));
                if (feasible(refined) && refined.eof >= best_grid->eof) pick = refined;
            } catch (const DegeneratePostSelection&) {
            }
            if (!pick) pick = best_grid;
        }
    }

    if (pick) {
        rep.best = *pick;
        rep.achievable = true;
        rep.classification = Classification::concentration;
        return rep;
    }
    rep.best = optimize_eof(rho, mode, n);
    rep.achievable = false;
    rep.classification = classify(rep.initial, rep.best.eof, rep.best.entropy);
    return rep;
}

inline void write_csv(std::ostream& os, const SweepCurve& curve) {
    os << "eta_v,entropy,eof,probability\n";
    char buf[160];
    for (const SweepPoint& p : curve.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", p.eta_v, p.entropy, p.eof,
                      p.probability);
        os << buf;
    }
}

}
