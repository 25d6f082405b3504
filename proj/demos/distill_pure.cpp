// Balances a lopsided pure state with each transmission-coefficient solver and
// prints the before/after states, the chosen settings, and the success odds.
#include <cstdio>

#include <entconc/entconc.hpp>

using namespace entconc;

namespace {

void print_state(const char* label, const DensityMatrix& rho) {
    std::printf("%s\n", label);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const Complex v = rho(r, c);
            if (std::abs(v.imag()) >= 5e-4)
                std::printf("%8.4f%+.4fi", v.real(), v.imag());
            else
                std::printf("%8.4f", v.real());
        }
        std::printf("\n");
    }
}

void run(const char* label, const DensityMatrix& input, const BeamSplitterSettings& s) {
    std::printf("=== %s ===\n", label);
    print_state("input:", input);
    std::printf("settings: eta_va %.6f  eta_ha %.6f  eta_vb %.6f  eta_hb %.6f\n", s.eta_va,
                s.eta_ha, s.eta_vb, s.eta_hb);
    ProtocolOutcome out = bs_transform(input, s);
    print_state("output:", out.state);
    std::printf("success probability %.6f\n", out.success_probability);
    std::printf("concurrence %.12f -> %.12f\n\n", concurrence(input), concurrence(out.state));
}

}

int main() {
    StateFamilyParams p;
    p.eps1 = 1.0;
    p.eps2 = 0.35;
    p.phi = 0.6;

    run("diagonal family (VV/HH support)", pure_vv_hh(p),
        distill_settings_vv_hh(p.eps1, p.eps2));
    run("anti-diagonal family (VH/HV support)", pure_vh_hv(p),
        distill_settings_vh_hv(p.eps1, p.eps2));
    return 0;
}
