// Regenerates the five filtering curves (entropy, eof, probability against
// eta_v) for mixing fractions 0.1..0.9 and reports each curve's best point.
// CSVs land in the directory given as argv[1], or the working directory.
#include <cstdio>
#include <fstream>
#include <string>

#include <entconc/entconc.hpp>

using namespace entconc;

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : ".";
    const double gammas[] = {0.1, 0.3, 0.5, 0.7, 0.9};

    for (double gamma : gammas) {
        StateFamilyParams p;
        p.eps1 = 1.0;
        p.eps2 = 0.1;
        p.gamma = gamma;
        SweepCurve curve = sweep(p, 512);

        char name[64];
        std::snprintf(name, sizeof name, "curve_gamma_%.1f.csv", gamma);
        const std::string path = dir + "/" + name;
        std::ofstream out(path);
        if (!out) {
            std::fprintf(stderr, "cannot write %s\n", path.c_str());
            return 1;
        }
        write_csv(out, curve);

        SweepPoint best = turning_point(curve);
        std::printf("gamma %.1f: best eof %.6f at eta_v %.6f (entropy %.6f, "
                    "probability %.6f) -> %s\n",
                    gamma, best.eof, best.eta_v, best.entropy, best.probability, path.c_str());
    }
    return 0;
}
