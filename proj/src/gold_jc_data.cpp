#include "plasmon/materials.hpp"

namespace plasmon {

// Gold (Au) permittivity samples derived from Johnson & Christy,
// Phys. Rev. B 6, 4370 (1972): eps = (n + i k)^2 of the published n, k.
const TabulatedPermittivity& johnson_christy_gold() {
    static const TabulatedPermittivity table = [] {
        TabulatedPermittivity t;
        t.source_label = "Johnson-Christy-1972-Au";
        const double nk[][3] = {
            {0.64, -189.042000, 25.355200},
            {0.77, -125.350500, 12.555200},
            {0.89, -90.426461, 8.186340},
            {1.02, -66.218525, 5.701500},
            {1.14, -51.049600, 3.861000},
            {1.26, -40.274100, 2.794000},
            {1.39, -32.040669, 1.925420},
            {1.51, -25.811289, 1.626560},
            {1.64, -20.610164, 1.271760},
            {1.76, -16.817709, 1.066780},
            {1.88, -13.648209, 1.035160},
            {2.01, -10.661884, 1.374240},
            {2.13, -8.112669, 1.660540},
            {2.26, -5.842125, 2.111300},
            {2.38, -3.946161, 2.580440},
            {2.50, -2.278289, 3.812640},
            {2.63, -1.702701, 4.844380},
            {2.75, -1.758996, 5.282640},
            {2.88, -1.692204, 5.649200},
            {3.00, -1.702164, 5.717360},
            {3.12, -1.649404, 5.738880},
            {3.25, -1.604889, 5.644360},
            {3.37, -1.400625, 5.609200},
            {3.50, -1.231956, 5.598000},
            {3.62, -1.310241, 5.538160},
            {3.74, -1.355289, 5.573680},
            {3.87, -1.230804, 5.845840},
            {3.99, -1.242549, 5.792580},
            {4.12, -1.227421, 5.780340},
            {4.24, -1.306784, 5.596440},
            {4.36, -1.332261, 5.494860},
            {4.49, -1.366509, 5.282420},
            {4.61, -1.346409, 4.976280},
            {4.74, -1.236501, 4.722300},
            {4.86, -1.080444, 4.490080},
            {4.98, -0.891261, 4.338460},
            {5.11, -0.744529, 4.163280},
            {5.23, -0.616896, 4.055040},
            {5.36, -0.551009, 3.892200},
            {5.48, -0.415500, 3.825200},
            {5.60, -0.346329, 3.710200},
            {5.73, -0.233769, 3.606200},
            {5.85, -0.132500, 3.510000},
            {5.98, -0.087516, 3.312160},
            {6.10, -0.093129, 3.166960},
            {6.22, -0.100901, 3.027420},
            {6.35, -0.086976, 2.917880},
            {6.47, -0.054809, 2.839080},
            {6.60, -0.088844, 2.732400},
        };
        for (const auto& row : nk) {
            t.energies_eV.push_back(row[0]);
            t.eps.emplace_back(row[1], row[2]);
        }
        return t;
    }();
    return table;
}

} // namespace plasmon
