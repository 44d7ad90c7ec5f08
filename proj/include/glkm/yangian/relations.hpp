#pragma once

#include "glkm/report/check_report.hpp"
#include "glkm/yangian/generators.hpp"

namespace glkm {

// Defining relations of gl_{k,m} (commutators with h, the deformed exchange
// relation, nilpotency) and the iteration rule [L_{x,y}, L_{y,z}] = -h_y L_{x,z}.
CheckReport verify_gl_relations(const GeneratorSet& g);
// Chevalley-Serre type relations including cubic and quartic ones.
CheckReport verify_serre(const GeneratorSet& g);
// Relations of the hatted generators; requires h_x^2 = 1.
CheckReport verify_hatted(const GeneratorSet& g);
// [r-check_j, g] = 0 and [H, g] = 0 for every generator, with r-check built at braid_alpha.
CheckReport verify_centralizer(const GeneratorSet& g, long braid_alpha = 1);

}  // namespace glkm
