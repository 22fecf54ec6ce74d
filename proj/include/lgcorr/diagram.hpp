#ifndef LGCORR_DIAGRAM_HPP
#define LGCORR_DIAGRAM_HPP

#include "lgcorr/weight_system.hpp"

#include <string>
#include <vector>

namespace lgcorr {

// Per-coset ray/dot diagram.  Rays sit at rational angles nu in [0,1)
// (units of full turns); dots at integer radii along them.
struct DiagramDot {
    Rat angle;
    int radius = 0;
    bool non_gorenstein = false; // the extra dot at radius N+1 on a red ray
    bool extremal = false;
};

struct DiagramRay {
    Rat angle;
    bool in_mu_d = false;
    bool non_gorenstein = false; // ray present only through the Lambda_g set
    int dot_count = 0;
};

struct Diagram {
    GroupElement coset;
    long degree = 0;
    int nvars = 0;
    std::vector<DiagramRay> rays; // sorted by angle
    std::vector<DiagramDot> dots; // sorted by (angle, radius)

    long dot_total() const { return static_cast<long>(dots.size()); }
    long ray_total() const { return static_cast<long>(rays.size()); }
    long internal_dots() const;
    long extremal_dots() const;
    long empty_rays() const;
    long nonempty_rays() const;
};

Diagram build_diagram(const WeightSystem& ws, const GroupElement& coset_rep);

enum class RenderFormat { Text, Svg };

std::string render(const Diagram& d, RenderFormat format);

} // namespace lgcorr

#endif
