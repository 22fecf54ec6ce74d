#include "lgcorr/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace lgcorr {

long Diagram::internal_dots() const
{
    return static_cast<long>(std::count_if(dots.begin(), dots.end(),
                                           [](const DiagramDot& d) { return !d.extremal; }));
}

long Diagram::extremal_dots() const
{
    return dot_total() - internal_dots();
}

long Diagram::empty_rays() const
{
    return static_cast<long>(std::count_if(rays.begin(), rays.end(),
                                           [](const DiagramRay& r) { return r.dot_count == 0; }));
}

long Diagram::nonempty_rays() const
{
    return ray_total() - empty_rays();
}

Diagram build_diagram(const WeightSystem& ws, const GroupElement& coset_rep)
{
    Diagram dg;
    dg.coset = coset_rep;
    dg.degree = ws.degree;
    dg.nvars = ws.nvars();

    std::set<Rat> mu_d;
    for (long k = 0; k < ws.degree; ++k) mu_d.insert(Rat(k, ws.degree));
    std::vector<Rat> lambda = sector_phases(ws, coset_rep);
    std::set<Rat> all(mu_d);
    all.insert(lambda.begin(), lambda.end());

    std::map<Rat, int> counts;
    for (const Rat& nu : all) {
        DiagramRay ray;
        ray.angle = nu;
        ray.in_mu_d = mu_d.count(nu) > 0;
        ray.non_gorenstein = !ray.in_mu_d;
        dg.rays.push_back(ray);
        counts[nu] = 0;
    }

    for (const Rat& nu : all) {
        GroupElement gamma = twist(ws, coset_rep, nu);
        for (int j = 0; j < ws.nvars(); ++j) {
            if (gamma.phases[j] == 0) {
                dg.dots.push_back({nu, j + 1, false, false});
                counts[nu]++;
            }
        }
        if (!mu_d.count(nu)) {
            dg.dots.push_back({nu, ws.nvars() + 1, true, false});
            counts[nu]++;
        }
    }

    for (auto& ray : dg.rays) ray.dot_count = counts[ray.angle];

    std::sort(dg.dots.begin(), dg.dots.end(), [](const DiagramDot& a, const DiagramDot& b) {
        return a.angle != b.angle ? a.angle < b.angle : a.radius < b.radius;
    });
    // one extremal dot per non-empty ray: the highest radius
    for (size_t i = 0; i < dg.dots.size(); ++i) {
        bool last_on_ray = (i + 1 == dg.dots.size()) || dg.dots[i + 1].angle != dg.dots[i].angle;
        dg.dots[i].extremal = last_on_ray;
    }
    return dg;
}

std::string render(const Diagram& d, RenderFormat format)
{
    std::ostringstream os;
    if (format == RenderFormat::Text) {
        os << "diagram d=" << d.degree << " rays=" << d.ray_total()
           << " dots=" << d.dot_total() << "\n";
        size_t di = 0;
        for (const auto& ray : d.rays) {
            os << "  ray " << ray.angle;
            if (ray.non_gorenstein) os << " [non-gorenstein]";
            os << " :";
            if (ray.dot_count == 0) os << " (empty)";
            while (di < d.dots.size() && d.dots[di].angle == ray.angle) {
                os << " " << d.dots[di].radius;
                if (d.dots[di].non_gorenstein) os << "*";
                if (d.dots[di].extremal) os << "E";
                ++di;
            }
            os << "\n";
        }
        os << "  D-R=" << (d.dot_total() - d.ray_total())
           << " internal=" << d.internal_dots()
           << " empty=" << d.empty_rays() << "\n";
        return os.str();
    }

    // SVG with a fixed viewBox; radius scale chosen so radius N+1 fits.
    const int size = 1000, cx = 500, cy = 500;
    const double scale = 450.0 / (d.nvars + 1);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << size << " " << size
       << "\">\n";
    for (int r = 1; r <= d.nvars + 1; ++r) {
        os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << static_cast<int>(r * scale)
           << "\" fill=\"none\" stroke=\"#cccccc\" stroke-dasharray=\"6,6\"/>\n";
    }
    auto xy = [&](const Rat& angle, double radius) {
        double a = 2.0 * 3.14159265358979323846 *
                   static_cast<double>(rat_num(angle)) / static_cast<double>(rat_den(angle) == 0 ? 1 : rat_den(angle));
        // svg y-axis points down; negate for the usual orientation
        long x = cx + static_cast<long>(radius * scale * std::cos(a) + 0.5);
        long y = cy - static_cast<long>(radius * scale * std::sin(a) + 0.5);
        return std::pair<long, long>{x, y};
    };
    for (const auto& ray : d.rays) {
        auto [x, y] = xy(ray.angle, d.nvars + 1.0);
        os << "<line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << x << "\" y2=\"" << y
           << "\" stroke=\"" << (ray.non_gorenstein ? "#cc0000" : "#000000") << "\"/>\n";
    }
    for (const auto& dot : d.dots) {
        auto [x, y] = xy(dot.angle, dot.radius);
        os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"10\" fill=\""
           << (dot.non_gorenstein ? "#cc0000" : "#000000") << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace lgcorr
