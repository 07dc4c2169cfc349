#include "discrim/render.hpp"

#include "discrim/planar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace discrim {

namespace {

double to_double(const Scalar& s) {
    double v = s.rational_part().get_d();
    if (!s.is_rational()) v += s.irrational_part().get_d() * std::sqrt(static_cast<double>(s.radicand()));
    return v;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Box {
    double x0, y0, x1, y1;
};

// Clips a*x + b*y = c to the box (Liang-Barsky on a point-direction form).
bool clip(double a, double b, double c, const Box& box, double out[4]) {
    const double n2 = a * a + b * b;
    double px = a * c / n2, py = b * c / n2, dx = -b, dy = a;
    double t0 = -1e300, t1 = 1e300;
    auto side = [&](double p, double q) {
        if (std::abs(p) < 1e-15) return q >= 0;
        const double t = q / p;
        if (p < 0) t0 = std::max(t0, t);
        else t1 = std::min(t1, t);
        return true;
    };
    if (!side(-dx, px - box.x0) || !side(dx, box.x1 - px) || !side(-dy, py - box.y0) || !side(dy, box.y1 - py))
        return false;
    if (t0 > t1) return false;
    out[0] = px + t0 * dx;
    out[1] = py + t0 * dy;
    out[2] = px + t1 * dx;
    out[3] = py + t1 * dy;
    return true;
}

}  // namespace

std::string render_svg(const std::vector<ProjectiveFlat>& lines, const std::vector<std::string>& labels,
                       const std::optional<ProjectiveFlat>& chart) {
    if (labels.size() != lines.size()) throw std::invalid_argument("render_svg: label count mismatch");
    const std::vector<ProjectiveFlat> image = chart ? change_chart(lines, *chart) : lines;
    std::vector<std::size_t> drawn;
    for (std::size_t i = 0; i < image.size(); ++i)
        if (!(image[i][0].is_zero() && image[i][1].is_zero())) drawn.push_back(i);

    const IncidenceStats st = incidence_stats(image);
    std::vector<std::pair<double, double>> finite;
    std::vector<std::size_t> mult;
    for (const IncidencePoint& p : st.points) {
        if (p.point[2].is_zero()) continue;
        finite.emplace_back(to_double(p.point[0] / p.point[2]), to_double(p.point[1] / p.point[2]));
        mult.push_back(p.multiplicity());
    }
    Box box{-1, -1, 1, 1};
    if (!finite.empty()) {
        box = {finite[0].first, finite[0].second, finite[0].first, finite[0].second};
        for (auto [x, y] : finite) {
            box.x0 = std::min(box.x0, x);
            box.x1 = std::max(box.x1, x);
            box.y0 = std::min(box.y0, y);
            box.y1 = std::max(box.y1, y);
        }
    }
    const double span = std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-6});
    const double cx = (box.x0 + box.x1) / 2, cy = (box.y0 + box.y1) / 2, half = span * 0.65;
    box = {cx - half, cy - half, cx + half, cy + half};

    constexpr double kSize = 600;
    auto sx = [&](double x) { return (x - box.x0) / (box.x1 - box.x0) * kSize; };
    auto sy = [&](double y) { return kSize - (y - box.y0) / (box.y1 - box.y0) * kSize; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
    os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    for (std::size_t i : drawn) {
        // Homogeneous (a, b, c) means a x + b y + c = 0.
        double seg[4];
        if (!clip(to_double(image[i][0]), to_double(image[i][1]), -to_double(image[i][2]), box, seg)) continue;
        os << "<line x1=\"" << fmt(sx(seg[0])) << "\" y1=\"" << fmt(sy(seg[1])) << "\" x2=\"" << fmt(sx(seg[2]))
           << "\" y2=\"" << fmt(sy(seg[3])) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        os << "<text x=\"" << fmt(std::clamp(sx(seg[2]), 8.0, kSize - 30)) << "\" y=\""
           << fmt(std::clamp(sy(seg[3]), 14.0, kSize - 6)) << "\" font-size=\"13\">" << labels[i] << "</text>\n";
    }
    for (std::size_t p = 0; p < finite.size(); ++p) {
        if (mult[p] < 3) continue;
        os << "<circle cx=\"" << fmt(sx(finite[p].first)) << "\" cy=\"" << fmt(sy(finite[p].second)) << "\" r=\""
           << (mult[p] > 3 ? 6 : 4) << "\" fill=\"" << (mult[p] > 3 ? "crimson" : "steelblue") << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace discrim
