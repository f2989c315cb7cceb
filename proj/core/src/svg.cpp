#include "tss/svg.hpp"

#include <algorithm>
#include <sstream>

namespace tss {

namespace {

struct Box {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    void absorb(double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
};

} // namespace

std::string svg_embedding(const Graph& g, const RectilinearEmbedding& emb) {
    const double scale = 24.0, pad = 24.0;
    Box box;
    for (auto p : emb.vpoint) box.absorb(static_cast<double>(p.x), static_cast<double>(p.y));
    for (const auto& path : emb.epath)
        for (auto p : path) box.absorb(static_cast<double>(p.x), static_cast<double>(p.y));

    auto X = [&](double x) { return pad + (x - box.xmin) * scale; };
    auto Y = [&](double y) { return pad + (box.ymax - y) * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='"
        << X(box.xmax) + pad << "' height='" << Y(box.ymin) + pad << "'>\n";
    for (const auto& path : emb.epath) {
        svg << "<polyline fill='none' stroke='#336' stroke-width='2' points='";
        for (auto p : path)
            svg << X(static_cast<double>(p.x)) << "," << Y(static_cast<double>(p.y)) << " ";
        svg << "'/>\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const double x = X(static_cast<double>(emb.vpoint[v].x));
        const double y = Y(static_cast<double>(emb.vpoint[v].y));
        svg << "<circle cx='" << x << "' cy='" << y << "' r='6' fill='#c33'/>\n"
            << "<text x='" << x + 7 << "' y='" << y - 7 << "' font-size='11'>" << v
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string svg_disks(const DiskRepresentation& rep) {
    const double scale = 120.0, pad = 30.0;
    const double radius = rep.diameter.approx() / 2.0;
    Box box;
    for (const auto& c : rep.centers) box.absorb(c.x.approx(), c.y.approx());

    auto X = [&](double x) { return pad + (x - box.xmin) * scale; };
    auto Y = [&](double y) { return pad + (box.ymax - y) * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='"
        << X(box.xmax) + pad << "' height='" << Y(box.ymin) + pad << "'>\n";
    for (const auto& c : rep.centers) {
        svg << "<circle cx='" << X(c.x.approx()) << "' cy='" << Y(c.y.approx()) << "' r='"
            << radius * scale << "' fill='rgba(60,90,200,0.12)' stroke='#369'/>\n";
    }
    for (const auto& c : rep.centers)
        svg << "<circle cx='" << X(c.x.approx()) << "' cy='" << Y(c.y.approx())
            << "' r='1.6' fill='#000'/>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace tss
