#include "tvw/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace tvw {

namespace {

const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
constexpr int kPaletteSize = 8;
constexpr double kCanvas = 640.0;
constexpr double kMargin = 40.0;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    // avoid the two spellings of zero
    std::string s(buf);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

struct Projector {
    double minx = 0, miny = 0, scale = 1;
    bool any = false;

    void feed(const Point2& p) {
        double x = static_cast<double>(p.x);
        double y = static_cast<double>(p.y);
        if (!any) {
            minx = maxx = x;
            miny = maxy = y;
            any = true;
        } else {
            minx = std::min(minx, x);
            maxx = std::max(maxx, x);
            miny = std::min(miny, y);
            maxy = std::max(maxy, y);
        }
    }
    void finish() {
        double w = maxx - minx, h = maxy - miny;
        double span = std::max(w, h);
        scale = span > 0 ? (kCanvas - 2 * kMargin) / span : 1.0;
    }
    // SVG y grows downward; flip to keep the mathematical orientation.
    std::pair<double, double> map(const Point2& p) const {
        double x = kMargin + (static_cast<double>(p.x) - minx) * scale;
        double y = kCanvas - kMargin - (static_cast<double>(p.y) - miny) * scale;
        return {x, y};
    }

private:
    double maxx = 0, maxy = 0;
};

std::string polyline_attr(const Projector& pr, const Polyline& poly) {
    std::string pts;
    for (const Point2& p : poly.pts) {
        auto [x, y] = pr.map(p);
        if (!pts.empty()) pts += ' ';
        pts += fmt(x) + ',' + fmt(y);
    }
    return pts;
}

void emit_header(std::ostringstream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas
        << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas
        << "\">\n";
}

void emit_point_marker(std::ostringstream& out, const Projector& pr, const Point2& p) {
    auto [x, y] = pr.map(p);
    out << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
        << "\" r=\"7\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2.5\"/>\n";
    out << "  <line x1=\"" << fmt(x - 9) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x + 9)
        << "\" y2=\"" << fmt(y) << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
    out << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y - 9) << "\" x2=\"" << fmt(x)
        << "\" y2=\"" << fmt(y + 9) << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
}

} // namespace

std::string render_svg(const Drawing& d, const WindingCertificate* cert) {
    validate_drawing_structure(d);
    std::ostringstream out;
    emit_header(out);

    Projector pr;
    for (const Point2& p : d.placement) pr.feed(p);
    for (const auto& [e, poly] : d.routes)
        for (const Point2& p : poly.pts) pr.feed(p);
    pr.finish();

    for (const auto& [e, poly] : d.routes) {
        out << "  <polyline points=\"" << polyline_attr(pr, poly)
            << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1.2\"/>\n";
    }

    if (cert) {
        int color = 0;
        for (const Face& f : cert->faces) {
            const char* c = kPalette[color % kPaletteSize];
            ++color;
            if (f.kind == Face::Kind::vertex) {
                auto [x, y] = pr.map(d.point_of(f.vertices[0]));
                out << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
                    << "\" r=\"6\" fill=\"none\" stroke=\"" << c << "\" stroke-width=\"3\"/>\n";
                continue;
            }
            Polyline img = f.kind == Face::Kind::cycle ? cycle_image(d, f.vertices)
                                                       : path_image(d, f.vertices);
            out << "  <polyline points=\"" << polyline_attr(pr, img)
                << "\" fill=\"none\" stroke=\"" << c << "\" stroke-width=\"3\"/>\n";
        }
        emit_point_marker(out, pr, cert->point.where);
    }

    for (int v = 1; v <= d.graph.n; ++v) {
        auto [x, y] = pr.map(d.point_of(v));
        out << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
            << "\" r=\"3.5\" fill=\"#222222\"/>\n";
        out << "  <text x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y - 6)
            << "\" font-size=\"14\" font-family=\"sans-serif\">" << v << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

std::string render_svg(const PointConfiguration& c, const TverbergCertificate* cert) {
    if (c.d != 1 && c.d != 2)
        throw std::invalid_argument("rendering supports d = 1 and d = 2 only");
    auto planar = [&](const PointD& p) {
        return c.d == 1 ? Point2{p[0], Rat(0)} : Point2{p[0], p[1]};
    };

    std::ostringstream out;
    emit_header(out);

    Projector pr;
    for (const PointD& p : c.points) pr.feed(planar(p));
    pr.finish();

    std::vector<int> part_of(c.points.size(), -1);
    if (cert) {
        for (std::size_t k = 0; k < cert->partition.size(); ++k)
            for (int label : cert->partition[k]) part_of[label] = static_cast<int>(k);
        for (std::size_t k = 0; k < cert->partition.size(); ++k) {
            const char* col = kPalette[k % kPaletteSize];
            const auto& part = cert->partition[k];
            if (part.size() < 2) continue;
            std::string pts;
            for (int label : part) {
                auto [x, y] = pr.map(planar(c.points[label]));
                if (!pts.empty()) pts += ' ';
                pts += fmt(x) + ',' + fmt(y);
            }
            out << "  <polygon points=\"" << pts << "\" fill=\"none\" stroke=\"" << col
                << "\" stroke-width=\"2\"/>\n";
        }
    }

    for (std::size_t i = 0; i < c.points.size(); ++i) {
        auto [x, y] = pr.map(planar(c.points[i]));
        const char* col = "#222222";
        if (cert && part_of[i] >= 0) col = kPalette[part_of[i] % kPaletteSize];
        out << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"4\" fill=\"" << col
            << "\"/>\n";
        out << "  <text x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y - 6)
            << "\" font-size=\"14\" font-family=\"sans-serif\">" << i << "</text>\n";
    }

    if (cert) {
        Point2 w = c.d == 1 ? Point2{cert->witness[0], Rat(0)}
                            : Point2{cert->witness[0], cert->witness[1]};
        emit_point_marker(out, pr, w);
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace tvw
