#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "formant/corpus.hpp"
#include "formant/errors.hpp"
#include "formant/stats.hpp"

namespace formant {

struct ScatterPoint {
    double x1 = 0.0;
    double x2 = 0.0;
    VowelClass vowel = VowelClass::IY;
    SpeakerGroup group = SpeakerGroup::Man;
};

struct Crosshair {
    double x1 = 0.0;
    double x2 = 0.0;
    VowelClass vowel = VowelClass::IY;
};

struct Triangle {
    // /i/, /ɑ/, /u/ vertices as (x1, x2)
    std::array<std::array<double, 2>, 3> vertices{};
    SpeakerGroup group = SpeakerGroup::Man;
};

struct ScatterSpec {
    std::string title;
    std::string x_label = "F1 (mel)";
    std::string y_label = "F2 (mel)";
    std::vector<ScatterPoint> points;
    std::vector<Crosshair> crosshairs;
    std::vector<Triangle> triangles;
};

struct DistanceRay {
    double sx = 0.0, sy = 0.0;  // sample or hypothesis location
    double tx = 0.0, ty = 0.0;  // vowel mean
    VowelClass vowel = VowelClass::IY;
    double length = 0.0;        // unweighted Euclidean, plot units
    bool shortest = false;
};

struct DistanceRaySpec {
    std::string title;
    std::string x_label = "F1 (mel)";
    std::string y_label = "F2 (mel)";
    std::vector<Crosshair> means;
    std::vector<DistanceRay> rays;
};

// Corner-vowel triangle from group-conditional statistics in the plotted
// space. stats must hold /i/, /ɑ/ and /u/ means.
inline Triangle vowel_triangle(const VowelStatistics& stats, SpeakerGroup group) {
    for (VowelClass v : {VowelClass::IY, VowelClass::AA, VowelClass::UW})
        if (!stats.has(v)) throw MissingCorner(std::string(vowel_code(v)));
    Triangle t;
    t.group = group;
    const std::array<VowelClass, 3> corners{VowelClass::IY, VowelClass::AA, VowelClass::UW};
    for (std::size_t k = 0; k < 3; ++k)
        t.vertices[k] = {stats.mean(corners[k], 1), stats.mean(corners[k], 2)};
    return t;
}

namespace svg {

inline std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

inline const char* group_color(SpeakerGroup g) {
    switch (g) {
        case SpeakerGroup::Man: return "#1f4fd8";   // blue
        case SpeakerGroup::Woman: return "#d82020"; // red
        case SpeakerGroup::Child: return "#000000"; // black
    }
    return "#000000";
}

struct Frame {
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    double width = 860, height = 640;
    double left = 70, right = 30, top = 40, bottom = 55;

    double px(double x) const {
        return left + (x - min_x) / (max_x - min_x) * (width - left - right);
    }
    // plot y grows upward; SVG y grows downward
    double py(double y) const {
        return height - bottom - (y - min_y) / (max_y - min_y) * (height - top - bottom);
    }
};

inline void expand(double& lo, double& hi, double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
}

inline void pad_frame(Frame& f) {
    const double dx = (f.max_x - f.min_x), dy = (f.max_y - f.min_y);
    const double mx = dx > 0 ? 0.05 * dx : 1.0;
    const double my = dy > 0 ? 0.05 * dy : 1.0;
    f.min_x -= mx;
    f.max_x += mx;
    f.min_y -= my;
    f.max_y += my;
}

inline void header(std::ostream& out, const Frame& f, const std::string& title,
                   const std::string& x_label, const std::string& y_label) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(f.width)
        << "\" height=\"" << num(f.height) << "\" viewBox=\"0 0 " << num(f.width) << ' '
        << num(f.height) << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << num(f.width) << "\" height=\"" << num(f.height)
        << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << num(f.width / 2) << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
    // axis box
    out << "<rect x=\"" << num(f.left) << "\" y=\"" << num(f.top) << "\" width=\""
        << num(f.width - f.left - f.right) << "\" height=\"" << num(f.height - f.top - f.bottom)
        << "\" fill=\"none\" stroke=\"#444\"/>\n";
    out << "<text x=\"" << num(f.width / 2) << "\" y=\"" << num(f.height - 14)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << x_label
        << "</text>\n";
    out << "<text x=\"20\" y=\"" << num(f.height / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\""
        << "rotate(-90 20 " << num(f.height / 2) << ")\">" << y_label << "</text>\n";
    // axis extrema labels
    out << "<text x=\"" << num(f.left) << "\" y=\"" << num(f.height - f.bottom + 16)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << num(f.min_x) << "</text>\n";
    out << "<text x=\"" << num(f.width - f.right) << "\" y=\"" << num(f.height - f.bottom + 16)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << num(f.max_x)
        << "</text>\n";
    out << "<text x=\"" << num(f.left - 6) << "\" y=\"" << num(f.height - f.bottom)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << num(f.min_y)
        << "</text>\n";
    out << "<text x=\"" << num(f.left - 6) << "\" y=\"" << num(f.top + 10)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << num(f.max_y)
        << "</text>\n";
}

// Fig. 1 symbol convention: filled dot /i/, plus /ɪ/, triangle /ɛ/,
// diamond /æ/, circle /ʌ/, hexagon /ɑ/, cross /ɔ/, square /ʊ/, star /u/.
inline void glyph(std::ostream& out, VowelClass v, double cx, double cy, const char* color,
                  double r = 4.0) {
    const std::string x = num(cx), y = num(cy);
    out << "<g class=\"glyph\" stroke=\"" << color << "\" fill=\"none\">";
    auto poly = [&](int n, double rot) {
        out << "<polygon points=\"";
        for (int k = 0; k < n; ++k) {
            const double a = rot + 2.0 * M_PI * k / n;
            out << num(cx + r * std::cos(a)) << ',' << num(cy - r * std::sin(a));
            if (k + 1 < n) out << ' ';
        }
        out << "\"/>";
    };
    switch (v) {
        case VowelClass::IY:
            out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << num(r * 0.8)
                << "\" fill=\"" << color << "\"/>";
            break;
        case VowelClass::IH:
            out << "<path d=\"M " << num(cx - r) << ' ' << y << " H " << num(cx + r) << " M " << x
                << ' ' << num(cy - r) << " V " << num(cy + r) << "\"/>";
            break;
        case VowelClass::EH:
            poly(3, M_PI / 2);
            break;
        case VowelClass::AE:
            poly(4, M_PI / 2);
            break;
        case VowelClass::AH:
            out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << num(r) << "\"/>";
            break;
        case VowelClass::AA:
            poly(6, 0.0);
            break;
        case VowelClass::AO:
            out << "<path d=\"M " << num(cx - r) << ' ' << num(cy - r) << " L " << num(cx + r)
                << ' ' << num(cy + r) << " M " << num(cx - r) << ' ' << num(cy + r) << " L "
                << num(cx + r) << ' ' << num(cy - r) << "\"/>";
            break;
        case VowelClass::UH:
            out << "<rect x=\"" << num(cx - r) << "\" y=\"" << num(cy - r) << "\" width=\""
                << num(2 * r) << "\" height=\"" << num(2 * r) << "\"/>";
            break;
        case VowelClass::UW: {
            out << "<path d=\"";
            for (int k = 0; k < 3; ++k) {
                const double a = M_PI / 2 + M_PI * k / 3;
                out << "M " << num(cx + r * std::cos(a)) << ' ' << num(cy - r * std::sin(a))
                    << " L " << num(cx - r * std::cos(a)) << ' ' << num(cy + r * std::sin(a))
                    << ' ';
            }
            out << "\"/>";
            break;
        }
        case VowelClass::ER:
            out << "<path d=\"M " << num(cx - r) << ' ' << y << " H " << num(cx + r)
                << "\"/>";
            break;
    }
    out << "</g>\n";
}

inline void crosshair(std::ostream& out, double cx, double cy, double r = 7.0) {
    out << "<g class=\"crosshair\" stroke=\"#555\"><path d=\"M " << num(cx - r) << ' ' << num(cy)
        << " H " << num(cx + r) << " M " << num(cx) << ' ' << num(cy - r) << " V "
        << num(cy + r) << "\"/></g>\n";
}

}  // namespace svg

enum class PlotFormat { Svg, Csv };

inline void emit_scatter(const ScatterSpec& spec, std::ostream& out,
                         PlotFormat format = PlotFormat::Svg) {
    if (spec.points.empty() && spec.crosshairs.empty())
        throw Error("emit_scatter: empty spec");
    if (format == PlotFormat::Csv) {
        out << "x1_mel,x2_mel,vowel,group\n";
        char buf[64];
        for (const auto& p : spec.points) {
            std::snprintf(buf, sizeof(buf), "%.6f,%.6f", p.x1, p.x2);
            out << buf << ',' << vowel_code(p.vowel) << ',' << group_name(p.group) << '\n';
        }
        if (!out) throw IOFailure("emit_scatter: write failed");
        return;
    }

    svg::Frame f;
    f.min_x = f.min_y = 1e300;
    f.max_x = f.max_y = -1e300;
    for (const auto& p : spec.points) {
        svg::expand(f.min_x, f.max_x, p.x1);
        svg::expand(f.min_y, f.max_y, p.x2);
    }
    for (const auto& c : spec.crosshairs) {
        svg::expand(f.min_x, f.max_x, c.x1);
        svg::expand(f.min_y, f.max_y, c.x2);
    }
    for (const auto& t : spec.triangles)
        for (const auto& v : t.vertices) {
            svg::expand(f.min_x, f.max_x, v[0]);
            svg::expand(f.min_y, f.max_y, v[1]);
        }
    svg::pad_frame(f);

    svg::header(out, f, spec.title, spec.x_label, spec.y_label);
    for (const auto& t : spec.triangles) {
        out << "<polygon class=\"triangle\" points=\"";
        for (std::size_t k = 0; k < 3; ++k) {
            out << svg::num(f.px(t.vertices[k][0])) << ',' << svg::num(f.py(t.vertices[k][1]));
            if (k < 2) out << ' ';
        }
        out << "\" fill=\"none\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\" stroke=\""
            << svg::group_color(t.group) << "\"/>\n";
    }
    for (const auto& p : spec.points)
        svg::glyph(out, p.vowel, f.px(p.x1), f.py(p.x2), svg::group_color(p.group));
    for (const auto& c : spec.crosshairs) svg::crosshair(out, f.px(c.x1), f.py(c.x2));
    // legend
    double ly = f.top + 14;
    for (VowelClass v : kWorkingVowels) {
        svg::glyph(out, v, f.width - f.right - 90, ly, "#333");
        out << "<text x=\"" << svg::num(f.width - f.right - 78) << "\" y=\"" << svg::num(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << vowel_code(v) << " /"
            << vowel_ipa(v) << "/</text>\n";
        ly += 16;
    }
    out << "</svg>\n";
    if (!out) throw IOFailure("emit_scatter: write failed");
}

inline void emit_distance_rays(const DistanceRaySpec& spec, std::ostream& out) {
    if (spec.rays.empty()) throw Error("emit_distance_rays: empty spec");
    svg::Frame f;
    f.min_x = f.min_y = 1e300;
    f.max_x = f.max_y = -1e300;
    for (const auto& c : spec.means) {
        svg::expand(f.min_x, f.max_x, c.x1);
        svg::expand(f.min_y, f.max_y, c.x2);
    }
    for (const auto& r : spec.rays) {
        svg::expand(f.min_x, f.max_x, r.sx);
        svg::expand(f.min_y, f.max_y, r.sy);
        svg::expand(f.min_x, f.max_x, r.tx);
        svg::expand(f.min_y, f.max_y, r.ty);
    }
    svg::pad_frame(f);

    svg::header(out, f, spec.title, spec.x_label, spec.y_label);
    for (const auto& r : spec.rays) {
        out << "<line class=\"" << (r.shortest ? "ray shortest" : "ray") << "\" x1=\""
            << svg::num(f.px(r.sx)) << "\" y1=\"" << svg::num(f.py(r.sy)) << "\" x2=\""
            << svg::num(f.px(r.tx)) << "\" y2=\"" << svg::num(f.py(r.ty)) << "\" stroke=\""
            << (r.shortest ? "#0a8a0a" : "#999") << "\" stroke-width=\""
            << (r.shortest ? "2.5" : "1") << "\"/>\n";
    }
    for (const auto& c : spec.means) {
        svg::crosshair(out, f.px(c.x1), f.py(c.x2));
        svg::glyph(out, c.vowel, f.px(c.x1), f.py(c.x2), "#d82020");
    }
    for (const auto& r : spec.rays) svg::glyph(out, r.vowel, f.px(r.sx), f.py(r.sy), "#1f4fd8");
    out << "</svg>\n";
    if (!out) throw IOFailure("emit_distance_rays: write failed");
}

}  // namespace formant
