#include "summon/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace summon {

namespace {

double approx(const Rational& r) { return r.convert_to<double>(); }

/// Display coordinate of axis k: coefficient times sqrt(radicand).
double axis_value(const SpacetimePoint& p, const MetricConfig& m, std::size_t k) {
    return approx(p.x[k]) * std::sqrt(static_cast<double>(m.axis_radicands[k]));
}

struct Canvas {
    std::ostringstream body;
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;

    void include(double x, double y) {
        if (first) {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
        } else {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }

    std::string finish() {
        double pad_x = std::max(1.0, (max_x - min_x) * 0.15);
        double pad_y = std::max(1.0, (max_y - min_y) * 0.15);
        double x0 = min_x - pad_x, y0 = min_y - pad_y;
        double w = (max_x - min_x) + 2 * pad_x, h = (max_y - min_y) + 2 * pad_y;
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
            << "viewBox=\"" << x0 << " " << y0 << " " << w << " " << h << "\">\n"
            << "<g transform=\"translate(0," << (y0 + h + y0) << ") scale(1,-1)\" "
            << "font-size=\"" << h * 0.035 << "\" font-family=\"sans-serif\">\n"
            << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << w << "\" height=\""
            << h << "\" fill=\"white\"/>\n"
            << body.str() << "</g>\n</svg>\n";
        return out.str();
    }

    void line(double x1, double y1, double x2, double y2, const char* style) {
        include(x1, y1);
        include(x2, y2);
        body << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
             << y2 << "\" " << style << "/>\n";
    }

    void polygon(const std::vector<std::pair<double, double>>& pts, const char* style) {
        body << "<polygon points=\"";
        for (auto [x, y] : pts) {
            include(x, y);
            body << x << "," << y << " ";
        }
        body << "\" " << style << "/>\n";
    }

    void dot(double x, double y, double r, const char* fill) {
        include(x, y);
        body << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r << "\" fill=\""
             << fill << "\" stroke=\"black\" stroke-width=\"" << r * 0.15 << "\"/>\n";
    }

    void label(double x, double y, const std::string& text) {
        include(x, y);
        // The canvas is y-flipped; flip the glyphs back.
        body << "<text x=\"" << x << "\" y=\"" << -y << "\" transform=\"scale(1,-1)\">"
             << text << "</text>\n";
    }
};

std::string render_1p1(const SummoningTask& task) {
    const auto& m = task.metric;
    const double c = approx(m.c);
    Canvas canvas;

    double reach = 0;  // light cone extent from s
    for (const auto& pair : task.pairs) {
        reach = std::max(reach, std::abs(approx(pair.reveal.t) - approx(task.start.t)));
    }
    reach = std::max(reach, 1.0);

    double sx = axis_value(task.start, m, 0), st = approx(task.start.t);
    canvas.line(sx, st, sx + c * reach * 1.1, st + reach * 1.1,
                "stroke=\"orange\" stroke-dasharray=\"0.2,0.2\" stroke-width=\"0.05\"");
    canvas.line(sx, st, sx - c * reach * 1.1, st + reach * 1.1,
                "stroke=\"orange\" stroke-dasharray=\"0.2,0.2\" stroke-width=\"0.05\"");

    for (std::size_t j = 0; j < task.n(); ++j) {
        const auto& y = task.pairs[j].call;
        const auto& z = task.pairs[j].reveal;
        double yx = axis_value(y, m, 0), yt = approx(y.t);
        double zx = axis_value(z, m, 0), zt = approx(z.t);
        // Diamond corners via light-cone coordinates u = ct - x, v = ct + x.
        double uy = c * yt - yx, vy = c * yt + yx;
        double uz = c * zt - zx, vz = c * zt + zx;
        auto from_uv = [&](double u, double v) {
            return std::pair<double, double>((v - u) / 2.0, (u + v) / (2.0 * c));
        };
        canvas.polygon({{yx, yt}, from_uv(uy, vz), {zx, zt}, from_uv(uz, vy)},
                       "fill=\"lightblue\" fill-opacity=\"0.5\" stroke=\"steelblue\" "
                       "stroke-width=\"0.04\"");
        canvas.line(yx, yt, zx, zt, "stroke=\"black\" stroke-width=\"0.06\"");
        canvas.dot(yx, yt, 0.12, "black");
        canvas.dot(zx, zt, 0.12, "blue");
        canvas.label(yx + 0.2, yt, "y" + std::to_string(j));
        canvas.label(zx + 0.2, zt, "z" + std::to_string(j));
    }
    canvas.dot(sx, st, 0.12, "gold");
    canvas.label(sx + 0.2, st, "s");
    return canvas.finish();
}

std::string render_2p1(const SummoningTask& task) {
    const auto& m = task.metric;
    Canvas canvas;
    auto xy = [&](const SpacetimePoint& p) {
        return std::pair<double, double>(axis_value(p, m, 0), axis_value(p, m, 1));
    };
    CausalGraph g = build_graph(task);
    for (std::size_t i = 0; i < task.n(); ++i) {
        for (std::size_t j = 0; j < task.n(); ++j) {
            if (!g.edge(i, j)) continue;
            auto [ax, ay] = xy(task.pairs[i].call);
            auto [bx, by] = xy(task.pairs[j].reveal);
            canvas.line(ax, ay, bx, by,
                        "stroke=\"crimson\" stroke-width=\"0.03\" "
                        "stroke-dasharray=\"0.15,0.1\"");
        }
    }
    for (std::size_t j = 0; j < task.n(); ++j) {
        auto [yx, yy] = xy(task.pairs[j].call);
        auto [zx, zy] = xy(task.pairs[j].reveal);
        canvas.line(yx, yy, zx, zy, "stroke=\"black\" stroke-width=\"0.06\"");
        canvas.dot(yx, yy, 0.1, "black");
        canvas.dot(zx, zy, 0.1, "blue");
        canvas.label(yx + 0.15, yy, "y" + std::to_string(j) + " (t=" +
                                        format_rational(task.pairs[j].call.t) + ")");
        canvas.label(zx + 0.15, zy, "z" + std::to_string(j) + " (t=" +
                                        format_rational(task.pairs[j].reveal.t) + ")");
    }
    auto [sx, sy] = xy(task.start);
    canvas.dot(sx, sy, 0.1, "gold");
    canvas.label(sx + 0.15, sy, "s (t=" + format_rational(task.start.t) + ")");
    return canvas.finish();
}

}  // namespace

std::string render_svg(const SummoningTask& task) {
    if (task.metric.dim == 1) return render_1p1(task);
    if (task.metric.dim == 2) return render_2p1(task);
    throw UnsupportedDimension("diagrams support spatial dimension 1 or 2 only");
}

std::string graph_to_dot(const CausalGraph& g) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        out << "  D" << v << ";\n";
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (g.edge(i, j)) out << "  D" << i << " -> D" << j << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string doubled_graph_to_dot(const DoubledGraph& gp) {
    std::ostringstream out;
    out << "graph Gprime {\n";
    for (std::size_t v = 0; v < gp.n_vertices; ++v) {
        out << "  D" << v << " [shape=circle];\n";
    }
    for (std::size_t e = 0; e < gp.edges.size(); ++e) {
        auto [a, b] = gp.edges[e];
        out << "  E" << a << "_" << b << " [shape=box];\n";
    }
    for (std::size_t q = 0; q < gp.n_qubits(); ++q) {
        auto [a, b] = gp.edges[gp.edge_of_qubit(q)];
        out << "  D" << gp.endpoint_of_qubit(q) << " -- E" << a << "_" << b
            << " [label=\"q" << q << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace summon
