#include "thetamirror/render.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace thetamirror {

namespace {

struct Pt {
  double x = 0;
  double y = 0;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Canvas {
 public:
  Canvas(const WallStructure& s, const RenderOptions& o) : s_(s), o_(o) {
    if (s.mode() == StructureMode::looijenga) {
      const auto n = s.geometry().num_chambers();
      for (std::size_t j = 0; j < n; ++j) {
        double a = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        angle_dir_.push_back({std::cos(a), std::sin(a)});
      }
    }
  }

  // Planar coordinates of a point of R^2 or of B (supported on a chamber).
  Pt embed(const std::vector<double>& x) const {
    if (s_.mode() == StructureMode::planar) return {x[0], x[1]};
    Pt p;
    const auto& g = s_.geometry();
    for (std::size_t j = 0; j < g.num_chambers(); ++j) {
      double c = x[g.ray(j)];
      p.x += c * angle_dir_[j].x;
      p.y += c * angle_dir_[j].y;
    }
    return p;
  }

  Pt pixel(Pt p) const {
    const double half = o_.size / 2.0;
    const double k = half / o_.extent;
    return {half + k * p.x, half - k * p.y};
  }

  // Point at distance `len` along a direction, normalized in the picture.
  Pt far_along(Pt from, Pt dir, double len) const {
    double n = std::hypot(dir.x, dir.y);
    if (n == 0) return from;
    return {from.x + len * dir.x / n, from.y + len * dir.y / n};
  }

 private:
  const WallStructure& s_;
  const RenderOptions& o_;
  std::vector<Pt> angle_dir_;
};

std::string fmt(double v) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(2) << v;
  return ss.str();
}

std::vector<double> to_double(const LatticeVector& v) {
  std::vector<double> out;
  for (auto x : v.values()) out.push_back(static_cast<double>(x));
  return out;
}

std::vector<double> to_double(const RationalPoint& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

}  // namespace

std::string render_svg(const WallStructure& s, const std::vector<BrokenLine>& lines,
                       const RenderOptions& o) {
  Canvas c(s, o);
  const auto& names = s.class_names();
  const double reach = o.extent * 1.5;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << o.size
      << "\" height=\"" << o.size << "\" viewBox=\"0 0 " << o.size << ' ' << o.size << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const Pt origin = c.pixel({0, 0});

  if (s.mode() == StructureMode::looijenga) {
    const auto& g = s.geometry();
    const auto m = g.lattice_rank();
    for (std::size_t j = 0; j < g.num_chambers(); ++j) {
      std::vector<double> a(m, 0.0), b(m, 0.0);
      a[g.ray(j)] = reach;
      b[g.ray(j + 1)] = reach;
      Pt pa = c.pixel(c.embed(a)), pb = c.pixel(c.embed(b));
      out << "<polygon class=\"chamber\" points=\"" << fmt(origin.x) << ',' << fmt(origin.y) << ' '
          << fmt(pa.x) << ',' << fmt(pa.y) << ' ' << fmt(pb.x) << ',' << fmt(pb.y)
          << "\" fill=\"" << (j % 2 ? "#eef3fb" : "#f8f8f0") << "\" stroke=\"none\"/>\n";
    }
    for (std::size_t j = 0; j < g.num_chambers(); ++j) {
      const auto comp = g.ray(j);
      std::vector<double> a(m, 0.0);
      a[comp] = reach;
      Pt pa = c.pixel(c.embed(a));
      std::vector<double> l(m, 0.0);
      l[comp] = o.extent * 0.9;
      Pt pl = c.pixel(c.embed(l));
      const auto f = s.ray_function(comp);
      out << "<line class=\"ray\" x1=\"" << fmt(origin.x) << "\" y1=\"" << fmt(origin.y)
          << "\" x2=\"" << fmt(pa.x) << "\" y2=\"" << fmt(pa.y)
          << "\" stroke=\"black\" stroke-width=\"1.5\"><title>"
          << escape(g.pair().components[comp] + ": " + format_laurent(f, names))
          << "</title></line>\n";
      out << "<text class=\"kink\" x=\"" << fmt(pl.x + 4) << "\" y=\"" << fmt(pl.y - 4)
          << "\" font-size=\"11\">" << escape(g.pair().components[comp] + " kink " +
                                                format_class(g.kink(comp), names))
          << "</text>\n";
    }
  }

  for (const auto& w : s.walls()) {
    const bool on_ray = s.mode() == StructureMode::looijenga && support(w.direction).size() == 1;
    if (on_ray) continue;  // drawn with the ray
    Pt d = c.embed(to_double(w.direction));
    Pt to = c.pixel(c.far_along({0, 0}, d, reach));
    Pt from = w.line ? c.pixel(c.far_along({0, 0}, {-d.x, -d.y}, reach)) : origin;
    out << "<line class=\"wall\" x1=\"" << fmt(from.x) << "\" y1=\"" << fmt(from.y)
        << "\" x2=\"" << fmt(to.x) << "\" y2=\"" << fmt(to.y) << "\" stroke=\""
        << (w.origin == "initial" ? "#1f4e9c" : "#c0392b")
        << "\" stroke-width=\"2\"><title>" << escape(format_laurent(w.fn, names))
        << "</title></line>\n";
  }

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    std::vector<Pt> pts;
    const auto& first = l.segments.front();
    Pt end0 = c.embed(to_double(first.end));
    Pt dir0;
    {
      // The first segment comes in from infinity along +exponent.
      std::vector<double> e = to_double(first.exponent);
      std::vector<double> tip = to_double(first.end);
      for (std::size_t k = 0; k < tip.size(); ++k) tip[k] += e[k];
      Pt q = c.embed(tip);
      dir0 = {q.x - end0.x, q.y - end0.y};
    }
    pts.push_back(c.pixel(c.far_along(end0, dir0, reach)));
    for (const auto& seg : l.segments) pts.push_back(c.pixel(c.embed(to_double(seg.end))));
    const auto& last = l.last();
    LaurentElement mono = laurent_monomial(s.ideal(), last.beta, last.exponent, last.coefficient);
    out << "<polyline class=\"broken-line\" fill=\"none\" stroke=\"#2e8b57\" stroke-width=\"1.2\""
        << " points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k)
      out << (k ? " " : "") << fmt(pts[k].x) << ',' << fmt(pts[k].y);
    out << "\"><title>" << escape("line " + std::to_string(i) + ": " + format_laurent(mono, names))
        << "</title></polyline>\n";
  }
  if (!lines.empty()) {
    Pt q = c.pixel(c.embed(to_double(lines.front().endpoint)));
    out << "<circle class=\"endpoint\" cx=\"" << fmt(q.x) << "\" cy=\"" << fmt(q.y)
        << "\" r=\"3\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_text(const WallStructure& s) {
  std::ostringstream out;
  const auto& names = s.class_names();
  if (s.mode() == StructureMode::looijenga) {
    const auto& g = s.geometry();
    for (std::size_t j = 0; j < g.num_chambers(); ++j) {
      const auto comp = g.ray(j);
      out << "ray " << g.pair().components[comp] << " kink " << format_class(g.kink(comp), names)
          << '\n';
    }
  }
  for (const auto& w : s.walls())
    out << (w.line ? "line " : "wall ") << to_string(w.direction) << " [" << w.origin << "] "
        << format_laurent(w.fn, names) << '\n';
  return out.str();
}

}  // namespace thetamirror
