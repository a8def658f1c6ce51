#include "parkbraid/render.hpp"

#include <sstream>

namespace parkbraid {

namespace {

constexpr int unit = 40;
constexpr int margin = 30;

std::string compact(const ParkingFunction& f) {
  std::string s;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    s += (i ? "," : "") + std::to_string(f.values()[i]);
  }
  return s;
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "ascii") return Format::ascii;
  if (s == "svg") return Format::svg;
  if (s == "dot") return Format::dot;
  if (s == "json") return Format::json;
  throw Error("unsupported_render", "unknown format '" + std::string(s) + "'");
}

Target parse_target(std::string_view s) {
  if (s == "arcs") return Target::arcs;
  if (s == "diagram") return Target::diagram;
  if (s == "orbit") return Target::orbit;
  if (s == "table") return Target::table;
  throw Error("unsupported_render", "unknown target '" + std::string(s) + "'");
}

const char* to_string(Format f) {
  switch (f) {
    case Format::ascii: return "ascii";
    case Format::svg: return "svg";
    case Format::dot: return "dot";
    case Format::json: return "json";
  }
  return "?";
}

const char* to_string(Target t) {
  switch (t) {
    case Target::arcs: return "arcs";
    case Target::diagram: return "diagram";
    case Target::orbit: return "orbit";
    case Target::table: return "table";
  }
  return "?";
}

bool supported(RenderSpec spec) {
  switch (spec.target) {
    case Target::arcs:
    case Target::diagram: return spec.format != Format::dot;
    case Target::orbit: return spec.format == Format::dot || spec.format == Format::json;
    case Target::table: return spec.format == Format::ascii || spec.format == Format::json;
  }
  return false;
}

std::string arcs_ascii(const DistinguishedBasis& a) {
  const int n = a.rank();
  std::ostringstream os;
  int k = 0;
  for (const Arc& arc : to_arcs(a).arcs) {
    ++k;
    std::string line(static_cast<std::size_t>(2 * n + 1), ' ');
    for (int x = 0; x <= n; ++x) line[2 * x] = '.';
    line[2 * arc.left] = '+';
    line[2 * arc.right] = '+';
    for (int x = 2 * arc.left + 1; x < 2 * arc.right; ++x) line[x] = '-';
    os << line << "  " << k << ": (" << arc.left << "," << arc.right << ")\n";
  }
  std::string axis;
  for (int x = 0; x <= n; ++x) axis += std::to_string(x % 10) + (x < n ? " " : "");
  os << axis << "\n";
  return os.str();
}

std::string arcs_svg(const DistinguishedBasis& a) {
  const int n = a.rank();
  const int width = 2 * margin + unit * n;
  const int base = margin + unit * (n + 1) / 2 + 10;
  const int height = base + margin;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
     << height << "\">\n";
  os << "  <line x1=\"" << margin / 2 << "\" y1=\"" << base << "\" x2=\"" << width - margin / 2 << "\" y2=\""
     << base << "\" stroke=\"black\"/>\n";
  for (int x = 0; x <= n; ++x) {
    const int px = margin + unit * x;
    os << "  <circle cx=\"" << px << "\" cy=\"" << base << "\" r=\"2\"/>\n";
    os << "  <text x=\"" << px << "\" y=\"" << base + 16 << "\" text-anchor=\"middle\" font-size=\"11\">" << x
       << "</text>\n";
  }
  int k = 0;
  for (const Arc& arc : to_arcs(a).arcs) {
    ++k;
    const int x1 = margin + unit * arc.left;
    const int x2 = margin + unit * arc.right;
    const int r = (x2 - x1) / 2;
    os << "  <path data-label=\"" << k << "\" data-left=\"" << arc.left << "\" data-right=\"" << arc.right
       << "\" d=\"M " << x1 << " " << base << " A " << r << " " << r << " 0 0 1 " << x2 << " " << base
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << (x1 + x2) / 2 << "\" y=\"" << base - r - 3
       << "\" text-anchor=\"middle\" font-size=\"12\">" << k << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string diagram_ascii(const ParkingDiagram& d) {
  const int n = d.size();
  std::ostringstream os;
  for (int b = n; b >= 1; --b) {
    const int len = d.length_at(b);
    std::string cells(static_cast<std::size_t>(len), '#');
    cells += std::string(static_cast<std::size_t>(b - 1 - len), '.');
    cells += std::string(static_cast<std::size_t>(n - b), ' ');
    os << cells << " " << d.label_at(b) << "\n";
  }
  return os.str();
}

std::string diagram_svg(const ParkingDiagram& d) {
  const int n = d.size();
  const int size = 2 * margin + unit * n;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
     << "\">\n";
  // Screen y grows downwards; diagram row b (bottom-up) is drawn n - b rows
  // below the top edge.
  os << "  <polyline points=\"" << margin << "," << margin << " " << margin + unit * n << "," << margin << " "
     << margin << "," << margin + unit * n << " " << margin << "," << margin
     << "\" fill=\"none\" stroke=\"gray\"/>\n";
  for (int b = n; b >= 1; --b) {
    const int top = margin + unit * (n - b);
    for (int x = 0; x < d.length_at(b); ++x) {
      os << "  <rect x=\"" << margin + unit * x << "\" y=\"" << top << "\" width=\"" << unit << "\" height=\""
         << unit << "\" fill=\"#ddd\" stroke=\"black\"/>\n";
    }
    os << "  <text data-label=\"" << d.label_at(b) << "\" x=\"" << margin + unit * d.length_at(b) + 6
       << "\" y=\"" << top + unit - 8 << "\" font-size=\"14\">" << d.label_at(b) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string orbit_dot(const OrbitGraph& g) {
  std::ostringstream os;
  os << "digraph PF" << g.n << " {\n";
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    os << "  n" << u << " [label=\"" << compact(g.nodes[u]) << "\"];\n";
  }
  for (const OrbitEdge& e : g.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << (e.dir == Direction::left ? "a" : "b") << e.k
       << "\"" << (e.dir == Direction::right ? ", style=dashed" : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string table_ascii(const HomExtTable& t) {
  std::ostringstream os;
  const std::size_t n = t.hom.size();
  auto block = [&](const char* title, const std::vector<std::vector<int>>& m) {
    os << title << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) os << (j ? " " : "") << m[i][j];
      os << "\n";
    }
  };
  block("hom", t.hom);
  block("ext", t.ext);
  return os.str();
}

}  // namespace parkbraid
