#pragma once

// Text renderings: arc pictures, staircase diagrams, orbit graphs and
// Hom/Ext tables. All output is byte-for-byte deterministic.

#include <string>
#include <string_view>

#include "parkbraid/braid.hpp"
#include "parkbraid/quiver.hpp"

namespace parkbraid {

enum class Format { ascii, svg, dot, json };
enum class Target { arcs, diagram, orbit, table };

struct RenderSpec {
  Format format;
  Target target;
};

/// Throw Error("unsupported_render").
Format parse_format(std::string_view s);
Target parse_target(std::string_view s);
const char* to_string(Format f);
const char* to_string(Target t);

/// dot is only for orbit; orbit has no ascii or svg form; table has no svg
/// form.
bool supported(RenderSpec spec);

/// One line per arc in basis order, the arc drawn over the axis and then
/// "k: (left,right)"; a last line numbers the axis points.
std::string arcs_ascii(const DistinguishedBasis& a);
/// Semicircles above the axis 0..n with the label at the apex. Each path
/// carries data-label, data-left and data-right attributes.
std::string arcs_svg(const DistinguishedBasis& a);

/// Top row first; a row is its cells ('#'), the free cells under the
/// staircase ('.'), then its label.
std::string diagram_ascii(const ParkingDiagram& d);
std::string diagram_svg(const ParkingDiagram& d);

/// Edge labels "a<k>" for alpha_k and "b<k>" for beta_k.
std::string orbit_dot(const OrbitGraph& g);

std::string table_ascii(const HomExtTable& t);

}  // namespace parkbraid
