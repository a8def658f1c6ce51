#pragma once

// Parking functions, their labeled staircase diagrams, Dyck paths, and
// enumeration.
//
// Diagram coordinates: the x-axis is the top edge of the staircase and rows
// hang below it. Rows are indexed bottom-up, b = 1..n; row b occupies
// y in [b-1-n, b-n] and x in [0, length_b]. The hypotenuse is y = x - n, so
// length_b <= b - 1. The SE angle P_k of the row labeled k is
// (f(k) - 1, b - 1 - n). Figures are usually drawn top row first; the ASCII
// renderer does that, while all stored sequences stay bottom-up.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parkbraid/error.hpp"

namespace parkbraid {

/// Throws Error("value_out_of_range") if some value is outside [1, n].
bool is_parking(std::span<const int> values);

class ParkingFunction {
 public:
  /// Throws Error("value_out_of_range") or Error("invalid_parking").
  explicit ParkingFunction(std::vector<int> values);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  /// f(k), 1-based.
  int operator()(int k) const { return values_.at(static_cast<std::size_t>(k - 1)); }
  std::span<const int> values() const noexcept { return values_; }

  bool is_nondecreasing() const noexcept;
  ParkingFunction sorted() const;
  bool is_permutation() const noexcept;

  friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;

  std::string to_string() const;

 private:
  std::vector<int> values_;
};

struct DiagramPoint {
  int x;
  int y;
  bool operator==(const DiagramPoint&) const = default;
};

class ParkingDiagram {
 public:
  /// Both sequences bottom-up. Throws Error("invalid_diagram") unless the
  /// labels are a permutation of 1..n, the lengths are weakly increasing with
  /// length_b <= b - 1, and labels increase upwards within equal lengths.
  ParkingDiagram(std::vector<int> row_labels, std::vector<int> row_lengths);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  std::span<const int> row_labels() const noexcept { return labels_; }
  std::span<const int> row_lengths() const noexcept { return lengths_; }

  int label_at(int row) const { return labels_.at(static_cast<std::size_t>(row - 1)); }
  int length_at(int row) const { return lengths_.at(static_cast<std::size_t>(row - 1)); }
  /// Bottom-up row index holding `label`.
  int row_of(int label) const { return row_of_.at(static_cast<std::size_t>(label - 1)); }

  /// P_label.
  DiagramPoint corner(int label) const;
  int bottom_y(int row) const noexcept { return row - 1 - size(); }
  /// Row whose bottom edge lies on the horizontal line y (y in [-n, -1]).
  int row_above(int y) const noexcept { return y + size() + 1; }

  bool operator==(const ParkingDiagram& other) const {
    return labels_ == other.labels_ && lengths_ == other.lengths_;
  }

 private:
  std::vector<int> labels_;
  std::vector<int> lengths_;
  std::vector<int> row_of_;
};

ParkingDiagram to_diagram(const ParkingFunction& f);
ParkingFunction from_diagram(const ParkingDiagram& d);

enum class RayStop { corner, dyck_path, x_axis };

struct RayHit {
  DiagramPoint point;
  RayStop kind;
  int label;  // label of the corner when kind == corner, else 0
};

/// Walks strictly north-east from `start` in unit diagonal steps. A corner
/// P_l ends the walk when `stops_at(l)` holds and is passed otherwise; any
/// other contact with the diagram boundary, or reaching the x-axis, ends it.
/// The corner test runs first, then the boundary, then the axis.
template <class StopPredicate>
RayHit walk_north_east(const ParkingDiagram& d, DiagramPoint start, StopPredicate&& stops_at) {
  DiagramPoint p = start;
  for (;;) {
    ++p.x;
    ++p.y;
    if (p.y == 0) return RayHit{p, RayStop::x_axis, 0};
    const int row = d.row_above(p.y);
    const int length = d.length_at(row);
    if (p.x == length) {
      const int label = d.label_at(row);
      if (stops_at(label)) return RayHit{p, RayStop::corner, label};
      continue;
    }
    if (p.x < length) return RayHit{p, RayStop::dyck_path, 0};
  }
}

enum class Step : char { north = 'N', east = 'E' };

class DyckPath {
 public:
  /// Throws Error("invalid_dyck") unless there are n steps of each kind and
  /// the path never crosses y = x - n.
  explicit DyckPath(std::vector<Step> steps);

  int size() const noexcept { return static_cast<int>(steps_.size() / 2); }
  std::span<const Step> steps() const noexcept { return steps_; }
  std::string to_string() const;

  bool operator==(const DyckPath&) const = default;

 private:
  std::vector<Step> steps_;
};

/// Boundary of the staircase diagram from (0,-n) to (n,0). Throws
/// Error("not_nondecreasing").
DyckPath to_dyck(const ParkingFunction& f);
ParkingFunction from_dyck(const DyckPath& path);

/// Lexicographic stream of PF_n. A fixed prefix restricts the stream to the
/// lexicographic block starting with it, which is how callers split the range
/// across workers.
class ParkingEnumerator {
 public:
  explicit ParkingEnumerator(int n, std::vector<int> prefix = {});

  std::optional<ParkingFunction> next();
  void reset();

 private:
  bool feasible(std::size_t length) const;
  bool advance();

  int n_;
  std::vector<int> prefix_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Lexicographic stream of the weakly increasing parking functions.
class NondecreasingEnumerator {
 public:
  explicit NondecreasingEnumerator(int n);

  std::optional<ParkingFunction> next();
  void reset();

 private:
  int n_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<ParkingFunction> enumerate_parking(int n);
std::vector<ParkingFunction> enumerate_nondecreasing(int n);

/// Feasible prefixes of the given length in lexicographic order; their blocks
/// partition PF_n.
std::vector<std::vector<int>> parking_prefixes(int n, int length);

/// (n+1)^(n-1).
std::uint64_t parking_count(int n);
std::uint64_t catalan(int n);

}  // namespace parkbraid
