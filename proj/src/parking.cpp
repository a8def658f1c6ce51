#include "parkbraid/parking.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace parkbraid {

namespace {

std::string join(std::span<const int> values) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ")";
  return os.str();
}

void require_positive(int n) {
  if (n < 1) throw Error("invalid_size", "n must be at least 1, got " + std::to_string(n));
}

}  // namespace

bool is_parking(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n) {
      throw Error("value_out_of_range",
                  "value " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
    }
    ++count[static_cast<std::size_t>(v)];
  }
  int at_most = 0;
  for (int k = 1; k <= n; ++k) {
    at_most += count[static_cast<std::size_t>(k)];
    if (at_most < k) return false;
  }
  return true;
}

ParkingFunction::ParkingFunction(std::vector<int> values) : values_(std::move(values)) {
  if (!is_parking(values_)) {
    throw Error("invalid_parking", join(values_) + " violates the parking condition");
  }
}

bool ParkingFunction::is_nondecreasing() const noexcept {
  return std::is_sorted(values_.begin(), values_.end());
}

ParkingFunction ParkingFunction::sorted() const {
  auto v = values_;
  std::sort(v.begin(), v.end());
  return ParkingFunction(std::move(v));
}

bool ParkingFunction::is_permutation() const noexcept {
  auto v = values_;
  std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string ParkingFunction::to_string() const { return join(values_); }

ParkingDiagram::ParkingDiagram(std::vector<int> row_labels, std::vector<int> row_lengths)
    : labels_(std::move(row_labels)), lengths_(std::move(row_lengths)) {
  const int n = static_cast<int>(labels_.size());
  if (static_cast<int>(lengths_.size()) != n) {
    throw Error("invalid_diagram", "label and length sequences differ in size");
  }
  row_of_.assign(static_cast<std::size_t>(n), 0);
  for (int b = 1; b <= n; ++b) {
    const int label = labels_[static_cast<std::size_t>(b - 1)];
    if (label < 1 || label > n || row_of_[static_cast<std::size_t>(label - 1)] != 0) {
      throw Error("invalid_diagram", "row labels are not a permutation of 1..n");
    }
    row_of_[static_cast<std::size_t>(label - 1)] = b;
    const int length = lengths_[static_cast<std::size_t>(b - 1)];
    if (length < 0 || length > b - 1) {
      throw Error("invalid_diagram", "row " + std::to_string(b) + " leaves the staircase");
    }
    if (b > 1) {
      const int below = lengths_[static_cast<std::size_t>(b - 2)];
      if (below > length) throw Error("invalid_diagram", "row lengths are not a Young diagram");
      if (below == length && labels_[static_cast<std::size_t>(b - 2)] > label) {
        throw Error("invalid_diagram",
                    "labels decrease upwards in column " + std::to_string(length));
      }
    }
  }
}

DiagramPoint ParkingDiagram::corner(int label) const {
  const int b = row_of(label);
  return DiagramPoint{length_at(b), bottom_y(b)};
}

ParkingDiagram to_diagram(const ParkingFunction& f) {
  const int n = f.size();
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  std::stable_sort(labels.begin(), labels.end(), [&](int a, int b) { return f(a) < f(b); });
  std::vector<int> lengths;
  lengths.reserve(labels.size());
  for (int label : labels) lengths.push_back(f(label) - 1);
  return ParkingDiagram(std::move(labels), std::move(lengths));
}

ParkingFunction from_diagram(const ParkingDiagram& d) {
  std::vector<int> values(static_cast<std::size_t>(d.size()));
  for (int b = 1; b <= d.size(); ++b) {
    values[static_cast<std::size_t>(d.label_at(b) - 1)] = d.length_at(b) + 1;
  }
  return ParkingFunction(std::move(values));
}

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.size() % 2 != 0) throw Error("invalid_dyck", "odd number of steps");
  const int n = size();
  int x = 0;
  int y = -n;
  for (Step s : steps_) {
    if (s == Step::east) {
      ++x;
    } else {
      ++y;
    }
    if (y < x - n) throw Error("invalid_dyck", "path crosses y = x - n");
  }
  if (x != n || y != 0) throw Error("invalid_dyck", "path does not end at (n, 0)");
}

std::string DyckPath::to_string() const {
  std::string s;
  for (Step step : steps_) s.push_back(static_cast<char>(step));
  return s;
}

DyckPath to_dyck(const ParkingFunction& f) {
  if (!f.is_nondecreasing()) {
    throw Error("not_nondecreasing", f.to_string() + " is not weakly increasing");
  }
  std::vector<Step> steps;
  int x = 0;
  for (int k = 1; k <= f.size(); ++k) {
    for (; x < f(k) - 1; ++x) steps.push_back(Step::east);
    steps.push_back(Step::north);
  }
  for (; x < f.size(); ++x) steps.push_back(Step::east);
  return DyckPath(std::move(steps));
}

ParkingFunction from_dyck(const DyckPath& path) {
  std::vector<int> values;
  int x = 0;
  for (Step s : path.steps()) {
    if (s == Step::east) {
      ++x;
    } else {
      values.push_back(x + 1);
    }
  }
  return ParkingFunction(std::move(values));
}

ParkingEnumerator::ParkingEnumerator(int n, std::vector<int> prefix)
    : n_(n), prefix_(std::move(prefix)) {
  require_positive(n);
  if (static_cast<int>(prefix_.size()) > n) throw Error("invalid_prefix", "prefix longer than n");
  for (int v : prefix_) {
    if (v < 1 || v > n) throw Error("invalid_prefix", "prefix value out of range");
  }
  reset();
}

void ParkingEnumerator::reset() {
  current_ = prefix_;
  current_.resize(static_cast<std::size_t>(n_), 1);
  started_ = false;
  done_ = !feasible(prefix_.size());
}

// A prefix extends to a parking function iff filling the rest with 1s does.
bool ParkingEnumerator::feasible(std::size_t length) const {
  std::vector<int> count(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t i = 0; i < length; ++i) ++count[static_cast<std::size_t>(current_[i])];
  int at_most = n_ - static_cast<int>(length);
  for (int k = 1; k <= n_; ++k) {
    at_most += count[static_cast<std::size_t>(k)];
    if (at_most < k) return false;
  }
  return true;
}

bool ParkingEnumerator::advance() {
  const std::size_t fixed = prefix_.size();
  for (std::size_t i = current_.size(); i-- > fixed;) {
    while (current_[i] < n_) {
      ++current_[i];
      if (!feasible(i + 1)) break;
      std::fill(current_.begin() + static_cast<std::ptrdiff_t>(i) + 1, current_.end(), 1);
      return true;
    }
  }
  return false;
}

std::optional<ParkingFunction> ParkingEnumerator::next() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return ParkingFunction(current_);
}

NondecreasingEnumerator::NondecreasingEnumerator(int n) : n_(n) {
  require_positive(n);
  reset();
}

void NondecreasingEnumerator::reset() {
  current_.assign(static_cast<std::size_t>(n_), 1);
  started_ = false;
  done_ = false;
}

std::optional<ParkingFunction> NondecreasingEnumerator::next() {
  if (done_) return std::nullopt;
  if (started_) {
    // Position i (0-based) admits values in [current_[i-1], i+1].
    bool advanced = false;
    for (std::size_t i = current_.size(); i-- > 0;) {
      if (current_[i] < static_cast<int>(i) + 1) {
        ++current_[i];
        std::fill(current_.begin() + static_cast<std::ptrdiff_t>(i) + 1, current_.end(),
                  current_[i]);
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      done_ = true;
      return std::nullopt;
    }
  }
  started_ = true;
  return ParkingFunction(current_);
}

std::vector<ParkingFunction> enumerate_parking(int n) {
  std::vector<ParkingFunction> out;
  ParkingEnumerator e(n);
  while (auto f = e.next()) out.push_back(std::move(*f));
  return out;
}

std::vector<ParkingFunction> enumerate_nondecreasing(int n) {
  std::vector<ParkingFunction> out;
  NondecreasingEnumerator e(n);
  while (auto f = e.next()) out.push_back(std::move(*f));
  return out;
}

std::vector<std::vector<int>> parking_prefixes(int n, int length) {
  require_positive(n);
  length = std::clamp(length, 0, n);
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  // Depth-first in lexicographic order with the same feasibility cut as the
  // enumerator.
  auto feasible = [&](const std::vector<int>& p) {
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    for (int v : p) ++count[static_cast<std::size_t>(v)];
    int at_most = n - static_cast<int>(p.size());
    for (int k = 1; k <= n; ++k) {
      at_most += count[static_cast<std::size_t>(k)];
      if (at_most < k) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(prefix.size()) == length) {
      out.push_back(prefix);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      prefix.push_back(v);
      if (feasible(prefix)) self(self);
      prefix.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::uint64_t parking_count(int n) {
  require_positive(n);
  std::uint64_t r = 1;
  for (int i = 0; i < n - 1; ++i) r *= static_cast<std::uint64_t>(n + 1);
  return r;
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (i + 2);
  return c;
}

}  // namespace parkbraid
