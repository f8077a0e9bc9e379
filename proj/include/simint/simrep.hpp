#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simint/graph.hpp"
#include "simint/rational.hpp"

namespace simint {

inline constexpr int kMaxLabels = 128;

// Subset of {1..128}. Label i is stored as bit i-1.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::initializer_list<int> labels);

  static LabelSet from_vector(std::span<const int> labels);

  void insert(int label);
  void erase(int label);
  bool contains(int label) const;
  bool empty() const { return words_[0] == 0 && words_[1] == 0; }
  int size() const;
  int max_label() const;  // 0 when empty
  bool intersects(const LabelSet& o) const {
    return (words_[0] & o.words_[0]) != 0 || (words_[1] & o.words_[1]) != 0;
  }
  std::vector<int> to_vector() const;  // ascending

  std::size_t hash() const;
  auto operator<=>(const LabelSet&) const = default;

 private:
  std::array<std::uint64_t, 2> words_{0, 0};
};

// Open interval (l, r) with l < r.
struct Interval {
  Rational l;
  Rational r;
  bool operator==(const Interval&) const = default;
};

// Open intervals: touching endpoints do not intersect.
inline bool intervals_intersect(const Interval& a, const Interval& b) {
  return a.l < b.r && b.l < a.r;
}

// A d-simultaneous interval representation: vertex v gets interval R(v) and
// label set L(v) within {1..d}. u, v are adjacent iff both intersect.
class SimRep {
 public:
  SimRep() = default;
  // Throws std::invalid_argument on degenerate intervals, labels outside
  // {1..d}, d outside [0, 128] or mismatched sizes.
  SimRep(int d, std::vector<Interval> intervals, std::vector<LabelSet> labels);

  int n() const { return static_cast<int>(intervals_.size()); }
  int d() const { return d_; }
  const Interval& interval(Vertex v) const { return intervals_[v]; }
  const LabelSet& labels(Vertex v) const { return labels_[v]; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const std::vector<LabelSet>& label_sets() const { return labels_; }

  bool adjacent(Vertex u, Vertex v) const {
    return u != v && labels_[u].intersects(labels_[v]) &&
           intervals_intersect(intervals_[u], intervals_[v]);
  }

  bool operator==(const SimRep&) const = default;

 private:
  int d_ = 0;
  std::vector<Interval> intervals_;
  std::vector<LabelSet> labels_;
};

enum class ViolationKind { Missing, Spurious };

struct Violation {
  Vertex u;
  Vertex v;
  ViolationKind kind;  // Missing: edge of g not represented; Spurious: represented non-edge
};

struct VerifyResult {
  bool valid = true;
  std::optional<Violation> violation;  // first violating pair in lexicographic order
};

const char* to_string(ViolationKind k);

// Throws std::invalid_argument when vertex counts differ.
VerifyResult verify_representation(const Graph& g, const SimRep& rep);

// Graph realised by the representation.
Graph realized_graph(const SimRep& rep);
Graph interval_supergraph(const SimRep& rep);
Graph label_graph(const SimRep& rep);

struct RestrictedRep {
  SimRep rep;
  std::vector<Vertex> original;  // new id -> old id
};

// Vertices of s, sorted ascending, become 0..|s|-1; d is kept.
RestrictedRep restrict_rep(const SimRep& rep, std::span<const Vertex> s);

// Order-preserving map of all endpoints onto 1..k (k <= 2n distinct values).
// Equal endpoints stay equal. Idempotent.
SimRep canonicalize(const SimRep& rep);

// perm[i-1] is the new name of label i; must be a permutation of 1..d.
SimRep rename_labels(const SimRep& rep, std::span<const int> perm);

// d tracks with one interval per vertex each. Vertex v is real on track i
// iff i is in L(v); otherwise it gets a dummy interval right of all real ones.
std::vector<std::vector<Interval>> to_track_representation(const SimRep& rep);
Graph track_graph(const std::vector<std::vector<Interval>>& tracks);

// Distinct label sets present, in ascending LabelSet order.
std::vector<LabelSet> distinct_label_sets(const SimRep& rep);

}  // namespace simint

template <>
struct std::hash<simint::LabelSet> {
  std::size_t operator()(const simint::LabelSet& s) const noexcept { return s.hash(); }
};
