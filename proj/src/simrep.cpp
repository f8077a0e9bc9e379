#include "simint/simrep.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace simint {

LabelSet::LabelSet(std::initializer_list<int> labels) {
  for (int l : labels) insert(l);
}

LabelSet LabelSet::from_vector(std::span<const int> labels) {
  LabelSet s;
  for (int l : labels) s.insert(l);
  return s;
}

void LabelSet::insert(int label) {
  if (label < 1 || label > kMaxLabels) {
    throw std::invalid_argument("label " + std::to_string(label) + " outside 1.." +
                                std::to_string(kMaxLabels));
  }
  words_[(label - 1) / 64] |= std::uint64_t{1} << ((label - 1) % 64);
}

void LabelSet::erase(int label) {
  if (label < 1 || label > kMaxLabels) return;
  words_[(label - 1) / 64] &= ~(std::uint64_t{1} << ((label - 1) % 64));
}

bool LabelSet::contains(int label) const {
  if (label < 1 || label > kMaxLabels) return false;
  return (words_[(label - 1) / 64] >> ((label - 1) % 64)) & 1U;
}

int LabelSet::size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }

int LabelSet::max_label() const {
  if (words_[1] != 0) return 128 - std::countl_zero(words_[1]);
  if (words_[0] != 0) return 64 - std::countl_zero(words_[0]);
  return 0;
}

std::vector<int> LabelSet::to_vector() const {
  std::vector<int> out;
  for (int w = 0; w < 2; ++w) {
    for (std::uint64_t m = words_[w]; m != 0; m &= m - 1) {
      out.push_back(w * 64 + std::countr_zero(m) + 1);
    }
  }
  return out;
}

std::size_t LabelSet::hash() const {
  return std::hash<std::uint64_t>{}(words_[0]) ^ (std::hash<std::uint64_t>{}(words_[1]) * 0x9e3779b97f4a7c15ULL);
}

SimRep::SimRep(int d, std::vector<Interval> intervals, std::vector<LabelSet> labels)
    : d_(d), intervals_(std::move(intervals)), labels_(std::move(labels)) {
  if (d_ < 0 || d_ > kMaxLabels) {
    throw std::invalid_argument("d=" + std::to_string(d_) + " outside 0.." + std::to_string(kMaxLabels));
  }
  if (intervals_.size() != labels_.size()) throw std::invalid_argument("interval/label count mismatch");
  for (std::size_t v = 0; v < intervals_.size(); ++v) {
    if (!(intervals_[v].l < intervals_[v].r)) {
      throw std::invalid_argument("degenerate interval at vertex " + std::to_string(v));
    }
    if (labels_[v].max_label() > d_) {
      throw std::invalid_argument("label out of range at vertex " + std::to_string(v));
    }
  }
}

const char* to_string(ViolationKind k) { return k == ViolationKind::Missing ? "missing" : "spurious"; }

VerifyResult verify_representation(const Graph& g, const SimRep& rep) {
  if (g.n() != rep.n()) {
    throw std::invalid_argument("graph has " + std::to_string(g.n()) + " vertices, representation " +
                                std::to_string(rep.n()));
  }
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      bool want = g.adjacent(u, v);
      if (want != rep.adjacent(u, v)) {
        return {false, Violation{u, v, want ? ViolationKind::Missing : ViolationKind::Spurious}};
      }
    }
  }
  return {};
}

namespace {

template <typename Pred>
Graph pair_graph(int n, Pred pred) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (pred(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

Graph realized_graph(const SimRep& rep) {
  return pair_graph(rep.n(), [&](Vertex u, Vertex v) { return rep.adjacent(u, v); });
}

Graph interval_supergraph(const SimRep& rep) {
  return pair_graph(rep.n(), [&](Vertex u, Vertex v) {
    return intervals_intersect(rep.interval(u), rep.interval(v));
  });
}

Graph label_graph(const SimRep& rep) {
  return pair_graph(rep.n(), [&](Vertex u, Vertex v) { return rep.labels(u).intersects(rep.labels(v)); });
}

RestrictedRep restrict_rep(const SimRep& rep, std::span<const Vertex> s) {
  std::vector<Vertex> verts(s.begin(), s.end());
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
    throw std::invalid_argument("duplicate vertex in subset");
  }
  std::vector<Interval> iv;
  std::vector<LabelSet> ls;
  for (Vertex v : verts) {
    if (v < 0 || v >= rep.n()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    iv.push_back(rep.interval(v));
    ls.push_back(rep.labels(v));
  }
  return {SimRep(rep.d(), std::move(iv), std::move(ls)), verts};
}

SimRep canonicalize(const SimRep& rep) {
  std::vector<Rational> values;
  for (const Interval& i : rep.intervals()) {
    values.push_back(i.l);
    values.push_back(i.r);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  auto rank = [&](const Rational& x) {
    return Rational(std::lower_bound(values.begin(), values.end(), x) - values.begin() + 1);
  };
  std::vector<Interval> iv;
  for (const Interval& i : rep.intervals()) iv.push_back({rank(i.l), rank(i.r)});
  return SimRep(rep.d(), std::move(iv), rep.label_sets());
}

SimRep rename_labels(const SimRep& rep, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != rep.d()) throw std::invalid_argument("label permutation has wrong size");
  std::vector<int> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < rep.d(); ++i) {
    if (sorted[i] != i + 1) throw std::invalid_argument("not a permutation of 1..d");
  }
  std::vector<LabelSet> ls;
  for (const LabelSet& s : rep.label_sets()) {
    LabelSet t;
    for (int l : s.to_vector()) t.insert(perm[l - 1]);
    ls.push_back(t);
  }
  return SimRep(rep.d(), rep.intervals(), std::move(ls));
}

std::vector<std::vector<Interval>> to_track_representation(const SimRep& rep) {
  if (rep.d() == 0) throw std::invalid_argument("representation has zero tracks (d = 0)");
  std::vector<std::vector<Interval>> tracks;
  for (int label = 1; label <= rep.d(); ++label) {
    Rational right = 0;
    bool any = false;
    for (Vertex v = 0; v < rep.n(); ++v) {
      if (rep.labels(v).contains(label)) {
        right = any ? std::max(right, rep.interval(v).r) : rep.interval(v).r;
        any = true;
      }
    }
    std::vector<Interval> track;
    int dummies = 0;
    for (Vertex v = 0; v < rep.n(); ++v) {
      if (rep.labels(v).contains(label)) {
        track.push_back(rep.interval(v));
      } else {
        Rational start = right + 1 + 2 * dummies++;
        track.push_back({start, start + 1});
      }
    }
    tracks.push_back(std::move(track));
  }
  return tracks;
}

Graph track_graph(const std::vector<std::vector<Interval>>& tracks) {
  int n = tracks.empty() ? 0 : static_cast<int>(tracks.front().size());
  return pair_graph(n, [&](Vertex u, Vertex v) {
    return std::any_of(tracks.begin(), tracks.end(),
                       [&](const auto& t) { return intervals_intersect(t[u], t[v]); });
  });
}

std::vector<LabelSet> distinct_label_sets(const SimRep& rep) {
  std::set<LabelSet> s(rep.label_sets().begin(), rep.label_sets().end());
  return {s.begin(), s.end()};
}

}  // namespace simint
