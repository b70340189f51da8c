// Copyright 2026 The cobet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cobet {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge-list parsing failure. Carries the 1-based line number of the
/// offending input line.
class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& message)
      : GraphError("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct Neighbor {
  int to = 0;
  double weight = 1.0;
};

/// An edge in its original ingestion orientation. Kept so that
/// serialize_edgelist() can reproduce the input byte layout.
struct EdgeRecord {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

/// Immutable undirected graph with stable string vertex labels.
///
/// Invariants enforced at construction:
///   - adjacency is symmetric: (u,v,w) is stored iff (v,u,w) is,
///   - no self-loops, no duplicate edges,
///   - weights strictly positive when the weighted flag is set and
///     exactly 1.0 otherwise,
///   - labels are unique; vertex index order equals first-appearance
///     order in the input.
///
/// A Graph never changes after construction and is safe to share across
/// concurrent workers.
class Graph {
 public:
  Graph() = default;

  /// Validates the invariants above and throws GraphError on violation.
  static Graph from_edges(std::vector<std::string> labels,
                          std::vector<EdgeRecord> edges, bool weighted);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool weighted() const { return weighted_; }

  std::span<const Neighbor> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  const std::string& label(int v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }
  /// Index of a label, or -1 when the label is unknown.
  int find_vertex(std::string_view label) const;

  /// Edges in ingestion order, original orientation.
  std::span<const EdgeRecord> edges() const { return edges_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<EdgeRecord> edges_;
  std::unordered_map<std::string, int> index_;
  bool weighted_ = false;
};

struct ParseDiagnostic {
  int line = 0;
  std::string message;
};

struct EdgeListOptions {
  bool weighted = false;
};

/// Parses whitespace-separated edge-list text: "label label [weight]" per
/// line, '#' lines and blank lines ignored. Vertex indices follow first
/// appearance. Duplicate edges collapse to the first occurrence and emit a
/// warning diagnostic; self-loops, non-positive or malformed weights, and
/// inconsistent column counts are rejected with a ParseError.
Graph parse_edgelist(std::string_view text, const EdgeListOptions& options = {},
                     std::vector<ParseDiagnostic>* warnings = nullptr);

/// Inverse of parse_edgelist up to comments: parse(serialize(g)) reproduces
/// g exactly (labels, indices, weights). Isolated vertices cannot be
/// expressed in the edge-list format and are dropped.
std::string serialize_edgelist(const Graph& graph);

struct ComponentReport {
  int component_count = 0;
  std::vector<int> component_id;  // dense ids in [0, component_count)
  std::vector<int> sizes;         // sizes sum to vertex_count
};

ComponentReport components(const Graph& graph);

}  // namespace cobet
