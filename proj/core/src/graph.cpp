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

#include "cobet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <unordered_set>
#include <utility>

namespace cobet {

namespace {

std::uint64_t pair_key(int u, int v) {
  const auto lo = static_cast<std::uint64_t>(std::min(u, v));
  const auto hi = static_cast<std::uint64_t>(std::max(u, v));
  return (lo << 32) | hi;
}

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

Graph Graph::from_edges(std::vector<std::string> labels,
                        std::vector<EdgeRecord> edges, bool weighted) {
  Graph g;
  g.weighted_ = weighted;
  g.labels_ = std::move(labels);
  g.index_.reserve(g.labels_.size());
  for (int i = 0; i < static_cast<int>(g.labels_.size()); ++i) {
    if (!g.index_.emplace(g.labels_[i], i).second)
      throw GraphError("duplicate vertex label '" + g.labels_[i] + "'");
  }
  g.adjacency_.resize(g.labels_.size());

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size());
  const int n = g.vertex_count();
  for (const EdgeRecord& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw GraphError("edge endpoint out of range");
    if (e.u == e.v)
      throw GraphError("self-loop at vertex '" + g.labels_[e.u] + "'");
    if (!seen.insert(pair_key(e.u, e.v)).second)
      throw GraphError("duplicate edge " + g.labels_[e.u] + "-" + g.labels_[e.v]);
    double w = e.weight;
    if (weighted) {
      if (!(w > 0.0) || !std::isfinite(w))
        throw GraphError("non-positive edge weight");
    } else {
      w = 1.0;
    }
    g.adjacency_[e.u].push_back({e.v, w});
    g.adjacency_[e.v].push_back({e.u, w});
    g.edges_.push_back({e.u, e.v, w});
  }
  return g;
}

int Graph::find_vertex(std::string_view label) const {
  auto it = index_.find(std::string(label));
  return it == index_.end() ? -1 : it->second;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

Graph parse_edgelist(std::string_view text, const EdgeListOptions& options,
                     std::vector<ParseDiagnostic>* warnings) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<EdgeRecord> edges;
  std::unordered_set<std::uint64_t> seen;

  auto intern = [&](std::string_view token) {
    auto it = index.find(std::string(token));
    if (it != index.end()) return it->second;
    int id = static_cast<int>(labels.size());
    labels.emplace_back(token);
    index.emplace(labels.back(), id);
    return id;
  };

  int columns = 0;  // column count fixed by the first data line
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (tokens.size() != 2 && tokens.size() != 3)
      throw ParseError(line_no, "expected 'label label [weight]', got " +
                                    std::to_string(tokens.size()) + " columns");
    if (columns == 0)
      columns = static_cast<int>(tokens.size());
    else if (columns != static_cast<int>(tokens.size()))
      throw ParseError(line_no, "inconsistent column count");

    if (tokens[0] == tokens[1])
      throw ParseError(line_no, "self-loop at '" + std::string(tokens[0]) + "'");

    double weight = 1.0;
    if (tokens.size() == 3) {
      const std::string_view w = tokens[2];
      auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
      if (ec != std::errc{} || ptr != w.data() + w.size())
        throw ParseError(line_no, "malformed weight '" + std::string(w) + "'");
      if (!(weight > 0.0) || !std::isfinite(weight))
        throw ParseError(line_no, "non-positive weight '" + std::string(w) + "'");
    }

    int u = intern(tokens[0]);
    int v = intern(tokens[1]);
    if (!seen.insert(pair_key(u, v)).second) {
      if (warnings)
        warnings->push_back({line_no, "duplicate edge " + std::string(tokens[0]) +
                                          "-" + std::string(tokens[1]) +
                                          " collapsed"});
      continue;
    }
    edges.push_back({u, v, options.weighted ? weight : 1.0});
  }

  return Graph::from_edges(std::move(labels), std::move(edges), options.weighted);
}

std::string serialize_edgelist(const Graph& graph) {
  std::string out;
  for (const EdgeRecord& e : graph.edges()) {
    out += graph.label(e.u);
    out += ' ';
    out += graph.label(e.v);
    if (graph.weighted()) {
      out += ' ';
      out += format_double(e.weight);
    }
    out += '\n';
  }
  return out;
}

ComponentReport components(const Graph& graph) {
  const int n = graph.vertex_count();
  ComponentReport report;
  report.component_id.assign(n, -1);
  std::vector<int> queue;
  for (int start = 0; start < n; ++start) {
    if (report.component_id[start] >= 0) continue;
    const int id = report.component_count++;
    int size = 0;
    queue.assign(1, start);
    report.component_id[start] = id;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      ++size;
      for (const Neighbor& nb : graph.neighbors(v)) {
        if (report.component_id[nb.to] < 0) {
          report.component_id[nb.to] = id;
          queue.push_back(nb.to);
        }
      }
    }
    report.sizes.push_back(size);
  }
  return report;
}

}  // namespace cobet
