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

#include "cobet/io.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cobet/version.hpp"

namespace cobet::io {

namespace {

std::string fmt(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

std::string quote_dot(std::string_view label) {
  std::string out = "\"";
  for (const char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void write_header_comment(std::ostream& out, Measure measure,
                          PairConvention convention) {
  out << "# cobet " << kVersion << " measure=" << measure_name(measure)
      << " convention=" << convention_name(convention) << "\n";
}

// Dense value lookup for the matrix-shaped measures.
struct MatrixView {
  const CentralityResult* result;
  Measure measure;
  PairAccumulator corr;  // materialized once for kCorr

  double at(int row, int col) const {
    if (row == col) return 0.0;
    switch (measure) {
      case Measure::kCob:
        return result->cobetweenness.value(row, col);
      case Measure::kCorr:
        return corr.value(row, col);
      case Measure::kCond:
        return cond_value(*result, row, col);
      default:
        return 0.0;
    }
  }
};

MatrixView make_view(const CentralityResult& result, Measure measure) {
  MatrixView view{&result, measure, {}};
  if (measure == Measure::kCorr) view.corr = corr_matrix(result);
  return view;
}

}  // namespace

std::optional<Measure> parse_measure(std::string_view name) {
  if (name == "betweenness") return Measure::kBetweenness;
  if (name == "cob") return Measure::kCob;
  if (name == "corr") return Measure::kCorr;
  if (name == "cond") return Measure::kCond;
  if (name == "omega") return Measure::kOmega;
  return std::nullopt;
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  if (name == "dot") return Format::kDot;
  return std::nullopt;
}

std::optional<PairConvention> parse_convention(std::string_view name) {
  if (name == "unordered") return PairConvention::kUnordered;
  if (name == "ordered") return PairConvention::kOrdered;
  return std::nullopt;
}

std::string_view measure_name(Measure measure) {
  switch (measure) {
    case Measure::kBetweenness: return "betweenness";
    case Measure::kCob: return "cob";
    case Measure::kCorr: return "corr";
    case Measure::kCond: return "cond";
    case Measure::kOmega: return "omega";
  }
  return "?";
}

std::string_view format_name(Format format) {
  switch (format) {
    case Format::kCsv: return "csv";
    case Format::kJson: return "json";
    case Format::kDot: return "dot";
  }
  return "?";
}

std::string_view convention_name(PairConvention convention) {
  return convention == PairConvention::kUnordered ? "unordered" : "ordered";
}

bool is_pairwise(Measure measure) {
  return measure == Measure::kCob || measure == Measure::kCorr ||
         measure == Measure::kCond;
}

void write_csv(std::ostream& out, const Graph& graph,
               const CentralityResult& result, Measure measure) {
  const int n = graph.vertex_count();
  write_header_comment(out, measure, result.convention);

  if (measure == Measure::kBetweenness) {
    out << "label,betweenness\n";
    for (int v = 0; v < n; ++v)
      out << graph.label(v) << ',' << fmt(result.betweenness[v]) << '\n';
    return;
  }
  if (n > kDenseExportLimit)
    throw GraphError("matrix CSV export limited to " +
                     std::to_string(kDenseExportLimit) +
                     " vertices; use the JSON format");

  const MatrixView view = make_view(result, measure);
  out << "label";
  for (int v = 0; v < n; ++v) out << ',' << graph.label(v);
  out << '\n';
  for (int row = 0; row < n; ++row) {
    out << graph.label(row);
    for (int col = 0; col < n; ++col) out << ',' << fmt(view.at(row, col));
    out << '\n';
  }
}

void write_json(std::ostream& out, const Graph& graph,
                const CentralityResult& result, Measure measure) {
  nlohmann::json j;
  j["tool"] = "cobet";
  j["version"] = std::string(kVersion);
  j["measure"] = std::string(measure_name(measure));
  j["convention"] = std::string(convention_name(result.convention));
  j["labels"] = nlohmann::json::array();
  for (const auto& label : graph.labels()) j["labels"].push_back(label);
  j["betweenness"] = result.betweenness;

  auto pairs = nlohmann::json::array();
  if (measure == Measure::kCob || measure == Measure::kCorr) {
    const PairAccumulator& map = measure == Measure::kCob
                                     ? result.cobetweenness
                                     : corr_matrix(result);
    for (const PairValue& e : map.sorted_entries()) {
      if (e.value == 0.0) continue;
      pairs.push_back({{"u", graph.label(e.u)},
                       {"v", graph.label(e.v)},
                       {"value", e.value}});
    }
  } else if (measure == Measure::kCond) {
    for (const CondValue& e : cond_matrix(result))
      pairs.push_back({{"u", graph.label(e.u)},
                       {"v", graph.label(e.given)},
                       {"value", e.value}});
  }
  j["pairs"] = std::move(pairs);
  out << j.dump(2) << '\n';
}

void write_dot(std::ostream& out, const Graph& graph,
               const CentralityResult& result, Measure measure,
               double min_value) {
  if (!is_pairwise(measure))
    throw GraphError("DOT export is only defined for pairwise measures");
  const int n = graph.vertex_count();
  const bool directed = measure == Measure::kCond;

  struct Arrow {
    int tail, head;
    double value;
  };
  std::vector<Arrow> arrows;
  if (measure == Measure::kCond) {
    for (const CondValue& e : cond_matrix(result))
      if (e.value > min_value) arrows.push_back({e.given, e.u, e.value});
  } else {
    const PairAccumulator& map = measure == Measure::kCob
                                     ? result.cobetweenness
                                     : corr_matrix(result);
    for (const PairValue& e : map.sorted_entries())
      if (e.value > min_value) arrows.push_back({e.u, e.v, e.value});
  }
  double max_value = 0.0;
  for (const Arrow& a : arrows) max_value = std::max(max_value, a.value);

  double max_b = 0.0;
  for (const double b : result.betweenness) max_b = std::max(max_b, b);

  out << (directed ? "digraph" : "graph") << " cobet_"
      << measure_name(measure) << " {\n";
  out << "  node [shape=circle, fixedsize=true];\n";
  for (int v = 0; v < n; ++v) {
    out << "  " << quote_dot(graph.label(v));
    if (measure == Measure::kCob) {
      // Size tracks betweenness; zero-betweenness vertices keep unit size.
      const double b = result.betweenness[v];
      const double width = (b > 0.0 && max_b > 0.0) ? 2.0 * b / max_b : 1.0;
      out << " [width=" << fmt(width) << ", height=" << fmt(width) << "]";
    }
    out << ";\n";
  }
  for (const Arrow& a : arrows) {
    const double penwidth = max_value > 0.0 ? 8.0 * a.value / max_value : 1.0;
    out << "  " << quote_dot(graph.label(a.tail)) << (directed ? " -> " : " -- ")
        << quote_dot(graph.label(a.head)) << " [penwidth=" << fmt(penwidth)
        << "];\n";
  }
  out << "}\n";
}

void write_omega_csv(std::ostream& out, const Graph& graph,
                     std::span<const double> omega, PairConvention convention) {
  const int n = graph.vertex_count();
  if (n > kDenseExportLimit)
    throw GraphError("matrix CSV export limited to " +
                     std::to_string(kDenseExportLimit) + " vertices");
  write_header_comment(out, Measure::kOmega, convention);
  out << "label";
  for (int v = 0; v < n; ++v) out << ',' << graph.label(v);
  out << '\n';
  for (int row = 0; row < n; ++row) {
    out << graph.label(row);
    for (int col = 0; col < n; ++col)
      out << ',' << fmt(omega[static_cast<std::size_t>(row) * n + col]);
    out << '\n';
  }
}

void write_omega_json(std::ostream& out, const Graph& graph,
                      std::span<const double> omega,
                      PairConvention convention) {
  const int n = graph.vertex_count();
  nlohmann::json j;
  j["tool"] = "cobet";
  j["version"] = std::string(kVersion);
  j["measure"] = "omega";
  j["convention"] = std::string(convention_name(convention));
  j["labels"] = nlohmann::json::array();
  for (const auto& label : graph.labels()) j["labels"].push_back(label);
  auto entries = nlohmann::json::array();
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      const double value = omega[static_cast<std::size_t>(u) * n + v];
      if (value != 0.0)
        entries.push_back({{"u", graph.label(u)},
                           {"v", graph.label(v)},
                           {"value", value}});
    }
  j["entries"] = std::move(entries);
  out << j.dump(2) << '\n';
}

}  // namespace cobet::io
