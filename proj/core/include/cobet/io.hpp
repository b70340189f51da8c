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

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>

#include "cobet/centrality.hpp"
#include "cobet/graph.hpp"

namespace cobet::io {

enum class Measure { kBetweenness, kCob, kCorr, kCond, kOmega };
enum class Format { kCsv, kJson, kDot };

std::optional<Measure> parse_measure(std::string_view name);
std::optional<Format> parse_format(std::string_view name);
std::optional<PairConvention> parse_convention(std::string_view name);
std::string_view measure_name(Measure measure);
std::string_view format_name(Format format);
std::string_view convention_name(PairConvention convention);

/// True for the pair-valued measures that can be drawn as a graph.
bool is_pairwise(Measure measure);

/// Dense matrix exports refuse above this vertex count; the sparse JSON
/// form has no such limit.
inline constexpr int kDenseExportLimit = 2048;

/// Matrix CSV in input label order, leading comment recording tool
/// version, measure, and convention. For the conditional measure, the cell
/// at (row u, column v) is the u-given-v value. The betweenness measure
/// writes a two-column table instead of a matrix.
void write_csv(std::ostream& out, const Graph& graph,
               const CentralityResult& result, Measure measure);

/// Sparse triplets {u, v, value} (labels) plus the betweenness vector.
/// Conditional entries mean "u given v".
void write_json(std::ostream& out, const Graph& graph,
                const CentralityResult& result, Measure measure);

/// Graphviz export of a pairwise measure: one edge per pair with value
/// strictly above min_value, edge width proportional to value and
/// max-normalized to 8.0. The conditional measure emits a digraph with an
/// arc v -> u for each u-given-v value. For the raw co-betweenness
/// measure, vertex size tracks betweenness, except that zero-betweenness
/// vertices keep a fixed unit size so they stay visible as isolated nodes.
void write_dot(std::ostream& out, const Graph& graph,
               const CentralityResult& result, Measure measure,
               double min_value = 0.0);

/// Dense exports of the oracle's Gram matrix (row-major n x n).
void write_omega_csv(std::ostream& out, const Graph& graph,
                     std::span<const double> omega, PairConvention convention);
void write_omega_json(std::ostream& out, const Graph& graph,
                      std::span<const double> omega, PairConvention convention);

}  // namespace cobet::io
