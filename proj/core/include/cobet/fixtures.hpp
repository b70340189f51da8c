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
#include <string_view>

namespace cobet {

/// A bundled edge list. `edgelist` is ready-to-parse text whose leading
/// comment block records provenance.
struct Fixture {
  std::string_view name;
  std::string_view description;
  bool weighted = false;
  std::string_view edgelist;
};

std::span<const Fixture> builtin_fixtures();

/// nullptr when the name is unknown.
const Fixture* find_fixture(std::string_view name);

}  // namespace cobet
