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

#include "cobet/fixtures.hpp"

#include <array>

namespace cobet {

namespace {

constexpr std::string_view kKarate = R"(# karate: Zachary's karate club interaction network.
# Source: the standard public 34-vertex dataset; actors are numbered 1..34
# as in the original study. Treated as unweighted for geodesic purposes.
# 34 vertices, 78 edges.
1 2
1 3
1 4
1 5
1 6
1 7
1 8
1 9
1 11
1 12
1 13
1 14
1 18
1 20
1 22
1 32
2 3
2 4
2 8
2 14
2 18
2 20
2 22
2 31
3 4
3 8
3 9
3 10
3 14
3 28
3 29
3 33
4 8
4 13
4 14
5 7
5 11
6 7
6 11
6 17
7 17
9 31
9 33
9 34
10 34
14 34
15 33
15 34
16 33
16 34
19 33
19 34
20 34
21 33
21 34
23 33
23 34
24 26
24 28
24 30
24 33
24 34
25 26
25 28
25 32
26 32
27 30
27 34
28 34
29 32
29 34
30 33
30 34
31 33
31 34
32 33
32 34
33 34
)";

constexpr std::string_view kAbilene = R"(# abilene: Abilene (Internet2) backbone, 11 points of presence.
# provenance: transcribed-from-figure. The adjacency was read off a
# published diagram of the physical topology and is not independently
# verified; the third column carries route-length link metrics so that
# shortest paths are unique, matching how traffic is actually routed on
# this network. Weighted mode is intended.
# 11 vertices, 14 edges.
Seattle Sunnyvale 680
Seattle Denver 1020
Sunnyvale Denver 950
Sunnyvale LosAngeles 340
LosAngeles Houston 1800
Denver KansasCity 560
KansasCity Houston 650
KansasCity Indianapolis 450
Houston Atlanta 700
Indianapolis Atlanta 550
Indianapolis Chicago 165
Atlanta Washington 550
Chicago NewYork 710
NewYork Washington 200
)";

constexpr std::string_view kStrike = R"(# strike: communication network of 24 actors in a wood-processing
# facility strike, three employee groups (four younger Spanish-speaking,
# nine younger English-speaking, eleven older English-speaking).
# provenance: transcribed-from-figure. Reconstructed from a published
# sociogram of the dispute; the edge set is not independently verified.
# 24 vertices, 31 edges.
Alejandro Carlos
Alejandro Domingo
Alejandro Eduardo
Carlos Domingo
Carlos Eduardo
Domingo Eduardo
Alejandro Bob
Bob Norm
Bob Mike
Bob Lanny
Bob Ike
Bob Hal
Bob Karl
Mike Lanny
Ike Gill
Gill Frank
Hal John
John Karl
Norm Ozzie
Norm Ted
Norm Utrecht
Norm Xavier
Norm Paul
Sam Ozzie
Sam Ted
Sam Wendle
Ted Vern
Vern Xavier
Utrecht Russ
Russ Quint
Quint Paul
)";

constexpr std::array<Fixture, 3> kFixtures{{
    {"karate", "Zachary karate club, 34 actors, unweighted", false, kKarate},
    {"abilene", "Abilene Internet2 backbone, 11 PoPs, route-metric weights",
     true, kAbilene},
    {"strike", "strike communication network, 24 actors, unweighted", false,
     kStrike},
}};

}  // namespace

std::span<const Fixture> builtin_fixtures() { return kFixtures; }

const Fixture* find_fixture(std::string_view name) {
  for (const Fixture& f : kFixtures)
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace cobet
