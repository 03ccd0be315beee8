/* Copyright 2026 The Qtrack Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <doctest.h>

#include "qtrack/basis.hpp"
#include "qtrack/errors.hpp"

using qtrack::Basis;
using qtrack::BasisState;

TEST_SUITE("basis") {

TEST_CASE("dimensions") {
  CHECK(Basis::enumerate(0).dim() == 1);
  CHECK(Basis::enumerate(0).state(0) == BasisState{0, 0, 0});
  CHECK(Basis::enumerate(1).dim() == 10);  // 1 + 9
  CHECK(Basis::enumerate(30, 0).dim() == 961);
  CHECK(Basis::enumerate(30, 1).dim() == 960);
  CHECK(Basis::enumerate(5, -2).dim() == 36 - 4);
}

TEST_CASE("canonical ordering and index bijection") {
  for (const Basis& basis : {Basis::enumerate(4), Basis::enumerate(4, 0), Basis::enumerate(4, -3)}) {
    for (int i = 0; i < basis.dim(); ++i) {
      CHECK(basis.index_of(basis.state(i)) == i);
      if (i > 0) {
        CHECK(basis.state(i - 1) < basis.state(i));  // (J,K,M) lexicographic
      }
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(Basis::enumerate(-1), qtrack::DomainError);
  CHECK_THROWS_AS(Basis::enumerate(3, 4), qtrack::DomainError);
  CHECK_THROWS_AS(Basis::enumerate(3).index_of(BasisState{4, 0, 0}), qtrack::DomainError);
  CHECK_THROWS_AS(Basis::enumerate(3).index_of(BasisState{1, 2, 0}), qtrack::DomainError);
  CHECK_THROWS_AS(Basis::enumerate(3, 0).index_of(BasisState{1, 1, 0}), qtrack::DomainError);
}

TEST_CASE("k block membership") {
  const Basis block = Basis::enumerate(6, 2);
  for (const BasisState& s : block.states()) {
    CHECK(s.k == 2);
    CHECK(s.j >= 2);
  }
}

}  // TEST_SUITE
