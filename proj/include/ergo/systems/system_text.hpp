// Copyright 2026 The ergo authors
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

#include <string>
#include <string_view>

#include "ergo/systems/system.hpp"

namespace ergo {

// Canonical system text; `group=(...)` is omitted for integer_line.
//
//   finite weights=[1/3,1/3,1/3] perms=[[1,2,0]] orders=[3]
//   torus d=1 alpha=sqrt2m1                 one generator, one coordinate
//   torus d=2 alpha=[1/3,sqrt2m1;0,golden]  rows are generators
//   bernoulli p=[1/2,1/2] group=(prime_sum p=3)

std::string to_text(const System& sys);
System parse_system(std::string_view text);

}  // namespace ergo
