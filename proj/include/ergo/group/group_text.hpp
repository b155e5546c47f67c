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

#include "ergo/group/character.hpp"
#include "ergo/group/group.hpp"
#include "ergo/group/selfmap.hpp"

namespace ergo {

// Canonical text forms.
//
//   descriptor  integer_line | lattice d=2 | free_sum | prime_sum p=3
//               | poly_ring p=3 | finite_field p=3 k=2
//   element     [a,b,c]            coordinates x_1, x_2, ...; [] is zero
//   character   char y=[1,0,2]     residue characters of p-torsion groups
//               char theta=[1/4,0] tail=1/3
//   self-map    identity | power 3/2 | ringpoly [c0] [c1] ... | hom [1,2;0,1]
//               | compose <map> ; <map> ; ...   (first map applied first)

std::string to_text(const GroupDescriptor& desc);
GroupDescriptor parse_descriptor(std::string_view text);

std::string to_text(const GroupElement& g);
GroupElement parse_element(const GroupDescriptor& desc, std::string_view text);

std::string to_text(const Character& chi);
Character parse_character(const GroupDescriptor& desc, std::string_view text);

std::string to_text(const GroupSelfMap& a);
GroupSelfMap parse_selfmap(const GroupDescriptor& desc, std::string_view text);

}  // namespace ergo
