// Copyright 2026 The aspcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ASPCORE_SRC_GROUND_INTERNAL_HPP
#define ASPCORE_SRC_GROUND_INTERNAL_HPP

#include "aspcore/ground.hpp"

namespace aspcore {

// e under sigma with all arithmetic evaluated; nullopt if sigma is not well-formed for e.
std::optional<GroundAggregateElement> ground_element(const AggregateElement& element, const Substitution& sigma);

// Sorts by canonical text and drops duplicates.
void canonicalize(std::vector<GroundAggregateElement>& elements);

Literal to_literal(const GroundLiteral& literal);

}  // namespace aspcore

#endif  // ASPCORE_SRC_GROUND_INTERNAL_HPP
