/*
 * Copyright 2026 The hlrc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hlrc/bounds.hpp"
#include "hlrc/code.hpp"
#include "hlrc/nests.hpp"
#include "hlrc/oracle.hpp"
#include "hlrc/repair.hpp"
#include "hlrc/simfail.hpp"

namespace hlrc {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "hlrc/1";

Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const FieldPtr& field, const Json& j);

Json nests_to_json(const NestSystem& sys);
Json estimate_to_json(const SplitEstimate& est);

Json bound_report_to_json(const BoundReport& r);
Json plan_to_json(const RepairPlan& plan);
Json verify_report_to_json(const VerifyReport& rep);
Json sim_report_to_json(const SimReport& rep);

Scenario scenario_from_json(const Json& j);

// Full self-describing descriptor: plan, derived parameters, evaluation
// points, and nests. include_matrix adds the generator matrix row-major.
Json descriptor_to_json(const CodeInstance& c, bool include_matrix = false);

// Rebuilds the instance from the plan fields and cross-checks any redundant
// fields (params, eval_points, matrix) present in the descriptor.
CodeInstance descriptor_from_json(const Json& j);

// Numbers with nulls at the erased coordinates.
std::pair<std::vector<std::optional<Elem>>, ErasurePattern> word_from_json(const Json& j,
                                                                           std::size_t n);

std::vector<Elem> message_from_json(const Json& j);

// Space-aligned digit grid, one generator row per line.
std::string matrix_to_text(const Matrix& m);

}  // namespace hlrc
