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

#include <stdexcept>
#include <string>

namespace hlrc {

enum class Errc {
  // Validation errors: malformed inputs, parameters outside their domain.
  NotPrime,
  Reducible,
  CapacityExceeded,
  FieldMismatch,
  DuplicateAbscissa,
  EmptyInput,
  ZeroPolynomial,
  ConstantPolynomial,
  NotEnoughNests,
  InvalidParams,
  InvalidPlan,
  LengthMismatch,
  RankDeficientGenerator,
  BadInput,
  // Runtime errors: well-formed request that cannot be satisfied.
  DivisionByZero,
  TooManyErasures,
  InconsistentWord,
  TooLarge,
};

const char* errc_name(Errc c);

// True for errors that reject the request up front (CLI exit code 2);
// false for failures discovered while executing it (CLI exit code 3).
bool errc_is_validation(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hlrc
