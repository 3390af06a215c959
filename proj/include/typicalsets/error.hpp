/*
 * Copyright 2026 The typicalsets authors
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

namespace typicalsets {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two operands live in different numeric backends (exact vs float).
struct BackendMismatch final : Error {
  using Error::Error;
};

/// Points or sets of different ambient dimension were combined.
struct DimensionMismatch final : Error {
  using Error::Error;
};

/// An operation that requires a nonempty set received an empty one.
struct EmptySetError final : Error {
  using Error::Error;
};

/// Coincident points where distinct ones are required.
struct DegenerateInput final : Error {
  using Error::Error;
};

/// An enumeration or expansion would exceed the configured cap.
struct CapExceeded final : Error {
  using Error::Error;
};

/// Rejection sampling ran out of retries; message names the blocking cube.
struct RetryExhausted final : Error {
  using Error::Error;
};

/// Witness search descended past the allowed depth without success.
struct WitnessSearchFailed final : Error {
  using Error::Error;
};

/// A nowhere-dense scheme fails its structural invariants.
struct MalformedScheme final : Error {
  using Error::Error;
};

/// Malformed textual input (rationals, JSON documents, flag values).
struct ParseError final : Error {
  using Error::Error;
};

/// A postcondition that is re-verified before returning did not hold.
struct InvariantViolation final : Error {
  using Error::Error;
};

}  // namespace typicalsets
