// Copyright 2026 The marketrl Authors
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

#include <stdexcept>
#include <string>

namespace marketrl {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic between bundles whose good sets differ.
class SchemaMismatchError : public Error {
 public:
  explicit SchemaMismatchError(const std::string& what) : Error(what) {}
};

/// A ledger transfer exceeding the payer's wealth. Signals a bid-capping
/// bug upstream; capped bids can never trigger it.
class InsufficientFundsError : public Error {
 public:
  explicit InsufficientFundsError(const std::string& what) : Error(what) {}
};

/// Auction requested on an economy with no enrolled agents.
class EmptyEconomyError : public Error {
 public:
  explicit EmptyEconomyError(const std::string& what) : Error(what) {}
};

/// Action not admissible for the current state.
class InvalidActionError : public Error {
 public:
  explicit InvalidActionError(const std::string& what) : Error(what) {}
};

/// Layer shapes that do not compose.
class DimensionMismatchError : public Error {
 public:
  explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

/// Market graph with a cycle.
class CyclicGraphError : public Error {
 public:
  explicit CyclicGraphError(const std::string& what) : Error(what) {}
};

/// Node evaluated without a Jacobian oracle.
class MissingJacobianError : public Error {
 public:
  explicit MissingJacobianError(const std::string& what) : Error(what) {}
};

/// Malformed or out-of-range configuration.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace marketrl
