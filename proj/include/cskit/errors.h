// Copyright 2026 The cskit Authors
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

#ifndef CSKIT_ERRORS_H
#define CSKIT_ERRORS_H

#include <stdexcept>

namespace cskit {

/// Bad argument: out-of-range photon number, mismatched shapes, non-finite amplitudes.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested state does not fit in the requested cutoff.
struct TruncationError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A caller broke an operation's precondition (e.g. correcting a rejected outcome).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace cskit

#endif
