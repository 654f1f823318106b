// Copyright 2026 The qlrc Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qlrc {

/// Base of every error raised by the library. `exit_code()` is the process
/// exit status the command-line tool reports for it.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept = 0;
};

/// Malformed input: unparsable files, wrong lengths, invalid encodings.
class InputError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 1; }
};

/// A precondition or construction guard does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

/// An exhaustive oracle would exceed the configured enumeration budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

/// A checked identity failed. On family builds this indicates a bug.
class VerificationFailure : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

}  // namespace qlrc
