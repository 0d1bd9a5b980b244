/*
   Copyright 2026 The dirspec Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DIRSPEC_ERRORS_HPP
#define DIRSPEC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dirspec {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, or 0 when not tied to a file line.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input that is well formed but degenerate: empty sets, duplicate points or lines.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// Operands from different coordinate domains (e.g. cyclotomic elements of different order).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Precondition violations not covered above.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

} // namespace dirspec

#endif // DIRSPEC_ERRORS_HPP
