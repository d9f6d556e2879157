/*
   Copyright 2026 The mdcc Authors

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

#ifndef MDCC_ERRORS_HPP
#define MDCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mdcc {

/// Operands that do not fit together: modulus or variable count mismatch,
/// ranks or matrix dimensions that disagree.
class StructuralError : public std::invalid_argument {
   public:
    explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

/// An argument outside the mathematical domain of an operation
/// (homogenizing below the degree, a zero code, a non-homogeneous generator).
class DomainError : public std::domain_error {
   public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An operation was called on an object that does not satisfy its stated precondition.
class PreconditionError : public std::logic_error {
   public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// Text that could not be parsed. Carries a 1-based line and column inside the offending text.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace mdcc

#endif
