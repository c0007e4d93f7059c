/*
   Copyright 2026 The qfsplit Authors

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

#ifndef QFSPLIT_ERROR_HPP
#define QFSPLIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfs {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class RingMismatch : public Error {
public:
    RingMismatch() : Error("ring mismatch") {}
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    LengthMismatch() : Error("Witt vector length mismatch") {}
    using Error::Error;
};

class ZeroInput : public Error {
public:
    ZeroInput() : Error("zero polynomial") {}
};

class NotClosed : public Error {
public:
    NotClosed() : Error("differential form is not closed") {}
};

class SocleSurvives : public Error {
public:
    SocleSurvives() : Error("Frobenius does not kill the socle; no Witt carry is defined") {}
};

class SplitNotFound : public Error {
public:
    SplitNotFound() : Error("no monomial splitting N = x^p A + y^p B exists") {}
};

class SingularCurve : public Error {
public:
    SingularCurve() : Error("singular curve: discriminant vanishes") {}
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace qfs

#endif
