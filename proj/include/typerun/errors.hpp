// Copyright 2026 The typerun Authors
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

namespace typerun {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value does not fit the requested width or codec domain.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A codeword or field was cut short by the end of the stream.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Raised by the bit reader itself when asked for bits past bit_length.
class UnderrunError : public TruncationError {
public:
    using TruncationError::TruncationError;
};

/// Decoded values are inconsistent with each other (e.g. a run overshoots its index set).
class CorruptDataError : public Error {
public:
    using Error::Error;
};

/// Structural problem with a container: bad magic, version, trailing bits.
class FormatError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// A Huffman codebook has no codeword for a symbol that occurs in the input.
class CoverageError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// A codec failed to reproduce its input; benchmark numbers must not be reported.
class VerificationError : public Error {
public:
    using Error::Error;
};

}  // namespace typerun
