/* Copyright 2026 The QA2D Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef QA2D_ERRORS_H_
#define QA2D_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qa2d {

// Base class for every recoverable failure raised by the library. Argument
// violations use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed CoNLL-U line (wrong column count, bad integer field).
class FormatError : public Error {
 public:
  FormatError(const std::string &message, int line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A CoNLL-U block that does not describe a single-rooted tree.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class NotWhQuestion : public Error {
 public:
  using Error::Error;
};

class AnalysisError : public Error {
 public:
  using Error::Error;
};

class TransformError : public Error {
 public:
  using Error::Error;
};

// Dataset file that violates its declared schema.
class LoadError : public Error {
 public:
  LoadError(const std::string &message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class WriteError : public Error {
 public:
  using Error::Error;
};

}  // namespace qa2d

#endif  // QA2D_ERRORS_H_
