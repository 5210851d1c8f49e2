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

#ifndef QA2D_TEXT_UTILS_H_
#define QA2D_TEXT_UTILS_H_

#include <string>
#include <string_view>
#include <vector>

namespace qa2d {

std::string ToLower(std::string_view text);

// Strips leading and trailing ASCII whitespace.
std::string Trim(std::string_view text);

// Splits on runs of ASCII whitespace; empty fields are dropped.
std::vector<std::string> SplitWhitespace(std::string_view text);

std::vector<std::string> Split(std::string_view text, char delimiter);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

// Evaluation normalization: lowercase, delete every ASCII punctuation
// character, split on whitespace. Shared by exact match, BLEU and the
// corpus statistics so that all numbers are computed on the same tokens.
std::vector<std::string> Normalize(std::string_view text);

bool IsAsciiPunct(char c);

}  // namespace qa2d

#endif  // QA2D_TEXT_UTILS_H_
