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

#include "qa2d/data_files.h"

#include <fstream>
#include <sstream>

#include "qa2d/errors.h"
#include "qa2d/text_utils.h"

namespace qa2d {

std::vector<std::pair<std::string, std::string>> ParseKeyValueData(
    std::string_view text) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::vector<std::string> lines = Split(text, '\n');
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() != 2) {
      throw LoadError("expected key<TAB>value", static_cast<int>(i) + 1);
    }
    std::string key = Trim(fields[0]);
    std::string value = Trim(fields[1]);
    if (key.empty() || value.empty()) {
      throw LoadError("empty key or value", static_cast<int>(i) + 1);
    }
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace qa2d
