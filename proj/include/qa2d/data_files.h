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

#ifndef QA2D_DATA_FILES_H_
#define QA2D_DATA_FILES_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qa2d {

// Parses a UTF-8 `key<TAB>value` file body. Lines starting with '#' and
// blank lines are ignored. Throws LoadError (with line number) for lines
// without exactly one tab, or with an empty key or value.
std::vector<std::pair<std::string, std::string>> ParseKeyValueData(
    std::string_view text);

// Reads a whole file; throws LoadError when it cannot be opened.
std::string ReadFile(const std::string &path);

// Data files compiled into the library from data/.
namespace bundled {
std::string_view IrregularPast();
std::string_view IrregularThirdSingular();
std::string_view ConsonantDoubling();
std::string_view Prepositions();
std::string_view ArticleExceptions();
}  // namespace bundled

}  // namespace qa2d

#endif  // QA2D_DATA_FILES_H_
