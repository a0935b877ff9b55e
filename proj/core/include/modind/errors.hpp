/*
   Copyright 2026 modind contributors

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

#ifndef MODIND_ERRORS_HPP
#define MODIND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modind {

/// Bad or inconsistent user-supplied data (maps to CLI exit code 2).
class input_error : public std::runtime_error {
   public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical identity that must hold has failed (maps to CLI exit code 3).
class internal_error : public std::logic_error {
   public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require_input(bool cond, const std::string& msg) {
    if (!cond) throw input_error(msg);
}

inline void require_internal(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

}  // namespace modind

#endif
