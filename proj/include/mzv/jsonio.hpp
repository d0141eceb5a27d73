/* Copyright 2026 The mzv Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef MZV_JSONIO_HPP
#define MZV_JSONIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "mzv/verify.hpp"

namespace mzv {

/// Machine-readable record for single-evaluation commands.  Every
/// numeric field is a full-precision decimal string; nothing is rounded
/// to machine doubles on the way out.  elapsed_ms is attached only on
/// request (it would break byte-for-byte output determinism).
struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    Evaluation eval;
    std::optional<double> elapsed_ms;

    explicit OutputRecord(Prec p) : eval(p) {}
};

std::string to_json(const OutputRecord& rec, Prec bits);
std::string to_json(const RelationReport& rep, Prec bits);

/// Inclusive axis grid "re=a:b:step[,im=c:d:step]".  A missing im axis
/// means {0}; an axis whose end lies below its start is empty.
struct GridSpec {
    std::vector<double> re, im;
    /// Row-major points: re varies in the outer loop, im in the inner.
    std::vector<Complex> points(Prec bits) const;
    size_t size() const { return re.size() * im.size(); }
};

GridSpec parse_grid(const std::string& text);

/// "RE" or "RE,IM" at full precision.
Complex parse_complex(const std::string& text, Prec bits);

/// Loads a verification suite from a JSON file.  Malformed files throw
/// config_error.
SuiteSpec load_suite_file(const std::string& path, Prec bits);

} // namespace mzv

#endif
