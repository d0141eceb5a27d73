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

#ifndef MZV_ERRORS_HPP
#define MZV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mzv {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed user input: unparseable index strings, bad grid specs,
/// malformed suite files, contradictory flags.  CLI exit code 2.
struct config_error : error {
    using error::error;
};

/// A precondition on argument values was violated (empty index,
/// N < depth, non-increasing pivot list, duplicate poles, ...).
struct invalid_input : error {
    using error::error;
};

/// The requested evaluation lies outside the operation's mathematical
/// domain: non-admissible index for a zeta value, arguments outside the
/// series' absolute-convergence region.
struct domain_error : error {
    using error::error;
};

/// Adaptive evaluation hit its term cap before reaching the target
/// epsilon.  The message carries the best achieved estimate.
struct convergence_error : error {
    using error::error;
};

/// The operation is deliberately capability-limited (brute-force oracle
/// depth/term bounds) and the request exceeds those limits.
struct capability_error : error {
    using error::error;
};

} // namespace mzv

#endif
