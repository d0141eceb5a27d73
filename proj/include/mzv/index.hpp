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

#ifndef MZV_INDEX_HPP
#define MZV_INDEX_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mzv/errors.hpp"

namespace mzv {

/// A composition of positive integers (k_1, ..., k_r), r >= 1.
/// Admissible iff the last part is >= 2 (the nested zeta series then
/// converges).  Immutable after construction.
class Index {
  public:
    explicit Index(std::vector<int> parts);
    Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

    /// Parses "k1,k2,...": comma-separated positive integers, no spaces.
    static Index parse(std::string_view text);
    std::string str() const;

    const std::vector<int>& parts() const { return parts_; }
    int depth() const { return static_cast<int>(parts_.size()); }
    long weight() const;
    bool admissible() const { return parts_.back() >= 2; }
    int last() const { return parts_.back(); }

    friend bool operator==(const Index& a, const Index& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Index& a, const Index& b) { return !(a == b); }
    friend bool operator<(const Index& a, const Index& b) { return a.parts_ < b.parts_; }

  private:
    std::vector<int> parts_;
};

bool is_admissible(const Index& k);

/// Run-length form of an admissible index:
/// k = (1^{a_1-1}, b_1+1, ..., 1^{a_l-1}, b_l+1) with a_p, b_p >= 1.
/// The decomposition is unique; expand() reproduces the source index.
struct RunForm {
    std::vector<std::pair<int, int>> pairs; // (a_p, b_p)
    Index expand() const;
    int blocks() const { return static_cast<int>(pairs.size()); }
};

RunForm to_runs(const Index& k); // throws domain_error unless admissible

/// Dual index (1^{b_l-1}, a_l+1, ..., 1^{b_1-1}, a_1+1): swap run
/// lengths and reverse block order.  Involution; preserves weight;
/// depth(k) + depth(dual(k)) = weight(k).
Index dual(const Index& k);

/// Nonnegative shift exponents (e_1, ..., e_r) with a fixed total.
struct Composition {
    std::vector<int> shifts;
    int total() const;
};

/// All (e_1,...,e_r) with e_i >= 0 and sum m, in colexicographic order
/// (the tuple with everything on e_1 comes first; e_r varies slowest).
/// C(m+r-1, r-1) entries.  Throws invalid_input for r < 1.
std::vector<Composition> compositions(int r, int m);

/// C(m+r-1, r-1) without enumeration.
std::uint64_t composition_count(int r, int m);

/// k + e, componentwise.
Index shifted(const Index& k, const Composition& e);

/// All 2^{w-2} admissible indices of exact weight w (w >= 2), in a
/// deterministic order: the b-th index, b = 0..2^{w-2}-1, is the b-th
/// composition of w-1 (bit t of b set = cut after unit t+1) with its
/// last part incremented.
std::vector<Index> admissible_indices(int weight);

} // namespace mzv

#endif
