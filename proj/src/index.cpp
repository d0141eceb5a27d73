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

#include "mzv/index.hpp"

#include <charconv>
#include <numeric>

namespace mzv {

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw invalid_input("index must have at least one part");
    for (int p : parts_)
        if (p < 1) throw invalid_input("index parts must be positive integers");
}

Index Index::parse(std::string_view text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 1)
            throw config_error("bad index '" + std::string(text) +
                               "': expected comma-separated positive integers");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Index(std::move(parts));
}

std::string Index::str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

long Index::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

bool is_admissible(const Index& k) { return k.admissible(); }

Index RunForm::expand() const {
    std::vector<int> parts;
    for (auto [a, b] : pairs) {
        for (int i = 0; i < a - 1; ++i) parts.push_back(1);
        parts.push_back(b + 1);
    }
    return Index(std::move(parts));
}

RunForm to_runs(const Index& k) {
    if (!k.admissible())
        throw domain_error("index " + k.str() + " is not admissible (last part < 2)");
    RunForm rf;
    int ones = 0;
    for (int p : k.parts()) {
        if (p == 1) {
            ++ones;
        } else {
            rf.pairs.emplace_back(ones + 1, p - 1); // a_p - 1 ones then b_p + 1
            ones = 0;
        }
    }
    // admissibility guarantees the scan ends on a part >= 2
    return rf;
}

Index dual(const Index& k) {
    RunForm rf = to_runs(k);
    std::vector<int> parts;
    for (auto it = rf.pairs.rbegin(); it != rf.pairs.rend(); ++it) {
        auto [a, b] = *it;
        for (int i = 0; i < b - 1; ++i) parts.push_back(1);
        parts.push_back(a + 1);
    }
    return Index(std::move(parts));
}

int Composition::total() const { return std::accumulate(shifts.begin(), shifts.end(), 0); }

namespace {

// colex: e_r ascending in the outermost (slowest) loop, e_1 absorbs the
// remainder, so (m,0,...,0) comes first
void gen_colex(int pos, int rem, std::vector<int>& e, std::vector<Composition>& out) {
    if (pos == 1) {
        e[0] = rem;
        out.push_back(Composition{e});
        return;
    }
    for (int v = 0; v <= rem; ++v) {
        e[pos - 1] = v;
        gen_colex(pos - 1, rem - v, e, out);
    }
}

} // namespace

std::vector<Composition> compositions(int r, int m) {
    if (r < 1) throw invalid_input("composition length must be >= 1");
    if (m < 0) throw invalid_input("composition total must be >= 0");
    std::vector<Composition> out;
    out.reserve(composition_count(r, m));
    std::vector<int> e(r, 0);
    gen_colex(r, m, e, out);
    return out;
}

std::uint64_t composition_count(int r, int m) {
    if (r < 1) throw invalid_input("composition length must be >= 1");
    // C(m+r-1, r-1)
    std::uint64_t num = 1;
    for (int i = 1; i <= r - 1; ++i) {
        num = num * static_cast<std::uint64_t>(m + i) / static_cast<std::uint64_t>(i);
    }
    return num;
}

Index shifted(const Index& k, const Composition& e) {
    if (static_cast<int>(e.shifts.size()) != k.depth())
        throw invalid_input("shift length does not match index depth");
    std::vector<int> parts = k.parts();
    for (size_t i = 0; i < parts.size(); ++i) parts[i] += e.shifts[i];
    return Index(std::move(parts));
}

std::vector<Index> admissible_indices(int weight) {
    if (weight < 2) throw invalid_input("admissible indices require weight >= 2");
    int gaps = weight - 2; // cut positions among the units of weight-1
    std::vector<Index> out;
    out.reserve(std::uint64_t(1) << gaps);
    for (std::uint64_t b = 0; b < (std::uint64_t(1) << gaps); ++b) {
        std::vector<int> parts;
        int cur = 1;
        for (int t = 0; t < gaps; ++t) {
            if (b >> t & 1) {
                parts.push_back(cur);
                cur = 1;
            } else {
                ++cur;
            }
        }
        parts.push_back(cur + 1); // composition of weight-1, last part bumped
        out.emplace_back(std::move(parts));
    }
    return out;
}

} // namespace mzv
