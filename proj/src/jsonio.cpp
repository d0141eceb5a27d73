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

#include "mzv/jsonio.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace mzv {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json complex_json(const Complex& z) {
    return ordered_json{{"re", z.re().decimal()}, {"im", z.im().decimal()}};
}

ordered_json eval_json(const Evaluation& ev) {
    ordered_json j;
    j["value"] = complex_json(ev.value);
    j["error_estimate"] = ev.error_estimate.decimal();
    j["error_model"] = to_string(ev.model);
    j["terms_used"] = ev.terms_used;
    j["cancellation_ratio"] = ev.cancellation_ratio.decimal();
    return j;
}

ordered_json inputs_json(const std::vector<std::pair<std::string, std::string>>& inputs) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : inputs) {
        if (k == "s" || k == "s1" || k == "s2") {
            // complex inputs echo as {re, im}
            size_t comma = v.find(',');
            if (comma == std::string::npos) {
                j[k] = ordered_json{{"re", v}, {"im", "0"}};
            } else {
                j[k] = ordered_json{{"re", v.substr(0, comma)}, {"im", v.substr(comma + 1)}};
            }
        } else {
            j[k] = v;
        }
    }
    return j;
}

} // namespace

std::string to_json(const OutputRecord& rec, Prec bits) {
    ordered_json j;
    j["command"] = rec.command;
    j["inputs"] = inputs_json(rec.inputs);
    j["result"] = complex_json(rec.eval.value);
    j["error_estimate"] = rec.eval.error_estimate.decimal();
    j["error_model"] = to_string(rec.eval.model);
    j["terms_used"] = rec.eval.terms_used;
    j["cancellation_ratio"] = rec.eval.cancellation_ratio.decimal();
    j["precision_bits"] = static_cast<long>(bits);
    if (rec.elapsed_ms) j["elapsed_ms"] = *rec.elapsed_ms;
    return j.dump();
}

std::string to_json(const RelationReport& rep, Prec bits) {
    ordered_json j;
    j["kind"] = rep.kind;
    j["inputs"] = inputs_json(rep.inputs);
    j["lhs"] = eval_json(rep.lhs);
    j["rhs"] = eval_json(rep.rhs);
    j["residual"] = rep.residual.decimal();
    j["tolerance"] = rep.tolerance.decimal();
    j["verdict"] = rep.pass ? "pass" : "fail";
    j["precision_bits"] = static_cast<long>(bits);
    return j.dump();
}

namespace {

std::vector<double> parse_axis(const std::string& text, const std::string& name) {
    // a:b:step, inclusive endpoints
    size_t c1 = text.find(':');
    size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw config_error("grid axis '" + name + "' must look like start:end:step");
    double a, b, step;
    try {
        size_t used = 0;
        a = std::stod(text.substr(0, c1), &used);
        if (used != c1) throw std::invalid_argument("");
        std::string mid = text.substr(c1 + 1, c2 - c1 - 1);
        b = std::stod(mid, &used);
        if (used != mid.size()) throw std::invalid_argument("");
        std::string rest = text.substr(c2 + 1);
        step = std::stod(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw config_error("grid axis '" + name + "': bad number in '" + text + "'");
    }
    if (!(step > 0)) throw config_error("grid axis '" + name + "': step must be positive");
    std::vector<double> vals;
    if (b < a) return vals; // empty axis is allowed (empty grid)
    long count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
    vals.reserve(count);
    for (long i = 0; i < count; ++i) vals.push_back(a + static_cast<double>(i) * step);
    return vals;
}

} // namespace

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    g.im = {0.0};
    bool saw_re = false;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eq = text.find('=', pos);
        if (eq == std::string::npos) throw config_error("grid spec: expected axis=start:end:step");
        std::string name = text.substr(pos, eq - pos);
        // the axis value runs to the comma that precedes the next "name="
        size_t next = text.find('=', eq + 1);
        size_t end;
        if (next == std::string::npos) {
            end = text.size();
        } else {
            end = text.rfind(',', next);
            if (end == std::string::npos || end < eq)
                throw config_error("grid spec: missing comma between axes");
        }
        std::string value = text.substr(eq + 1, end - eq - 1);
        if (name == "re") {
            g.re = parse_axis(value, name);
            saw_re = true;
        } else if (name == "im") {
            g.im = parse_axis(value, name);
        } else {
            throw config_error("grid spec: unknown axis '" + name + "'");
        }
        pos = end + (end < text.size() ? 1 : 0);
    }
    if (!saw_re) throw config_error("grid spec: re axis is required");
    return g;
}

std::vector<Complex> GridSpec::points(Prec bits) const {
    std::vector<Complex> pts;
    pts.reserve(size());
    for (double r : re)
        for (double i : im) {
            Complex z(bits);
            z.re().set_d(r);
            z.im().set_d(i);
            pts.push_back(std::move(z));
        }
    return pts;
}

Complex parse_complex(const std::string& text, Prec bits) {
    size_t comma = text.find(',');
    Complex z(bits);
    if (comma == std::string::npos) {
        z.re() = Real::parse(text, bits);
    } else {
        z.re() = Real::parse(text.substr(0, comma), bits);
        z.im() = Real::parse(text.substr(comma + 1), bits);
    }
    return z;
}

SuiteSpec load_suite_file(const std::string& path, Prec bits) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open suite file '" + path + "'");
    ordered_json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw config_error("suite file '" + path + "': " + e.what());
    }
    if (!doc.is_object() || !doc.contains("checks") || !doc["checks"].is_array())
        throw config_error("suite file must be an object with a 'checks' array");

    SuiteSpec suite;
    for (const auto& item : doc["checks"]) {
        if (!item.is_object() || !item.contains("kind") || !item["kind"].is_string())
            throw config_error("each check needs a string 'kind'");
        std::string kind = item["kind"].get<std::string>();
        try {
            if (kind == "lemma21" && item.contains("count")) {
                // generator form: expand into seeded instances
                long count = item.at("count").get<long>();
                std::uint64_t seed = item.value("seed", 1uLL);
                int max_depth = item.value("max-depth", 5);
                int max_m = item.value("max-m", 6);
                SuiteSpec gen = lemma21_suite(static_cast<int>(count), seed, max_depth, max_m, bits);
                for (auto& c : gen.checks) suite.checks.push_back(std::move(c));
                continue;
            }
            SuiteCheck c;
            c.kind = kind;
            if (item.contains("index")) c.index = Index::parse(item.at("index").get<std::string>());
            if (item.contains("m")) c.m = item.at("m").get<long>();
            if (item.contains("s")) c.s = parse_complex(item.at("s").get<std::string>(), bits);
            if (item.contains("s1")) c.s = parse_complex(item.at("s1").get<std::string>(), bits);
            if (item.contains("s2")) c.s2 = parse_complex(item.at("s2").get<std::string>(), bits);
            if (item.contains("terms")) c.N = item.at("terms").get<long>();
            if (item.contains("a")) {
                std::string a = item.at("a").get<std::string>();
                size_t pos = 0;
                while (pos <= a.size()) {
                    size_t comma = a.find(',', pos);
                    std::string tok =
                        a.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                    c.bases.push_back(Real::parse(tok, bits));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            }
            suite.checks.push_back(std::move(c));
        } catch (const config_error&) {
            throw;
        } catch (const std::exception& e) {
            throw config_error("suite file '" + path + "', check kind '" + kind + "': " + e.what());
        }
    }
    return suite;
}

} // namespace mzv
