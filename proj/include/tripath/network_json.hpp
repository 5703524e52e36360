// Copyright 2026 The tripath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * JSON network-definition files.
 *
 * Format:
 * {
 *   "paths": ["0,0", "0,1", "1,0", "1,1"],
 *   "parallel": "1,1",
 *   "stages": [
 *     { "inputs": ["0,0", "1,0"], "outputs": ["a,0", "b,0"],
 *       "reflectivity": "1/2" },
 *     ...
 *   ]
 * }
 *
 * Reflectivities are JSON numbers or exact fraction strings ("1/3").
 * Each stage may carry a "phase" field, reserved for forward
 * compatibility; any nonzero value is rejected. Syntax errors are
 * reported with line and column, semantic errors with the offending
 * field path.
 */

#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tripath/errors.hpp"
#include "tripath/network.hpp"
#include "tripath/parse_number.hpp"

namespace tripath {

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string &text,
                                                       std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

inline double reflectivity_from_json(const nlohmann::json &value, const std::string &field) {
    if (value.is_number()) {
        return value.get<double>();
    }
    if (value.is_string()) {
        try {
            return parse_real(value.get<std::string>());
        } catch (const ParseError &e) {
            throw ParseError(field + ": " + e.what());
        }
    }
    throw ParseError(field + ": expected a number or a fraction string");
}

} // namespace detail

/// Parses a network definition from JSON text.
inline NetworkDefinition parse_network_definition(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        const auto [line, column] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("invalid JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("top level: expected an object");
    }

    NetworkDefinition def;

    if (!doc.contains("paths") || !doc["paths"].is_array()) {
        throw ParseError("paths: required array of 4 labels");
    }
    if (doc["paths"].size() != 4) {
        throw ParseError("paths: expected exactly 4 labels, got " +
                         std::to_string(doc["paths"].size()));
    }
    for (std::size_t k = 0; k < 4; ++k) {
        const auto &p = doc["paths"][k];
        if (!p.is_string() || p.get<std::string>().empty()) {
            throw ParseError("paths[" + std::to_string(k) + "]: expected a non-empty string");
        }
        def.paths[k] = p.get<std::string>();
    }

    if (!doc.contains("parallel") || !doc["parallel"].is_string()) {
        throw ParseError("parallel: required string label");
    }
    def.parallel = doc["parallel"].get<std::string>();

    if (!doc.contains("stages") || !doc["stages"].is_array()) {
        throw ParseError("stages: required array");
    }
    std::size_t index = 0;
    for (const auto &stage : doc["stages"]) {
        const std::string field = "stages[" + std::to_string(index) + "]";
        if (!stage.is_object()) {
            throw ParseError(field + ": expected an object");
        }
        StageDefinition sd;
        for (const char *key : {"inputs", "outputs"}) {
            if (!stage.contains(key) || !stage[key].is_array() || stage[key].size() != 2) {
                throw ParseError(field + "." + key + ": expected an array of 2 labels");
            }
            for (std::size_t k = 0; k < 2; ++k) {
                const auto &l = stage[key][k];
                if (!l.is_string() || l.get<std::string>().empty()) {
                    throw ParseError(field + "." + key + "[" + std::to_string(k) +
                                     "]: expected a non-empty string");
                }
                if (std::string(key) == "inputs") {
                    sd.inputs[k] = l.get<std::string>();
                } else {
                    sd.outputs[k] = l.get<std::string>();
                }
            }
        }
        if (!stage.contains("reflectivity")) {
            throw ParseError(field + ".reflectivity: required");
        }
        sd.reflectivity = detail::reflectivity_from_json(stage["reflectivity"],
                                                         field + ".reflectivity");
        if (stage.contains("phase")) {
            const double phase =
                detail::reflectivity_from_json(stage["phase"], field + ".phase");
            if (phase != 0.0) {
                throw ParseError(field + ".phase: nonzero phases are reserved and not supported");
            }
        }
        for (const auto &[key, value] : stage.items()) {
            if (key != "inputs" && key != "outputs" && key != "reflectivity" && key != "phase") {
                throw ParseError(field + "." + key + ": unknown field");
            }
        }
        def.stages.push_back(std::move(sd));
        ++index;
    }

    return def;
}

/// Loads and parses a network-definition file.
inline NetworkDefinition load_network_definition(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open network file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_network_definition(buffer.str());
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what());
    }
}

/// Serializes a definition back to JSON (reflectivities as numbers).
inline std::string network_definition_to_json(const NetworkDefinition &def, int indent = 2) {
    nlohmann::ordered_json doc;
    doc["paths"] = def.paths;
    doc["parallel"] = def.parallel;
    doc["stages"] = nlohmann::ordered_json::array();
    for (const auto &sd : def.stages) {
        nlohmann::ordered_json stage;
        stage["inputs"] = sd.inputs;
        stage["outputs"] = sd.outputs;
        stage["reflectivity"] = sd.reflectivity;
        doc["stages"].push_back(stage);
    }
    return doc.dump(indent);
}

} // namespace tripath
