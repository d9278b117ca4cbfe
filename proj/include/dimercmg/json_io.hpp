// Copyright 2026 The dimercmg Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

// JSON formats shared by the CLI, the python module and the bundled data.
#pragma once
#include <filesystem>
#include <string>

#include <json.hpp>

#include "dimercmg/abel_spectral.hpp"
#include "dimercmg/intlin.hpp"
#include "dimercmg/laurent.hpp"
#include "dimercmg/moves.hpp"
#include "dimercmg/torus_graph.hpp"

namespace dimercmg {

using Json = nlohmann::json;

/// Parse errors surface as InvalidInput.
Json read_json_file(const std::filesystem::path& path);

/// "p/q", "p" or an integer.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);

/// {"vertices": [[x,y], ...]}; a bare array is accepted too.
ConvexIntegralPolygon polygon_from_json(const Json& j, StartPolicy policy = StartPolicy::LexicographicMin);
Json polygon_to_json(const ConvexIntegralPolygon& p);

/// Colors "b"/"w" (or "black"/"white"); rotations keyed by vertex id.
RawGraph raw_graph_from_json(const Json& j);
TorusGraph graph_from_json(const Json& j);
Json graph_to_json(const TorusGraph& g);

/// A catalog name or a path to a graph file.
TorusGraph load_graph(const std::string& name_or_path);

EdgeWeights weights_from_json(const Json& j);
Json weights_to_json(const EdgeWeights& w);

/// {"graph": name|file|object, "moves": [...], "closing": {...}} or, for composites,
/// {"graph": ..., "segments": [{"moves": [...], "closing": {...}}, ...]}.
/// Relative graph paths resolve against base_dir.
MoveSequence sequence_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json sequence_to_json(const MoveSequence& s, const Json& graph_ref);

Json group_to_json(const FgAbelianGroup& g);
Json int_vector_to_json(const IntVector& v);
Json laurent_to_json(const LaurentPoly2& p);

}  // namespace dimercmg
