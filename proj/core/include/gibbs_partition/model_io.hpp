#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "gibbs_partition/model.hpp"

namespace gibbs {

/// Parses a model document:
///   {"type": "ising", "num_vertices": V, "edges": [[i, j], ...]}
///   {"type": "table", "hamiltonian": [h0, h1, ...]}
/// Throws std::invalid_argument on malformed input.
GibbsModel model_from_json(const nlohmann::json& doc);
nlohmann::json model_to_json(const GibbsModel& model);

GibbsModel load_model_file(const std::filesystem::path& path);

/// Resolves a model source given on the command line.
///
///   k2            single edge
///   path-N        path on N vertices
///   cycle-N       cycle on N vertices
///   grid-RxC      R by C grid
///   const-H       H(x) = H on 4 states; const-H:S for S states
///   table:FILE    JSON model file
///   FILE.json     JSON model file
GibbsModel resolve_model(const std::string& source);

}  // namespace gibbs
