#include "gibbs_partition/model_io.hpp"

#include <fstream>
#include <stdexcept>

namespace gibbs {

namespace {

int parse_positive_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + ": '" + text + "'");
  }
  if (used != text.size() || v < 1) throw std::invalid_argument("bad " + what + ": '" + text + "'");
  return v;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

GibbsModel model_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("type"))
    throw std::invalid_argument("model document needs a \"type\" field");
  const std::string type = doc.at("type").get<std::string>();
  try {
    if (type == "ising") {
      const int v = doc.at("num_vertices").get<int>();
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges must be [i, j] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      return ising_model(edges, v);
    }
    if (type == "table") {
      return GibbsModel::from_table(doc.at("hamiltonian").get<std::vector<double>>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed model document: ") + e.what());
  }
  throw std::invalid_argument("unknown model type '" + type + "'");
}

nlohmann::json model_to_json(const GibbsModel& model) {
  if (const IsingGraph* g = model.ising_graph(); g && model.offset() == 0.0) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : g->edges) edges.push_back({a, b});
    return {{"type", "ising"}, {"num_vertices", g->num_vertices}, {"edges", edges}};
  }
  if (!model.enumerable()) throw OracleInfeasible("model too large to serialize as a table");
  std::vector<double> h(model.num_states());
  for (StateIndex x = 0; x < model.num_states(); ++x) h[x] = model.energy(x);
  return {{"type", "table"}, {"hamiltonian", h}};
}

GibbsModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open model file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("model file " + path.string() + " is not valid JSON: " + e.what());
  }
  return model_from_json(doc);
}

GibbsModel resolve_model(const std::string& source) {
  if (source == "k2") return ising_model({{0, 1}}, 2);
  if (starts_with(source, "path-")) return path_graph_ising(parse_positive_int(source.substr(5), "path size"));
  if (starts_with(source, "cycle-")) return cycle_graph_ising(parse_positive_int(source.substr(6), "cycle size"));
  if (starts_with(source, "grid-")) {
    const std::string dims = source.substr(5);
    const auto x = dims.find('x');
    if (x == std::string::npos) throw std::invalid_argument("grid model needs RxC, got '" + source + "'");
    return grid_graph_ising(parse_positive_int(dims.substr(0, x), "grid rows"),
                            parse_positive_int(dims.substr(x + 1), "grid cols"));
  }
  if (starts_with(source, "const-")) {
    std::string rest = source.substr(6);
    std::uint64_t states = 4;
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
      states = static_cast<std::uint64_t>(parse_positive_int(rest.substr(colon + 1), "state count"));
      rest = rest.substr(0, colon);
    }
    std::size_t used = 0;
    double h = 0.0;
    try {
      h = std::stod(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size()) throw std::invalid_argument("bad constant model '" + source + "'");
    return constant_model(h, states);
  }
  if (starts_with(source, "table:")) return load_model_file(source.substr(6));
  if (source.size() > 5 && source.substr(source.size() - 5) == ".json") return load_model_file(source);
  throw std::invalid_argument("unknown model '" + source + "'");
}

}  // namespace gibbs
