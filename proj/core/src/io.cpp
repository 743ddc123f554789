#include "incwb/io.hpp"

#include <algorithm>
#include <fstream>

namespace incwb::io {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

json to_json(const graph::Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({g.name(e.u), g.name(e.v)});
  return {{"nodes", g.names()}, {"edges", edges}};
}

graph::Graph graph_from_json(const json& j) {
  auto nodes = field<std::vector<std::string>>(j, "nodes");
  auto edges = field<std::vector<std::pair<std::string, std::string>>>(j, "edges");
  return graph::Graph(std::move(nodes), edges);
}

json to_json(const relsys::RelationSystem& sys) {
  json rel = json::array();
  for (std::size_t z = 0; z < sys.kappa(); ++z) {
    json pairs = json::array();
    for (const auto& [a, b] : sys.relation(z)) pairs.push_back({sys.name(a), sys.name(b)});
    rel.push_back(pairs);
  }
  return {{"ground", sys.names()}, {"kappa", sys.kappa()}, {"relations", rel}};
}

relsys::RelationSystem system_from_json(const json& j) {
  auto ground = field<std::vector<std::string>>(j, "ground");
  const auto kappa = field<std::size_t>(j, "kappa");
  auto rel = j.contains("relations")
                 ? field<std::vector<std::vector<std::pair<std::string, std::string>>>>(j, "relations")
                 : std::vector<std::vector<std::pair<std::string, std::string>>>{};
  if (rel.size() > kappa) throw InputError("more relations than kappa");
  return relsys::RelationSystem::from_names(std::move(ground), kappa, rel);
}

json to_json(const famfun::FunctionFamily& fam) {
  json j = {{"kappa", fam.kappa()}, {"mu", fam.mu()}, {"members", fam.members()}};
  if (fam.normal()) j["normal"] = true;
  return j;
}

famfun::FunctionFamily family_from_json(const json& j) {
  const bool normal = j.is_object() && j.contains("normal") ? field<bool>(j, "normal") : false;
  return famfun::FunctionFamily(field<std::size_t>(j, "kappa"), field<std::size_t>(j, "mu"),
                                field<std::vector<famfun::Tuple>>(j, "members"), normal);
}

json to_json(const construct::KaStructure& m, const relsys::RelationSystem& sys) {
  json points = json::array();
  json succ = json::array();
  for (construct::PointId a = 0; a < m.size(); ++a) {
    points.push_back({{"id", a}, {"label", sys.name(m.label(a))}, {"level", m.level(a)}});
    for (std::size_t z = 0; z < m.kappa(); ++z)
      if (auto t = m.succ(a, z)) succ.push_back({a, z, *t});
  }
  return {{"kappa", m.kappa()}, {"points", points}, {"succ", succ}};
}

construct::KaStructure structure_from_json(const json& j, const relsys::RelationSystem& sys) {
  const std::size_t kappa = j.contains("kappa") ? field<std::size_t>(j, "kappa") : sys.kappa();
  if (kappa != sys.kappa()) throw InputError("structure kappa differs from the system's");
  if (!j.contains("points") || !j["points"].is_array()) throw InputError("missing field 'points'");
  const auto& pts = j["points"];
  std::vector<std::pair<relsys::ElementId, std::size_t>> meta(pts.size());
  std::vector<bool> seen(pts.size(), false);
  for (const auto& p : pts) {
    const auto id = field<std::size_t>(p, "id");
    if (id >= pts.size() || seen[id]) throw InputError("point ids must be 0..n-1 without repeats");
    seen[id] = true;
    const auto& label = p.at("label");
    const relsys::ElementId e = label.is_string() ? sys.index_of(label.get<std::string>()) : label.get<std::size_t>();
    if (e >= sys.size()) throw InputError("point label out of range");
    meta[id] = {e, field<std::size_t>(p, "level")};
  }
  std::vector<construct::SuccMap> succ(pts.size(), construct::SuccMap(kappa));
  const auto triples = j.contains("succ") ? field<std::vector<std::vector<std::size_t>>>(j, "succ")
                                          : std::vector<std::vector<std::size_t>>{};
  for (const auto& t : triples) {
    if (t.size() != 3 || t[0] >= pts.size() || t[1] >= kappa || t[2] >= pts.size()) {
      throw InputError("succ entries must be [point, zeta, point] within range");
    }
    if (t[2] >= t[0]) throw InputError("successor points must have smaller ids than their sources");
    if (succ[t[0]][t[1]]) throw InputError("F_zeta defined twice at one point");
    succ[t[0]][t[1]] = t[2];
  }
  construct::KaStructure m(kappa);
  for (std::size_t a = 0; a < pts.size(); ++a) m.add_point(meta[a].first, meta[a].second, std::move(succ[a]));
  return m;
}

json to_json(const relsys::FreenessWitness& w, const relsys::RelationSystem& sys) {
  json colour = json::object();
  for (const auto& [e, c] : w.colour) colour[sys.name(e)] = c;
  json order = json::array();
  for (auto e : w.order) order.push_back(sys.name(e));
  return {{"colour", colour}, {"order", order}};
}

relsys::FreenessWitness witness_from_json(const json& j, const relsys::RelationSystem& sys) {
  relsys::FreenessWitness w;
  for (const auto& [name, c] : field<std::map<std::string, std::size_t>>(j, "colour")) w.colour[sys.index_of(name)] = c;
  for (const auto& name : field<std::vector<std::string>>(j, "order")) w.order.push_back(sys.index_of(name));
  return w;
}

json to_json(const graph::Colouring& c, const graph::Graph& g) {
  json colour = json::object();
  for (std::size_t v = 0; v < c.size(); ++v) colour[g.name(v)] = c.colour[v];
  return {{"colour", colour}};
}

graph::Colouring colouring_from_json(const json& j, const graph::Graph& g) {
  graph::Colouring c;
  const auto m = field<std::map<std::string, std::size_t>>(j, "colour");
  if (m.size() != g.size()) throw InputError("colouring must assign every node");
  c.colour.assign(g.size(), 0);
  for (const auto& [name, col] : m) c.colour[g.index_of(name)] = col;
  return c;
}

json to_json(const incompact::IncChain& c) {
  json graphs = json::array();
  for (const auto& g : c.graphs) graphs.push_back(to_json(g));
  return {{"graphs", graphs}, {"limits", c.limits}, {"chi0", c.chi0}, {"chi1", c.chi1}};
}

incompact::IncChain chain_from_json(const json& j) {
  incompact::IncChain c;
  if (!j.is_object() || !j.contains("graphs") || !j["graphs"].is_array()) throw InputError("missing field 'graphs'");
  for (const auto& g : j["graphs"]) c.graphs.push_back(graph_from_json(g));
  if (j.contains("limits")) c.limits = field<std::vector<std::size_t>>(j, "limits");
  if (j.contains("kappa")) {
    c.chi0 = c.chi1 = incompact::chi_of_kappa(field<std::size_t>(j, "kappa"));
  } else {
    c.chi0 = field<std::size_t>(j, "chi0");
    c.chi1 = field<std::size_t>(j, "chi1");
  }
  return c;
}

incompact::PartitionCertificate partition_from_json(const json& j) {
  incompact::PartitionCertificate p;
  p.parts = field<std::vector<std::vector<std::string>>>(j, "parts");
  if (j.contains("bound")) p.bound = field<std::vector<std::size_t>>(j, "bound");
  return p;
}

json to_json(const famfun::Transversal& t) {
  json out = json::object();
  for (const auto& [f, v] : t.choice) out[famfun::FunctionFamily::member_name(f)] = v;
  return out;
}

json to_json(const famfun::FreeDecomposition& d) {
  json pieces = json::array();
  for (std::size_t i = 0; i < d.pieces.size(); ++i) pieces.push_back({{"members", d.pieces[i]}, {"choice", to_json(d.transversals[i])}});
  return pieces;
}

}  // namespace incwb::io
