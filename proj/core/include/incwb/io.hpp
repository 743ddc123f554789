#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "incwb/construct.hpp"
#include "incwb/famfun.hpp"
#include "incwb/graph.hpp"
#include "incwb/incompact.hpp"
#include "incwb/relsys.hpp"

namespace incwb::io {

using nlohmann::json;

/// Parse failures and shape errors surface as InputError naming the file.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

/// {"nodes":[names], "edges":[[u,v],...]}
json to_json(const graph::Graph& g);
graph::Graph graph_from_json(const json& j);

/// {"ground":[names], "kappa":k, "relations":[[[u,v],...],...]}
json to_json(const relsys::RelationSystem& sys);
relsys::RelationSystem system_from_json(const json& j);

/// {"kappa":k, "mu":m, "members":[[v0,...],...], "normal":bool?}
json to_json(const famfun::FunctionFamily& fam);
famfun::FunctionFamily family_from_json(const json& j);

/// {"kappa":k, "points":[{"id","label","level"}], "succ":[[a, zeta, F_zeta(a)],...]};
/// labels are element names of `sys`.
json to_json(const construct::KaStructure& m, const relsys::RelationSystem& sys);
construct::KaStructure structure_from_json(const json& j, const relsys::RelationSystem& sys);

/// {"colour":{name:c}, "order":[names]}
json to_json(const relsys::FreenessWitness& w, const relsys::RelationSystem& sys);
relsys::FreenessWitness witness_from_json(const json& j, const relsys::RelationSystem& sys);

/// {"colour":{node:c}}
json to_json(const graph::Colouring& c, const graph::Graph& g);
graph::Colouring colouring_from_json(const json& j, const graph::Graph& g);

/// {"graphs":[graph,...], "limits":[...], "chi0":..., "chi1":...}; a
/// "kappa" entry sets both thresholds to kappa + 1.
json to_json(const incompact::IncChain& c);
incompact::IncChain chain_from_json(const json& j);

/// {"parts":[[names],...], "bound":[...]?}
incompact::PartitionCertificate partition_from_json(const json& j);

json to_json(const famfun::Transversal& t);
json to_json(const famfun::FreeDecomposition& d);

}  // namespace incwb::io
