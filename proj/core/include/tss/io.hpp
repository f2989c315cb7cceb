#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "tss/embed.hpp"
#include "tss/geometry.hpp"
#include "tss/graph.hpp"
#include "tss/instance.hpp"
#include "tss/reduce.hpp"

namespace tss {

using json = nlohmann::json;

// All rationals serialize as canonical "p/q" strings (reduced, q > 0) so
// artifacts diff cleanly; integers come out as "p/1".

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json instance_to_json(const TSSInstance& inst);
TSSInstance instance_from_json(const json& j);

json trace_to_json(const ActivationTrace& t);

json disks_to_json(const DiskRepresentation& rep);
DiskRepresentation disks_from_json(const json& j);

json grid_coords_to_json(const GridCoords& c);
GridCoords grid_coords_from_json(const json& j);

json interval_model_to_json(const IntervalModel& m);
IntervalModel interval_model_from_json(const json& j);

json embedding_to_json(const Graph& g, const RectilinearEmbedding& emb);
RectilinearEmbedding embedding_from_json(const Graph& g, const json& j);

json artifact_to_json(const ReductionArtifact& art);
ReductionArtifact artifact_from_json(const json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

} // namespace tss
