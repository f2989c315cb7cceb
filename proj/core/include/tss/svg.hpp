#pragma once

#include <string>

#include "tss/embed.hpp"
#include "tss/geometry.hpp"
#include "tss/graph.hpp"

namespace tss {

// Render-only helpers; nothing here feeds back into any computation.
std::string svg_embedding(const Graph& g, const RectilinearEmbedding& emb);
std::string svg_disks(const DiskRepresentation& rep);

} // namespace tss
