#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tss/cnf.hpp"
#include "tss/embed.hpp"
#include "tss/geometry.hpp"
#include "tss/graph.hpp"
#include "tss/instance.hpp"

namespace tss {

// Per-edge disk bookkeeping for the independent-set reduction: chain length g,
// inserted disk counts w_1..w_{g-1}, y = g-2+sum(w) and q = y/6.
struct SubdivisionPlan {
    Edge edge;
    int chain_len = 0;
    std::vector<int> w;
    long long y = 0;
    long long q = 0;
};

// w_i in {6,7,8,9} with g-2+sum(w) divisible by 6, one fixed choice per
// residue class of g mod 6.
std::vector<int> choose_w(int chain_len);

// Centers of l disks (diameter 1/7) strictly between adjacent grid points
// p and q, at parameters (5j+l-6)/(7(l-1)) along the segment. First center
// sits at distance exactly 1/7 from p, last at 1/7 from q; consecutive
// centers intersect, centers two apart do not.
std::vector<GeoPoint> chain_centers(GridPoint p, GridPoint q, int l);

struct ISInstance {
    Graph graph;
    int k = 0;
};

struct BudgetRecord {
    std::string formula;
    std::optional<int> k_in;
    int k_out = 0;
};

// Vertex ids of one SAT variable gadget. anchor_true/anchor_false carry the
// truth assignment; lit_pos/lit_neg attach to clause vertices.
struct VariableGadget {
    int anchor_true = -1;  // threshold 2
    int anchor_false = -1; // threshold 2
    int lit_pos = -1;      // threshold 2, degree 4
    int lit_neg = -1;      // threshold 1, degree 2
    int ring_a = -1;       // threshold 2
    int ring_b = -1, ring_c = -1, ring_d = -1; // threshold 1
    std::array<int, 3> path{-1, -1, -1};       // lit_neg - p0 - p1 - p2 - anchor_false
};

struct EdgeChain {
    Edge edge;
    std::vector<int> xs;                    // primary subdivision ids x_1..x_{6q}
    std::vector<std::vector<int>> cliques;  // per clique position, primary + copies
};

struct ReductionArtifact {
    std::string reduction;
    std::optional<TSSInstance> tss;
    std::optional<ISInstance> is_instance;

    // output vertex -> compact role string ("original:3", "gadget:0:T",
    // "subdivision:1,4:2", "clique_copy:1,4:2:0", "clause:2", "cherry:3:m",
    // "leaf:5", "embed_point:1,4:0")
    std::vector<std::string> provenance;

    int alpha = 0; // cherries
    int beta = 0;  // 3-literal clauses
    int z = 0;     // threshold-1 vertices fixed
    long long sum3q = 0;
    std::vector<SubdivisionPlan> plans;
    BudgetRecord budget;
    std::optional<DiskRepresentation> disks;
    std::optional<GridCoords> coords;

    // witness-translation bookkeeping
    std::optional<CnfFormula> source_formula;
    std::vector<VariableGadget> gadgets;
    std::vector<int> clause_vertices;
    std::vector<std::array<int, 3>> cherries; // (g_m, g_l, g_r)
    std::vector<std::pair<int, int>> leaves;  // (leaf, parent)
    std::vector<std::array<int, 3>> history;  // subdivision steps (new, left, right)
    std::vector<EdgeChain> chains;
    int source_n = 0;
    std::optional<TSSInstance> source_instance;
};

// --- SAT with thresholds at most 2, planar when the formula is planar ---
ReductionArtifact sat_to_planar_tss(const CnfFormula& f);
std::vector<int> assignment_to_target_set(const ReductionArtifact& art, const Assignment& a);
Assignment target_set_to_assignment(const ReductionArtifact& art, const std::vector<int>& S);

// --- SAT variant with every threshold at majority ---
ReductionArtifact sat_to_planar_majority_tss(const CnfFormula& f);

// --- single edge subdivision (threshold 1 for the fresh vertex) ---
struct SubdividedInstance {
    TSSInstance instance;
    int new_vertex = -1;
    Edge edge;
};
SubdividedInstance subdivide_edge_once(const TSSInstance& inst, Edge e);
std::vector<int> subdivide_lift_witness(const TSSInstance& source, const SubdividedInstance& sub,
                                        const std::vector<int>& S);
std::vector<int> subdivide_project_witness(const TSSInstance& source,
                                           const SubdividedInstance& sub,
                                           const std::vector<int>& S_out);

// --- planar (max degree 4) TSS to grid TSS along a rectilinear embedding ---
ReductionArtifact planar_tss_to_grid_tss(const TSSInstance& inst,
                                         const RectilinearEmbedding& emb);
std::vector<int> grid_lift_witness(const ReductionArtifact& art, const std::vector<int>& S);
std::vector<int> grid_project_witness(const ReductionArtifact& art, const std::vector<int>& S_out);

// --- general thresholds to majority thresholds (leaves and cherry gadgets) ---
ReductionArtifact majority_transform(const TSSInstance& inst);
std::vector<int> majority_lift_witness(const ReductionArtifact& art, const std::vector<int>& S);
std::vector<int> majority_project_witness(const ReductionArtifact& art,
                                          const std::vector<int>& S_out);

// --- IS on r-regular planar to IS on r-regular unit disk graphs, r in {3,4} ---
ReductionArtifact is_planar_to_is_udg(const Graph& g, int r, const RectilinearEmbedding& emb,
                                      int k);
std::vector<int> is_lift_witness(const ReductionArtifact& art, const std::vector<int>& I);
std::vector<int> is_project_witness(const ReductionArtifact& art, const std::vector<int>& I_out);

// --- vertex -> K_q blowup preserving independence numbers ---
std::pair<Graph, std::optional<DiskRepresentation>>
clique_blowup_is(const Graph& g, int q, const std::optional<DiskRepresentation>& disks = {});

// --- majority grid TSS to exact-threshold-2 unit disk TSS (1/5 leaf disks) ---
ReductionArtifact majority_grid_to_exact2_udg(const TSSInstance& inst, const GridCoords& coords);

// --- c-regular graph to an instance that is both unanimous and exact(c) ---
TSSInstance regular_exact_c_tss(const Graph& g, int k);

} // namespace tss
