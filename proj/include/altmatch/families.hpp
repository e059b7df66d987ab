#pragma once

#include <optional>
#include <string>

#include "altmatch/graph.hpp"
#include "altmatch/matching.hpp"

namespace altmatch {

/// A generated graph together with its designated matching (the jointing
/// matching for g1, the constructed matching for remark, otherwise the
/// lexicographically first perfect matching when one exists).
struct FamilyOutput {
    std::string name;
    Graph graph;
    std::optional<Matching> matching;
};

/// Two copies of K_{2n+1} (ids 0..2n and 2n+1..4n+1) joined by the perfect
/// matching {i, 2n+1+i}; (2n+1)-regular on 4n+2 vertices. The returned
/// matching is the jointing matching.
FamilyOutput gen_g1(int n);

/// Two complete bipartite blocks (U0,V0) and (U1,V1) of part size t, a vertex
/// u adjacent to V0 and V1, a vertex v adjacent to U0 and U1, and the edge uv.
/// Ids: U0 = 0..t-1, V0 = t..2t-1, U1 = 2t..3t-1, V1 = 3t..4t-1, u = 4t,
/// v = 4t+1. The minimum cross-part degree sum equals nu/2 + 1 exactly; the
/// returned matching pairs the blocks row-by-row and contains uv.
FamilyOutput gen_remark_tight(int t);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);

struct G1Recognition {
    int n;
    Matching jointing;
};

/// Structural recognition: order 2 mod 4, (nu/2)-regular, the edges with no
/// common neighbor form a perfect matching whose removal leaves exactly two
/// complete components of equal size. Returns the parameter and the (unique)
/// jointing matching; invariant under vertex relabeling.
std::optional<G1Recognition> recognize_g1(const Graph& g);

/// Parses family spec strings: "g1:n=2", "remark:t=1", "k:n=5",
/// "kb:a=3,b=3", "cycle:n=6". Throws std::invalid_argument on bad specs.
FamilyOutput make_family(const std::string& spec);

}  // namespace altmatch
