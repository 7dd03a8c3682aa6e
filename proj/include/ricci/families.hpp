#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "ricci/graph.hpp"

namespace ricci {

/// Named graph families with canonical vertex numbering:
///
///   path n              P_n, vertices 0..n-1, edges (i, i+1); n >= 1
///   cycle n             C_n, edges (i, i+1 mod n); n >= 3
///   star n              T_n, centre 0, leaves 1..n; n >= 1
///   hypercube n         Q_n, vertices are n-bit masks, edges flip one bit; 1 <= n <= 20
///   complete_bipartite p q   K_{p,q}, left 0..p-1, right p..p+q-1; p, q >= 1
///   petersen            outer 5-cycle 0..4, spokes (i, i+5), inner pentagram (i+5, (i+2)%5+5)
///   complete n          K_n; n >= 1
///
/// Throws InvalidInput for unknown names or out-of-range parameters.
Graph generate_family(std::string_view family, std::span<const std::int64_t> params);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph hypercube_graph(std::size_t dimension);
Graph complete_bipartite_graph(std::size_t p, std::size_t q);
Graph petersen_graph();
Graph complete_graph(std::size_t n);

}  // namespace ricci
