#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

enum class FlatClass { path, cycle, star, not_flat, not_girth5_applicable };
std::string_view to_string(FlatClass c);

struct FlatnessReport {
  bool is_flat = true;
  std::optional<Edge> witness_edge;  // lexicographically first edge with kappa != 0
  std::optional<Rational> witness_kappa;
  std::optional<FlatClass> classification;
  std::string reason;  // set when a classifier could not apply
};

struct ComponentFlatness {
  std::vector<Vertex> vertices;  // ascending
  FlatnessReport report;
};

/// kappa = 0 on every edge, evaluated with ricci_auto.
FlatnessReport is_ricci_flat(const Graph& g, const CurvatureOptions& opts = {});

/// One report per connected component, in order of smallest vertex.
/// Isolated vertices form edgeless, trivially flat components.
std::vector<ComponentFlatness> is_ricci_flat_by_component(const Graph& g, const CurvatureOptions& opts = {});

/// Structural classification of a connected girth >= 5 graph as a path
/// (n >= 2), cycle (n >= 5) or star (n >= 3 leaves), cross-checked against
/// is_ricci_flat; VerificationMismatch if the two disagree. Inputs that are
/// disconnected, edgeless or have girth < 5 get not_girth5_applicable with a
/// reason, and is_flat still reports the edge-wise check.
FlatnessReport classify_girth5_flat(const Graph& g, const CurvatureOptions& opts = {});

/// Regular graphs of girth 4: flat iff every edge has a perfect matching
/// between its neighbourhoods. Cross-checked against kappa = 0 on every
/// edge. NotApplicable, with the failed precondition, otherwise.
FlatnessReport check_regular_girth4_flat(const Graph& g, const CurvatureOptions& opts = {});

}  // namespace ricci
