#pragma once

#include <map>
#include <string>
#include <vector>

#include "afnorm/abelian.hpp"
#include "afnorm/errors.hpp"
#include "afnorm/free_word.hpp"
#include "afnorm/numeric.hpp"

#include <json.hpp>

namespace afnorm {

// A finite 2-complex with one 0-cell per vertex id, one (oriented) 1-cell
// per edge, and one 2-cell per face, attached along a closed edge walk.
// The boundary lists mark a subcomplex on which cocycles and potentials
// are pinned to zero and whose edges are exempt from the use count.
struct Complex2 {
  struct Edge {
    std::string id, tail, head;
  };
  struct Face {
    std::string id;
    std::vector<std::pair<std::string, int>> walk;  // (edge id, +1 forward / -1 backward)
  };

  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  std::vector<std::string> boundary_vertices;
  std::vector<std::string> boundary_edges;
};

// Raised on structurally invalid complexes and cocycles.
struct CwError : std::runtime_error {
  explicit CwError(const std::string& what) : std::runtime_error(what) {}
};

Complex2 complex_from_json(const nlohmann::json& j);
nlohmann::ordered_json complex_to_json(const Complex2& c);

// Index maps plus derived data, produced by validation. edge_use[e] counts
// traversals over all face walks; weight[e] = edge_use[e]/2 - 1 for edges
// off the boundary (and is what the norm charges per unit of cocycle).
struct ComplexInfo {
  std::map<std::string, int> vertex_index, edge_index;
  std::vector<long long> edge_use;
  std::vector<Rational> weight;
  std::vector<bool> vertex_on_boundary, edge_on_boundary;
};

// Checks: unique ids; edge endpoints and walk edges exist; walks are
// nonempty and closed; boundary ids exist and boundary edges have boundary
// endpoints; every non-boundary edge is traversed at least twice.
ComplexInfo validate_complex(const Complex2& c);

// Integer 1-cochain, by edge id. Edges absent from the map carry 0.
using Cocycle = std::map<std::string, Integer>;

Cocycle cocycle_from_json(const nlohmann::json& j, const Complex2& c, const ComplexInfo& info);
nlohmann::ordered_json cocycle_to_json(const Cocycle& k);

// True iff the cochain vanishes on boundary edges and sums to zero along
// every face walk (counting orientation).
bool is_cocycle(const Complex2& c, const ComplexInfo& info, const Cocycle& k);

// Sum of weight[e] * |k(e)| over non-boundary edges.
Rational cocycle_norm(const Complex2& c, const ComplexInfo& info, const Cocycle& k);

// The presentation complex: one vertex, a loop per generator, a face per
// nonempty relator (an empty relator attaches along a constant walk and
// changes nothing, so it produces no face). No boundary.
Complex2 presentation_complex(const Presentation& p);

// The cocycle on the presentation complex induced by a cohomology class:
// each generator loop carries the class's value on it.
Cocycle induced_cocycle(const Presentation& p, const AbelianStructure& h,
                        const std::vector<Integer>& cls);

}  // namespace afnorm
