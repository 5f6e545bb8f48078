#ifndef SPINREP_MAPS_HPP
#define SPINREP_MAPS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include <json.hpp>

#include "spinrep/arith.hpp"
#include "spinrep/partition.hpp"
#include "spinrep/permutation.hpp"
#include "spinrep/stanley.hpp"

namespace spinrep {

/// Polygons with alternately coloured corners. Polygon i owns the global edge
/// slots offset[i] .. offset[i] + 2 π_i - 1; local corner c is white iff c is
/// even, local corner 0 being the root. Local slot j joins corners j and j+1.
struct PolygonCollection {
    Partition faceType;
    std::vector<int> offset;
    std::vector<int> polygonOf; // per slot
    /// Label (0-based point of S_{|π|}) of each even local slot, -1 on odd ones.
    /// Reading labels around polygon i gives the i-th block cycle of π.
    std::vector<int> label;

    int slotCount() const { return static_cast<int>(polygonOf.size()); }
    int polygonCount() const { return faceType.length(); }
    int localSlot(int slot) const { return slot - offset[static_cast<std::size_t>(polygonOf[static_cast<std::size_t>(slot)])]; }
    /// Global corner ids: corners of polygon i follow the same offsets as slots.
    int whiteCorner(int slot) const;
    int blackCorner(int slot) const;
    /// +1 when the slot runs white to black in the polygon's reference direction.
    int direction(int slot) const { return localSlot(slot) % 2 == 0 ? 1 : -1; }
    /// Slot carrying label x, and the unlabelled slot right after it.
    int labelledSlot(int x) const;
    int unlabelledSlotAfter(int x) const { return labelledSlot(x) + 1; }
};

PolygonCollection buildPolygons(const Partition& pi);

/// Result of gluing the slots of a collection along a perfect matching.
struct GluedMap {
    std::vector<int> partner;           // matching as an involution on slots
    std::vector<int> vertexOfCorner;    // vertex id per global corner
    std::vector<bool> vertexIsWhite;    // per vertex id
    int whiteVertices = 0;
    int blackVertices = 0;
    int edges = 0;
    int components = 0;
    std::vector<int> componentOfPolygon;
    std::vector<int> eulerPerComponent; // V - E + F per component
    std::vector<bool> orientablePerComponent;
    /// Every component orientable.
    bool orientable = false;
};

/// Glues along `partner`; throws std::invalid_argument unless it is a
/// fixed-point-free involution on the slots.
GluedMap glue(const PolygonCollection& pc, const std::vector<int>& partner);

/// Every perfect matching, smallest unmatched slot first; (2|π| - 1)!! maps.
void enumerateGluings(const PolygonCollection& pc, const std::function<void(const GluedMap&)>& visit);
std::uint64_t gluingCount(const PolygonCollection& pc);

/// Tries all 2^{ℓ(π)} direction assignments.
bool isOrientable(const PolygonCollection& pc, const GluedMap& m);
/// Parity union-find over the direction constraints.
bool isOrientableFast(const PolygonCollection& pc, const std::vector<int>& partner);
/// Per polygon: false when its component admits no consistent directions.
std::vector<bool> orientablePolygons(const PolygonCollection& pc, const std::vector<int>& partner);

/// White and black vertices of the map with one edge per glued pair.
BicoloredGraph underlyingGraph(const PolygonCollection& pc, const GluedMap& m);
Integer underlyingGraphColorings(const PolygonCollection& pc, const GluedMap& m, const Partition& lambda);

/// 2^{-ℓ(π)} Σ_{orientable M} (-1)^{|π| - |V∘(M)|} N_M(D(ξ)); π must be odd.
Rational spinStanleyViaMaps(const Partition& pi, const StrictPartition& xi);

/// The oriented map of σ1 σ2 = π: labelled edge x is glued to the unlabelled
/// edge following σ2^{-1}(x). The collection must be buildPolygons of the
/// cycle type of σ1 σ2 and σ1 σ2 must be in block form.
GluedMap orientedMap(const PolygonCollection& pc, const Permutation& s1, const Permutation& s2);

/// A gluing of face type (5,2) whose surface is the projective plane.
std::vector<int> projectivePlaneExample();

/// One row per gluing: {matching_id, components, white_vertices, orientable,
/// euler_per_component}.
nlohmann::json mapsCensus(const Partition& pi);

} // namespace spinrep

#endif // SPINREP_MAPS_HPP
