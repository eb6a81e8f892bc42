#ifndef TETRACHAIN_ZIGZAG_HPP
#define TETRACHAIN_ZIGZAG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tetrachain/surface_map.hpp"

namespace tetrachain {

/// A face together with an oriented edge of it. The flag stands for the
/// consecutive zigzag pair (d_f_inverse(edge), edge) inside `face`.
struct Flag {
  FaceId face;
  OrientedEdge edge;

  friend auto operator<=>(const Flag&, const Flag&) = default;
};

/// Advances a zigzag by one edge: for flag (F, bc) with F = {a,b,c}, crosses
/// edge {b,c} into F' = {b,c,d} and returns (F', cd). Throws
/// std::invalid_argument when the flag's edge is not an edge of its face.
Flag step(const Triangulation& t, const Flag& s);

struct Zigzag {
  std::vector<OrientedEdge> edges;

  std::size_t length() const { return edges.size(); }
  /// Vertex cycle v_1..v_n with edges[i] = (v_i, v_{i+1}).
  std::vector<VertexId> vertices() const;
};

/// Rotation of `edges` that is lexicographically minimal on (tail, head).
std::vector<OrientedEdge> canonical_key(std::span<const OrientedEdge> edges);
/// Reverse traversal: reversed order, every edge negated.
Zigzag reversed(const Zigzag& z);

/// The zigzag through s, starting with s.edge, up to the first return to s.
Zigzag trace(const Triangulation& t, const Flag& s);

bool is_edge_simple(const Zigzag& z);

struct ZigzagSet {
  std::vector<Zigzag> zigzags;
  /// partner[i] is the index of the reverse of zigzags[i].
  std::vector<std::size_t> partner;

  std::size_t size() const { return zigzags.size(); }
  std::size_t count_up_to_reversal() const { return zigzags.size() / 2; }
  /// Pair number shared by a zigzag and its reverse (0-based, in order of first appearance).
  std::size_t pair_id(std::size_t i) const;
};

/// All zigzags of t, discovered by a sweep over flags in (FaceId, lexicographic
/// edge) order, each paired with its reverse. Throws std::logic_error if a
/// zigzag has no reverse or is self-reversed.
ZigzagSet enumerate_zigzags(const Triangulation& t);

/// Indices into `set` of the zigzags passing through an edge of f.
std::vector<std::size_t> zigzags_through_face(const Triangulation& t, const ZigzagSet& set,
                                              FaceId f);

/// Flag permutation of a triangulation with its orbit decomposition.
///
/// Flags are numbered densely as face_id * 6 + omega index. Retired face slots
/// produce unused flag numbers that belong to no orbit.
class ZigzagOrbits {
 public:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  explicit ZigzagOrbits(const Triangulation& t);

  std::size_t flag_bound() const { return next_.size(); }
  std::uint32_t flag_id(FaceId f, OmegaIndex i) const { return f.value * 6 + i; }
  FaceId face_of(std::uint32_t flag) const { return FaceId{flag / 6}; }
  OmegaIndex omega_of(std::uint32_t flag) const { return static_cast<OmegaIndex>(flag % 6); }
  OrientedEdge edge_of(std::uint32_t flag) const;
  const Face& face(FaceId f) const;

  std::uint32_t next(std::uint32_t flag) const { return next_[flag]; }
  std::uint32_t prev(std::uint32_t flag) const { return prev_[flag]; }
  std::uint32_t orbit_of(std::uint32_t flag) const { return orbit_[flag]; }
  std::uint32_t position_of(std::uint32_t flag) const { return position_[flag]; }

  /// Orbits in discovery order; each lists its flags in walk order.
  const std::vector<std::vector<std::uint32_t>>& orbits() const { return orbits_; }

  /// Distinct orbits visiting an edge of face f.
  std::vector<std::uint32_t> orbits_through_face(FaceId f) const;

 private:
  std::vector<std::optional<Face>> faces_;
  std::vector<std::uint32_t> next_;
  std::vector<std::uint32_t> prev_;
  std::vector<std::uint32_t> orbit_;
  std::vector<std::uint32_t> position_;
  std::vector<std::vector<std::uint32_t>> orbits_;
};

}  // namespace tetrachain

#endif  // TETRACHAIN_ZIGZAG_HPP
