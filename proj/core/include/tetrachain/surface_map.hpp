#ifndef TETRACHAIN_SURFACE_MAP_HPP
#define TETRACHAIN_SURFACE_MAP_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tetrachain {

using VertexId = std::uint32_t;

/// Stable handle of a face. Ids are allocated monotonically and a face that
/// has been subdivided keeps its id retired forever.
struct FaceId {
  std::uint32_t value = 0;

  friend auto operator<=>(FaceId, FaceId) = default;
};

std::ostream& operator<<(std::ostream& os, FaceId f);

/// Non-oriented edge, stored with lo < hi.
struct EdgeKey {
  VertexId lo = 0;
  VertexId hi = 0;

  static EdgeKey of(VertexId a, VertexId b);

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct OrientedEdge {
  VertexId tail = 0;
  VertexId head = 0;

  OrientedEdge operator-() const { return {head, tail}; }
  EdgeKey key() const { return EdgeKey::of(tail, head); }

  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

std::ostream& operator<<(std::ostream& os, const OrientedEdge& e);

/// Triangle given by its sorted vertex triple a < b < c.
struct Face {
  std::array<VertexId, 3> v{};

  static Face of(VertexId x, VertexId y, VertexId z);

  bool contains(VertexId x) const { return v[0] == x || v[1] == x || v[2] == x; }
  bool has_edge(EdgeKey e) const { return contains(e.lo) && contains(e.hi); }
  std::array<EdgeKey, 3> edges() const;

  friend auto operator<=>(const Face&, const Face&) = default;
};

// The six oriented edges of a face are indexed in the order
//   0: ab  1: bc  2: ca  3: ac  4: cb  5: ba
// so that D_F maps i -> next index within {0,1,2} or {3,4,5}, and negation
// maps i -> 5 - i.
using OmegaIndex = std::uint8_t;
inline constexpr std::size_t kOmegaSize = 6;

std::array<OrientedEdge, kOmegaSize> omega(const Face& face);

/// Index of `e` in omega(face), or nullopt when `e` is not an edge of the face.
std::optional<OmegaIndex> omega_index(const Face& face, const OrientedEdge& e);

constexpr OmegaIndex omega_negate(OmegaIndex i) { return static_cast<OmegaIndex>(5 - i); }
constexpr OmegaIndex omega_rotate(OmegaIndex i) {
  return static_cast<OmegaIndex>(i < 3 ? (i + 1) % 3 : 3 + (i - 2) % 3);
}
constexpr OmegaIndex omega_rotate_inverse(OmegaIndex i) {
  return omega_rotate(omega_rotate(i));
}

/// The rotation D_F = (ab,bc,ca)(ac,cb,ba). Throws std::invalid_argument if
/// `e` is not an oriented edge of `face`.
OrientedEdge d_f(const Face& face, const OrientedEdge& e);
OrientedEdge d_f_inverse(const Face& face, const OrientedEdge& e);

/// Combinatorial triangulation of a closed surface.
///
/// Faces live in a FaceId-indexed table; subdivided faces leave a retired
/// slot behind. The edge table maps each non-oriented edge to the faces that
/// contain it (exactly two for a valid triangulation).
class Triangulation {
 public:
  Triangulation() = default;

  /// Builds the incidence tables from a raw face list. FaceIds are assigned
  /// 0..faces.size()-1 in list order. The result is not validated.
  static Triangulation from_faces(std::size_t vertex_count, const std::vector<Face>& faces);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_faces_.size(); }
  std::size_t face_count() const { return live_faces_; }
  long euler_characteristic() const;

  /// One past the largest FaceId ever allocated.
  std::size_t face_id_bound() const { return faces_.size(); }

  bool is_live(FaceId f) const;
  /// Throws std::out_of_range("no such face") for unknown or retired ids.
  const Face& face(FaceId f) const;
  std::vector<FaceId> live_face_ids() const;

  const std::map<EdgeKey, std::vector<FaceId>>& edge_faces() const { return edge_faces_; }
  const std::vector<FaceId>& faces_of(EdgeKey e) const;

  /// Replaces face f by three faces meeting at a new apex vertex. Returns the
  /// children in canonical order: for parent a < b < c the children contain
  /// {a,b}, {b,c}, {a,c} respectively, plus the apex.
  std::array<FaceId, 3> subdivide_in_place(FaceId f);

  /// Same live faces (in FaceId order) and vertex count; retired slots and
  /// id numbering are ignored.
  bool same_faces(const Triangulation& other) const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::size_t live_faces_ = 0;
  std::vector<std::optional<Face>> faces_;
  std::map<EdgeKey, std::vector<FaceId>> edge_faces_;
};

Triangulation tetrahedron();

struct Subdivision {
  Triangulation triangulation;
  std::array<FaceId, 3> children;
};

Subdivision stellar_subdivide(const Triangulation& t, FaceId f);

/// The face other than f that contains e. Throws std::invalid_argument if e
/// is not an edge of f, std::logic_error if the edge is not in exactly two faces.
FaceId other_face(const Triangulation& t, EdgeKey e, FaceId f);

struct Violation {
  std::string kind;
  std::string detail;
};

struct ValidateOptions {
  bool require_sphere = true;
};

/// Every invariant violation found, empty when the triangulation is valid.
std::vector<Violation> validate(const Triangulation& t, ValidateOptions options = {});

}  // namespace tetrachain

#endif  // TETRACHAIN_SURFACE_MAP_HPP
