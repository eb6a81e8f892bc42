#include "tetrachain/surface_map.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tetrachain {

std::ostream& operator<<(std::ostream& os, FaceId f) { return os << "F" << f.value; }

std::ostream& operator<<(std::ostream& os, const OrientedEdge& e) {
  return os << e.tail << "->" << e.head;
}

EdgeKey EdgeKey::of(VertexId a, VertexId b) {
  if (a == b) {
    throw std::invalid_argument("edge endpoints must differ");
  }
  return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

Face Face::of(VertexId x, VertexId y, VertexId z) {
  Face f{{x, y, z}};
  std::sort(f.v.begin(), f.v.end());
  return f;
}

std::array<EdgeKey, 3> Face::edges() const {
  return {EdgeKey{v[0], v[1]}, EdgeKey{v[1], v[2]}, EdgeKey{v[0], v[2]}};
}

std::array<OrientedEdge, kOmegaSize> omega(const Face& face) {
  const auto [a, b, c] = face.v;
  return {OrientedEdge{a, b}, OrientedEdge{b, c}, OrientedEdge{c, a},
          OrientedEdge{a, c}, OrientedEdge{c, b}, OrientedEdge{b, a}};
}

std::optional<OmegaIndex> omega_index(const Face& face, const OrientedEdge& e) {
  const auto all = omega(face);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] == e) {
      return static_cast<OmegaIndex>(i);
    }
  }
  return std::nullopt;
}

namespace {

OmegaIndex require_omega_index(const Face& face, const OrientedEdge& e) {
  auto i = omega_index(face, e);
  if (!i) {
    std::ostringstream msg;
    msg << "oriented edge " << e << " is not an edge of face {" << face.v[0] << ","
        << face.v[1] << "," << face.v[2] << "}";
    throw std::invalid_argument(msg.str());
  }
  return *i;
}

}  // namespace

OrientedEdge d_f(const Face& face, const OrientedEdge& e) {
  return omega(face)[omega_rotate(require_omega_index(face, e))];
}

OrientedEdge d_f_inverse(const Face& face, const OrientedEdge& e) {
  return omega(face)[omega_rotate_inverse(require_omega_index(face, e))];
}

// ==========================================================
// Triangulation

Triangulation Triangulation::from_faces(std::size_t vertex_count, const std::vector<Face>& faces) {
  Triangulation t;
  t.vertex_count_ = vertex_count;
  t.faces_.reserve(faces.size());
  for (const auto& f : faces) {
    const FaceId id{static_cast<std::uint32_t>(t.faces_.size())};
    t.faces_.emplace_back(f);
    ++t.live_faces_;
    // Degenerate triples are kept so validate() can report them.
    for (const auto& [lo, hi] : {std::pair{f.v[0], f.v[1]}, std::pair{f.v[1], f.v[2]},
                                 std::pair{f.v[0], f.v[2]}}) {
      if (lo != hi) {
        t.edge_faces_[EdgeKey{lo, hi}].push_back(id);
      }
    }
  }
  return t;
}

long Triangulation::euler_characteristic() const {
  return static_cast<long>(vertex_count_) - static_cast<long>(edge_faces_.size()) +
         static_cast<long>(live_faces_);
}

bool Triangulation::is_live(FaceId f) const {
  return f.value < faces_.size() && faces_[f.value].has_value();
}

const Face& Triangulation::face(FaceId f) const {
  if (!is_live(f)) {
    throw std::out_of_range("no such face");
  }
  return *faces_[f.value];
}

std::vector<FaceId> Triangulation::live_face_ids() const {
  std::vector<FaceId> ids;
  ids.reserve(live_faces_);
  for (std::uint32_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i]) {
      ids.push_back(FaceId{i});
    }
  }
  return ids;
}

const std::vector<FaceId>& Triangulation::faces_of(EdgeKey e) const {
  auto it = edge_faces_.find(e);
  if (it == edge_faces_.end()) {
    throw std::out_of_range("no such edge");
  }
  return it->second;
}

std::array<FaceId, 3> Triangulation::subdivide_in_place(FaceId f) {
  const Face parent = face(f);
  const auto [a, b, c] = parent.v;
  const auto apex = static_cast<VertexId>(vertex_count_);
  const auto first = static_cast<std::uint32_t>(faces_.size());
  const std::array<FaceId, 3> children{FaceId{first}, FaceId{first + 1}, FaceId{first + 2}};

  // Apex is the largest vertex id, so each child triple is already sorted.
  const std::array<Face, 3> child_faces{Face{{a, b, apex}}, Face{{b, c, apex}},
                                        Face{{a, c, apex}}};
  faces_[f.value].reset();
  for (const auto& cf : child_faces) {
    faces_.emplace_back(cf);
  }
  ++vertex_count_;
  live_faces_ += 2;

  // Each parent edge hands its slot for f to the child that keeps that edge.
  const std::array<EdgeKey, 3> parent_edges{EdgeKey{a, b}, EdgeKey{b, c}, EdgeKey{a, c}};
  for (std::size_t i = 0; i < 3; ++i) {
    auto& incident = edge_faces_.at(parent_edges[i]);
    std::replace(incident.begin(), incident.end(), f, children[i]);
  }
  edge_faces_[EdgeKey{a, apex}] = {children[0], children[2]};
  edge_faces_[EdgeKey{b, apex}] = {children[0], children[1]};
  edge_faces_[EdgeKey{c, apex}] = {children[1], children[2]};
  return children;
}

bool Triangulation::same_faces(const Triangulation& other) const {
  if (vertex_count_ != other.vertex_count_ || live_faces_ != other.live_faces_) {
    return false;
  }
  std::vector<Face> mine;
  std::vector<Face> theirs;
  for (const auto& f : faces_) {
    if (f) mine.push_back(*f);
  }
  for (const auto& f : other.faces_) {
    if (f) theirs.push_back(*f);
  }
  return mine == theirs;
}

Triangulation tetrahedron() {
  // Face i is the face that omits vertex i.
  return Triangulation::from_faces(
      4, {Face{{1, 2, 3}}, Face{{0, 2, 3}}, Face{{0, 1, 3}}, Face{{0, 1, 2}}});
}

Subdivision stellar_subdivide(const Triangulation& t, FaceId f) {
  Subdivision out{t, {}};
  out.children = out.triangulation.subdivide_in_place(f);
  return out;
}

FaceId other_face(const Triangulation& t, EdgeKey e, FaceId f) {
  if (!t.face(f).has_edge(e)) {
    std::ostringstream msg;
    msg << "edge {" << e.lo << "," << e.hi << "} is not an edge of " << f;
    throw std::invalid_argument(msg.str());
  }
  const auto& incident = t.faces_of(e);
  if (incident.size() != 2 || incident[0] == incident[1]) {
    throw std::logic_error("edge is not contained in exactly two faces");
  }
  return incident[0] == f ? incident[1] : incident[0];
}

// ==========================================================
// Validation

namespace {

std::string face_string(FaceId id, const Face& f) {
  std::ostringstream s;
  s << id << "{" << f.v[0] << "," << f.v[1] << "," << f.v[2] << "}";
  return s.str();
}

}  // namespace

std::vector<Violation> validate(const Triangulation& t, ValidateOptions options) {
  std::vector<Violation> out;
  const auto ids = t.live_face_ids();

  std::vector<bool> used(t.vertex_count(), false);
  for (FaceId id : ids) {
    const Face& f = t.face(id);
    if (f.v[0] == f.v[1] || f.v[1] == f.v[2]) {
      out.push_back({"degenerate face", face_string(id, f) + " repeats a vertex"});
    }
    if (!std::is_sorted(f.v.begin(), f.v.end())) {
      out.push_back({"unsorted face", face_string(id, f)});
    }
    for (VertexId v : f.v) {
      if (v >= t.vertex_count()) {
        out.push_back({"vertex range", face_string(id, f) + " uses vertex " + std::to_string(v) +
                                           " >= " + std::to_string(t.vertex_count())});
      } else {
        used[v] = true;
      }
    }
  }
  for (std::size_t v = 0; v < used.size(); ++v) {
    if (!used[v]) {
      out.push_back({"vertex range", "vertex " + std::to_string(v) + " lies on no face"});
    }
  }

  for (const auto& [edge, incident] : t.edge_faces()) {
    const std::set<FaceId> distinct(incident.begin(), incident.end());
    if (incident.size() != 2 || distinct.size() != 2) {
      out.push_back({"edge-face degree", "edge {" + std::to_string(edge.lo) + "," +
                                             std::to_string(edge.hi) + "} lies on " +
                                             std::to_string(incident.size()) + " face(s)"});
    }
  }

  // Two distinct triangles may share at most an edge.
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const Face& f = t.face(ids[i]);
      const Face& g = t.face(ids[j]);
      int shared = 0;
      for (VertexId v : f.v) {
        shared += g.contains(v) ? 1 : 0;
      }
      if (shared == 3) {
        out.push_back({"face intersection",
                       face_string(ids[i], f) + " and " + face_string(ids[j], g) + " coincide"});
      }
    }
  }

  if (options.require_sphere && t.euler_characteristic() != 2) {
    out.push_back({"euler characteristic",
                   "V - E + F = " + std::to_string(t.euler_characteristic()) + ", expected 2"});
  }
  return out;
}

}  // namespace tetrachain
