#include "tetrachain/zigzag.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tetrachain {

namespace {

// Omega indices of a sorted face listed in lexicographic (tail, head) order:
// ab, ac, ba, bc, ca, cb.
constexpr std::array<OmegaIndex, kOmegaSize> kLexOrder{0, 3, 5, 1, 2, 4};

VertexId third_vertex(const Face& f, EdgeKey e) {
  for (VertexId v : f.v) {
    if (v != e.lo && v != e.hi) {
      return v;
    }
  }
  throw std::logic_error("face has no vertex off the edge");
}

}  // namespace

Flag step(const Triangulation& t, const Flag& s) {
  const Face& face = t.face(s.face);
  if (!omega_index(face, s.edge)) {
    std::ostringstream msg;
    msg << "invalid flag: " << s.edge << " is not an edge of " << s.face;
    throw std::invalid_argument(msg.str());
  }
  const EdgeKey crossed = s.edge.key();
  const FaceId next = other_face(t, crossed, s.face);
  const VertexId d = third_vertex(t.face(next), crossed);
  return Flag{next, OrientedEdge{s.edge.head, d}};
}

std::vector<VertexId> Zigzag::vertices() const {
  std::vector<VertexId> out;
  out.reserve(edges.size());
  for (const auto& e : edges) {
    out.push_back(e.tail);
  }
  return out;
}

std::vector<OrientedEdge> canonical_key(std::span<const OrientedEdge> edges) {
  // Two-pointer least rotation; i and j are the competing start offsets.
  const std::size_t n = edges.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const auto& a = edges[(i + k) % n];
    const auto& b = edges[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) {
      ++j;
    }
    k = 0;
  }
  const std::size_t start = n == 0 ? 0 : std::min(i, j);
  std::vector<OrientedEdge> out;
  out.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    out.push_back(edges[(start + r) % n]);
  }
  return out;
}

Zigzag reversed(const Zigzag& z) {
  Zigzag r;
  r.edges.reserve(z.edges.size());
  for (auto it = z.edges.rbegin(); it != z.edges.rend(); ++it) {
    r.edges.push_back(-*it);
  }
  return r;
}

Zigzag trace(const Triangulation& t, const Flag& s) {
  Zigzag z;
  Flag cur = s;
  do {
    z.edges.push_back(cur.edge);
    cur = step(t, cur);
  } while (cur != s);
  return z;
}

bool is_edge_simple(const Zigzag& z) {
  std::set<EdgeKey> seen;
  for (const auto& e : z.edges) {
    if (!seen.insert(e.key()).second) {
      return false;
    }
  }
  return true;
}

std::size_t ZigzagSet::pair_id(std::size_t i) const {
  std::size_t id = 0;
  for (std::size_t k = 0; k < zigzags.size(); ++k) {
    if (k > partner[k]) {
      continue;
    }
    if (k == i || partner[k] == i) {
      return id;
    }
    ++id;
  }
  throw std::out_of_range("zigzag index out of range");
}

ZigzagSet enumerate_zigzags(const Triangulation& t) {
  const ZigzagOrbits orbits(t);
  ZigzagSet set;
  std::map<std::vector<OrientedEdge>, std::size_t> by_key;
  for (const auto& orbit : orbits.orbits()) {
    Zigzag z;
    z.edges.reserve(orbit.size());
    for (auto flag : orbit) {
      z.edges.push_back(orbits.edge_of(flag));
    }
    if (by_key.emplace(canonical_key(z.edges), set.zigzags.size()).second) {
      set.zigzags.push_back(std::move(z));
    }
  }

  set.partner.resize(set.zigzags.size());
  for (std::size_t i = 0; i < set.zigzags.size(); ++i) {
    auto it = by_key.find(canonical_key(reversed(set.zigzags[i]).edges));
    if (it == by_key.end()) {
      throw std::logic_error("zigzag without a reverse");
    }
    if (it->second == i) {
      throw std::logic_error("self-reversed zigzag");
    }
    set.partner[i] = it->second;
  }
  return set;
}

std::vector<std::size_t> zigzags_through_face(const Triangulation& t, const ZigzagSet& set,
                                              FaceId f) {
  const Face& face = t.face(f);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < set.zigzags.size(); ++i) {
    const auto& edges = set.zigzags[i].edges;
    if (std::any_of(edges.begin(), edges.end(),
                    [&](const OrientedEdge& e) { return face.has_edge(e.key()); })) {
      out.push_back(i);
    }
  }
  return out;
}

// ==========================================================
// ZigzagOrbits

ZigzagOrbits::ZigzagOrbits(const Triangulation& t) {
  const std::size_t bound = t.face_id_bound();
  faces_.resize(bound);
  for (FaceId id : t.live_face_ids()) {
    faces_[id.value] = t.face(id);
  }

  // neighbour[f][k] is the face across Face::edges()[k] of f.
  std::vector<std::array<std::uint32_t, 3>> neighbour(bound, {kNone, kNone, kNone});
  for (const auto& [edge, incident] : t.edge_faces()) {
    if (incident.size() != 2) {
      throw std::logic_error("zigzags need every edge in exactly two faces");
    }
    for (int side = 0; side < 2; ++side) {
      const auto edges = faces_[incident[side].value]->edges();
      const auto k = std::find(edges.begin(), edges.end(), edge) - edges.begin();
      neighbour[incident[side].value][k] = incident[1 - side].value;
    }
  }

  next_.assign(bound * kOmegaSize, kNone);
  for (FaceId id : t.live_face_ids()) {
    const Face& face = *faces_[id.value];
    const auto edges = face.edges();
    const auto all = omega(face);
    for (OmegaIndex i = 0; i < kOmegaSize; ++i) {
      const OrientedEdge e = all[i];
      const EdgeKey key = e.key();
      const auto k = std::find(edges.begin(), edges.end(), key) - edges.begin();
      const std::uint32_t g = neighbour[id.value][k];
      const Face& across = *faces_[g];
      const VertexId d = third_vertex(across, key);
      next_[flag_id(id, i)] = flag_id(FaceId{g}, *omega_index(across, OrientedEdge{e.head, d}));
    }
  }

  prev_.assign(next_.size(), kNone);
  for (std::uint32_t flag = 0; flag < next_.size(); ++flag) {
    if (next_[flag] != kNone) {
      prev_[next_[flag]] = flag;
    }
  }

  orbit_.assign(next_.size(), kNone);
  position_.assign(next_.size(), kNone);
  for (FaceId id : t.live_face_ids()) {
    for (OmegaIndex i : kLexOrder) {
      const std::uint32_t start = flag_id(id, i);
      if (orbit_[start] != kNone) {
        continue;
      }
      const auto orbit_no = static_cast<std::uint32_t>(orbits_.size());
      std::vector<std::uint32_t> members;
      std::uint32_t cur = start;
      do {
        if (orbit_[cur] != kNone) {
          throw std::logic_error("flag step is not a permutation");
        }
        orbit_[cur] = orbit_no;
        position_[cur] = static_cast<std::uint32_t>(members.size());
        members.push_back(cur);
        cur = next_[cur];
      } while (cur != start);
      orbits_.push_back(std::move(members));
    }
  }
}

const Face& ZigzagOrbits::face(FaceId f) const {
  if (f.value >= faces_.size() || !faces_[f.value]) {
    throw std::out_of_range("no such face");
  }
  return *faces_[f.value];
}

OrientedEdge ZigzagOrbits::edge_of(std::uint32_t flag) const {
  return omega(face(face_of(flag)))[omega_of(flag)];
}

std::vector<std::uint32_t> ZigzagOrbits::orbits_through_face(FaceId f) const {
  // A zigzag crossing an edge of f enters f on the next step, so the orbits of
  // the six flags of f are all of them.
  std::set<std::uint32_t> found;
  for (OmegaIndex i = 0; i < kOmegaSize; ++i) {
    found.insert(orbit_.at(flag_id(f, i)));
  }
  return {found.begin(), found.end()};
}

}  // namespace tetrachain
