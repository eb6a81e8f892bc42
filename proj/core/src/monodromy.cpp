#include "tetrachain/monodromy.hpp"

#include <algorithm>
#include <cstdlib>
#include <initializer_list>
#include <set>
#include <sstream>

namespace tetrachain {

namespace {

using Perm = std::array<OmegaIndex, kOmegaSize>;

constexpr std::array<std::string_view, 7> kNames{"M1", "M2", "M3", "M4", "M5", "M6", "M7"};

Perm identity_perm() { return {0, 1, 2, 3, 4, 5}; }

// Signed label: +k means e_k, -k means -e_k, for k in 1..3.
Perm from_cycles(OmegaIndex x, std::initializer_list<std::initializer_list<int>> cycles) {
  const std::array<OmegaIndex, 3> e{x, omega_rotate(x), omega_rotate(omega_rotate(x))};
  auto resolve = [&](int label) {
    const OmegaIndex base = e[std::abs(label) - 1];
    return label > 0 ? base : omega_negate(base);
  };
  Perm p = identity_perm();
  for (const auto& cycle : cycles) {
    const std::vector<int> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      p[resolve(c[i])] = resolve(c[(i + 1) % c.size()]);
    }
  }
  return p;
}

std::string types_string(const std::array<MType, 3>& ts) {
  std::ostringstream s;
  s << "{" << to_string(ts[0]) << "," << to_string(ts[1]) << "," << to_string(ts[2]) << "}";
  return s.str();
}

}  // namespace

std::string_view to_string(MType t) { return kNames.at(state_index(t)); }

std::optional<MType> parse_mtype(std::string_view s) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == s) {
      return type_from_index(static_cast<int>(i));
    }
  }
  return std::nullopt;
}

OrientedEdge Monodromy::operator()(const OrientedEdge& e) const {
  auto i = omega_index(vertices, e);
  if (!i) {
    throw std::invalid_argument("oriented edge is not an edge of the monodromy's face");
  }
  return omega(vertices)[image[*i]];
}

bool Monodromy::is_bijection() const {
  std::array<bool, kOmegaSize> hit{};
  for (OmegaIndex i : image) {
    if (i >= kOmegaSize || hit[i]) {
      return false;
    }
    hit[i] = true;
  }
  return true;
}

bool Monodromy::is_antisymmetric() const {
  for (OmegaIndex i = 0; i < kOmegaSize; ++i) {
    if (image[omega_negate(image[i])] != omega_negate(i)) {
      return false;
    }
  }
  return true;
}

Monodromy z_monodromy(const Triangulation& t, FaceId f) {
  Monodromy m{f, t.face(f), {}};
  const auto all = omega(m.vertices);
  for (OmegaIndex i = 0; i < kOmegaSize; ++i) {
    const Flag start{f, all[i]};
    Flag cur = step(t, start);
    // The orbit returns to `start`, so this terminates.
    while (true) {
      if (auto j = omega_index(m.vertices, cur.edge)) {
        m.image[i] = *j;
        break;
      }
      cur = step(t, cur);
    }
  }
  return m;
}

Monodromy z_monodromy(const ZigzagOrbits& orbits, FaceId f) {
  Monodromy m{f, orbits.face(f), {}};

  // Every oriented edge of f sits on exactly two flags: (f, e) itself, and the
  // flag in the neighbouring face that steps into (f, D_F(e)).
  std::array<std::uint32_t, 2 * kOmegaSize> carriers{};
  std::array<OmegaIndex, 2 * kOmegaSize> carried{};
  for (OmegaIndex j = 0; j < kOmegaSize; ++j) {
    carriers[2 * j] = orbits.flag_id(f, j);
    carriers[2 * j + 1] = orbits.prev(orbits.flag_id(f, omega_rotate(j)));
    carried[2 * j] = j;
    carried[2 * j + 1] = j;
  }

  for (OmegaIndex i = 0; i < kOmegaSize; ++i) {
    const auto start = orbits.flag_id(f, i);
    const auto orbit = orbits.orbit_of(start);
    const auto length = orbits.orbits()[orbit].size();
    const auto pos = orbits.position_of(start);
    std::size_t best = length + 1;
    for (std::size_t c = 0; c < carriers.size(); ++c) {
      if (orbits.orbit_of(carriers[c]) != orbit) {
        continue;
      }
      std::size_t d = (orbits.position_of(carriers[c]) + length - pos) % length;
      if (d == 0) {
        d = length;
      }
      if (d < best) {
        best = d;
        m.image[i] = carried[c];
      }
    }
  }
  return m;
}

std::vector<Monodromy> all_monodromies(const Triangulation& t) {
  const ZigzagOrbits orbits(t);
  std::vector<Monodromy> out;
  out.reserve(t.face_count());
  for (FaceId f : t.live_face_ids()) {
    out.push_back(z_monodromy(orbits, f));
  }
  return out;
}

std::array<OmegaIndex, kOmegaSize> type_template(MType type, OmegaIndex x) {
  switch (type) {
    case MType::M1:
      return identity_perm();
    case MType::M2: {
      Perm p{};
      for (OmegaIndex i = 0; i < kOmegaSize; ++i) p[i] = omega_rotate(i);
      return p;
    }
    case MType::M5: {
      Perm p{};
      for (OmegaIndex i = 0; i < kOmegaSize; ++i) p[i] = omega_rotate_inverse(i);
      return p;
    }
    case MType::M3:
      return from_cycles(x, {{-1, 2, 3}, {-3, -2, 1}});
    case MType::M4:
      return from_cycles(x, {{1, -2}, {2, -1}});
    case MType::M6:
      return from_cycles(x, {{-1, 3, 2}, {-2, -3, 1}});
    case MType::M7:
      return from_cycles(x, {{1, 2}, {-2, -1}});
  }
  throw std::invalid_argument("unknown monodromy type");
}

MType classify(const Monodromy& m) {
  std::set<MType> matches;
  for (MType type : kAllTypes) {
    for (OmegaIndex x = 0; x < kOmegaSize; ++x) {
      if (type_template(type, x) == m.image) {
        matches.insert(type);
      }
    }
  }
  if (matches.size() != 1) {
    std::ostringstream msg;
    msg << "not a z-monodromy: face " << m.face << " matches " << matches.size() << " types";
    throw NotAZMonodromy(msg.str());
  }
  return *matches.begin();
}

int local_zigzag_count(MType t) {
  switch (t) {
    case MType::M5:
      return 6;
    case MType::M6:
    case MType::M7:
      return 4;
    default:
      return 2;
  }
}

int chain_zigzag_class(MType t) { return local_zigzag_count(t) / 2; }

std::array<MType, 3> ChildTypeRecord::sorted_children() const {
  auto out = children;
  std::sort(out.begin(), out.end());
  return out;
}

std::array<MType, 3> expected_child_types(MType parent) {
  using enum MType;
  switch (parent) {
    case M1:
      return {M4, M4, M4};
    case M2:
      return {M5, M5, M5};
    case M3:
      return {M6, M7, M7};
    case M4:
      return {M1, M3, M3};
    case M5:
      return {M3, M3, M3};
    case M6:
      return {M2, M4, M4};
    case M7:
      return {M6, M6, M7};
  }
  throw std::invalid_argument("unknown monodromy type");
}

ChildTypeRecord child_types(const Triangulation& t, FaceId f) {
  ChildTypeRecord record{classify(z_monodromy(t, f)), {}};
  const auto sub = stellar_subdivide(t, f);
  for (std::size_t i = 0; i < 3; ++i) {
    record.children[i] = classify(z_monodromy(sub.triangulation, sub.children[i]));
  }
  if (record.sorted_children() != expected_child_types(record.parent)) {
    throw ChildTableViolation("child-type table violation: " +
                              std::string(to_string(record.parent)) + " -> " +
                              types_string(record.children) + ", expected " +
                              types_string(expected_child_types(record.parent)));
  }
  return record;
}

}  // namespace tetrachain
