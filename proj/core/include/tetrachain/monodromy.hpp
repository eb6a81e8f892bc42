#ifndef TETRACHAIN_MONODROMY_HPP
#define TETRACHAIN_MONODROMY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tetrachain/surface_map.hpp"
#include "tetrachain/zigzag.hpp"

namespace tetrachain {

/// The seven possible z-monodromy types, numbered as states 1..7.
enum class MType : std::uint8_t { M1 = 1, M2, M3, M4, M5, M6, M7 };

inline constexpr std::array<MType, 7> kAllTypes{MType::M1, MType::M2, MType::M3, MType::M4,
                                                MType::M5, MType::M6, MType::M7};

constexpr int state_index(MType t) { return static_cast<int>(t) - 1; }
constexpr MType type_from_index(int i) { return static_cast<MType>(i + 1); }
std::string_view to_string(MType t);
std::optional<MType> parse_mtype(std::string_view s);

/// Permutation M_F on the six oriented edges of a face, stored in omega index
/// space: image[i] is the omega index of M_F(omega(face)[i]).
struct Monodromy {
  FaceId face;
  Face vertices;
  std::array<OmegaIndex, kOmegaSize> image{};

  OrientedEdge operator()(const OrientedEdge& e) const;
  bool is_bijection() const;
  /// M(-M(e)) == -e for every e.
  bool is_antisymmetric() const;

  friend bool operator==(const Monodromy&, const Monodromy&) = default;
};

/// Walks the zigzag through each flag of f until an oriented edge of f reappears.
Monodromy z_monodromy(const Triangulation& t, FaceId f);

/// Same permutation, read off a precomputed orbit decomposition in O(1) per edge.
Monodromy z_monodromy(const ZigzagOrbits& orbits, FaceId f);

/// Monodromies of every live face, in FaceId order.
std::vector<Monodromy> all_monodromies(const Triangulation& t);

class NotAZMonodromy : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Template match against the seven types over all six labelings
/// (e1, e2, e3) = (x, D_F(x), D_F^2(x)). Throws NotAZMonodromy when no type or
/// more than one type matches.
MType classify(const Monodromy& m);

/// Builds the permutation of a type template for a given labeling start x.
/// Exposed for tests and for enumerating the template catalogue.
std::array<OmegaIndex, kOmegaSize> type_template(MType type, OmegaIndex x);

/// |Z(F)| implied by the type: 2 for M1..M4, 4 for M6/M7, 6 for M5.
int local_zigzag_count(MType t);

/// Zigzags up to reversal of a chain whose newest face has this type.
int chain_zigzag_class(MType t);

struct ChildTypeRecord {
  MType parent;
  /// Types of the three children in canonical subdivision order.
  std::array<MType, 3> children;

  std::array<MType, 3> sorted_children() const;
};

/// Expected child multiset per parent type, sorted. For M7 this is
/// {M6, M6, M7}.
std::array<MType, 3> expected_child_types(MType parent);

class ChildTableViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classifies f, subdivides a copy of t at f and classifies the children.
/// Throws ChildTableViolation when the children disagree with
/// expected_child_types().
ChildTypeRecord child_types(const Triangulation& t, FaceId f);

}  // namespace tetrachain

#endif  // TETRACHAIN_MONODROMY_HPP
