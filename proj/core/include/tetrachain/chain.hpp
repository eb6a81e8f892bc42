#ifndef TETRACHAIN_CHAIN_HPP
#define TETRACHAIN_CHAIN_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tetrachain/monodromy.hpp"
#include "tetrachain/rational.hpp"
#include "tetrachain/surface_map.hpp"

namespace tetrachain {

/// The decisions that determine a tetrahedral chain of length n >= 2.
///
/// `first` picks a face of the initial tetrahedron (FaceId 0..3). Each entry of
/// `rest` picks one of the three children, in canonical order, of the face
/// subdivided in the previous step. Only those children are ever offered, so a
/// new tetrahedron is always glued onto the one attached just before.
struct ChoiceSeq {
  int first = 0;
  std::vector<int> rest;

  std::size_t length() const { return rest.size() + 2; }

  /// Throws std::invalid_argument naming the offending position.
  void check() const;

  /// Comma separated, first choice leading: "2,0,1".
  std::string to_string() const;

  friend auto operator<=>(const ChoiceSeq&, const ChoiceSeq&) = default;
};

class ChoiceParseError : public std::invalid_argument {
 public:
  ChoiceParseError(std::size_t position, const std::string& what);
  /// 1-based index of the offending entry.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses "2,0,1". Throws ChoiceParseError for empty input, junk, or
/// out-of-range entries.
ChoiceSeq parse_choices(std::string_view text);

enum class TraceMode { kRecord, kSkip };

struct TraceStep {
  /// Gluing number g: subdivides a face of the chain of length g.
  std::size_t gluing = 0;
  FaceId chosen;
  ChildTypeRecord types;
};

struct ChainRun {
  ChoiceSeq choices;
  Triangulation triangulation;
  std::array<FaceId, 3> frontier{};
  std::vector<TraceStep> trace;

  std::size_t length() const { return choices.length(); }
};

ChainRun build_chain(const ChoiceSeq& choices, TraceMode mode = TraceMode::kRecord);

/// Uniform choices from SplitMix64(seed): first below 4, then each entry below 3.
ChoiceSeq random_choices(std::size_t n, std::uint64_t seed);
ChainRun random_chain(std::size_t n, std::uint64_t seed, TraceMode mode = TraceMode::kRecord);

inline constexpr std::size_t kDefaultEnumerationCap = 10;

class EnumerationCapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// 4 * 3^(n-2).
std::uint64_t chain_count(std::size_t n);

/// All choice sequences of one length in lexicographic order.
class ChoiceSeqRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ChoiceSeq;
    using difference_type = std::ptrdiff_t;
    using pointer = const ChoiceSeq*;
    using reference = const ChoiceSeq&;

    iterator() = default;
    explicit iterator(std::size_t n);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& other) const {
      return done_ == other.done_ && (done_ || current_ == other.current_);
    }

   private:
    ChoiceSeq current_;
    bool done_ = true;
  };

  explicit ChoiceSeqRange(std::size_t n) : n_(n) {}
  iterator begin() const { return iterator(n_); }
  iterator end() const { return {}; }

 private:
  std::size_t n_;
};

/// Throws std::invalid_argument for n < 2 and EnumerationCapExceeded for n > cap.
ChoiceSeqRange enumerate_chains(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// Zigzags up to reversal, counted by full enumeration of the zigzags.
int zigzag_pairs(const Triangulation& t);

struct Census {
  std::size_t n = 0;
  std::uint64_t total = 0;
  /// counts[k-1]: constructions whose chain has exactly k zigzags up to reversal.
  std::array<std::uint64_t, 3> counts{};
  std::array<Rational, 3> probability;
};

/// Builds every chain of length n and weighs each construction uniformly.
Census zigzag_census(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

struct SampleResult {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::array<std::uint64_t, 3> counts{};
};

/// Builds `trials` random chains; trial i uses random_chain(n, derive_seed(seed, i)).
/// The result does not depend on `threads`.
SampleResult sample_zigzag_counts(std::size_t n, std::uint64_t trials, std::uint64_t seed,
                                  unsigned threads = 0);

}  // namespace tetrachain

#endif  // TETRACHAIN_CHAIN_HPP
