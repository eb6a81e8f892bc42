#include "tetrachain/chain.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <thread>

#include "tetrachain/rng.hpp"
#include "tetrachain/zigzag.hpp"

namespace tetrachain {

void ChoiceSeq::check() const {
  if (first < 0 || first > 3) {
    throw ChoiceParseError(1, "first choice must be in [0,4), got " + std::to_string(first));
  }
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] < 0 || rest[i] > 2) {
      throw ChoiceParseError(i + 2, "choice must be in [0,3), got " + std::to_string(rest[i]));
    }
  }
}

std::string ChoiceSeq::to_string() const {
  std::string out = std::to_string(first);
  for (int c : rest) {
    out += "," + std::to_string(c);
  }
  return out;
}

ChoiceParseError::ChoiceParseError(std::size_t position, const std::string& what)
    : std::invalid_argument("choice " + std::to_string(position) + ": " + what),
      position_(position) {}

ChoiceSeq parse_choices(std::string_view text) {
  if (text.find_first_not_of(" \t") == std::string_view::npos) {
    throw ChoiceParseError(1, "empty choice sequence");
  }
  std::vector<int> values;
  std::size_t position = 0;
  while (true) {
    ++position;
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ChoiceParseError(position, "not an integer: '" + std::string(token) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  ChoiceSeq seq{values.front(), {values.begin() + 1, values.end()}};
  seq.check();
  return seq;
}

ChainRun build_chain(const ChoiceSeq& choices, TraceMode mode) {
  choices.check();
  ChainRun run{choices, tetrahedron(), {}, {}};
  const std::size_t n = choices.length();
  for (std::size_t gluing = 1; gluing < n; ++gluing) {
    const FaceId chosen =
        gluing == 1 ? FaceId{static_cast<std::uint32_t>(choices.first)}
                    : run.frontier[static_cast<std::size_t>(choices.rest[gluing - 2])];
    if (mode == TraceMode::kRecord) {
      run.trace.push_back({gluing, chosen, child_types(run.triangulation, chosen)});
    }
    run.frontier = run.triangulation.subdivide_in_place(chosen);
  }
  return run;
}

ChoiceSeq random_choices(std::size_t n, std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("chain length must be at least 2");
  }
  SplitMix64 rng(seed);
  ChoiceSeq seq;
  seq.first = static_cast<int>(rng.uniform_below(4));
  seq.rest.reserve(n - 2);
  for (std::size_t i = 2; i < n; ++i) {
    seq.rest.push_back(static_cast<int>(rng.uniform_below(3)));
  }
  return seq;
}

ChainRun random_chain(std::size_t n, std::uint64_t seed, TraceMode mode) {
  return build_chain(random_choices(n, seed), mode);
}

std::uint64_t chain_count(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("chain length must be at least 2");
  }
  std::uint64_t count = 4;
  for (std::size_t i = 2; i < n; ++i) {
    count *= 3;
  }
  return count;
}

ChoiceSeqRange::iterator::iterator(std::size_t n) : done_(false) {
  current_.rest.assign(n - 2, 0);
}

ChoiceSeqRange::iterator& ChoiceSeqRange::iterator::operator++() {
  // Odometer: the last entry turns fastest.
  for (auto it = current_.rest.rbegin(); it != current_.rest.rend(); ++it) {
    if (++*it < 3) {
      return *this;
    }
    *it = 0;
  }
  if (++current_.first < 4) {
    return *this;
  }
  done_ = true;
  current_ = {};
  return *this;
}

ChoiceSeqRange enumerate_chains(std::size_t n, std::size_t cap) {
  if (n < 2) {
    throw std::invalid_argument("chain length must be at least 2");
  }
  if (n > cap) {
    throw EnumerationCapExceeded("chain length " + std::to_string(n) +
                                 " exceeds the enumeration cap " + std::to_string(cap));
  }
  return ChoiceSeqRange(n);
}

int zigzag_pairs(const Triangulation& t) {
  return static_cast<int>(enumerate_zigzags(t).count_up_to_reversal());
}

namespace {

std::size_t class_slot(int pairs) {
  if (pairs < 1 || pairs > 3) {
    throw std::logic_error("tetrahedral chain with " + std::to_string(pairs) +
                           " zigzags up to reversal");
  }
  return static_cast<std::size_t>(pairs - 1);
}

}  // namespace

Census zigzag_census(std::size_t n, std::size_t cap) {
  Census census;
  census.n = n;
  for (const auto& choices : enumerate_chains(n, cap)) {
    const auto run = build_chain(choices, TraceMode::kSkip);
    ++census.counts[class_slot(zigzag_pairs(run.triangulation))];
    ++census.total;
  }
  for (std::size_t k = 0; k < 3; ++k) {
    census.probability[k] = Rational(census.counts[k], census.total);
  }
  return census;
}

SampleResult sample_zigzag_counts(std::size_t n, std::uint64_t trials, std::uint64_t seed,
                                  unsigned threads) {
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));

  std::vector<std::array<std::uint64_t, 3>> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t i = w; i < trials; i += threads) {
            const auto run = random_chain(n, derive_seed(seed, i), TraceMode::kSkip);
            ++partial[w][class_slot(zigzag_pairs(run.triangulation))];
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SampleResult result{n, trials, seed, {}};
  for (const auto& p : partial) {
    for (std::size_t k = 0; k < 3; ++k) {
      result.counts[k] += p[k];
    }
  }
  return result;
}

}  // namespace tetrachain
