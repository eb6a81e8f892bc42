// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "tetrachain/chain.hpp"
#include "tetrachain/markov.hpp"
#include "tetrachain/monodromy.hpp"
#include "tetrachain/rng.hpp"
#include "tetrachain/zigzag.hpp"

namespace tc = tetrachain;
using tc::MType;
using tc::Rational;

namespace {

// Tolerances and budgets.
constexpr double kTetraBudgetMs = 1.0;
constexpr double kCensusBudgetS = 60.0;
constexpr double kConvergenceBudgetS = 1.0;
constexpr double kMonteCarloBudgetS = 60.0;
constexpr double kLimitResidual = 1e-4;
constexpr double kRatioSpread = 0.05;
constexpr double kSigmas = 3.0;
constexpr std::size_t kChildSweepMax = 6;
constexpr std::size_t kCensusMin = 2;
constexpr std::size_t kCensusMax = 8;
constexpr std::size_t kOracleCensusMax = 6;
constexpr std::size_t kConvergenceMin = 10;
constexpr std::size_t kConvergenceMax = 60;
constexpr std::size_t kLag = 12;
constexpr std::size_t kMonteCarloN = 50;
constexpr std::uint64_t kMonteCarloTrials = 100000;
constexpr std::uint64_t kMonteCarloSeed = 20240601;
constexpr std::size_t kStructExhaustiveMax = 8;
constexpr std::uint64_t kStructRandomChains = 10000;
constexpr std::uint64_t kStructSeed = 7;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::string str(const Rational& r) { return tc::to_fraction_string(r); }

std::string triple(const tc::ClassProbabilities& p) {
  return "(" + str(p[0]) + ", " + str(p[1]) + ", " + str(p[2]) + ")";
}

tc::Triangulation bipyramid() {
  return tc::stellar_subdivide(tc::tetrahedron(), tc::FaceId{3}).triangulation;
}

// Child multiset per parent, as a literal table.
const std::map<MType, std::multiset<MType>>& child_table() {
  using enum MType;
  static const std::map<MType, std::multiset<MType>> table{
      {M1, {M4, M4, M4}}, {M2, {M5, M5, M5}}, {M3, {M6, M7, M7}}, {M4, {M1, M3, M3}},
      {M5, {M3, M3, M3}}, {M6, {M2, M4, M4}}, {M7, {M6, M6, M7}},
  };
  return table;
}

// Records gathered by criterion 3 and reused by criterion 10.
std::vector<tc::ChildTypeRecord> g_records;

Outcome criterion1() {
  const auto t = tc::tetrahedron();
  const auto t0 = Clock::now();
  const auto set = tc::enumerate_zigzags(t);
  std::vector<MType> types;
  for (const auto& m : tc::all_monodromies(t)) types.push_back(tc::classify(m));
  const double ms = seconds_since(t0) * 1e3;

  bool ok = set.size() == 6 && set.count_up_to_reversal() == 3;
  for (const auto& z : set.zigzags) ok = ok && z.length() == 4 && tc::is_edge_simple(z);
  ok = ok && types.size() == 4 &&
       std::all_of(types.begin(), types.end(), [](MType m) { return m == MType::M5; });
  return {ok && ms < kTetraBudgetMs,
          fmt("tetrahedron: %zu zigzags (%zu pairs), all length 4 and edge-simple, faces M5; %.3f ms "
              "(budget %.1f ms)",
              set.size(), set.count_up_to_reversal(), ms, kTetraBudgetMs)};
}

Outcome criterion2() {
  const auto t = bipyramid();
  const auto set = tc::enumerate_zigzags(t);
  bool ok = set.count_up_to_reversal() == 1;
  for (const auto& z : set.zigzags) ok = ok && z.length() == 18;
  for (const auto& m : tc::all_monodromies(t)) ok = ok && tc::classify(m) == MType::M3;
  return {ok, fmt("bipyramid: %zu pair(s), lengths %zu, every face M3", set.count_up_to_reversal(),
                  set.zigzags.empty() ? 0 : set.zigzags.front().length())};
}

Outcome criterion3() {
  const auto t0 = Clock::now();
  std::set<MType> parents;
  std::size_t faces = 0;
  std::string first_bad;
  for (std::size_t n = 2; n <= kChildSweepMax; ++n) {
    for (const auto& c : tc::enumerate_chains(n)) {
      const auto run = tc::build_chain(c, tc::TraceMode::kSkip);
      for (auto f : run.triangulation.live_face_ids()) {
        ++faces;
        try {
          const auto r = tc::child_types(run.triangulation, f);
          const std::multiset<MType> got(r.children.begin(), r.children.end());
          if (got != child_table().at(r.parent) && first_bad.empty()) {
            first_bad = c.to_string() + " face " + std::to_string(f.value);
          }
          parents.insert(r.parent);
          g_records.push_back(r);
        } catch (const std::exception& e) {
          if (first_bad.empty()) first_bad = c.to_string() + ": " + e.what();
        }
      }
    }
  }
  const bool ok = first_bad.empty() && parents.size() == 7;
  return {ok, fmt("child table over all chains n<=%zu: %zu faces, %zu/7 parent types observed%s; "
                  "%.2f s",
                  kChildSweepMax, faces, parents.size(),
                  first_bad.empty() ? "" : (", mismatch at " + first_bad).c_str(),
                  seconds_since(t0))};
}

Outcome criterion4() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::uint64_t builds = 0;
  std::string bad;
  for (std::size_t n = kCensusMin; n <= kCensusMax; ++n) {
    const auto census = tc::zigzag_census(n);
    builds += census.total;
    if (census.probability != tc::exact_pk(n)) {
      ok = false;
      bad += " n=" + std::to_string(n);
    }
  }
  const double s = seconds_since(t0);
  // Brute-force reference that shares no code with the library.
  bool oracle_ok = true;
  for (std::size_t n = kCensusMin; n <= kOracleCensusMax; ++n) {
    const auto counts = oracle::census(static_cast<int>(n));
    const auto pk = tc::exact_pk(n);
    for (std::size_t k = 0; k < 3; ++k) {
      oracle_ok = oracle_ok && Rational(counts.by_pairs[k], counts.total) == pk[k];
    }
  }
  return {ok && oracle_ok && s < kCensusBudgetS,
          fmt("census == exact_pk for n in [%zu,%zu] over %llu builds%s; brute-force reference "
              "agrees for n<=%zu: %s; %.2f s (budget %.0f s)",
              kCensusMin, kCensusMax, static_cast<unsigned long long>(builds),
              bad.empty() ? "" : (", differs at" + bad).c_str(), kOracleCensusMax,
              oracle_ok ? "yes" : "no", s, kCensusBudgetS)};
}

Outcome criterion5() {
  const auto p3 = tc::exact_pk(3);
  const auto p4 = tc::exact_pk(4);
  const bool ok = p3 == tc::ClassProbabilities{0, 1, 0} &&
                  p4 == tc::ClassProbabilities{Rational(1, 3), Rational(2, 3), 0};
  return {ok, "exact_pk(3) = " + triple(p3) + ", exact_pk(4) = " + triple(p4)};
}

Outcome criterion6() {
  const auto pi = tc::stationary();
  const tc::Distribution want{Rational(1, 15), Rational(1, 15), Rational(1, 5), Rational(1, 5),
                              Rational(1, 15), Rational(1, 5), Rational(1, 5)};
  const auto grouped = tc::group_by_class(pi);
  const bool ok =
      pi == want && grouped == tc::ClassProbabilities{Rational(8, 15), Rational(2, 5), Rational(1, 15)};
  std::string s = "pi = [";
  for (std::size_t i = 0; i < pi.size(); ++i) s += (i ? ", " : "") + str(pi[i]);
  return {ok, s + "], grouped " + triple(grouped)};
}

Outcome criterion7() {
  const auto t0 = Clock::now();
  const auto pk = tc::exact_pk(kConvergenceMax);
  const auto lim = tc::limits();
  double max_res = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    max_res = std::max(max_res, tc::to_double(abs(pk[k] - lim[k])));
  }
  const auto fit = tc::convergence_fit(kConvergenceMin, kConvergenceMax);
  const double s = seconds_since(t0);

  const bool near = max_res < kLimitResidual;
  bool geometric = true;
  std::string spreads;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& c = fit.classes[k];
    geometric = geometric && !c.degenerate && c.ratio_spread < kRatioSpread;
    const auto [lo, hi] = std::minmax_element(c.ratios.begin(), c.ratios.end());
    spreads += fmt(" k=%zu: gamma_hat %.4f, ratios in [%.3g, %.3g], spread %.3g;", k + 1,
                   c.gamma_hat, *lo, *hi, c.ratio_spread);
  }
  // Informational: residual factor between n and n + kLag against gamma_hat^kLag.
  const auto& r1 = fit.classes[0].residuals;
  const double expect = std::pow(fit.classes[0].gamma_hat, static_cast<double>(kLag));
  std::size_t lag_ok = 0, lag_total = 0;
  for (std::size_t i = 0; i + kLag < r1.size(); ++i, ++lag_total) {
    if (r1[i] > 0 && std::abs(r1[i + kLag] / r1[i] / expect - 1.0) < kRatioSpread) ++lag_ok;
  }
  spreads += fmt(" info: r(n+%zu)/r(n) within 5%% of gamma_hat^%zu for %zu of %zu n;", kLag, kLag,
                 lag_ok, lag_total);
  return {near && geometric && s < kConvergenceBudgetS,
          fmt("max residual at n=%zu is %.3g (< %.0e: %s); consecutive-ratio spread over [%zu,%zu] "
              "< %.0f%%: %s;%s %.3f s",
              kConvergenceMax, max_res, kLimitResidual, near ? "yes" : "no", kConvergenceMin,
              kConvergenceMax, kRatioSpread * 100, geometric ? "yes" : "no", spreads.c_str(), s)};
}

Outcome criterion8() {
  const auto t0 = Clock::now();
  const auto r = tc::sample_zigzag_counts(kMonteCarloN, kMonteCarloTrials, kMonteCarloSeed);
  const double s = seconds_since(t0);
  const auto lim = tc::limits();
  bool ok = s < kMonteCarloBudgetS;
  std::string parts;
  for (std::size_t k = 0; k < 3; ++k) {
    const double p = tc::to_double(lim[k]);
    const double p_hat = static_cast<double>(r.counts[k]) / kMonteCarloTrials;
    const double se = std::sqrt(p * (1 - p) / kMonteCarloTrials);
    const double z = (p_hat - p) / se;
    ok = ok && std::abs(z) <= kSigmas;
    parts += fmt(" k=%zu: %.5f vs %s (z=%+.2f);", k + 1, p_hat, str(lim[k]).c_str(), z);
  }
  return {ok, fmt("n=%zu, %llu trials, seed %llu:%s within %.0f SE; %.2f s (budget %.0f s)",
                  kMonteCarloN, static_cast<unsigned long long>(kMonteCarloTrials),
                  static_cast<unsigned long long>(kMonteCarloSeed), parts.c_str(), kSigmas, s,
                  kMonteCarloBudgetS)};
}

// Empty string when every structural invariant holds for the chain.
std::string check_structure(const tc::ChainRun& run) {
  const auto& t = run.triangulation;
  const std::size_t n = run.length();
  if (!tc::validate(t).empty()) return "validate failed";
  if (t.vertex_count() != n + 3 || t.edge_count() != 3 * n + 3 || t.face_count() != 2 * n + 2) {
    return "V/E/F counts";
  }
  const auto set = tc::enumerate_zigzags(t);
  if (set.count_up_to_reversal() < 1 || set.count_up_to_reversal() > 3) return "zigzag count";
  std::size_t total = 0;
  for (const auto& z : set.zigzags) total += z.length();
  if (total != 6 * t.face_count()) return "flag count";
  const tc::ZigzagOrbits orbits(t);
  for (auto f : t.live_face_ids()) {
    const auto m = tc::z_monodromy(orbits, f);
    if (!m.is_antisymmetric()) return "anti-symmetry at face " + std::to_string(f.value);
    const auto through = orbits.orbits_through_face(f).size();
    if (static_cast<int>(through) != tc::local_zigzag_count(tc::classify(m))) {
      return "local zigzag count at face " + std::to_string(f.value);
    }
  }
  return {};
}

Outcome criterion9() {
  const auto t0 = Clock::now();
  std::uint64_t chains = 0;
  std::string bad;
  for (std::size_t n = 2; n <= kStructExhaustiveMax && bad.empty(); ++n) {
    for (const auto& c : tc::enumerate_chains(n)) {
      ++chains;
      const auto why = check_structure(tc::build_chain(c, tc::TraceMode::kSkip));
      if (!why.empty()) {
        bad = c.to_string() + ": " + why;
        break;
      }
    }
  }
  for (std::uint64_t i = 0; i < kStructRandomChains && bad.empty(); ++i) {
    const std::size_t n = 2 + i % 99;
    const auto run = tc::random_chain(n, tc::derive_seed(kStructSeed, i), tc::TraceMode::kSkip);
    ++chains;
    const auto why = check_structure(run);
    if (!why.empty()) bad = "random n=" + std::to_string(n) + ": " + why;
  }
  return {bad.empty(),
          fmt("%llu chains (all n<=%zu plus %llu random up to n=100): %s; %.2f s",
              static_cast<unsigned long long>(chains), kStructExhaustiveMax,
              static_cast<unsigned long long>(kStructRandomChains),
              bad.empty() ? "all invariants hold" : bad.c_str(), seconds_since(t0))};
}

Outcome criterion10() {
  bool derived_ok = false;
  std::string derived_note;
  try {
    derived_ok = tc::derive_transition_matrix(g_records) == tc::transition_matrix();
  } catch (const std::exception& e) {
    derived_note = std::string(" (") + e.what() + ")";
  }
  const auto dot = tc::digraph_dot();
  const std::regex edge(R"re((M\d) -> (M\d) \[label="([^"]+)"\])re");
  std::set<std::string> seen;
  std::size_t lines = 0;
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator();
       ++it, ++lines) {
    seen.insert((*it)[1].str() + "->" + (*it)[2].str() + ":" + (*it)[3].str());
  }
  const std::set<std::string> want{"M1->M4:1",   "M2->M5:1",   "M3->M6:1/3", "M3->M7:2/3",
                                   "M4->M1:1/3", "M4->M3:2/3", "M5->M3:1",   "M6->M2:1/3",
                                   "M6->M4:2/3", "M7->M6:2/3", "M7->M7:1/3"};
  const bool dot_ok = seen == want && lines == want.size();
  return {derived_ok && dot_ok,
          fmt("derived matrix from %zu records equals P: %s%s; DOT has %zu edges matching the "
              "expected 11: %s",
              g_records.size(), derived_ok ? "yes" : "no", derived_note.c_str(), lines,
              dot_ok ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10,
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", i + 1, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
