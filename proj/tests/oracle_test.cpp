// Library results against the brute-force reference in oracle/.
#include <gtest/gtest.h>

#include <algorithm>

#include "brute_force.hpp"
#include "tetrachain/chain.hpp"
#include "tetrachain/markov.hpp"
#include "tetrachain/monodromy.hpp"
#include "tetrachain/zigzag.hpp"

namespace tc = tetrachain;

namespace {

oracle::Surface to_surface(const tc::Triangulation& t) {
  oracle::Surface s{static_cast<int>(t.vertex_count()), {}};
  for (auto f : t.live_face_ids()) {
    const auto& v = t.face(f).v;
    s.faces.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])});
  }
  return s;
}

std::vector<std::vector<oracle::Arc>> library_zigzags(const tc::Triangulation& t) {
  std::vector<std::vector<oracle::Arc>> out;
  for (const auto& z : tc::enumerate_zigzags(t).zigzags) {
    std::vector<oracle::Arc> arcs;
    for (const auto& e : tc::canonical_key(z.edges)) {
      arcs.emplace_back(static_cast<int>(e.tail), static_cast<int>(e.head));
    }
    out.push_back(arcs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Oracle, TetrahedronAndThreeChain) {
  EXPECT_EQ(oracle::zigzags(oracle::tetrahedron()).size(), 6u);
  const auto theta3 = oracle::subdivide(oracle::subdivide(oracle::tetrahedron(), 3), 5);
  EXPECT_EQ(oracle::zigzags(theta3).size(), 4u);
}

TEST(Oracle, ZigzagsAgreeOnSmallChains) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& c : tc::enumerate_chains(n)) {
      const auto t = tc::build_chain(c, tc::TraceMode::kSkip).triangulation;
      EXPECT_EQ(library_zigzags(t), oracle::zigzags(to_surface(t))) << c.to_string();
    }
  }
}

TEST(Oracle, MonodromyAndTypeAgreeOnSmallChains) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& c : tc::enumerate_chains(n)) {
      const auto t = tc::build_chain(c, tc::TraceMode::kSkip).triangulation;
      const auto s = to_surface(t);
      const auto ids = t.live_face_ids();
      for (std::size_t i = 0; i < ids.size(); ++i) {
        const auto m = tc::z_monodromy(t, ids[i]);
        const auto want = oracle::monodromy(s, i);
        for (const auto& e : tc::omega(m.vertices)) {
          const auto got = m(e);
          EXPECT_EQ((oracle::Arc{static_cast<int>(got.tail), static_cast<int>(got.head)}),
                    want.at({static_cast<int>(e.tail), static_cast<int>(e.head)}));
        }
        EXPECT_EQ(std::string(tc::to_string(tc::classify(m))), oracle::classify(s.faces[i], want));
      }
    }
  }
}

TEST(Oracle, CensusMatchesPk) {
  for (int n = 2; n <= 6; ++n) {
    const auto counts = oracle::census(n);
    EXPECT_EQ(counts.total, tc::chain_count(static_cast<std::size_t>(n)));
    const auto pk = tc::exact_pk(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(tc::Rational(counts.by_pairs[k], counts.total), pk[k]) << "n=" << n << " k=" << k + 1;
    }
  }
}
