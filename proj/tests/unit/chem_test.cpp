//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fuelgen/chem/canonical.h"
#include "fuelgen/chem/curate.h"
#include "fuelgen/chem/enumerate.h"
#include "fuelgen/chem/properties.h"
#include "fuelgen/chem/smiles.h"
#include "fuelgen/util/error.h"
#include "fuelgen/util/random.h"

using namespace fuelgen;

namespace {

// Smallest string over every start atom and every neighbor ordering.
std::string min_traversal(const MolGraph &g) {
  std::vector<int> perm(g.num_atoms());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    for (int s = 0; s < g.num_atoms(); ++s) {
      std::string w = write_smiles(g, s, perm);
      if (best.empty() || w.size() < best.size()
          || (w.size() == best.size() && w < best))
        best = w;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Rank over GF(2) of the edge vectors of every simple cycle.
int brute_force_cycle_rank(const MolGraph &g) {
  const int m = g.num_bonds();
  std::set<std::vector<int>> cycles;
  std::vector<int> path, used(m, 0), on_path(g.num_atoms(), 0);
  auto dfs = [&](auto &self, int start, int atom) -> void {
    for (const Neighbor &n: g.neighbors(atom)) {
      if (used[n.bond])
        continue;
      if (n.atom == start && path.size() >= 2) {
        std::vector<int> c = path;
        c.push_back(n.bond);
        std::sort(c.begin(), c.end());
        cycles.insert(c);
        continue;
      }
      if (on_path[n.atom] || n.atom < start)
        continue;
      used[n.bond] = 1;
      on_path[n.atom] = 1;
      path.push_back(n.bond);
      self(self, start, n.atom);
      path.pop_back();
      on_path[n.atom] = 0;
      used[n.bond] = 0;
    }
  };
  for (int s = 0; s < g.num_atoms(); ++s) {
    on_path[s] = 1;
    dfs(dfs, s, s);
    on_path[s] = 0;
  }

  std::vector<std::vector<char>> rows;
  for (const auto &c: cycles) {
    std::vector<char> r(m, 0);
    for (int b: c)
      r[b] = 1;
    rows.push_back(r);
  }
  int rank = 0;
  for (int col = 0; col < m && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col]) {
        piv = i;
        break;
      }
    }
    if (piv < 0)
      continue;
    std::swap(rows[piv], rows[rank]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != rank && rows[i][col]) {
        for (int j = 0; j < m; ++j)
          rows[i][j] ^= rows[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Parse, CarbonDioxide) {
  MolGraph g = parse_smiles("O=C=O");
  EXPECT_EQ(g.num_atoms(), 3);
  EXPECT_EQ(g.num_bonds(), 2);
  EXPECT_EQ(count_bonds_of_order(g, 2), 2);
}

TEST(Parse, Bicyclic) {
  MolGraph g = parse_smiles("C1CC2CCC1C2");
  EXPECT_EQ(g.num_atoms(), 7);
  EXPECT_EQ(g.num_bonds(), 8);
}

TEST(Parse, SyntaxErrors) {
  for (const char *s: { "C1CC1(", "", "C=", "C1CC", "CC)", "CN", "C()",
                        "=C", "C[H]", "C11" })
    EXPECT_THROW(parse_smiles(s), SyntaxError) << s;
}

TEST(Parse, RingBondOrders) {
  EXPECT_EQ(parse_smiles("C=1CC1").bond_order(0, 2), 2);
  EXPECT_EQ(parse_smiles("C1CC=1").bond_order(0, 2), 2);
  EXPECT_THROW(parse_smiles("C=1CC#1"), SyntaxError);
}

TEST(Parse, ImplicitHydrogens) {
  MolGraph g = parse_smiles("CC=O");
  EXPECT_EQ(g.implicit_hydrogens(0), 3);
  EXPECT_EQ(g.implicit_hydrogens(1), 1);
  EXPECT_EQ(g.implicit_hydrogens(2), 0);
}

TEST(Valence, Examples) {
  ValenceReport over = check_valence(parse_smiles("C(C)(C)(C)(C)C"));
  ASSERT_EQ(over.violations.size(), 1u);
  EXPECT_EQ(over.violations[0], (ValenceViolation { 0, 5, 4 }));
  EXPECT_TRUE(check_valence(parse_smiles("OO")).valid());
  ValenceReport ozone = check_valence(parse_smiles("O=O=O"));
  ASSERT_EQ(ozone.violations.size(), 1u);
  EXPECT_EQ(ozone.violations[0].atom, 1);
  EXPECT_EQ(ozone.violations[0].bond_order_sum, 4);
}

TEST(RingCount, Examples) {
  EXPECT_EQ(ring_count(parse_smiles("CC(C)C")), 0);
  EXPECT_EQ(ring_count(parse_smiles("C1CCCCC1")), 1);
  EXPECT_EQ(ring_count(parse_smiles("C1CC2CCC1C2")), 2);
}

TEST(RingCount, MatchesCycleSpaceRank) {
  std::vector<std::string> mols = enumerate_molecules(5);
  mols.push_back("C1CC2CC3CCC123");
  mols.push_back("C12C3C1C23");
  mols.push_back("C1CC2CCC1C2");
  for (const std::string &s: mols) {
    MolGraph g = parse_smiles(s);
    EXPECT_EQ(ring_count(g), brute_force_cycle_rank(g)) << s;
  }
}

TEST(Canonical, Examples) {
  EXPECT_EQ(canonical_smiles("OCC"), canonical_smiles("CCO"));
  EXPECT_EQ(canonical_smiles("C"), "C");
  for (const char *s: { "OCC", "C1CC2CCC1C2", "CC(=O)OC", "C#CC=C" }) {
    const std::string once = canonical_smiles(s);
    EXPECT_EQ(canonical_smiles(once), once) << s;
  }
}

TEST(Canonical, AgreesWithMinimalTraversalOracle) {
  const std::vector<std::string> mols = enumerate_molecules(5);
  std::map<std::string, std::string> canon_to_min, min_to_canon;
  for (const std::string &s: mols) {
    MolGraph g = parse_smiles(s);
    const std::string canon = canonicalize(g);
    const std::string min = min_traversal(g);
    auto [a, fresh_a] = canon_to_min.emplace(canon, min);
    auto [b, fresh_b] = min_to_canon.emplace(min, canon);
    EXPECT_EQ(a->second, min) << s;
    EXPECT_EQ(b->second, canon) << s;
  }
  // Each enumerated molecule is a distinct graph.
  EXPECT_EQ(canon_to_min.size(), mols.size());
}

TEST(Canonical, RoundTripIsIsomorphic) {
  auto rng = make_rng(3);
  for (const std::string &s: enumerate_molecules(5)) {
    MolGraph g = parse_smiles(s);
    EXPECT_TRUE(isomorphic(parse_smiles(canonicalize(g)), g)) << s;
    EXPECT_TRUE(isomorphic(parse_smiles(random_smiles(g, rng)), g)) << s;
  }
}

TEST(FunctionalGroups, Examples) {
  auto groups = [](const char *s) {
    return classify_functional_groups(parse_smiles(s));
  };
  FunctionalGroups alcohol = groups("CCO");
  EXPECT_TRUE(alcohol.contains(FunctionalGroup::kAlcohol));
  EXPECT_EQ(alcohol.size(), 1);
  FunctionalGroups ether = groups("COC");
  EXPECT_TRUE(ether.contains(FunctionalGroup::kEther));
  EXPECT_EQ(ether.size(), 1);
  FunctionalGroups aldehyde = groups("CC=O");
  EXPECT_TRUE(aldehyde.contains(FunctionalGroup::kAldehyde));
  EXPECT_EQ(aldehyde.size(), 1);

  EXPECT_TRUE(groups("CC(C)=O").contains(FunctionalGroup::kKetone));
  EXPECT_TRUE(groups("CC(=O)O").contains(FunctionalGroup::kCarboxylOrEster));
  EXPECT_TRUE(groups("CC=C").contains(FunctionalGroup::kAlkene));
  EXPECT_TRUE(groups("CC#C").contains(FunctionalGroup::kAlkyne));
  EXPECT_TRUE(groups("C1CC1").contains(FunctionalGroup::kRing));
  EXPECT_TRUE(groups("CCCC").contains(
      FunctionalGroup::kSaturatedHydrocarbon));
}

TEST(Curate, Examples) {
  const std::vector<std::string> corpus { "CCO", "OCC", "CCN",
                                          "CCCCCCCCCCC" };
  CurationResult r = curate(corpus, {});
  EXPECT_EQ(r.kept, (std::vector<std::string> { canonical_smiles("CCO") }));
  ASSERT_EQ(r.rejects.size(), 3u);
  EXPECT_EQ(r.rejects[0].reason, RejectReason::kDuplicate);
  EXPECT_EQ(r.rejects[1].reason, RejectReason::kDisallowedElement);
  EXPECT_EQ(r.rejects[2].reason, RejectReason::kTooManyHeavyAtoms);

  EXPECT_TRUE(curate(std::vector<std::string> {}, {}).kept.empty());

  const std::vector<std::string> tricyclic { "C1CC2CC3CCC123" };
  CurationResult t = curate(tricyclic, {});
  EXPECT_TRUE(t.kept.empty());
  ASSERT_EQ(t.rejects.size(), 1u);
  EXPECT_EQ(t.rejects[0].reason, RejectReason::kTooManyRings);
}

TEST(Curate, OutputSortedAndIdempotent) {
  const std::vector<std::string> corpus { "OCC", "C=CC", "CO", "O=CC",
                                          "C1CC1", "CC=O", "O=O=O" };
  CurationResult once = curate(corpus, {});
  EXPECT_TRUE(std::is_sorted(once.kept.begin(), once.kept.end()));
  CurationResult twice = curate(once.kept, {});
  EXPECT_EQ(twice.kept, once.kept);
  EXPECT_TRUE(twice.rejects.empty());
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_molecules(1), (std::vector<std::string> { "C", "O" }));
  const std::vector<std::string> two = enumerate_molecules(2);
  for (const char *s: { "CC", "CO", "C=C", "C=O", "C#C", "OO" }) {
    EXPECT_NE(std::find(two.begin(), two.end(), canonical_smiles(s)),
              two.end())
        << s;
  }
  EXPECT_THROW(enumerate_molecules(kMaxEnumeratedHeavyAtoms + 1),
               CapacityError);
}

TEST(Enumerate, StrictlyGrowing) {
  std::vector<std::string> prev = enumerate_molecules(1);
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::string> cur = enumerate_molecules(n);
    EXPECT_GT(cur.size(), prev.size());
    std::set<std::string> s(cur.begin(), cur.end());
    EXPECT_EQ(s.size(), cur.size());
    for (const std::string &m: prev)
      EXPECT_TRUE(s.count(m)) << m;
    prev = std::move(cur);
  }
}
