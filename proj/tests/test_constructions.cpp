#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "corpus.hpp"
#include "gcat/constructions.hpp"
#include "gcat/ginvariant.hpp"
#include "oracles.hpp"

using namespace gcat;

TEST_CASE("parallel extension") {
  Matroid p = parallel_extension(Matroid::uniform(2, 3), 1);
  REQUIRE(p.ground_size() == 6);
  REQUIRE(p.rank() == 2);
  int lines = 0;
  for (auto& z : p.cyclic_flats_stored())
    if (z.rank == 1) {
      REQUIRE(z.set.size() == 2);
      ++lines;
    }
  REQUIRE(lines == 3);
  REQUIRE(catenary_data(p).nu[Composition{0, 2, 4}] == 3);

  REQUIRE_THROWS_AS(parallel_extension(p, 0), std::invalid_argument);

  // the cyclic-flat lattice of M_t is the lattice of flats of M with sizes
  // scaled by t+1, and every flag size scales the same way
  for (const auto& [name, m] : corpus::all()) {
    if (m.ground_size() > 4) continue;
    for (int t : {1, 2}) {
      INFO(name << " t=" << t);
      Matroid mt = parallel_extension(m, t);
      auto levels = m.flat_levels();
      std::vector<ElemSet> flats;
      std::vector<int> sizes, ranks;
      for (int k = 0; k < static_cast<int>(levels.size()); ++k)
        for (ElemSet f : levels[k]) {
          flats.push_back(f);
          sizes.push_back(f.size() * (t + 1));
          ranks.push_back(k);
        }
      // build the labeled flats lattice and compare with the configuration
      std::vector<std::size_t> order(flats.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return flats[a] < flats[b]; });
      std::vector<ElemSet> sorted_flats;
      LabeledLattice flats_lattice;
      for (std::size_t i : order) sorted_flats.push_back(flats[i]);
      flats_lattice.lattice = FiniteLattice::from_inclusion_family(sorted_flats);
      for (std::size_t i : order) {
        flats_lattice.size_label.push_back(sizes[i]);
        flats_lattice.rank_label.push_back(ranks[i]);
      }
      REQUIRE(labeled_isomorphic(configuration_of(mt), flats_lattice));

      CatenaryData cd = catenary_data(mt);
      for (auto& [a, v] : cd.nu) {
        int cum = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          cum += a[i];
          REQUIRE(cum % (t + 1) == 0);
        }
      }
    }
  }

  // equal-G inputs give equal-catenary extensions with different configurations
  Matroid em = parallel_extension(corpus::fig1_m(), 1);
  Matroid en = parallel_extension(corpus::fig1_n(), 1);
  REQUIRE(catenary_data(em) == catenary_data(en));
  REQUIRE(!labeled_isomorphic(configuration_of(em), configuration_of(en)));
}

TEST_CASE("block realization from size labels") {
  // chain sizes realize as nested sets
  FiniteLattice chain = FiniteLattice::chain_lattice(3);
  auto phi = realize_sets_from_sizes(chain, {0, 2, 5});
  REQUIRE(phi[0].empty());
  REQUIRE(phi[1].size() == 2);
  REQUIRE(phi[2].size() == 5);
  REQUIRE(phi[1].subset_of(phi[2]));

  // infeasible labels are rejected with a witness
  REQUIRE_THROWS_AS(realize_sets_from_sizes(chain, {0, 5, 2}), realization_error);
  // equal sizes on comparable elements collapse the order
  REQUIRE_THROWS_AS(realize_sets_from_sizes(chain, {0, 2, 2}), realization_error);
}

TEST_CASE("lattice extension produces the expected pair") {
  LatticeExtensionSpec spec;
  spec.base = FiniteLattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  spec.atoms = {1, 2};
  spec.b = 0;
  spec.taus = {{{0, 0}, {2, 1}}};
  spec.inserts = {FiniteLattice::chain_lattice(3), FiniteLattice::chain_lattice(3)};
  spec.assign_s = {0, 0};
  spec.assign_t = {0, 1};

  auto glued = build_lattice_extension(spec);
  REQUIRE(glued.ls.size() == 6);
  REQUIRE(glued.lt.size() == 6);
  REQUIRE(glued.interiors == std::vector<std::vector<int>>{{4}, {5}});

  ExtensionLabels labels;
  labels.sizes = {0, 3, 3, 11, 5, 6};
  labels.ranks = {0, 2, 2, 4, 3, 3};
  auto [ms, mt] = realize_extension_pair(spec, labels);
  REQUIRE(ms.ground_size() == 11);
  REQUIRE(mt.ground_size() == 11);
  REQUIRE(catenary_data(ms) == catenary_data(mt));
  REQUIRE(!labeled_isomorphic(configuration_of(ms), configuration_of(mt)));

  // identical assignments give identical matroids
  LatticeExtensionSpec same = spec;
  same.assign_t = same.assign_s;
  auto [a, b] = realize_extension_pair(same, labels);
  REQUIRE(a == b);

  // tau-violating labels are rejected
  ExtensionLabels badlabels = labels;
  badlabels.sizes[2] = 4;
  REQUIRE_THROWS_AS(realize_extension_pair(spec, badlabels), std::invalid_argument);

  // spec validation: atoms must meet in b
  LatticeExtensionSpec badspec = spec;
  badspec.b = 1;
  REQUIRE_THROWS_AS(build_lattice_extension(badspec), std::invalid_argument);

  // tau must fix [0,b] pointwise and be an isomorphism
  LatticeExtensionSpec badtau = spec;
  badtau.taus = {{{0, 1}, {2, 0}}};
  REQUIRE_THROWS_AS(build_lattice_extension(badtau), std::invalid_argument);
}

TEST_CASE("line-plane family instances") {
  Matroid a = example1_family(2, {1, 1}, {5, 6});
  Matroid b = example1_family(2, {1, 2}, {5, 6});
  REQUIRE(a.ground_size() == 11);
  REQUIRE(a.rank() == 4);
  REQUIRE(catenary_data(a) == catenary_data(b));
  REQUIRE(!labeled_isomorphic(configuration_of(a), configuration_of(b)));

  // element count n(n+9)/2 when every plane sits over its own line
  for (int n : {2, 3, 4}) {
    std::vector<int> assignment, sizes;
    for (int j = 0; j < n; ++j) {
      assignment.push_back(j + 1);
      sizes.push_back(5 + j);
    }
    REQUIRE(example1_family(n, assignment, sizes).ground_size() == n * (n + 9) / 2);
  }

  REQUIRE_THROWS_AS(example1_family(2, {1, 1}, {4, 6}), std::invalid_argument);
  REQUIRE_THROWS_AS(example1_family(2, {1, 1}, {5, 5}), std::invalid_argument);
  REQUIRE_THROWS_AS(example1_family(2, {3, 1}, {5, 6}), std::invalid_argument);
}

TEST_CASE("configuration catalog over assignments counts set partitions") {
  // n = m = 3, fixed distinct sizes: the number of configuration classes over
  // all assignments is S(3,1)+S(3,2)+S(3,3) = 5
  const int n = 3, m = 3;
  std::vector<int> sizes{5, 6, 7};
  std::vector<Configuration> reps;
  std::vector<int> assignment(n, 1);
  std::vector<std::vector<int>> all_assignments;
  for (int a0 = 1; a0 <= m; ++a0)
    for (int a1 = 1; a1 <= m; ++a1)
      for (int a2 = 1; a2 <= m; ++a2) all_assignments.push_back({a0, a1, a2});
  REQUIRE(all_assignments.size() == 27);
  std::vector<CatenaryData> catenaries;
  for (const auto& assign : all_assignments) {
    Matroid mm = example1_family(m, assign, sizes);
    Configuration c = configuration_of(mm);
    bool found = false;
    for (const Configuration& rep : reps)
      if (labeled_isomorphic(rep, c)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(c);
    if (catenaries.empty()) catenaries.push_back(catenary_data(mm));
  }
  REQUIRE(reps.size() == 5);

  // all assignments share one catenary vector (spot-check a few)
  for (const auto& assign : {std::vector<int>{1, 2, 3}, {2, 2, 2}, {1, 1, 2}}) {
    REQUIRE(catenary_data(example1_family(m, assign, sizes)) == catenaries[0]);
  }
}

TEST_CASE("paving-pair hypotheses and realization: two-line instance") {
  PavingPairSpec e3 = example3_spec(2, 2, 2);
  REQUIRE(verify_paving_hypotheses(e3).ok);

  auto [m1, m2] = realize_paving_pair(e3);
  REQUIRE(m1.ground_size() == 12);
  REQUIRE(m1.rank() == 3);
  REQUIRE(catenary_data(m1) == catenary_data(m2));
  REQUIRE(!labeled_isomorphic(configuration_of(m1), configuration_of(m2)));

  // block size 2 with natural ranks is a parallel extension with t = 1
  REQUIRE(catenary_data(m1) == catenary_data(parallel_extension(Matroid::from_paving(e3.n1), 1)));

  REQUIRE_THROWS_AS(example3_spec(1, 2, 2), std::invalid_argument);
}

TEST_CASE("paving-pair hypotheses and realization: three-plane instance") {
  PavingPairSpec e4 = example4_spec(2);
  REQUIRE(verify_paving_hypotheses(e4).ok);

  auto [m1, m2] = realize_paving_pair(e4);
  REQUIRE(m1.ground_size() == 24);
  REQUIRE(m1.rank() == 4);
  REQUIRE(m1.cyclic_flats_stored().size() == 291);
  REQUIRE(catenary_data(m1) == catenary_data(m2));
  REQUIRE(!labeled_isomorphic(configuration_of(m1), configuration_of(m2)));

  // replacing alpha_1 by the identity breaks the correspondence, with witness
  PavingPairSpec broken = e4;
  std::iota(broken.alphas[0].begin(), broken.alphas[0].end(), 0);
  HypothesisCheck check = verify_paving_hypotheses(broken);
  REQUIRE(!check.ok);
  REQUIRE(check.witness.find("alpha_1") != std::string::npos);
}

TEST_CASE("dualized pairs keep equal invariants and distinct configurations") {
  Matroid a = example1_family(2, {1, 1}, {5, 6});
  Matroid b = example1_family(2, {1, 2}, {5, 6});
  auto [da, db] = dualize_pair(a, b);
  REQUIRE(catenary_data(da) == catenary_data(db));
  REQUIRE(!labeled_isomorphic(configuration_of(da), configuration_of(db)));

  // dual of a self-dual matroid keeps its configuration
  Matroid u24 = Matroid::uniform(2, 4);
  REQUIRE(labeled_isomorphic(configuration_of(u24), configuration_of(u24.dual())));

  REQUIRE(g_invariant_bruteforce(corpus::fig1_m().dual()) ==
          g_invariant_bruteforce(corpus::fig1_n().dual()));
}

TEST_CASE("configurations of minors depend only on the interval labels") {
  for (const auto& [name, m] : corpus::all()) {
    INFO(name);
    const auto& zf = m.cyclic_flats_stored();
    for (const RankedFlat& upper : zf)
      for (const RankedFlat& lower : zf) {
        if (!lower.set.subset_of(upper.set) || lower.set == upper.set) continue;
        auto minor = m.minor_on_cyclic_interval(upper.set, lower.set);
        // interval of Z(M) with shifted labels
        std::vector<ElemSet> sets;
        std::vector<int> sizes, ranks;
        for (const RankedFlat& z : zf) {
          if (!lower.set.subset_of(z.set) || !z.set.subset_of(upper.set)) continue;
          sets.push_back(z.set);
          sizes.push_back((z.set - lower.set).size());
          ranks.push_back(z.rank - lower.rank);
        }
        LabeledLattice interval{FiniteLattice::from_inclusion_family(sets), sizes, ranks};
        REQUIRE(labeled_isomorphic(configuration_of(minor.matroid), interval));
      }
  }
}

TEST_CASE("every realized construction round-trips through the axiom gate") {
  std::vector<Matroid> realized;
  realized.push_back(example1_family(2, {1, 1}, {5, 6}));
  realized.push_back(example1_family(2, {1, 2}, {5, 6}));
  auto [m1, m2] = realize_paving_pair(example3_spec(2, 2, 2));
  realized.push_back(m1);
  realized.push_back(m2);
  realized.push_back(parallel_extension(Matroid::uniform(2, 3), 2));
  for (const Matroid& m : realized) REQUIRE(m.cyclic_flats() == m.cyclic_flats_stored());
}
