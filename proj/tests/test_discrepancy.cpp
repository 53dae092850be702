#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "dsc/set_family.hpp"

using namespace dsc;

namespace {

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TEST_CASE("prime field primitive roots") {
  REQUIRE(PrimeField(3).xi == 2);
  REQUIRE(PrimeField(5).xi == 2);
  REQUIRE(PrimeField(7).xi == 3);
  REQUIRE(PrimeField(11).xi == 2);
  REQUIRE(PrimeField(13).xi == 2);
  REQUIRE_THROWS_AS(PrimeField(6), std::invalid_argument);
  auto f = PrimeField(7);
  std::set<std::uint64_t> powers;
  for (std::uint64_t m = 0; m + 1 < 7; ++m) powers.insert(f.pow_xi(m));
  REQUIRE(powers.size() == 6);  // xi generates the full multiplicative group
}

TEST_CASE("point index map") {
  SECTION("sigma(0,0) = 0 for any prime") {
    for (std::uint64_t q : {2, 3, 5, 7, 11}) {
      PrimeField f(q);
      REQUIRE(point_index(f, 2, 0, 0) == 0);
    }
  }
  SECTION("worked values at q=3") {
    PrimeField f(3);  // xi = 2, so M(1)=1, M(2)=2
    REQUIRE(field_index(f, 0) == 0);
    REQUIRE(field_index(f, 1) == 1);
    REQUIRE(field_index(f, 2) == 2);
    REQUIRE(point_index(f, 3, 1, 2) == 5);
    REQUIRE(point_index(f, 3, 2, 1) == 7);
  }
  SECTION("injective on the evaluation grid") {
    for (std::uint64_t q : {3, 5, 7}) {
      PrimeField f(q);
      std::set<std::size_t> seen;
      for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b)
          seen.insert(point_index(f, static_cast<std::size_t>(q), a, b));
      REQUIRE(seen.size() == q * q);
    }
  }
  SECTION("rejects points outside the evaluation set") {
    PrimeField f(5);  // xi=2; for k=3 the set is {0,1,2} with M values 0,1,2
    REQUIRE_NOTHROW(point_index(f, 3, 2, 4));
    REQUIRE_THROWS_AS(point_index(f, 3, 4, 0), std::invalid_argument);  // M(4)=3
  }
}

TEST_CASE("family construction across the parameter grid") {
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
    for (std::size_t k = 2; k <= q; ++k) {
      for (std::size_t t = 1; t <= std::min<std::size_t>(k, 3); ++t) {
        SetFamily fam = babai_frankl_family(k, q, t);
        INFO("k=" << k << " q=" << q << " t=" << t);
        std::uint64_t expect = 1;
        for (std::size_t i = 0; i < t; ++i) expect *= q;
        REQUIRE(fam.sets.size() == expect);
        REQUIRE(fam.ground == k * q);
        std::set<std::vector<std::size_t>> distinct;
        for (const auto& s : fam.sets) {
          REQUIRE(s.size() == k);
          REQUIRE(std::is_sorted(s.begin(), s.end()));
          for (auto pt : s) REQUIRE(pt < fam.ground);
          distinct.insert(s);
        }
        REQUIRE(distinct.size() == fam.sets.size());
        REQUIRE(!verify_t_bounded(fam, t));
        auto lab = balanced_labeling(k, q);
        auto rep = discrepancy(fam, lab);
        REQUIRE(rep.max_abs == (k % 2 == 0 ? 0 : 1));
      }
    }
  }
}

TEST_CASE("small family worked examples") {
  SECTION("k=2, q=3, t=1 gives three pairwise disjoint pairs") {
    auto fam = babai_frankl_family(2, 3, 1);
    REQUIRE(fam.sets.size() == 3);
    std::set<std::size_t> all;
    for (const auto& s : fam.sets)
      for (auto p : s) all.insert(p);
    REQUIRE(all.size() == 6);  // 3 sets x 2 points, no overlap
    REQUIRE(!verify_t_bounded(fam, 1));
  }
  SECTION("intersection witness appears when the bound is tightened") {
    auto fam = babai_frankl_family(3, 5, 2);  // intersections can reach 1
    auto w = verify_t_bounded(fam, 1);
    REQUIRE(w.has_value());
    auto inter = intersect(fam.sets[w->i], fam.sets[w->j]);
    REQUIRE(inter.size() >= 1);
    REQUIRE(w->size == inter.size());
  }
  SECTION("a duplicated set is caught for any t") {
    auto fam = babai_frankl_family(3, 5, 2);
    fam.sets.push_back(fam.sets[0]);
    auto w = verify_t_bounded(fam, 2);
    REQUIRE(w.has_value());
    REQUIRE(w->size == 3);
  }
}

TEST_CASE("balanced labeling thresholds") {
  SECTION("even k splits every set exactly in half") {
    auto fam = babai_frankl_family(4, 5, 2);
    auto lab = balanced_labeling(4, 5);
    REQUIRE(lab.size() == fam.ground);
    std::size_t plus = 0;
    for (int v : lab) {
      REQUIRE((v == 1 || v == -1));
      if (v == 1) ++plus;
    }
    REQUIRE(plus == fam.ground / 2);
    auto rep = discrepancy(fam, lab);
    REQUIRE(rep.max_abs == 0);
    for (auto d : rep.per_set) REQUIRE(d == 0);
  }
  SECTION("odd k leaves discrepancy exactly one") {
    auto fam = babai_frankl_family(3, 7, 2);
    auto lab = balanced_labeling(3, 7);
    auto rep = discrepancy(fam, lab);
    REQUIRE(rep.max_abs == 1);
    for (auto d : rep.per_set) REQUIRE((d == 1 || d == -1));
  }
  SECTION("labeling size is validated") {
    auto fam = babai_frankl_family(3, 5, 1);
    REQUIRE_THROWS_AS(discrepancy(fam, Labeling(3, 1)), std::invalid_argument);
  }
}

TEST_CASE("brute-force discrepancy oracle") {
  SECTION("confirms zero for small even-k families") {
    REQUIRE(min_discrepancy_bruteforce(babai_frankl_family(2, 3, 1)) == 0);
    REQUIRE(min_discrepancy_bruteforce(babai_frankl_family(4, 5, 1)) == 0);
    REQUIRE(min_discrepancy_bruteforce(babai_frankl_family(2, 5, 2)) == 0);
  }
  SECTION("odd k floors at one") {
    REQUIRE(min_discrepancy_bruteforce(babai_frankl_family(3, 5, 1)) == 1);
    REQUIRE(min_discrepancy_bruteforce(babai_frankl_family(3, 7, 2)) == 1);
  }
  SECTION("all 2-subsets of a 3-point ground force discrepancy 2") {
    SetFamily fam{3, 2, {{0, 1}, {0, 2}, {1, 2}}};
    REQUIRE(min_discrepancy_bruteforce(fam) == 2);
  }
  SECTION("oversized ground is rejected") {
    SetFamily fam{25, 2, {{0, 1}}};
    REQUIRE_THROWS_AS(min_discrepancy_bruteforce(fam), ResourceError);
  }
}

TEST_CASE("transversal design structure") {
  SECTION("the t=2 family is a transversal design") {
    auto fam = babai_frankl_family(3, 5, 2);
    auto td = family_as_design(fam, 2, 5);
    REQUIRE(td.t == 2);
    REQUIRE(td.k == 3);
    REQUIRE(td.v == 5);
    REQUIRE(td.groups.size() == 3);
    for (const auto& g : td.groups) REQUIRE(g.size() == 5);
    REQUIRE(td.blocks.size() == 25);
    REQUIRE(!verify_transversal_design(td));
  }
  SECTION("removing a block breaks the design") {
    auto fam = babai_frankl_family(3, 5, 2);
    auto td = family_as_design(fam, 2, 5);
    td.blocks.pop_back();
    auto viol = verify_transversal_design(td);
    REQUIRE(viol.has_value());
    REQUIRE(viol->in_blocks == 0);  // the dropped pairs are now uncovered
    REQUIRE(viol->in_groups == 0);
    REQUIRE(viol->subset.size() == 2);
  }
  SECTION("a larger grid point also verifies") {
    auto fam = babai_frankl_family(4, 7, 2);
    auto td = family_as_design(fam, 2, 7);
    REQUIRE(!verify_transversal_design(td));
  }
}

TEST_CASE("two-group augmentation") {
  SECTION("k=6, q=7, t=4 grows the family while keeping the bound") {
    auto fam = babai_frankl_family(6, 7, 4);
    auto lab = balanced_labeling(6, 7);
    auto td = family_as_design(fam, 4, 7);
    auto added = augment_td(td, lab);
    REQUIRE(added.size() == 9);  // three positive groups x three negative
    SetFamily aug = fam;
    for (const auto& blk : added) {
      REQUIRE(blk.size() == 6);
      int sum = 0;
      for (auto p : blk) sum += lab[p];
      REQUIRE(sum == 0);  // each added block is itself balanced
      aug.sets.push_back(blk);
    }
    REQUIRE(!verify_t_bounded(aug, 4));
    auto rep = discrepancy(aug, lab);
    REQUIRE(rep.max_abs == 0);
  }
  SECTION("added blocks meet original blocks in at most two points") {
    auto fam = babai_frankl_family(6, 7, 4);
    auto lab = balanced_labeling(6, 7);
    auto added = augment_td(family_as_design(fam, 4, 7), lab);
    for (const auto& blk : added)
      for (const auto& orig : fam.sets) REQUIRE(intersect(blk, orig).size() <= 2);
  }
  SECTION("preconditions are enforced") {
    auto odd = family_as_design(babai_frankl_family(5, 7, 4), 4, 7);
    REQUIRE_THROWS_AS(augment_td(odd, balanced_labeling(5, 7)), std::invalid_argument);
    auto low_t = family_as_design(babai_frankl_family(6, 7, 3), 3, 7);
    REQUIRE_THROWS_AS(augment_td(low_t, balanced_labeling(6, 7)), std::invalid_argument);
  }
}
