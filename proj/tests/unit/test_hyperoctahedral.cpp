#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "typec/algebra.hpp"
#include "typec/error.hpp"
#include "typec/hyperoctahedral.hpp"

using namespace typec;

namespace {
  SignedPermutation random_element(unsigned m, std::mt19937_64& rng) {
    std::vector<int> images(m);
    for (unsigned i = 0; i < m; ++i) {
      images[i] = static_cast<int>(i + 1);
    }
    std::shuffle(images.begin(), images.end(), rng);
    for (auto& x : images) {
      if (rng() % 2) {
        x = -x;
      }
    }
    return SignedPermutation(images);
  }
}  // namespace

TEST_CASE("group law basics") {
  std::mt19937_64 rng(8);
  for (unsigned m = 0; m <= 5; ++m) {
    for (int trial = 0; trial < 50; ++trial) {
      auto u = random_element(m, rng), v = random_element(m, rng),
           w = random_element(m, rng);
      CHECK(group_compose(u, SignedPermutation::identity(m)) == u);
      CHECK(group_compose(u, u.inverse()).is_identity());
      CHECK(group_compose(group_compose(u, v), w)
            == group_compose(u, group_compose(v, w)));
    }
  }
  auto t = SignedPermutation::sign_change(1);
  CHECK(group_compose(t, t) == SignedPermutation::identity(1));
  CHECK_THROWS_AS(group_compose(t, SignedPermutation::identity(2)), Error);
  CHECK_THROWS_AS(SignedPermutation({1, 1}), Error);
  CHECK_THROWS_AS(SignedPermutation({0}), Error);
}

TEST_CASE("symmetric permutation diagrams") {
  for (unsigned m = 1; m <= 4; ++m) {
    CHECK(to_symmetric_perm(SignedPermutation::identity(m)) == BrauerDiagram::identity(m));
  }
  CHECK(to_symmetric_perm(SignedPermutation::sign_change(1))
        == generator_diagram(GeneratorKind::R, 1, 1));
  std::mt19937_64 rng(9);
  for (unsigned m = 1; m <= 4; ++m) {
    for (int trial = 0; trial < 50; ++trial) {
      auto u = random_element(m, rng), v = random_element(m, rng);
      auto p = compose(to_symmetric_perm(u), to_symmetric_perm(v));
      CHECK(p.loops == 0);
      CHECK(p.diagram == to_symmetric_perm(group_compose(u, v)));
      CHECK(is_symmetric(to_symmetric_perm(u)));
      CHECK(from_through_strands(to_symmetric_perm(u)) == u);
    }
  }
}

TEST_CASE("generators of H_m as diagrams") {
  // sign change of letter 1 is r_1, the transposition (i, i+1) is r_{i+1}
  for (unsigned m = 1; m <= 4; ++m) {
    CHECK(to_symmetric_perm(SignedPermutation::sign_change(m))
          == generator_diagram(GeneratorKind::R, 1, m));
    for (unsigned i = 1; i < m; ++i) {
      CHECK(to_symmetric_perm(SignedPermutation::transposition(i, m))
            == generator_diagram(GeneratorKind::R, i + 1, m));
    }
  }
}

TEST_CASE("reading through strands") {
  CHECK(from_through_strands(BrauerDiagram::identity(2)).is_identity());
  CHECK(from_through_strands(generator_diagram(GeneratorKind::R, 1, 1))
        == SignedPermutation::sign_change(1));
  auto outer = from_through_strands(generator_diagram(GeneratorKind::E, 1, 2));
  CHECK(outer == SignedPermutation::identity(1));
  std::vector<BrauerDiagram::Pair> crossing{{0, 5}, {1, 4}, {2, 6}, {3, 7}};
  CHECK_THROWS_AS(from_through_strands(BrauerDiagram(2, crossing)), Error);
}

TEST_CASE("group enumeration") {
  CHECK(enumerate_group(0).size() == 1);
  CHECK(enumerate_group(1).size() == 2);
  CHECK(enumerate_group(2).size() == 8);
  for (unsigned m = 0; m <= 5; ++m) {
    auto all = enumerate_group(m);
    CHECK(all.size() == group_order(m));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::set<SignedPermutation>(all.begin(), all.end()).size() == all.size());
  }
  CHECK(group_order(6) == 46080);
  CHECK_THROWS_AS(enumerate_group(max_group_rank() + 1), Error);
}

TEST_CASE("reduced words reproduce the element") {
  for (unsigned m = 0; m <= 4; ++m) {
    for (auto const& w : enumerate_group(m)) {
      SignedPermutation product = SignedPermutation::identity(m);
      for (unsigned letter : generator_word(w)) {
        product = group_compose(product, letter == 0
                                             ? SignedPermutation::sign_change(m)
                                             : SignedPermutation::transposition(letter, m));
      }
      CHECK(product == w);
    }
  }
}

TEST_CASE("label permutations invert") {
  std::mt19937_64 rng(10);
  for (unsigned m = 1; m <= 5; ++m) {
    auto w = random_element(m, rng);
    CHECK(from_label_permutation(label_permutation(w)) == w);
  }
}
