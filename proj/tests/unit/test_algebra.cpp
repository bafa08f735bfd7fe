#include <doctest.h>

#include <fstream>
#include <random>

#include <json.hpp>

#include "typec/algebra.hpp"
#include "typec/error.hpp"

using namespace typec;

namespace {
  AlgebraElement r(unsigned i, unsigned n) {
    return generator(GeneratorKind::R, i, n);
  }
  AlgebraElement e(unsigned i, unsigned n) {
    return generator(GeneratorKind::E, i, n);
  }
  LaurentScalar delta(int k = 1) {
    return LaurentScalar::delta(k);
  }

  AlgebraElement random_element(unsigned n, std::mt19937_64& rng) {
    static auto const basis = enumerate_symmetric_diagrams(3);
    AlgebraElement    x(n);
    for (int i = 0; i < 3; ++i) {
      auto const& d = basis[rng() % basis.size()];
      x.add_term(d, LaurentScalar::monomial(Rational(static_cast<long>(rng() % 5) - 2),
                                            static_cast<int>(rng() % 3) - 1));
    }
    return x;
  }
}  // namespace

TEST_CASE("generator shapes") {
  auto e11 = generator_diagram(GeneratorKind::E, 1, 1);
  CHECK(e11.pairs() == std::vector<BrauerDiagram::Pair>{{0, 1}, {2, 3}});
  auto r22 = generator_diagram(GeneratorKind::R, 2, 2);
  // T1-B2, T2-B1, T3-B4, T4-B3
  CHECK(r22.pairs()
        == std::vector<BrauerDiagram::Pair>{{0, 5}, {1, 4}, {2, 7}, {3, 6}});
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned i = 1; i <= n; ++i) {
      CHECK(is_symmetric(generator_diagram(GeneratorKind::R, i, n)));
      CHECK(is_symmetric(generator_diagram(GeneratorKind::E, i, n)));
    }
  }
  CHECK_THROWS_AS(generator(GeneratorKind::R, 0, 2), Error);
  CHECK_THROWS_AS(generator(GeneratorKind::E, 3, 2), Error);
}

TEST_CASE("multiplication examples") {
  CHECK(multiply(multiply(e(2, 2), r(1, 2)), e(2, 2)) == delta() * e(2, 2));
  CHECK(multiply(multiply(e(2, 2), e(1, 2)), e(2, 2)) == delta() * e(2, 2));
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_element(3, rng);
    CHECK(multiply(AlgebraElement::identity(3), x) == x);
    CHECK(multiply(x, AlgebraElement::identity(3)) == x);
  }
  CHECK_THROWS_AS(multiply(e(1, 1), e(1, 2)), Error);
}

TEST_CASE("multiplication is associative and bilinear") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_element(3, rng), y = random_element(3, rng),
         z = random_element(3, rng);
    CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    CHECK(multiply(x, y + z) == multiply(x, y) + multiply(x, z));
  }
}

TEST_CASE("the involution is an anti-automorphism") {
  CHECK(involution(e(1, 2)) == e(1, 2));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_element(3, rng), y = random_element(3, rng);
    CHECK(involution(multiply(x, y)) == multiply(involution(y), involution(x)));
    CHECK(involution(involution(x)) == x);
  }
}

TEST_CASE("asymmetric diagrams are not algebra elements") {
  std::vector<BrauerDiagram::Pair> crossing{{0, 5}, {1, 4}, {2, 6}, {3, 7}};
  BrauerDiagram                    d(2, crossing);
  AlgebraElement                   x(2);
  CHECK_THROWS_AS(x.add_term(d, LaurentScalar(1L)), Error);
  CHECK_THROWS_AS(layer_of(d), Error);
}

TEST_CASE("idempotents f_k") {
  AlgebraElement f11 = idempotent_f(1, 1);
  CHECK(f11 == delta(-1) * e(1, 1));
  CHECK(idempotent_f(0, 3) == AlgebraElement::identity(3));
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      auto f = idempotent_f(k, n);
      CHECK(multiply(f, f) == f);
      CHECK(layer_of(nested_arc_diagram(k, n)) == k);
    }
  }
  CHECK_THROWS_AS(idempotent_f(3, 2), Error);
}

TEST_CASE("layers") {
  CHECK(layer_of(BrauerDiagram::identity(2)) == 0);
  CHECK(layer_of(generator_diagram(GeneratorKind::E, 1, 2)) == 1);
}

TEST_CASE("word evaluation") {
  CHECK(evaluate_word(2, "e2 r1 e2") == delta() * e(2, 2));
  CHECK(evaluate_word(2, "1") == AlgebraElement::identity(2));
  CHECK(evaluate_word(2, "  r1   r1 ") == AlgebraElement::identity(2));
  CHECK(evaluate_word(2, "f2 f2") == idempotent_f(2, 2));
  CHECK_THROWS_AS(evaluate_word(2, "x1"), Error);
  CHECK_THROWS_AS(evaluate_word(2, "r3"), Error);
  CHECK_THROWS_AS(evaluate_word(2, "r"), Error);
}

TEST_CASE("named relations at small rank") {
  auto two = verify_relations(2);
  auto find = [](RelationReport const& report, std::string const& name,
                 std::vector<unsigned> const& indices) {
    for (auto const& entry : report.entries) {
      if (entry.relation == name && entry.indices == indices) {
        return entry;
      }
    }
    FAIL("relation " << name << " missing");
    return report.entries.front();
  };
  CHECK(find(two, "e_1^2=delta e_1", {}).holds);
  auto three = verify_relations(3);
  for (unsigned i = 1; i <= 3; ++i) {
    CHECK(find(three, "r_i^2=1", {i}).holds);
  }
  // adjacent indices do not commute in the diagram algebra
  auto adjacent = find(three, "r_ir_{i+1}=r_{i+1}r_i", {1});
  CHECK(!adjacent.holds);
  CHECK(!adjacent.difference.is_zero());
}

TEST_CASE("relation reports match the frozen oracle baseline") {
  std::ifstream in(TYPEC_RELATIONS_BASELINE);
  REQUIRE(in.good());
  auto baseline = nlohmann::json::parse(in);
  for (auto const& rank : baseline["ranks"]) {
    unsigned const n = rank["n"];
    for (auto order : {EvaluationOrder::left_to_right, EvaluationOrder::right_to_left}) {
      auto report = verify_relations(n, order);
      REQUIRE(report.entries.size() == rank["entries"].size());
      for (std::size_t i = 0; i < report.entries.size(); ++i) {
        auto const& want = rank["entries"][i];
        CHECK(report.entries[i].relation == want["relation"].get<std::string>());
        CHECK(report.entries[i].indices == want["indices"].get<std::vector<unsigned>>());
        CHECK(report.entries[i].holds == want["holds"].get<bool>());
      }
    }
  }
}
