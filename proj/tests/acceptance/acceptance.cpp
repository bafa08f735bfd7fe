// One line per acceptance criterion; exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../support/oracles.hpp"
#include "typec/error.hpp"
#include "typec/serialize.hpp"

using namespace typec;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void fail(std::string const& why) {
      if (pass) {
        detail = why;
      }
      pass = false;
    }
  };

  bool vanishes(AlgebraElement const& x, FieldSpec const& spec) {
    for (auto const& [d, c] : x.terms()) {
      if (!specialize(c, spec).is_zero()) {
        return false;
      }
    }
    return true;
  }

  // 1
  Outcome relation_suite() {
    Outcome       out;
    std::ifstream in(TYPEC_RELATIONS_BASELINE);
    if (!in) {
      out.fail("baseline file missing");
      return out;
    }
    auto const baseline = nlohmann::json::parse(in);
    std::set<std::string> const must_hold{
        "r_i^2=1",
        "e_1^2=delta e_1",
        "e_i^2=delta^2e_i",
        "r_2r_1r_2r_1=r_1r_2r_1r_2",
        "r_ie_i=e_i",
        "e_ir_i=e_i",
        "e_2r_1e_2=delta e_2",
        "e_2e_1e_2=delta e_2",
        "e_2r_1r_2=e_2r_1",
        "e_2e_1r_2=e_2e_1",
        "(r_2r_1r_2)e_1=e_1(r_2r_1r_2)",
        "r_2e_1r_2e_1=e_1e_2e_1"};
    std::size_t checked = 0, failing = 0;
    for (auto const& rank : baseline["ranks"]) {
      unsigned const n = rank["n"];
      for (auto order :
           {EvaluationOrder::left_to_right, EvaluationOrder::right_to_left}) {
        auto report = verify_relations(n, order);
        if (report.entries.size() != rank["entries"].size()) {
          out.fail("entry count differs at n=" + std::to_string(n));
          continue;
        }
        for (std::size_t i = 0; i < report.entries.size(); ++i) {
          auto const& got  = report.entries[i];
          auto const& want = rank["entries"][i];
          if (got.relation != want["relation"].get<std::string>()
              || got.indices != want["indices"].get<std::vector<unsigned>>()
              || got.holds != want["holds"].get<bool>()) {
            out.fail("n=" + std::to_string(n) + " " + got.relation
                     + " differs from the baseline");
          }
          if (must_hold.count(got.relation) && !got.holds) {
            out.fail("n=" + std::to_string(n) + " " + got.relation + " fails");
          }
          ++checked;
          failing += !got.holds;
        }
      }
    }
    if (baseline["ranks"].size() != 5) {
      out.fail("baseline does not cover n = 2..6");
    }
    out.detail = out.pass ? std::to_string(checked) + " entries match, "
                                + std::to_string(failing)
                                + " literal failures reproduced"
                          : out.detail;
    return out;
  }

  // 2
  Outcome dimension_identity() {
    Outcome     out;
    std::string counts;
    for (unsigned n = 1; n <= 4; ++n) {
      std::size_t sum = 0;
      for (unsigned a = 0; a <= n; ++a) {
        std::size_t v = enumerate_dangles(n, a).size();
        sum += v * v * group_order(n - a);
      }
      std::size_t const listed = enumerate_symmetric_diagrams(n).size();
      if (sum != listed) {
        out.fail("n=" + std::to_string(n) + ": " + std::to_string(sum)
                 + " != " + std::to_string(listed));
      }
      counts += (n > 1 ? "," : "") + std::to_string(listed);
    }
    for (unsigned n = 1; n <= 2; ++n) {
      std::size_t fixed = 0;
      for (auto const& partner : typec::testing::all_matchings(n)) {
        fixed += typec::testing::mirror_fixed(n, partner);
      }
      std::size_t const want = n == 1 ? 3 : 25;
      if (fixed != want || enumerate_symmetric_diagrams(n).size() != want) {
        out.fail("matching oracle disagrees at n=" + std::to_string(n));
      }
    }
    if (out.pass) {
      out.detail = "counts " + counts + "; oracle confirms 3 and 25";
    }
    return out;
  }

  // 3
  Outcome psi_round_trip() {
    Outcome     out;
    std::size_t total = 0;
    for (unsigned n = 1; n <= 3; ++n) {
      auto const diagrams = enumerate_symmetric_diagrams(n);
      total += diagrams.size();
      std::set<std::tuple<SymmetricDangle, SymmetricDangle, SignedPermutation>>
                                      images;
      std::map<unsigned, std::size_t> per_layer;
      for (auto const& d : diagrams) {
        auto t = psi(d);
        if (psi_inverse(t) != d) {
          out.fail("round trip fails for " + d.to_string());
        }
        images.insert({t.top, t.bottom, t.perm});
        ++per_layer[t.layer];
      }
      if (images.size() != diagrams.size()) {
        out.fail("psi not injective at n=" + std::to_string(n));
      }
      for (unsigned a = 0; a <= n; ++a) {
        std::size_t v = enumerate_dangles(n, a).size();
        if (per_layer[a] != v * v * group_order(n - a)) {
          out.fail("layer count mismatch at n=" + std::to_string(n));
        }
      }
    }
    if (out.pass) {
      out.detail = "n <= 3, " + std::to_string(total) + " diagrams";
    }
    return out;
  }

  // 4
  Outcome inflation_oracle() {
    Outcome     out;
    std::size_t pairs = 0, dropped = 0;
    auto        check = [&](BrauerDiagram const& x, BrauerDiagram const& y) {
      ScaledTriple sx{LaurentScalar(1L), psi(x)}, sy{LaurentScalar(1L), psi(y)};
      auto         formula = layer_product(sx, sy);
      auto         product = compose(x, y);
      bool const   deeper  = arc_count(product.diagram) > arc_count(x);
      ++pairs;
      dropped += deeper;
      if (formula.has_value() == deeper) {
        out.fail("layer drop disagrees for " + x.to_string() + " * " + y.to_string());
        return;
      }
      if (formula
          && (formula->coeff != LaurentScalar::delta(static_cast<int>(product.loops))
              || !(formula->triple == psi(product.diagram)))) {
        out.fail("product disagrees for " + x.to_string() + " * " + y.to_string());
      }
    };
    for (unsigned n = 1; n <= 2; ++n) {
      auto const diagrams = enumerate_symmetric_diagrams(n);
      for (auto const& x : diagrams) {
        for (auto const& y : diagrams) {
          if (arc_count(x) == arc_count(y)) {
            check(x, y);
          }
        }
      }
    }
    auto const                                 three = enumerate_symmetric_diagrams(3);
    std::map<unsigned, std::vector<BrauerDiagram>> by_layer;
    for (auto const& d : three) {
      by_layer[arc_count(d)].push_back(d);
    }
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 10000; ++trial) {
      auto const& x     = three[rng() % three.size()];
      auto const& layer = by_layer[arc_count(x)];
      check(x, layer[rng() % layer.size()]);
    }
    if (out.pass) {
      out.detail = std::to_string(pairs) + " pairs, " + std::to_string(dropped)
                   + " dropped to deeper layers";
    }
    return out;
  }

  // 5
  Outcome involution_correspondence() {
    Outcome out;
    for (unsigned n = 1; n <= 3; ++n) {
      for (auto const& d : enumerate_symmetric_diagrams(n)) {
        auto t = psi(d), s = psi(flip(d));
        if (!(s.top == t.bottom && s.bottom == t.top && s.perm == t.perm.inverse())) {
          out.fail("fails for " + d.to_string());
        }
      }
    }
    if (out.pass) {
      out.detail = "all symmetric diagrams, n <= 3";
    }
    return out;
  }

  // 6
  Outcome stratification() {
    Outcome out;
    for (unsigned n = 1; n <= 4; ++n) {
      auto r = check_stratification(n, FieldSpec::generic());
      if (!r.condition1 || !r.condition2.value_or(false) || !r.condition3) {
        out.fail("condition fails at n=" + std::to_string(n));
      }
      auto const generic = FieldSpec::generic();
      for (unsigned a = 0; a <= n; ++a) {
        auto fa = idempotent_f(a, n);
        if (!vanishes(multiply(fa, fa) - fa, generic)) {
          out.fail("f_" + std::to_string(a) + " not idempotent");
        }
        for (unsigned b = 0; b <= n; ++b) {
          if (!vanishes(multiply(fa, idempotent_f(b, n)) - idempotent_f(std::max(a, b), n),
                        generic)) {
            out.fail("f_a f_b != f_max at n=" + std::to_string(n));
          }
        }
      }
      auto zero = check_stratification(n, FieldSpec::rational(0));
      if (zero.condition2.has_value()) {
        out.fail("condition 2 is not reported unavailable at delta 0");
      }
    }
    if (out.pass) {
      out.detail = "n = 1..4 generic; delta = 0 reports condition 2 unavailable";
    }
    return out;
  }

  // 7
  Outcome wreath_dimensions() {
    Outcome    out;
    auto const q = FieldSpec::rational(1);
    for (unsigned m = 0; m <= 4; ++m) {
      unsigned long sum = 0;
      for (auto const& b : bipartitions(m)) {
        auto d = h_cell_module(b, q).dimension();
        sum += d * d;
      }
      if (sum != group_order(m)) {
        out.fail("m=" + std::to_string(m) + ": sum of squares " + std::to_string(sum));
      }
    }
    auto power = [](Matrix const& x, int k) {
      Matrix r = Matrix::identity(x.rows(), x.spec());
      for (int i = 0; i < k; ++i) {
        r = r * x;
      }
      return r;
    };
    for (unsigned m = 1; m <= 3; ++m) {
      for (auto const& b : bipartitions(m)) {
        auto        g  = h_cell_module(b, q);
        auto const& s  = g.module.generators;
        auto const  id = Matrix::identity(g.dimension(), q);
        bool        ok = true;
        for (std::size_t i = 0; i < m; ++i) {
          ok = ok && s[i] * s[i] == id;
          for (std::size_t j = i + 2; j < m; ++j) {
            ok = ok && s[i] * s[j] == s[j] * s[i];
          }
        }
        if (m >= 2) {
          ok = ok && power(s[0] * s[1], 4) == id;
        }
        for (std::size_t i = 1; i + 1 < m; ++i) {
          ok = ok && power(s[i] * s[i + 1], 3) == id;
        }
        if (!ok) {
          out.fail("relations fail for " + b.to_string());
        }
      }
    }
    if (out.pass) {
      out.detail = "dims squared sum to 1,2,8,48,384; Coxeter relations m <= 3";
    }
    return out;
  }

  // 8
  Outcome generic_semisimplicity() {
    Outcome     out;
    std::size_t count = 0;
    for (unsigned n = 1; n <= 3; ++n) {
      for (unsigned a = 0; a <= n; ++a) {
        for (auto const& b : bipartitions(n - a)) {
          auto g = gram_matrix(cell_module(b, a, n, FieldSpec::generic()));
          ++count;
          if (g.determinant.is_zero()) {
            out.fail("zero determinant for " + b.to_string() + " layer "
                     + std::to_string(a));
          }
        }
      }
      if (!cell_module({{}, {}}, n, n, FieldSpec::rational(0)).gram().is_zero()) {
        out.fail("full-arc Gram nonzero at delta 0, n=" + std::to_string(n));
      }
    }
    if (out.pass) {
      out.detail = std::to_string(count) + " cell modules with nonzero determinant";
    }
    return out;
  }

  // 9
  Outcome verdict_table() {
    Outcome out;
    auto    expect = [&](unsigned n, FieldSpec const& spec, bool want,
                      std::string const& label) {
      if (qh_verdict(n, spec).quasi_hereditary != want) {
        out.fail(label);
      }
    };
    for (unsigned n = 1; n <= 4; ++n) {
      expect(n, FieldSpec::generic(), true, "generic delta");
      expect(n, FieldSpec::rational(1), true, "delta 1, p 0");
      expect(n, FieldSpec::rational(Rational(-5, 3)), true, "delta -5/3, p 0");
      for (unsigned p : {0u, 2u, 3u, 5u, 7u}) {
        expect(n, p ? FieldSpec::modular(p, 0) : FieldSpec::rational(0), false,
               "delta 0");
      }
    }
    expect(2, FieldSpec::modular(2, 1), false, "delta 1, p 2, n 2");
    expect(2, FieldSpec::modular(5, 1), true, "delta 1, p 5, n 2");
    std::vector<std::string> divergences;
    for (unsigned n = 1; n <= 4; ++n) {
      for (unsigned p : {0u, 2u, 3u, 5u, 7u}) {
        for (long d : {0L, 1L, 2L}) {
          auto spec = p ? FieldSpec::modular(p, d) : FieldSpec::rational(d);
          auto v    = qh_verdict(n, spec);
          bool closed = !spec.delta_is_zero() && (p == 0 || p > n);
          if (v.closed_form != closed || v.divergent != (v.quasi_hereditary != closed)) {
            out.fail("inconsistent report at n=" + std::to_string(n));
          }
          if (v.divergent) {
            bool listed = false;
            for (auto const& reason : v.reasons) {
              listed = listed || reason.find("closed form") != std::string::npos;
            }
            if (!listed) {
              out.fail("divergence not listed in the report");
            }
            divergences.push_back("n=" + std::to_string(n) + ",p=" + std::to_string(p)
                                  + ",delta=" + std::to_string(d));
          }
        }
      }
    }
    if (out.pass) {
      std::string list;
      for (auto const& d : divergences) {
        list += (list.empty() ? "" : "; ") + d;
      }
      out.detail = "table reproduced; divergences from the closed form: "
                   + (list.empty() ? std::string("none") : list);
    }
    return out;
  }

  // 10
  Outcome decomposition_blocks() {
    Outcome                  out;
    std::vector<std::string> off_block;
    for (unsigned p : {3u, 5u}) {
      for (unsigned n = 1; n <= 2; ++n) {
        auto const spec = FieldSpec::modular(p, 1);
        auto const full = decomposition_matrix(n, spec);
        for (std::size_t i = 0; i < full.cells.size(); ++i) {
          for (std::size_t j = 0; j < full.simples.size(); ++j) {
            unsigned const layer_i = full.cells[i].cell.layer;
            unsigned const layer_j = full.simples[j].layer;
            if (layer_i != layer_j && full.matrix[i][j] != 0) {
              off_block.push_back(
                  "p=" + std::to_string(p) + " [Delta(" + full.cells[i].cell.label.to_string()
                  + "," + std::to_string(layer_i) + "):D("
                  + full.simples[j].label.to_string() + "," + std::to_string(layer_j)
                  + ")]=" + std::to_string(full.matrix[i][j]));
            }
          }
        }
        for (unsigned a : full.layers) {
          auto const group = group_decomposition(n - a, spec);
          for (std::size_t gi = 0; gi < group.cells.size(); ++gi) {
            for (std::size_t gj = 0; gj < group.simples.size(); ++gj) {
              CellLabel row{a, group.cells[gi]}, col{a, group.simples[gj]};
              std::size_t i = 0, j = 0;
              while (i < full.cells.size() && !(full.cells[i].cell == row)) ++i;
              while (j < full.simples.size() && !(full.simples[j] == col)) ++j;
              if (i == full.cells.size() || j == full.simples.size()) {
                out.fail("layer simple missing at n=" + std::to_string(n));
                continue;
              }
              if (full.matrix[i][j] != group.matrix[gi][gj]) {
                out.fail("diagonal block differs from the layer group at n="
                         + std::to_string(n) + ", p=" + std::to_string(p));
              }
            }
          }
        }
      }
    }
    if (!off_block.empty()) {
      std::string list;
      for (auto const& entry : off_block) {
        list += (list.empty() ? "" : "; ") + entry;
      }
      out.fail("diagonal blocks equal the layer-group matrices, but the matrix is "
               "not block-diagonal: " + list);
    }
    if (out.pass) {
      out.detail = "block-diagonal; blocks equal the layer-group matrices";
    }
    return out;
  }

  // 11
  Outcome cli_determinism() {
    Outcome out;
    struct Case {
      std::string schema;
      std::string args;
    };
    std::vector<Case> const cases{
        {"relations", "relations --n 3"},
        {"mult", "mult --n 2 --word \"e2 r1 e2\""},
        {"mult", "mult --n 3 --word \"f2 r1 e3\""},
        {"dims", "dims --n 3"},
        {"dangles", "dangles --n 3 --layer 2"},
        {"psi", "psi --n 3 --word \"e2 r1\""},
        {"psi", "psi --n 3 --seed 42"},
        {"phi", "phi --n 3 --arcs 1-2,5-6 --arcs 2-3,4-5"},
        {"phi", "phi --n 2 --arcs 2-3 --arcs 1-4"},
        {"stratify", "stratify --n 2 --delta 0"},
        {"stratify", "stratify --n 3"},
        {"gram", "gram --n 2 --layer 2 --bipartition \"|\""},
        {"gram", "gram --n 3 --delta 1 --char 3"},
        {"decomp", "decomp --n 2 --delta 1 --char 5"},
        {"decomp", "decomp --n 2 --delta 1 --char 2"},
        {"enumerate", "enumerate --n 2"},
        {"qh", "qh --n 2 --delta 1 --char 2"},
    };
    std::set<std::string> covered;
    for (auto const& c : cases) {
      std::string const command = std::string(TYPEC_CLI) + " " + c.args;
      auto first = typec::testing::run_command(command);
      auto second = typec::testing::run_command(command);
      if (first.status != 0 || second.status != 0) {
        out.fail("'" + c.args + "' exited with " + std::to_string(first.status));
        continue;
      }
      if (first.output != second.output) {
        out.fail("'" + c.args + "' output differs between runs");
      }
      std::ifstream schema_file(std::string(TYPEC_SCHEMA_DIR) + "/" + c.schema
                                + ".schema.json");
      auto schema = nlohmann::json::parse(schema_file);
      auto errors = typec::testing::validate_schema(
          nlohmann::ordered_json::parse(first.output), schema);
      if (!errors.empty()) {
        out.fail("'" + c.args + "' violates its schema: " + errors.front());
      }
      covered.insert(c.schema);
    }
    if (covered.size() != 11) {
      out.fail("not every subcommand was exercised");
    }
    if (out.pass) {
      out.detail = std::to_string(cases.size()) + " invocations over "
                   + std::to_string(covered.size()) + " subcommands";
    }
    return out;
  }

}  // namespace

int main() {
  struct Criterion {
    int                      id;
    std::string              name;
    double                   budget_seconds;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {1, "relation suite", 30, relation_suite},
      {2, "dimension identity", 60, dimension_identity},
      {3, "psi round trip", 60, psi_round_trip},
      {4, "inflation product oracle", 120, inflation_oracle},
      {5, "involution correspondence", 0, involution_correspondence},
      {6, "stratification", 0, stratification},
      {7, "wreath dimensions", 0, wreath_dimensions},
      {8, "generic semisimplicity", 0, generic_semisimplicity},
      {9, "quasi-heredity verdicts", 0, verdict_table},
      {10, "decomposition blocks", 120, decomposition_blocks},
      {11, "CLI determinism", 0, cli_determinism},
  };
  bool all = true;
  for (auto const& c : criteria) {
    auto    start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = c.run();
    } catch (std::exception const& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      result.fail("took " + std::to_string(seconds) + " s, budget "
                  + std::to_string(c.budget_seconds) + " s");
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << "criterion " << c.id << " " << (result.pass ? "PASS" : "FAIL")
              << " [" << c.name << ", " << timing << "] " << result.detail << "\n";
    all = all && result.pass;
  }
  return all ? 0 : 1;
}
