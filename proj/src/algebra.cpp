#include "typec/algebra.hpp"

#include <functional>
#include <sstream>

#include "typec/error.hpp"

namespace typec {

  using Node = BrauerDiagram::Node;

  AlgebraElement::AlgebraElement(BrauerDiagram const& d,
                                 LaurentScalar const& coeff)
      : _n(d.n()) {
    add_term(d, coeff);
  }

  LaurentScalar AlgebraElement::coefficient(BrauerDiagram const& d) const {
    auto it = _terms.find(d);
    return it == _terms.end() ? LaurentScalar() : it->second;
  }

  void AlgebraElement::add_term(BrauerDiagram const& d,
                                LaurentScalar const& coeff) {
    if (d.n() != _n) {
      throw Error(ErrorKind::rank_mismatch, "diagram rank differs");
    }
    if (!is_symmetric(d)) {
      throw Error(ErrorKind::asymmetric_input,
                  "diagram " + d.to_string() + " is not mirror symmetric");
    }
    if (coeff.is_zero()) {
      return;
    }
    auto [it, inserted] = _terms.try_emplace(d, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) {
        _terms.erase(it);
      }
    }
  }

  void AlgebraElement::check_rank(AlgebraElement const& other) const {
    if (other._n != _n) {
      throw Error(ErrorKind::rank_mismatch,
                  "algebra elements of rank " + std::to_string(_n) + " and "
                      + std::to_string(other._n));
    }
  }

  AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& other) {
    check_rank(other);
    for (auto const& [d, c] : other._terms) {
      add_term(d, c);
    }
    return *this;
  }

  AlgebraElement& AlgebraElement::operator-=(AlgebraElement const& other) {
    check_rank(other);
    for (auto const& [d, c] : other._terms) {
      add_term(d, -c);
    }
    return *this;
  }

  AlgebraElement& AlgebraElement::operator*=(LaurentScalar const& scalar) {
    if (scalar.is_zero()) {
      _terms.clear();
      return *this;
    }
    for (auto& [d, c] : _terms) {
      c *= scalar;
    }
    return *this;
  }

  std::string AlgebraElement::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::ostringstream out;
    bool               first = true;
    for (auto const& [d, c] : _terms) {
      out << (first ? "" : " + ") << "(" << c.to_string() << ")*"
          << d.to_string();
      first = false;
    }
    return out.str();
  }

  namespace {
    // Builds a diagram from per-position top->bottom targets plus arcs.
    struct DiagramBuilder {
      explicit DiagramBuilder(unsigned n)
          : n(n), partner(4 * n, static_cast<Node>(4 * n)) {}

      void through(unsigned top_pos, unsigned bottom_pos) {
        join(top_pos - 1, 2 * n + bottom_pos - 1);
      }
      void arc_both_rows(unsigned i, unsigned j) {
        join(i - 1, j - 1);
        join(2 * n + i - 1, 2 * n + j - 1);
      }
      // Vertical strands at every position still unused in both rows.
      BrauerDiagram finish() {
        for (unsigned p = 1; p <= 2 * n; ++p) {
          if (partner[p - 1] == 4 * n && partner[2 * n + p - 1] == 4 * n) {
            through(p, p);
          }
        }
        return BrauerDiagram::from_partners(n, partner);
      }

      void join(unsigned x, unsigned y) {
        partner[x] = static_cast<Node>(y);
        partner[y] = static_cast<Node>(x);
      }

      unsigned          n;
      std::vector<Node> partner;
    };
  }  // namespace

  BrauerDiagram generator_diagram(GeneratorKind kind, unsigned index,
                                  unsigned n) {
    if (index < 1 || index > n) {
      throw Error(ErrorKind::index_out_of_range,
                  "generator index " + std::to_string(index)
                      + " outside 1.." + std::to_string(n));
    }
    DiagramBuilder b(n);
    if (index == 1) {
      if (kind == GeneratorKind::R) {
        b.through(n, n + 1);
        b.through(n + 1, n);
      } else {
        b.arc_both_rows(n, n + 1);
      }
      return b.finish();
    }
    unsigned const left = n + 1 - index, right = n + index - 1;
    if (kind == GeneratorKind::R) {
      b.through(left, left + 1);
      b.through(left + 1, left);
      b.through(right, right + 1);
      b.through(right + 1, right);
    } else {
      b.arc_both_rows(left, left + 1);
      b.arc_both_rows(right, right + 1);
    }
    return b.finish();
  }

  AlgebraElement generator(GeneratorKind kind, unsigned index, unsigned n) {
    return AlgebraElement(generator_diagram(kind, index, n));
  }

  AlgebraElement multiply(AlgebraElement const& x, AlgebraElement const& y) {
    if (x.n() != y.n()) {
      throw Error(ErrorKind::rank_mismatch, "cannot multiply across ranks");
    }
    AlgebraElement result(x.n());
    for (auto const& [d1, c1] : x.terms()) {
      for (auto const& [d2, c2] : y.terms()) {
        Composite p = compose(d1, d2);
        result.add_term(p.diagram,
                        c1 * c2 * LaurentScalar::delta(static_cast<int>(p.loops)));
      }
    }
    return result;
  }

  AlgebraElement involution(AlgebraElement const& x) {
    AlgebraElement result(x.n());
    for (auto const& [d, c] : x.terms()) {
      result.add_term(flip(d), c);
    }
    return result;
  }

  BrauerDiagram nested_arc_diagram(unsigned k, unsigned n) {
    if (k > n) {
      throw Error(ErrorKind::index_out_of_range,
                  "idempotent index " + std::to_string(k) + " exceeds rank "
                      + std::to_string(n));
    }
    DiagramBuilder b(n);
    for (unsigned i = 1; i <= k; ++i) {
      b.arc_both_rows(n + 1 - i, n + i);
    }
    return b.finish();
  }

  AlgebraElement idempotent_f(unsigned k, unsigned n) {
    return AlgebraElement(nested_arc_diagram(k, n),
                          LaurentScalar::delta(-static_cast<int>(k)));
  }

  unsigned layer_of(BrauerDiagram const& d) {
    if (!is_symmetric(d)) {
      throw Error(ErrorKind::asymmetric_input,
                  "layer of a non-symmetric diagram");
    }
    return arc_count(d);
  }

  AlgebraElement evaluate_word(unsigned n, std::string const& word) {
    std::istringstream in(word);
    std::string        token;
    AlgebraElement     result = AlgebraElement::identity(n);
    while (in >> token) {
      AlgebraElement factor(n);
      if (token == "1") {
        continue;
      }
      unsigned index = 0;
      if (token.size() >= 2 && std::string("ref").find(token[0]) != std::string::npos
          && token.find_first_not_of("0123456789", 1) == std::string::npos) {
        index = static_cast<unsigned>(std::stoul(token.substr(1)));
      } else {
        throw Error(ErrorKind::invalid_argument,
                    "unknown word token '" + token + "'");
      }
      switch (token[0]) {
        case 'r': factor = generator(GeneratorKind::R, index, n); break;
        case 'e': factor = generator(GeneratorKind::E, index, n); break;
        default: factor = idempotent_f(index, n); break;
      }
      result = multiply(result, factor);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Letter {
      GeneratorKind kind;
      unsigned      index;
    };

    struct Side {
      int                 delta_power = 0;
      std::vector<Letter> word;
    };

    Letter r(unsigned i) {
      return {GeneratorKind::R, i};
    }
    Letter e(unsigned i) {
      return {GeneratorKind::E, i};
    }

    AlgebraElement evaluate(Side const& side, unsigned n,
                            EvaluationOrder order) {
      AlgebraElement result = AlgebraElement::identity(n);
      if (order == EvaluationOrder::left_to_right) {
        for (auto const& l : side.word) {
          result = multiply(result, generator(l.kind, l.index, n));
        }
      } else {
        for (auto it = side.word.rbegin(); it != side.word.rend(); ++it) {
          result = multiply(generator(it->kind, it->index, n), result);
        }
      }
      return LaurentScalar::delta(side.delta_power) * result;
    }
  }  // namespace

  RelationReport verify_relations(unsigned n, EvaluationOrder order) {
    if (n < 2) {
      throw Error(ErrorKind::index_out_of_range,
                  "relation verification needs n >= 2");
    }
    RelationReport report{n, {}};
    auto           check = [&](std::string const&           name,
                     std::vector<unsigned> const& indices,
                     Side const&                  lhs,
                     Side const&                  rhs) {
      AlgebraElement diff = evaluate(lhs, n, order) - evaluate(rhs, n, order);
      bool           holds = diff.is_zero();
      report.entries.push_back(
          RelationEntry{name, indices, holds, std::move(diff)});
    };

    check("r_2r_1r_2r_1=r_1r_2r_1r_2", {},
          {0, {r(2), r(1), r(2), r(1)}},
          {0, {r(1), r(2), r(1), r(2)}});
    for (unsigned i = 1; i <= n; ++i) {
      check("r_i^2=1", {i}, {0, {r(i), r(i)}}, {0, {}});
    }
    for (unsigned i = 2; i + 1 <= n; ++i) {
      check("r_ir_{i+1}r_i=r_{i+1}r_ir_{i+1}", {i},
            {0, {r(i), r(i + 1), r(i)}},
            {0, {r(i + 1), r(i), r(i + 1)}});
    }
    for (unsigned i = 1; i + 1 <= n; ++i) {
      check("r_ir_{i+1}=r_{i+1}r_i", {i},
            {0, {r(i), r(i + 1)}},
            {0, {r(i + 1), r(i)}});
    }
    for (unsigned i = 2; i <= n; ++i) {
      check("e_i^2=delta^2e_i", {i}, {0, {e(i), e(i)}}, {2, {e(i)}});
    }
    check("e_1^2=delta e_1", {}, {0, {e(1), e(1)}}, {1, {e(1)}});
    for (unsigned i = 1; i + 1 <= n; ++i) {
      check("e_ie_{i+1}=e_{i+1}e_i", {i},
            {0, {e(i), e(i + 1)}},
            {0, {e(i + 1), e(i)}});
    }
    for (unsigned i = 1; i <= n; ++i) {
      check("r_ie_i=e_i", {i}, {0, {r(i), e(i)}}, {0, {e(i)}});
      check("e_ir_i=e_i", {i}, {0, {e(i), r(i)}}, {0, {e(i)}});
    }
    // i > 2 families over both neighbours j = i - 1, i + 1
    auto neighbours = [n](unsigned i) {
      std::vector<unsigned> js{i - 1};
      if (i + 1 <= n) {
        js.push_back(i + 1);
      }
      return js;
    };
    for (unsigned i = 3; i <= n; ++i) {
      for (unsigned j : neighbours(i)) {
        check("e_ir_{i+-1}=r_{i+-1}e_i", {i, j},
              {0, {e(i), r(j)}},
              {0, {r(j), e(i)}});
      }
    }
    for (unsigned i = 3; i <= n; ++i) {
      for (unsigned j : neighbours(i)) {
        check("r_{i+-1}r_ie_{i+-1}=e_ie_{i+-1}", {i, j},
              {0, {r(j), r(i), e(j)}},
              {0, {e(i), e(j)}});
      }
    }
    for (unsigned i = 2; i <= n; ++i) {
      for (unsigned j = 2; j <= n; ++j) {
        if (i != j) {
          check("r_ie_jr_i=r_je_ir_j", {i, j},
                {0, {r(i), e(j), r(i)}},
                {0, {r(j), e(i), r(j)}});
        }
      }
    }
    check("r_2r_1e_2=r_1e_2", {}, {0, {r(2), r(1), e(2)}}, {0, {r(1), e(2)}});
    check("r_2e_1r_2e_1=e_1e_2e_1", {},
          {0, {r(2), e(1), r(2), e(1)}},
          {0, {e(1), e(2), e(1)}});
    check("(r_2r_1r_2)e_1=e_1(r_2r_1r_2)", {},
          {0, {r(2), r(1), r(2), e(1)}},
          {0, {e(1), r(2), r(1), r(2)}});
    check("e_2r_1e_2=delta e_2", {}, {0, {e(2), r(1), e(2)}}, {1, {e(2)}});
    check("e_2e_1e_2=delta e_2", {}, {0, {e(2), e(1), e(2)}}, {1, {e(2)}});
    check("e_2r_1r_2=e_2r_1", {}, {0, {e(2), r(1), r(2)}}, {0, {e(2), r(1)}});
    check("e_2e_1r_2=e_2e_1", {}, {0, {e(2), e(1), r(2)}}, {0, {e(2), e(1)}});
    return report;
  }

}  // namespace typec
