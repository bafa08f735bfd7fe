#pragma once

#include <map>
#include <string>
#include <vector>

#include "typec/diagrams.hpp"
#include "typec/scalars.hpp"

namespace typec {

  // A finite linear combination of σ-symmetric diagrams of one rank, i.e.
  // an element of the type-C Brauer algebra over Z[δ, δ^-1] ⊗ Q.
  class AlgebraElement {
   public:
    using Terms = std::map<BrauerDiagram, LaurentScalar>;

    explicit AlgebraElement(unsigned n) : _n(n) {}
    // Throws asymmetric-input unless d is σ-fixed.
    explicit AlgebraElement(BrauerDiagram const& d,
                            LaurentScalar const& coeff = LaurentScalar(1L));

    static AlgebraElement identity(unsigned n) {
      return AlgebraElement(BrauerDiagram::identity(n));
    }

    unsigned n() const noexcept {
      return _n;
    }
    Terms const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    LaurentScalar coefficient(BrauerDiagram const& d) const;

    void add_term(BrauerDiagram const& d, LaurentScalar const& coeff);

    AlgebraElement& operator+=(AlgebraElement const& other);
    AlgebraElement& operator-=(AlgebraElement const& other);
    AlgebraElement& operator*=(LaurentScalar const& scalar);

    friend AlgebraElement operator+(AlgebraElement a, AlgebraElement const& b) {
      return a += b;
    }
    friend AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b) {
      return a -= b;
    }
    friend AlgebraElement operator*(LaurentScalar const& s, AlgebraElement a) {
      return a *= s;
    }
    friend bool operator==(AlgebraElement const&, AlgebraElement const&)
        = default;

    std::string to_string() const;

   private:
    void check_rank(AlgebraElement const& other) const;

    unsigned _n;
    Terms    _terms;
  };

  enum class GeneratorKind { R, E };

  // Diagram of r_index or e_index; throws index-out-of-range unless
  // 1 <= index <= n.
  BrauerDiagram  generator_diagram(GeneratorKind kind, unsigned index,
                                   unsigned n);
  AlgebraElement generator(GeneratorKind kind, unsigned index, unsigned n);

  // Bilinear extension of d1 · d2 = δ^loops compose(d1, d2).
  AlgebraElement multiply(AlgebraElement const& x, AlgebraElement const& y);
  // Term-wise horizontal flip.
  AlgebraElement involution(AlgebraElement const& x);

  // Diagram with the k nested σ-fixed arcs {n+1-i, n+i}, i = 1..k, in both
  // rows and vertical strands elsewhere.
  BrauerDiagram  nested_arc_diagram(unsigned k, unsigned n);
  // δ^-k · nested_arc_diagram(k, n).
  AlgebraElement idempotent_f(unsigned k, unsigned n);

  // Arc count of a σ-symmetric diagram; throws asymmetric-input otherwise.
  unsigned layer_of(BrauerDiagram const& d);

  // Evaluates a whitespace separated word of tokens r<i>, e<i>, f<k>, 1 left
  // to right. Throws invalid-argument on unknown tokens.
  AlgebraElement evaluate_word(unsigned n, std::string const& word);

  ////////////////////////////////////////////////////////////////////////
  // Relation verification
  ////////////////////////////////////////////////////////////////////////

  struct RelationEntry {
    std::string           relation;
    std::vector<unsigned> indices;
    bool                  holds;
    AlgebraElement        difference;
  };

  struct RelationReport {
    unsigned                   n;
    std::vector<RelationEntry> entries;
  };

  // Products inside each side are associated from the left or the right.
  // Both give identical reports; the second order exists to check that.
  enum class EvaluationOrder { left_to_right, right_to_left };

  // Evaluates both sides of every relation family of the presentation
  // (written as literally stated, including the inconsistent ones) at every
  // valid index instantiation. Requires n >= 2.
  RelationReport verify_relations(
      unsigned        n,
      EvaluationOrder order = EvaluationOrder::left_to_right);

}  // namespace typec
