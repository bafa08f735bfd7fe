#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "typec/algebra.hpp"
#include "typec/hyperoctahedral.hpp"
#include "typec/inflation.hpp"
#include "typec/linalg.hpp"
#include "typec/specht.hpp"

namespace typec {

  struct Bipartition {
    Partition first;
    Partition second;

    unsigned size() const;
    std::string to_string() const;

    friend bool operator==(Bipartition const&, Bipartition const&) = default;
    friend auto operator<=>(Bipartition const&, Bipartition const&) = default;
  };

  // All bipartitions of m in lexicographic order.
  std::vector<Bipartition> bipartitions(unsigned m);
  // Throws invalid-argument unless both parts are weakly decreasing and
  // positive.
  void validate(Bipartition const& b);

  // A finite dimensional module given by the matrices of a generating set.
  struct MatrixModule {
    FieldSpec           spec;
    std::size_t         dimension = 0;
    std::vector<Matrix> generators;
  };

  // Basis of Hom_A(from, to); element k maps from-coordinates to
  // to-coordinates.
  std::vector<Matrix> hom_space(MatrixModule const& from, MatrixModule const& to);
  // The submodule spanned by the columns of `basis` must be invariant.
  MatrixModule quotient(MatrixModule const& module, Matrix const& basis);
  MatrixModule submodule(MatrixModule const& module, Matrix const& basis);
  // Quotient by the radical of an invariant form.
  MatrixModule head(MatrixModule const& module, Matrix const& gram);

  // Composition multiplicities of `module` against a complete list of
  // pairwise non-isomorphic simple modules, by peeling socle layers.
  // Throws invalid-argument if some socle layer is not covered.
  std::vector<unsigned> composition_multiplicities(
      MatrixModule                     module,
      std::vector<MatrixModule> const& simples);

  // Cell module of H_m for (λ1, λ2): induced from H_k × H_{m-k}, k = |λ1|,
  // with S^{λ1} carrying trivial signs and S^{λ2} twisted by the sign
  // character. Basis (subset A of size k, tableau of λ1, tableau of λ2) in
  // lexicographic order. generators[0] is the sign change, generators[i]
  // the transposition (i, i + 1). The construction needs 2 invertible;
  // in characteristic 2 it is still built but flagged degenerate.
  struct GroupModule {
    Bipartition  label;
    unsigned     m;
    bool         degenerate;
    MatrixModule module;
    Matrix       gram;

    std::size_t dimension() const {
      return module.dimension;
    }
    // Matrix of an arbitrary group element.
    Matrix action(SignedPermutation const& w) const;
  };

  GroupModule h_cell_module(Bipartition const& b, FieldSpec const& spec);

  // Δ(b, a) = V(2n, a) ⊗ v_0 ⊗ Δ_H(b), with v_0 the nested-arc dangle.
  // Basis (dangle, H-basis vector) in lexicographic order.
  class CellModule {
   public:
    CellModule(Bipartition const& b, unsigned a, unsigned n,
               FieldSpec const& spec);

    unsigned n() const noexcept {
      return _n;
    }
    unsigned layer() const noexcept {
      return _a;
    }
    Bipartition const& label() const noexcept {
      return _group.label;
    }
    FieldSpec const& spec() const noexcept {
      return _spec;
    }
    std::size_t dimension() const noexcept {
      return _dangles.size() * _group.dimension();
    }
    std::vector<SymmetricDangle> const& dangles() const noexcept {
      return _dangles;
    }
    GroupModule const& group_module() const noexcept {
      return _group;
    }

    // Cell-quotient action: products that gain arcs act as zero.
    Matrix action(BrauerDiagram const& d) const;
    Matrix action(AlgebraElement const& x) const;
    // r_1..r_n then e_1..e_n
    MatrixModule as_matrix_module() const;

    // ⟨u ⊗ s, v ⊗ t⟩ = δ^m ⟨s, φ(u, v) t⟩_H, zero where φ vanishes.
    Matrix gram() const;

   private:
    unsigned                     _n;
    unsigned                     _a;
    FieldSpec                    _spec;
    std::vector<SymmetricDangle> _dangles;
    SymmetricDangle              _anchor;
    GroupModule                  _group;
  };

  CellModule cell_module(Bipartition const& b, unsigned a, unsigned n,
                         FieldSpec const& spec);

  struct GramResult {
    Matrix       gram;
    std::size_t  rank;
    FieldElement determinant;
  };

  GramResult gram_matrix(CellModule const& module);

  struct QuasiHereditaryVerdict {
    bool quasi_hereditary;
    // δ ≠ 0 and (p = 0 or p > n), the criterion in its usual closed form
    bool closed_form;
    bool divergent;
    bool delta_nonzero;
    // every layer carries a form that does not vanish identically
    bool                     layer_forms_nonzero;
    // ranks m of layer groups H_m whose group algebra is not semisimple
    std::vector<unsigned>    nonsemisimple_groups;
    std::vector<std::string> reasons;
  };

  // Quasi-hereditary iff δ ≠ 0 (so no layer form vanishes) and every layer
  // group algebra F H_m is semisimple, decided by Maschke: p ∤ 2^m m!.
  QuasiHereditaryVerdict qh_verdict(unsigned n, FieldSpec const& spec);

  struct CellLabel {
    unsigned    layer;
    Bipartition label;

    friend bool operator==(CellLabel const&, CellLabel const&) = default;
  };

  // Layer descending, then bipartition ascending.
  bool cell_order(CellLabel const& x, CellLabel const& y);

  struct CellSummary {
    CellLabel   cell;
    std::size_t dimension;
    std::size_t gram_rank;
  };

  struct GroupDecomposition {
    unsigned                           m;
    std::vector<Bipartition>           cells;
    std::vector<Bipartition>           simples;
    std::vector<std::vector<unsigned>> matrix;
  };

  struct DecompositionResult {
    unsigned                           n;
    FieldSpec                          spec;
    std::vector<CellSummary>           cells;
    std::vector<CellLabel>             simples;
    std::vector<std::vector<unsigned>> matrix;  // cells × simples
    std::vector<GroupDecomposition>    layer_groups;  // indexed like layers
    std::vector<unsigned>              layers;        // layers computed
    std::vector<unsigned>              skipped_layers;
  };

  // Summaries of every cell module Δ(b, a) of B(C_n), in cell order.
  std::vector<CellSummary> cell_summaries(unsigned n, FieldSpec const& spec);

  GroupDecomposition group_decomposition(unsigned m, FieldSpec const& spec);

  // Brute-force decomposition matrix. Requires δ ≠ 0 and n within
  // max_decomposition_rank(). In characteristic 2 only layers with trivial
  // layer group are computed; the others are listed in skipped_layers.
  DecompositionResult decomposition_matrix(unsigned n, FieldSpec const& spec);

  unsigned max_decomposition_rank();

}  // namespace typec
