#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "typec/algebra.hpp"
#include "typec/diagrams.hpp"
#include "typec/hyperoctahedral.hpp"
#include "typec/scalars.hpp"

namespace typec {

  // One row of a diagram with the through strands cut: a set of disjoint
  // arcs on positions 1..2n, invariant under i -> 2n + 1 - i. The remaining
  // positions are singletons.
  class SymmetricDangle {
   public:
    using Arc = std::pair<unsigned, unsigned>;

    SymmetricDangle() = default;
    // Throws shape-mismatch for overlapping or out-of-range arcs and
    // asymmetric-input when the arc set is not mirror invariant.
    SymmetricDangle(unsigned n, std::vector<Arc> arcs);

    unsigned n() const noexcept {
      return _n;
    }
    unsigned arc_count() const noexcept {
      return static_cast<unsigned>(_arcs.size());
    }
    // Sorted, each arc with its smaller end first.
    std::vector<Arc> const& arcs() const noexcept {
      return _arcs;
    }
    std::vector<unsigned> singletons() const;

    friend bool operator==(SymmetricDangle const&, SymmetricDangle const&)
        = default;
    friend auto operator<=>(SymmetricDangle const& a,
                            SymmetricDangle const& b) {
      if (auto c = a._n <=> b._n; c != 0) {
        return c;
      }
      return a._arcs <=> b._arcs;
    }

    std::string to_string() const;

   private:
    unsigned         _n = 0;
    std::vector<Arc> _arcs;
  };

  // Dangle whose arcs are the k nested σ-fixed pairs {n+1-i, n+i}.
  SymmetricDangle nested_dangle(unsigned k, unsigned n);

  // All σ-symmetric dangles on 1..2n with a arcs, sorted.
  std::vector<SymmetricDangle> enumerate_dangles(unsigned n, unsigned a);

  struct InflationTriple {
    SymmetricDangle   top;
    SymmetricDangle   bottom;
    SignedPermutation perm;
    unsigned          layer;

    friend bool operator==(InflationTriple const&, InflationTriple const&)
        = default;
  };

  // d -> (top dangle, bottom dangle, through-strand permutation, arc count).
  InflationTriple psi(BrauerDiagram const& d);
  // Throws malformed-triple unless ranks agree, both dangles have `layer`
  // arcs and perm lies in H_{n - layer}.
  BrauerDiagram psi_inverse(InflationTriple const& t);

  // Value of the layer form: zero, or δ^delta_power times a group element.
  struct GroupAlgebraScalar {
    bool              zero = true;
    unsigned          delta_power = 0;
    SignedPermutation element;

    static GroupAlgebraScalar make_zero() {
      return {};
    }
    friend bool operator==(GroupAlgebraScalar const&,
                           GroupAlgebraScalar const&)
        = default;
  };

  // Overlays f (bottom of an upper diagram) on g (top of a lower one).
  // Nonzero exactly when every singleton of f is joined to a singleton of
  // g; then delta_power counts the closed cycles and element is the induced
  // map from f's singleton labels to g's. Throws shape-mismatch unless f and
  // g share n and arc count.
  GroupAlgebraScalar phi(SymmetricDangle const& f, SymmetricDangle const& g);

  struct ScaledTriple {
    LaurentScalar   coeff;
    InflationTriple triple;
  };

  // (a ⊗ b ⊗ x)(c ⊗ d ⊗ y) = a ⊗ d ⊗ x φ(b, c) y, computed without
  // diagrams. Both triples must share a layer; nullopt when φ vanishes.
  std::optional<ScaledTriple> layer_product(ScaledTriple const& x,
                                            ScaledTriple const& y);

  struct InflationProduct {
    ScaledTriple result;
    // result lies in a deeper layer than max(layer(x), layer(y))
    bool dropped;
  };

  // Same-layer products use layer_product; a vanishing form, or a product
  // across layers, falls back to diagram multiplication.
  InflationProduct inflation_multiply(ScaledTriple const& x,
                                      ScaledTriple const& y);

  struct LayerInfo {
    unsigned      a;
    std::size_t   dangles;
    unsigned long group_order;
  };

  struct StratificationReport {
    unsigned n;
    // layer dimensions add up and psi is a bijection on every layer
    bool condition1;
    // f_k = δ^-k psi_inverse(u_k ⊗ u_k ⊗ 1) is idempotent for all k;
    // nullopt ("unavailable") when δ = 0
    std::optional<bool> condition2;
    // f_a f_b = f_max(a,b) for all a, b; false when δ = 0
    bool                   condition3;
    std::vector<LayerInfo> layers;
  };

  StratificationReport check_stratification(unsigned n, FieldSpec const& spec);

}  // namespace typec
