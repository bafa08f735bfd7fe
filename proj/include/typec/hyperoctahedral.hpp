#pragma once

#include <compare>
#include <string>
#include <vector>

#include "typec/diagrams.hpp"

namespace typec {

  // Element of H_m = Σ_2 ≀ Σ_m: images w(1..m) in {±1, ..., ±m} whose
  // absolute values form a permutation. H_0 has the single empty element.
  class SignedPermutation {
   public:
    SignedPermutation() = default;
    // Throws shape-mismatch if |images| is not a permutation.
    explicit SignedPermutation(std::vector<int> images);

    static SignedPermutation identity(unsigned m);
    // The sign change of 1, matching r_1.
    static SignedPermutation sign_change(unsigned m);
    // The transposition of i and i + 1, matching r_{i+1}.
    static SignedPermutation transposition(unsigned i, unsigned m);

    unsigned m() const noexcept {
      return static_cast<unsigned>(_images.size());
    }
    std::vector<int> const& images() const noexcept {
      return _images;
    }
    // 1-based
    int operator()(unsigned p) const {
      return _images[p - 1];
    }
    bool is_identity() const noexcept;

    SignedPermutation inverse() const;

    friend bool operator==(SignedPermutation const&, SignedPermutation const&)
        = default;
    friend auto operator<=>(SignedPermutation const& a,
                            SignedPermutation const& b) {
      if (auto c = a.m() <=> b.m(); c != 0) {
        return c;
      }
      return a._images <=> b._images;
    }

    std::string to_string() const;

   private:
    std::vector<int> _images;
  };

  // Product in H_m with u applied first, then v:
  //   (u·v)(p) = sign(u(p)) · v(|u(p)|).
  // This is the order in which diagram stacking composes through strands,
  // so to_symmetric_perm(u·v) = compose(to_symmetric_perm(u),
  // to_symmetric_perm(v)).diagram. Throws rank-mismatch on unequal m.
  SignedPermutation group_compose(SignedPermutation const& u,
                                  SignedPermutation const& v);

  // Arc-free σ-symmetric diagram on 2m strands. Pair p is the position pair
  // {m + p, m + 1 - p}; w(p) = +q joins T_{m+p}-B_{m+q} and
  // T_{m+1-p}-B_{m+1-q}, w(p) = -q joins T_{m+p}-B_{m+1-q} and
  // T_{m+1-p}-B_{m+q}. Requires m >= 1.
  BrauerDiagram to_symmetric_perm(SignedPermutation const& w);

  // Label form on 1..2m: result[L - 1] is the image of label L, using the
  // same right-half convention as to_symmetric_perm.
  std::vector<unsigned> label_permutation(SignedPermutation const& w);
  // Inverse of label_permutation; throws asymmetric-input if the label
  // permutation does not commute with L -> 2m + 1 - L.
  SignedPermutation from_label_permutation(std::vector<unsigned> const& labels);

  // Numbers the through strands of each row left to right and reads off the
  // induced signed permutation. Throws asymmetric-input for non-σ-fixed d.
  SignedPermutation from_through_strands(BrauerDiagram const& d);

  // All 2^m m! elements ordered lexicographically by image sequence.
  // Throws resource-limit above max_group_rank().
  std::vector<SignedPermutation> enumerate_group(unsigned m);

  unsigned long group_order(unsigned m);

  // A word g_1 g_2 ... g_k in the Coxeter generators with
  // w = g_1 · g_2 · ... · g_k; letter 0 is the sign change, letter i >= 1
  // the transposition (i, i + 1).
  std::vector<unsigned> generator_word(SignedPermutation const& w);

}  // namespace typec
