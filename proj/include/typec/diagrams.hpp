#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace typec {

  // A Brauer diagram on 2n top nodes T1..T2n and 2n bottom nodes B1..B2n,
  // where n is the type-C rank. Nodes are indexed internally as
  //   top i    -> i - 1
  //   bottom i -> 2n + i - 1
  // which is also the canonical node order T1 < ... < T2n < B1 < ... < B2n.
  // The mirror axis lies between positions n and n + 1.
  class BrauerDiagram {
   public:
    using Node = std::uint16_t;
    using Pair = std::pair<Node, Node>;

    BrauerDiagram() = default;
    // pairs use internal node indices; throws shape-mismatch unless they
    // form a perfect matching with equally many arcs in both rows.
    BrauerDiagram(unsigned n, std::vector<Pair> const& pairs);

    static BrauerDiagram identity(unsigned n);
    // partner[x] is the node matched with x; validated like the pair form.
    static BrauerDiagram from_partners(unsigned n, std::vector<Node> partner);

    unsigned n() const noexcept {
      return _n;
    }
    unsigned row_size() const noexcept {
      return 2 * _n;
    }
    Node partner(Node x) const noexcept {
      return _partner[x];
    }
    std::vector<Node> const& partners() const noexcept {
      return _partner;
    }

    Node top(unsigned position) const noexcept {
      return static_cast<Node>(position - 1);
    }
    Node bottom(unsigned position) const noexcept {
      return static_cast<Node>(2 * _n + position - 1);
    }
    bool is_top(Node x) const noexcept {
      return x < 2 * _n;
    }
    // 1-based position of a node within its row.
    unsigned position(Node x) const noexcept {
      return is_top(x) ? x + 1 : x - 2 * _n + 1;
    }

    // Canonical pair list: smaller node first, sorted.
    std::vector<Pair> pairs() const;

    // "T3" / "B1"
    std::string node_name(Node x) const;
    std::string to_string() const;

    friend bool operator==(BrauerDiagram const& a, BrauerDiagram const& b) {
      return a._n == b._n && a._partner == b._partner;
    }
    // Lexicographic order on canonical pair lists (rank first).
    friend std::strong_ordering operator<=>(BrauerDiagram const& a,
                                            BrauerDiagram const& b);

   private:
    void validate() const;

    unsigned          _n = 0;
    std::vector<Node> _partner;
  };

  struct Composite {
    BrauerDiagram diagram;
    unsigned      loops;
  };

  // Stacks d1 above d2, tracing paths through the identified middle row.
  // Throws rank-mismatch when d1.n() != d2.n().
  Composite compose(BrauerDiagram const& d1, BrauerDiagram const& d2);

  // σ: position i -> 2n + 1 - i in both rows.
  BrauerDiagram mirror(BrauerDiagram const& d);
  // Horizontal flip T_i <-> B_i; the cellular involution.
  BrauerDiagram flip(BrauerDiagram const& d);
  bool          is_symmetric(BrauerDiagram const& d);

  // Number of arcs in the top row (equal to the bottom row).
  unsigned arc_count(BrauerDiagram const& d);
  unsigned through_count(BrauerDiagram const& d);

  // All σ-fixed diagrams of rank n in canonical order; resource-limit error
  // above max_enumeration_rank().
  std::vector<BrauerDiagram> enumerate_symmetric_diagrams(unsigned n);

}  // namespace typec
