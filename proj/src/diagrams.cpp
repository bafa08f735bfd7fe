#include "typec/diagrams.hpp"

#include <algorithm>
#include <functional>

#include "typec/error.hpp"

namespace typec {

  using Node = BrauerDiagram::Node;

  BrauerDiagram::BrauerDiagram(unsigned n, std::vector<Pair> const& pairs)
      : _n(n), _partner(4 * n, static_cast<Node>(4 * n)) {
    if (pairs.size() != 2 * n) {
      throw Error(ErrorKind::shape_mismatch,
                  "a rank " + std::to_string(n) + " diagram needs "
                      + std::to_string(2 * n) + " pairs");
    }
    for (auto const& [x, y] : pairs) {
      if (x >= 4 * n || y >= 4 * n || x == y
          || _partner[x] != 4 * n || _partner[y] != 4 * n) {
        throw Error(ErrorKind::shape_mismatch, "pairs are not a matching");
      }
      _partner[x] = y;
      _partner[y] = x;
    }
    validate();
  }

  BrauerDiagram BrauerDiagram::identity(unsigned n) {
    std::vector<Node> partner(4 * n);
    for (unsigned i = 0; i < 2 * n; ++i) {
      partner[i]         = static_cast<Node>(i + 2 * n);
      partner[i + 2 * n] = static_cast<Node>(i);
    }
    return from_partners(n, std::move(partner));
  }

  BrauerDiagram BrauerDiagram::from_partners(unsigned          n,
                                             std::vector<Node> partner) {
    BrauerDiagram d;
    d._n       = n;
    d._partner = std::move(partner);
    d.validate();
    return d;
  }

  void BrauerDiagram::validate() const {
    if (_n == 0) {
      throw Error(ErrorKind::shape_mismatch, "rank must be positive");
    }
    if (_partner.size() != 4 * _n) {
      throw Error(ErrorKind::shape_mismatch, "wrong number of nodes");
    }
    unsigned top_arcs = 0, bottom_arcs = 0;
    for (unsigned x = 0; x < 4 * _n; ++x) {
      Node y = _partner[x];
      if (y >= 4 * _n || y == x || _partner[y] != x) {
        throw Error(ErrorKind::shape_mismatch, "not a perfect matching");
      }
      if (x < y && is_top(static_cast<Node>(x)) && is_top(y)) {
        ++top_arcs;
      } else if (x < y && !is_top(static_cast<Node>(x)) && !is_top(y)) {
        ++bottom_arcs;
      }
    }
    if (top_arcs != bottom_arcs) {
      throw Error(ErrorKind::shape_mismatch, "rows carry different arc counts");
    }
  }

  std::vector<BrauerDiagram::Pair> BrauerDiagram::pairs() const {
    std::vector<Pair> result;
    result.reserve(2 * _n);
    for (Node x = 0; x < 4 * _n; ++x) {
      if (x < _partner[x]) {
        result.emplace_back(x, _partner[x]);
      }
    }
    return result;
  }

  std::string BrauerDiagram::node_name(Node x) const {
    return (is_top(x) ? "T" : "B") + std::to_string(position(x));
  }

  std::string BrauerDiagram::to_string() const {
    std::string out = "{";
    bool        first = true;
    for (auto const& [x, y] : pairs()) {
      out += first ? "" : ", ";
      out += node_name(x) + "-" + node_name(y);
      first = false;
    }
    return out + "}";
  }

  std::strong_ordering operator<=>(BrauerDiagram const& a,
                                   BrauerDiagram const& b) {
    if (auto c = a._n <=> b._n; c != 0) {
      return c;
    }
    // Walk both canonical pair lists in step without materializing them.
    std::size_t const size = a._partner.size();
    Node              x = 0, y = 0;
    while (true) {
      while (x < size && a._partner[x] < x) {
        ++x;
      }
      while (y < size && b._partner[y] < y) {
        ++y;
      }
      // equal ranks give equally many pairs, so both lists end together
      if (x == size || y == size) {
        return std::strong_ordering::equal;
      }
      if (auto c = x <=> y; c != 0) {
        return c;
      }
      if (auto c = a._partner[x] <=> b._partner[y]; c != 0) {
        return c;
      }
      ++x;
      ++y;
    }
  }

  Composite compose(BrauerDiagram const& d1, BrauerDiagram const& d2) {
    if (d1.n() != d2.n()) {
      throw Error(ErrorKind::rank_mismatch,
                  "cannot compose diagrams of rank " + std::to_string(d1.n())
                      + " and " + std::to_string(d2.n()));
    }
    unsigned const    row = d1.row_size();
    std::vector<Node> partner(2 * row);
    // middle[k] is set once middle position k has been walked.
    std::vector<bool> middle(row, false);

    // Follows a path entering the middle row at position k (0-based) from
    // the side `from_upper`, returning the endpoint in the result diagram.
    auto walk = [&](unsigned k, bool from_upper) -> Node {
      while (true) {
        middle[k] = true;
        if (from_upper) {
          // arrived from d1, continue into d2 at its top node k
          Node next = d2.partner(static_cast<Node>(k));
          if (!d2.is_top(next)) {
            return static_cast<Node>(next);  // bottom of d2 = bottom of result
          }
          k          = next;
          from_upper = false;
        } else {
          Node next = d1.partner(static_cast<Node>(row + k));
          if (d1.is_top(next)) {
            return next;
          }
          k          = next - row;
          from_upper = true;
        }
      }
    };

    auto end_of = [&](Node start) -> Node {
      if (d1.is_top(start)) {
        Node next = d1.partner(start);
        return d1.is_top(next) ? next : walk(next - row, true);
      }
      Node next = d2.partner(start);
      return d2.is_top(next) ? walk(next, false) : next;
    };

    for (Node x = 0; x < 2 * row; ++x) {
      partner[x] = end_of(x);
    }
    unsigned loops = 0;
    for (unsigned k = 0; k < row; ++k) {
      if (middle[k]) {
        continue;
      }
      ++loops;
      // a closed cycle: alternate d1-bottom and d2-top arcs until back at k
      unsigned j = k;
      do {
        middle[j] = true;
        j         = d2.partner(static_cast<Node>(j));
        middle[j] = true;
        j         = d1.partner(static_cast<Node>(row + j)) - row;
      } while (j != k);
    }
    return Composite{BrauerDiagram::from_partners(d1.n(), std::move(partner)),
                     loops};
  }

  BrauerDiagram mirror(BrauerDiagram const& d) {
    unsigned const    row = d.row_size();
    auto              m   = [row](Node x) -> Node {
      return x < row ? static_cast<Node>(row - 1 - x)
                                : static_cast<Node>(3 * row - 1 - x);
    };
    std::vector<Node> partner(2 * row);
    for (Node x = 0; x < 2 * row; ++x) {
      partner[m(x)] = m(d.partner(x));
    }
    return BrauerDiagram::from_partners(d.n(), std::move(partner));
  }

  BrauerDiagram flip(BrauerDiagram const& d) {
    unsigned const    row = d.row_size();
    auto              f   = [row](Node x) -> Node {
      return x < row ? static_cast<Node>(x + row) : static_cast<Node>(x - row);
    };
    std::vector<Node> partner(2 * row);
    for (Node x = 0; x < 2 * row; ++x) {
      partner[f(x)] = f(d.partner(x));
    }
    return BrauerDiagram::from_partners(d.n(), std::move(partner));
  }

  bool is_symmetric(BrauerDiagram const& d) {
    unsigned const row = d.row_size();
    for (Node x = 0; x < 2 * row; ++x) {
      Node mx = x < row ? row - 1 - x : 3 * row - 1 - x;
      Node y  = d.partner(x);
      Node my = y < row ? row - 1 - y : 3 * row - 1 - y;
      if (d.partner(mx) != my) {
        return false;
      }
    }
    return true;
  }

  unsigned arc_count(BrauerDiagram const& d) {
    unsigned arcs = 0;
    for (Node x = 0; x < d.row_size(); ++x) {
      if (d.is_top(d.partner(x))) {
        ++arcs;
      }
    }
    return arcs / 2;
  }

  unsigned through_count(BrauerDiagram const& d) {
    return d.row_size() - 2 * arc_count(d);
  }

  std::vector<BrauerDiagram> enumerate_symmetric_diagrams(unsigned n) {
    if (n == 0) {
      throw Error(ErrorKind::invalid_argument, "rank must be positive");
    }
    if (n > max_enumeration_rank()) {
      throw Error(ErrorKind::resource_limit,
                  "enumeration above rank " +
                      std::to_string(max_enumeration_rank())
                      + " (raise TYPEC_MAX_RANK)");
    }
    unsigned const    row   = 2 * n;
    unsigned const    nodes = 2 * row;
    Node const        free  = static_cast<Node>(nodes);
    auto              m     = [row](Node x) -> Node {
      return x < row ? static_cast<Node>(row - 1 - x)
                                    : static_cast<Node>(3 * row - 1 - x);
    };
    std::vector<Node>          partner(nodes, free);
    std::vector<BrauerDiagram> result;

    // σ-orbits are matched in pairs: either x with σx, or {x, y} together
    // with {σx, σy}.
    std::function<void()> extend = [&]() {
      Node x = 0;
      while (x < nodes && partner[x] != free) {
        ++x;
      }
      if (x == nodes) {
        result.push_back(BrauerDiagram::from_partners(n, partner));
        return;
      }
      Node mx = m(x);
      partner[x] = mx;
      partner[mx] = x;
      extend();
      partner[x] = partner[mx] = free;
      for (Node y = x + 1; y < nodes; ++y) {
        if (y == mx || partner[y] != free) {
          continue;
        }
        Node my = m(y);
        // y free and y != σx imply σy != x; σy is free since σ preserves
        // the matched set.
        partner[x] = y;
        partner[y] = x;
        partner[mx] = my;
        partner[my] = mx;
        extend();
        partner[x] = partner[y] = partner[mx] = partner[my] = free;
      }
    };
    extend();
    std::sort(result.begin(), result.end());
    return result;
  }

}  // namespace typec
