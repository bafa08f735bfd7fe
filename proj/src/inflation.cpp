#include "typec/inflation.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "typec/error.hpp"

namespace typec {

  using Node = BrauerDiagram::Node;

  SymmetricDangle::SymmetricDangle(unsigned n, std::vector<Arc> arcs)
      : _n(n), _arcs(std::move(arcs)) {
    std::vector<bool> used(2 * n + 1, false);
    for (auto& [i, j] : _arcs) {
      if (i > j) {
        std::swap(i, j);
      }
      if (i < 1 || j > 2 * n || i == j || used[i] || used[j]) {
        throw Error(ErrorKind::shape_mismatch,
                    "dangle arcs must be disjoint pairs in 1.."
                        + std::to_string(2 * n));
      }
      used[i] = used[j] = true;
    }
    std::sort(_arcs.begin(), _arcs.end());
    for (auto const& [i, j] : _arcs) {
      Arc mirrored{2 * n + 1 - j, 2 * n + 1 - i};
      if (!std::binary_search(_arcs.begin(), _arcs.end(), mirrored)) {
        throw Error(ErrorKind::asymmetric_input,
                    "dangle is not mirror invariant");
      }
    }
  }

  std::vector<unsigned> SymmetricDangle::singletons() const {
    std::vector<bool> used(2 * _n + 1, false);
    for (auto const& [i, j] : _arcs) {
      used[i] = used[j] = true;
    }
    std::vector<unsigned> result;
    for (unsigned p = 1; p <= 2 * _n; ++p) {
      if (!used[p]) {
        result.push_back(p);
      }
    }
    return result;
  }

  std::string SymmetricDangle::to_string() const {
    std::string out = "{";
    for (std::size_t k = 0; k < _arcs.size(); ++k) {
      out += (k ? "," : "") + std::string("{")
             + std::to_string(_arcs[k].first) + ","
             + std::to_string(_arcs[k].second) + "}";
    }
    return out + "}";
  }

  SymmetricDangle nested_dangle(unsigned k, unsigned n) {
    if (k > n) {
      throw Error(ErrorKind::index_out_of_range, "too many nested arcs");
    }
    std::vector<SymmetricDangle::Arc> arcs;
    for (unsigned i = 1; i <= k; ++i) {
      arcs.emplace_back(n + 1 - i, n + i);
    }
    return SymmetricDangle(n, std::move(arcs));
  }

  std::vector<SymmetricDangle> enumerate_dangles(unsigned n, unsigned a) {
    if (a > n) {
      throw Error(ErrorKind::index_out_of_range,
                  "arc count " + std::to_string(a) + " exceeds rank "
                      + std::to_string(n));
    }
    unsigned const    size = 2 * n;
    std::vector<int>  state(size + 1, 0);  // 0 free, 1 decided
    std::vector<SymmetricDangle::Arc> arcs;
    std::vector<SymmetricDangle>      result;
    auto m = [size](unsigned x) { return size + 1 - x; };

    std::function<void()> extend = [&]() {
      if (arcs.size() > a) {
        return;
      }
      unsigned x = 1;
      while (x <= size && state[x]) {
        ++x;
      }
      if (x > size) {
        if (arcs.size() == a) {
          result.emplace_back(n, arcs);
        }
        return;
      }
      unsigned mx = m(x);
      state[x] = state[mx] = 1;
      extend();  // both singletons
      arcs.emplace_back(std::min(x, mx), std::max(x, mx));
      extend();
      arcs.pop_back();
      for (unsigned y = x + 1; y <= size; ++y) {
        if (state[y]) {
          continue;
        }
        unsigned my = m(y);
        state[y] = state[my] = 1;
        arcs.emplace_back(x, y);
        arcs.emplace_back(std::min(mx, my), std::max(mx, my));
        extend();
        arcs.pop_back();
        arcs.pop_back();
        state[y] = state[my] = 0;
      }
      state[x] = state[mx] = 0;
    };
    extend();
    std::sort(result.begin(), result.end());
    return result;
  }

  InflationTriple psi(BrauerDiagram const& d) {
    if (!is_symmetric(d)) {
      throw Error(ErrorKind::asymmetric_input, "psi of a non-symmetric diagram");
    }
    unsigned const                    n = d.n();
    std::vector<SymmetricDangle::Arc> top, bottom;
    for (auto const& [x, y] : d.pairs()) {
      if (d.is_top(x) && d.is_top(y)) {
        top.emplace_back(d.position(x), d.position(y));
      } else if (!d.is_top(x) && !d.is_top(y)) {
        bottom.emplace_back(d.position(x), d.position(y));
      }
    }
    unsigned layer = static_cast<unsigned>(top.size());
    return InflationTriple{SymmetricDangle(n, std::move(top)),
                           SymmetricDangle(n, std::move(bottom)),
                           from_through_strands(d),
                           layer};
  }

  BrauerDiagram psi_inverse(InflationTriple const& t) {
    unsigned const n = t.top.n();
    if (n == 0 || t.bottom.n() != n || t.top.arc_count() != t.layer
        || t.bottom.arc_count() != t.layer || t.perm.m() + t.layer != n) {
      throw Error(ErrorKind::malformed_triple,
                  "triple does not describe a rank " + std::to_string(n)
                      + " layer " + std::to_string(t.layer) + " diagram");
    }
    unsigned const    row = 2 * n;
    std::vector<Node> partner(2 * row);
    for (auto const& [i, j] : t.top.arcs()) {
      partner[i - 1] = static_cast<Node>(j - 1);
      partner[j - 1] = static_cast<Node>(i - 1);
    }
    for (auto const& [i, j] : t.bottom.arcs()) {
      partner[row + i - 1] = static_cast<Node>(row + j - 1);
      partner[row + j - 1] = static_cast<Node>(row + i - 1);
    }
    auto top_free    = t.top.singletons();
    auto bottom_free = t.bottom.singletons();
    if (t.perm.m() > 0) {
      auto labels = label_permutation(t.perm);
      for (std::size_t l = 0; l < labels.size(); ++l) {
        Node x      = static_cast<Node>(top_free[l] - 1);
        Node y      = static_cast<Node>(row + bottom_free[labels[l] - 1] - 1);
        partner[x] = y;
        partner[y] = x;
      }
    }
    return BrauerDiagram::from_partners(n, std::move(partner));
  }

  GroupAlgebraScalar phi(SymmetricDangle const& f, SymmetricDangle const& g) {
    if (f.n() != g.n() || f.arc_count() != g.arc_count()) {
      throw Error(ErrorKind::shape_mismatch,
                  "phi needs dangles of equal rank and arc count");
    }
    unsigned const        size = 2 * f.n();
    std::vector<unsigned> f_mate(size + 1, 0), g_mate(size + 1, 0);
    for (auto const& [i, j] : f.arcs()) {
      f_mate[i] = j;
      f_mate[j] = i;
    }
    for (auto const& [i, j] : g.arcs()) {
      g_mate[i] = j;
      g_mate[j] = i;
    }
    std::vector<unsigned> f_label(size + 1, 0), g_label(size + 1, 0);
    unsigned              next = 0;
    for (unsigned p : f.singletons()) {
      f_label[p] = ++next;
    }
    next = 0;
    for (unsigned p : g.singletons()) {
      g_label[p] = ++next;
    }

    std::vector<bool>     visited(size + 1, false);
    std::vector<unsigned> labels(next, 0);
    // A path enters the middle row from above at an f-singleton; it
    // alternates g-arcs and f-arcs until it leaves downward through a
    // g-singleton (a through strand) or upward through another f-singleton,
    // which would create a new arc.
    for (unsigned start = 1; start <= size; ++start) {
      if (f_label[start] == 0) {
        continue;
      }
      unsigned p = start;
      while (true) {
        visited[p] = true;
        if (g_label[p] != 0) {
          labels[f_label[start] - 1] = g_label[p];
          break;
        }
        p          = g_mate[p];
        visited[p] = true;
        if (f_label[p] != 0) {
          return GroupAlgebraScalar::make_zero();
        }
        p = f_mate[p];
      }
    }
    unsigned loops = 0;
    for (unsigned p = 1; p <= size; ++p) {
      if (visited[p]) {
        continue;
      }
      ++loops;
      unsigned q = p;
      do {
        visited[q] = true;
        q          = g_mate[q];
        visited[q] = true;
        q          = f_mate[q];
      } while (q != p);
    }
    return GroupAlgebraScalar{false, loops, from_label_permutation(labels)};
  }

  std::optional<ScaledTriple> layer_product(ScaledTriple const& x,
                                            ScaledTriple const& y) {
    if (x.triple.top.n() != y.triple.top.n()) {
      throw Error(ErrorKind::rank_mismatch, "triples of different rank");
    }
    if (x.triple.layer != y.triple.layer) {
      throw Error(ErrorKind::shape_mismatch,
                  "layer product needs triples from one layer");
    }
    GroupAlgebraScalar form = phi(x.triple.bottom, y.triple.top);
    if (form.zero) {
      return std::nullopt;
    }
    SignedPermutation perm = group_compose(
        group_compose(x.triple.perm, form.element), y.triple.perm);
    return ScaledTriple{
        x.coeff * y.coeff
            * LaurentScalar::delta(static_cast<int>(form.delta_power)),
        InflationTriple{x.triple.top, y.triple.bottom, std::move(perm),
                        x.triple.layer}};
  }

  InflationProduct inflation_multiply(ScaledTriple const& x,
                                      ScaledTriple const& y) {
    if (x.triple.top.n() != y.triple.top.n()) {
      throw Error(ErrorKind::rank_mismatch, "triples of different rank");
    }
    if (x.triple.layer == y.triple.layer) {
      if (auto product = layer_product(x, y)) {
        return InflationProduct{std::move(*product), false};
      }
    }
    Composite c   = compose(psi_inverse(x.triple), psi_inverse(y.triple));
    unsigned  top = std::max(x.triple.layer, y.triple.layer);
    ScaledTriple result{
        x.coeff * y.coeff * LaurentScalar::delta(static_cast<int>(c.loops)),
        psi(c.diagram)};
    bool dropped = result.triple.layer > top;
    return InflationProduct{std::move(result), dropped};
  }

  StratificationReport check_stratification(unsigned n, FieldSpec const& spec) {
    StratificationReport report{n, true, true, true, {}};

    auto diagrams = enumerate_symmetric_diagrams(n);
    std::vector<std::size_t> per_layer(n + 1, 0);
    std::set<BrauerDiagram>  images;
    for (auto const& d : diagrams) {
      InflationTriple t = psi(d);
      ++per_layer[t.layer];
      if (psi_inverse(t) != d) {
        report.condition1 = false;
      }
    }
    std::size_t total = 0;
    for (unsigned a = 0; a <= n; ++a) {
      std::size_t   dangles = enumerate_dangles(n, a).size();
      unsigned long order   = group_order(n - a);
      report.layers.push_back(LayerInfo{a, dangles, order});
      std::size_t expected = dangles * dangles * order;
      total += expected;
      if (per_layer[a] != expected) {
        report.condition1 = false;
      }
    }
    if (total != diagrams.size()) {
      report.condition1 = false;
    }

    if (spec.delta_is_zero()) {
      report.condition2.reset();
      report.condition3 = false;
      return report;
    }

    auto vanishes = [&spec](AlgebraElement const& x) {
      for (auto const& [d, c] : x.terms()) {
        if (!specialize(c, spec).is_zero()) {
          return false;
        }
      }
      return true;
    };

    std::vector<AlgebraElement> f;
    for (unsigned k = 0; k <= n; ++k) {
      f.push_back(idempotent_f(k, n));
      SymmetricDangle u       = nested_dangle(k, n);
      BrauerDiagram   layered = psi_inverse(
          InflationTriple{u, u, SignedPermutation::identity(n - k), k});
      AlgebraElement expected(layered,
                              LaurentScalar::delta(-static_cast<int>(k)));
      if (!vanishes(f[k] - expected) || !vanishes(multiply(f[k], f[k]) - f[k])) {
        report.condition2 = false;
      }
    }
    for (unsigned a = 0; a <= n; ++a) {
      for (unsigned b = 0; b <= n; ++b) {
        if (!vanishes(multiply(f[a], f[b]) - f[std::max(a, b)])) {
          report.condition3 = false;
        }
      }
    }
    return report;
  }

}  // namespace typec
