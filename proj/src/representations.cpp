#include "typec/representations.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "typec/error.hpp"

namespace typec {

  ////////////////////////////////////////////////////////////////////////
  // Bipartitions
  ////////////////////////////////////////////////////////////////////////

  unsigned Bipartition::size() const {
    return std::accumulate(first.begin(), first.end(), 0u)
           + std::accumulate(second.begin(), second.end(), 0u);
  }

  std::string Bipartition::to_string() const {
    auto part = [](Partition const& p) {
      std::string out = "(";
      for (std::size_t i = 0; i < p.size(); ++i) {
        out += (i ? "," : "") + std::to_string(p[i]);
      }
      return out + ")";
    };
    return "(" + part(first) + "," + part(second) + ")";
  }

  void validate(Bipartition const& b) {
    for (auto const* p : {&b.first, &b.second}) {
      for (std::size_t i = 0; i < p->size(); ++i) {
        if ((*p)[i] == 0 || (i > 0 && (*p)[i] > (*p)[i - 1])) {
          throw Error(ErrorKind::invalid_argument,
                      "bipartition components must be weakly decreasing "
                      "positive integers");
        }
      }
    }
  }

  std::vector<Bipartition> bipartitions(unsigned m) {
    std::vector<Bipartition> result;
    for (unsigned k = 0; k <= m; ++k) {
      for (auto const& first : partitions(k)) {
        for (auto const& second : partitions(m - k)) {
          result.push_back(Bipartition{first, second});
        }
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generic module machinery
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // P = [basis | complement], invertible.
    Matrix extend_to_basis(Matrix const& basis) {
      return column_basis(
          hconcat(basis, Matrix::identity(basis.rows(), basis.spec())));
    }

    Matrix block(Matrix const& m, std::size_t r0, std::size_t c0,
                 std::size_t rows, std::size_t cols) {
      Matrix result(rows, cols, m.spec());
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          result(r, c) = m(r0 + r, c0 + c);
        }
      }
      return result;
    }
  }  // namespace

  std::vector<Matrix> hom_space(MatrixModule const& from,
                                MatrixModule const& to) {
    std::size_t const df = from.dimension, dt = to.dimension;
    if (from.generators.size() != to.generators.size()) {
      throw Error(ErrorKind::shape_mismatch,
                  "modules use different generating sets");
    }
    if (df == 0 || dt == 0) {
      return {};
    }
    // Unknown X (dt × df), entry (i, j) -> i * df + j.
    std::size_t const unknowns = dt * df;
    Matrix system(from.generators.size() * unknowns, unknowns, from.spec);
    std::size_t       row = 0;
    for (std::size_t g = 0; g < from.generators.size(); ++g) {
      Matrix const& a = to.generators[g];
      Matrix const& b = from.generators[g];
      for (std::size_t i = 0; i < dt; ++i) {
        for (std::size_t j = 0; j < df; ++j, ++row) {
          // (a X - X b)(i, j) = Σ_k a(i,k) X(k,j) - Σ_k X(i,k) b(k,j)
          for (std::size_t k = 0; k < dt; ++k) {
            if (!a(i, k).is_zero()) {
              system(row, k * df + j) += a(i, k);
            }
          }
          for (std::size_t k = 0; k < df; ++k) {
            if (!b(k, j).is_zero()) {
              system(row, i * df + k) -= b(k, j);
            }
          }
        }
      }
    }
    Matrix              kernel = nullspace(system);
    std::vector<Matrix> result;
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
      Matrix x(dt, df, from.spec);
      for (std::size_t i = 0; i < dt; ++i) {
        for (std::size_t j = 0; j < df; ++j) {
          x(i, j) = kernel(i * df + j, c);
        }
      }
      result.push_back(std::move(x));
    }
    return result;
  }

  MatrixModule quotient(MatrixModule const& module, Matrix const& basis) {
    std::size_t const k = basis.cols(), d = module.dimension;
    MatrixModule      result{module.spec, d - k, {}};
    Matrix const      p     = extend_to_basis(basis);
    Matrix const      p_inv = inverse(p);
    for (auto const& g : module.generators) {
      result.generators.push_back(block(p_inv * g * p, k, k, d - k, d - k));
    }
    return result;
  }

  MatrixModule submodule(MatrixModule const& module, Matrix const& basis) {
    std::size_t const k = basis.cols();
    MatrixModule      result{module.spec, k, {}};
    Matrix const      p     = extend_to_basis(basis);
    Matrix const      p_inv = inverse(p);
    for (auto const& g : module.generators) {
      result.generators.push_back(block(p_inv * g * p, 0, 0, k, k));
    }
    return result;
  }

  MatrixModule head(MatrixModule const& module, Matrix const& gram) {
    return quotient(module, nullspace(gram));
  }

  std::vector<unsigned> composition_multiplicities(
      MatrixModule                     module,
      std::vector<MatrixModule> const& simples) {
    std::vector<std::size_t> end_dims;
    for (auto const& s : simples) {
      end_dims.push_back(hom_space(s, s).size());
    }
    std::vector<unsigned> result(simples.size(), 0);
    while (module.dimension > 0) {
      Matrix socle(module.dimension, 0, module.spec);
      for (std::size_t i = 0; i < simples.size(); ++i) {
        auto homs = hom_space(simples[i], module);
        if (homs.size() % end_dims[i] != 0) {
          throw Error(ErrorKind::invalid_argument,
                      "socle multiplicity is not integral");
        }
        result[i] += static_cast<unsigned>(homs.size() / end_dims[i]);
        for (auto const& x : homs) {
          socle = hconcat(socle, x);
        }
      }
      socle = column_basis(socle);
      if (socle.cols() == 0) {
        throw Error(ErrorKind::invalid_argument,
                    "module has a socle factor outside the given simples");
      }
      module = quotient(module, socle);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // H_m cell modules
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::vector<unsigned>> subsets(unsigned m, unsigned k) {
      std::vector<std::vector<unsigned>> result;
      std::vector<unsigned>              current;
      std::function<void(unsigned)>      build = [&](unsigned next) {
        if (current.size() == k) {
          result.push_back(current);
          return;
        }
        for (unsigned x = next; x <= m; ++x) {
          current.push_back(x);
          build(x + 1);
          current.pop_back();
        }
      };
      build(1);
      return result;
    }

    void put_block(Matrix& target, std::size_t r0, std::size_t c0,
                   Matrix const& source) {
      for (std::size_t r = 0; r < source.rows(); ++r) {
        for (std::size_t c = 0; c < source.cols(); ++c) {
          target(r0 + r, c0 + c) = source(r, c);
        }
      }
    }
  }  // namespace

  GroupModule h_cell_module(Bipartition const& b, FieldSpec const& spec) {
    validate(b);
    unsigned const m = b.size();
    unsigned const k = std::accumulate(b.first.begin(), b.first.end(), 0u);
    if (m > max_group_rank()) {
      throw Error(ErrorKind::resource_limit,
                  "H_m module above rank " + std::to_string(max_group_rank()));
    }
    SpechtModule const s1 = specht_module(b.first, spec);
    SpechtModule const s2 = specht_module(b.second, spec);
    auto const         sets  = subsets(m, k);
    std::size_t const  inner = s1.dimension * s2.dimension;
    std::size_t const  dim   = sets.size() * inner;

    GroupModule result{b, m, spec.characteristic() == 2 && m >= 1,
                       MatrixModule{spec, dim, {}}, Matrix(dim, dim, spec)};
    Matrix const inner_gram = kronecker(s1.gram, s2.gram);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      put_block(result.gram, i * inner, i * inner, inner_gram);
    }
    if (m == 0) {
      return result;
    }

    auto const index_of = [&](std::vector<unsigned> const& set) {
      return static_cast<std::size_t>(
          std::lower_bound(sets.begin(), sets.end(), set) - sets.begin());
    };
    Matrix const id1 = Matrix::identity(s1.dimension, spec);
    Matrix const id2 = Matrix::identity(s2.dimension, spec);
    Matrix const id  = Matrix::identity(inner, spec);

    // sign change of 1: +1 if 1 carries the untwisted component
    Matrix t(dim, dim, spec);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      bool in_first = std::binary_search(sets[i].begin(), sets[i].end(), 1u);
      put_block(t, i * inner, i * inner,
                in_first ? id : FieldElement::from_integer(spec, -1) * id);
    }
    result.module.generators.push_back(std::move(t));

    for (unsigned s = 1; s < m; ++s) {
      Matrix g(dim, dim, spec);
      for (std::size_t i = 0; i < sets.size(); ++i) {
        auto const& set = sets[i];
        bool        has_s  = std::binary_search(set.begin(), set.end(), s);
        bool        has_s1 = std::binary_search(set.begin(), set.end(), s + 1);
        if (has_s && has_s1) {
          // s is the r-th element of the subset, s + 1 the (r+1)-th
          auto r = static_cast<std::size_t>(
              std::lower_bound(set.begin(), set.end(), s) - set.begin());
          put_block(g, i * inner, i * inner,
                    kronecker(s1.generators[r], id2));
        } else if (!has_s && !has_s1) {
          std::size_t r = (s - 1) - static_cast<std::size_t>(
                              std::lower_bound(set.begin(), set.end(), s)
                              - set.begin());
          put_block(g, i * inner, i * inner, kronecker(id1, s2.generators[r]));
        } else {
          std::vector<unsigned> image = set;
          for (auto& x : image) {
            if (x == s) {
              x = s + 1;
            } else if (x == s + 1) {
              x = s;
            }
          }
          std::sort(image.begin(), image.end());
          put_block(g, index_of(image) * inner, i * inner, id);
        }
      }
      result.module.generators.push_back(std::move(g));
    }
    return result;
  }

  Matrix GroupModule::action(SignedPermutation const& w) const {
    if (w.m() != m) {
      throw Error(ErrorKind::rank_mismatch, "group element of wrong rank");
    }
    Matrix result = Matrix::identity(module.dimension, module.spec);
    for (unsigned letter : generator_word(w)) {
      result = result * module.generators[letter];
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cell modules of B(C_n)
  ////////////////////////////////////////////////////////////////////////

  CellModule::CellModule(Bipartition const& b, unsigned a, unsigned n,
                         FieldSpec const& spec)
      : _n(n),
        _a(a),
        _spec(spec),
        _dangles(enumerate_dangles(n, a)),
        _anchor(nested_dangle(a, n)),
        _group(b.size() + a == n
                   ? h_cell_module(b, spec)
                   : throw Error(ErrorKind::label_mismatch,
                                 "bipartition " + b.to_string()
                                     + " is not a label of layer "
                                     + std::to_string(a) + " at rank "
                                     + std::to_string(n))) {}

  Matrix CellModule::action(BrauerDiagram const& d) const {
    if (d.n() != _n) {
      throw Error(ErrorKind::rank_mismatch, "diagram rank differs from module");
    }
    if (!is_symmetric(d)) {
      throw Error(ErrorKind::asymmetric_input, "action of a non-symmetric diagram");
    }
    std::size_t const inner = _group.dimension();
    Matrix            result(dimension(), dimension(), _spec);
    SignedPermutation const identity = SignedPermutation::identity(_n - _a);
    for (std::size_t j = 0; j < _dangles.size(); ++j) {
      BrauerDiagram basis = psi_inverse(
          InflationTriple{_dangles[j], _anchor, identity, _a});
      Composite product = compose(d, basis);
      if (arc_count(product.diagram) > _a) {
        continue;
      }
      InflationTriple t = psi(product.diagram);
      std::size_t     i = static_cast<std::size_t>(
          std::lower_bound(_dangles.begin(), _dangles.end(), t.top)
          - _dangles.begin());
      FieldElement scale = specialize(
          LaurentScalar::delta(static_cast<int>(product.loops)), _spec);
      put_block(result, i * inner, j * inner, scale * _group.action(t.perm));
    }
    return result;
  }

  Matrix CellModule::action(AlgebraElement const& x) const {
    Matrix result(dimension(), dimension(), _spec);
    for (auto const& [d, c] : x.terms()) {
      result += specialize(c, _spec) * action(d);
    }
    return result;
  }

  MatrixModule CellModule::as_matrix_module() const {
    MatrixModule result{_spec, dimension(), {}};
    for (auto kind : {GeneratorKind::R, GeneratorKind::E}) {
      for (unsigned i = 1; i <= _n; ++i) {
        result.generators.push_back(action(generator_diagram(kind, i, _n)));
      }
    }
    return result;
  }

  Matrix CellModule::gram() const {
    std::size_t const inner = _group.dimension();
    Matrix            result(dimension(), dimension(), _spec);
    for (std::size_t u = 0; u < _dangles.size(); ++u) {
      for (std::size_t v = 0; v < _dangles.size(); ++v) {
        GroupAlgebraScalar form = phi(_dangles[u], _dangles[v]);
        if (form.zero) {
          continue;
        }
        FieldElement scale = specialize(
            LaurentScalar::delta(static_cast<int>(form.delta_power)), _spec);
        put_block(result, u * inner, v * inner,
                  scale * (_group.gram * _group.action(form.element)));
      }
    }
    return result;
  }

  CellModule cell_module(Bipartition const& b, unsigned a, unsigned n,
                         FieldSpec const& spec) {
    if (a > n) {
      throw Error(ErrorKind::index_out_of_range, "layer exceeds rank");
    }
    return CellModule(b, a, n, spec);
  }

  GramResult gram_matrix(CellModule const& module) {
    Matrix      g = module.gram();
    std::size_t r = rank(g);
    return GramResult{g, r, determinant(g)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Quasi-heredity
  ////////////////////////////////////////////////////////////////////////

  QuasiHereditaryVerdict qh_verdict(unsigned n, FieldSpec const& spec) {
    unsigned const         p = spec.characteristic();
    QuasiHereditaryVerdict v{};
    v.delta_nonzero       = !spec.delta_is_zero();
    v.layer_forms_nonzero = true;
    for (unsigned a = 0; a <= n; ++a) {
      auto dangles = enumerate_dangles(n, a);
      bool nonzero = false;
      for (std::size_t i = 0; i < dangles.size() && !nonzero; ++i) {
        for (std::size_t j = 0; j < dangles.size() && !nonzero; ++j) {
          auto form = phi(dangles[i], dangles[j]);
          nonzero   = !form.zero
                    && !specialize(LaurentScalar::delta(
                                       static_cast<int>(form.delta_power)),
                                   spec)
                            .is_zero();
        }
      }
      if (!nonzero) {
        v.layer_forms_nonzero = false;
        v.reasons.push_back("the form on layer " + std::to_string(a)
                            + " vanishes identically");
      }
    }
    for (unsigned m = 0; m <= n; ++m) {
      // p divides 2^m m! iff p <= m or (p = 2 and m >= 1)
      if (p != 0 && m >= 1 && (p == 2 || p <= m)) {
        v.nonsemisimple_groups.push_back(m);
        v.reasons.push_back("characteristic " + std::to_string(p)
                            + " divides |H_" + std::to_string(m)
                            + "| = " + std::to_string(group_order(m)));
      }
    }
    if (!v.delta_nonzero) {
      v.reasons.push_back("delta is zero");
    }
    v.quasi_hereditary = v.delta_nonzero && v.layer_forms_nonzero
                         && v.nonsemisimple_groups.empty();
    v.closed_form = v.delta_nonzero && (p == 0 || p > n);
    v.divergent   = v.quasi_hereditary != v.closed_form;
    if (v.divergent) {
      v.reasons.push_back(
          "the closed form (delta != 0 and p > n) gives "
          + std::string(v.closed_form ? "true" : "false")
          + " but Maschke's criterion on the layer groups gives "
          + std::string(v.quasi_hereditary ? "true" : "false"));
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Decomposition matrices
  ////////////////////////////////////////////////////////////////////////

  unsigned max_decomposition_rank() {
    static unsigned const bound = [] {
      char const* value = std::getenv("TYPEC_MAX_DECOMP_RANK");
      return value && *value ? static_cast<unsigned>(std::strtoul(value, nullptr, 10))
                             : 2u;
    }();
    return bound;
  }

  bool cell_order(CellLabel const& x, CellLabel const& y) {
    if (x.layer != y.layer) {
      return x.layer > y.layer;
    }
    return x.label < y.label;
  }

  std::vector<CellSummary> cell_summaries(unsigned n, FieldSpec const& spec) {
    std::vector<CellSummary> result;
    for (unsigned a = n + 1; a-- > 0;) {
      for (auto const& b : bipartitions(n - a)) {
        CellModule  module(b, a, n, spec);
        std::size_t r = rank(module.gram());
        result.push_back(CellSummary{{a, b}, module.dimension(), r});
      }
    }
    return result;
  }

  namespace {
    // Finite fields only: decompose by spinning every projective point to
    // find minimal submodules. Independent of the cellular forms.
    std::uint64_t projective_points(std::uint64_t p, std::size_t d) {
      std::uint64_t count = 0, power = 1;
      for (std::size_t i = 0; i < d; ++i) {
        count += power;
        power *= p;
        if (count > 2'000'000) {
          throw Error(ErrorKind::resource_limit,
                      "brute-force spinning over too many vectors");
        }
      }
      return count;
    }

    // Echelon basis (columns) of the submodule generated by v.
    Matrix spin(MatrixModule const& module, Matrix const& v) {
      Matrix span = v;
      for (std::size_t next = 0; next < span.cols(); ++next) {
        Matrix x = span.columns(next, 1);
        for (auto const& g : module.generators) {
          Matrix candidate = hconcat(span, g * x);
          if (rank(candidate) > span.cols()) {
            span = std::move(candidate);
          }
        }
        if (span.cols() == module.dimension) {
          break;
        }
      }
      return span;
    }

    Matrix minimal_submodule(MatrixModule const& module) {
      std::uint64_t const p = module.spec.characteristic();
      std::size_t const   d = module.dimension;
      projective_points(p, d);
      Matrix best;
      // vectors whose first nonzero coordinate is 1
      for (std::size_t lead = 0; lead < d; ++lead) {
        std::size_t const tail = d - lead - 1;
        std::vector<std::uint64_t> digits(tail, 0);
        while (true) {
          Matrix v(d, 1, module.spec);
          v(lead, 0) = FieldElement::one(module.spec);
          for (std::size_t i = 0; i < tail; ++i) {
            v(lead + 1 + i, 0) =
                FieldElement::from_integer(module.spec, static_cast<long>(digits[i]));
          }
          Matrix s = spin(module, v);
          if (best.cols() == 0 || s.cols() < best.cols()) {
            best = std::move(s);
            if (best.cols() == 1) {
              return best;
            }
          }
          std::size_t i = 0;
          while (i < tail && ++digits[i] == p) {
            digits[i++] = 0;
          }
          if (i == tail) {
            break;
          }
        }
      }
      return best;
    }

    bool isomorphic_simples(MatrixModule const& x, MatrixModule const& y) {
      return x.dimension == y.dimension && !hom_space(x, y).empty();
    }

    // Multiplicities against `simples`; factors matching none are counted
    // in `unlabeled`.
    std::vector<unsigned> spin_multiplicities(
        MatrixModule module, std::vector<MatrixModule> const& simples,
        unsigned& unlabeled) {
      std::vector<unsigned> result(simples.size(), 0);
      unlabeled = 0;
      while (module.dimension > 0) {
        Matrix       basis  = minimal_submodule(module);
        MatrixModule factor = submodule(module, basis);
        bool         found  = false;
        for (std::size_t i = 0; i < simples.size() && !found; ++i) {
          if (isomorphic_simples(factor, simples[i])) {
            ++result[i];
            found = true;
          }
        }
        if (!found) {
          ++unlabeled;
        }
        module = quotient(module, basis);
      }
      return result;
    }

    std::vector<unsigned> multiplicities(MatrixModule const&              module,
                                         std::vector<MatrixModule> const& simples) {
      if (module.spec.characteristic() == 0) {
        return composition_multiplicities(module, simples);
      }
      unsigned unlabeled = 0;
      auto     result    = spin_multiplicities(module, simples, unlabeled);
      if (unlabeled != 0) {
        throw Error(ErrorKind::invalid_argument,
                    "composition factor outside the known simple modules");
      }
      return result;
    }
  }  // namespace

  GroupDecomposition group_decomposition(unsigned m, FieldSpec const& spec) {
    GroupDecomposition        result{m, bipartitions(m), {}, {}};
    std::vector<MatrixModule> cells, simples;
    for (auto const& b : result.cells) {
      GroupModule g = h_cell_module(b, spec);
      if (g.degenerate) {
        throw Error(ErrorKind::degenerate,
                    "H_m cell modules need 2 invertible");
      }
      if (rank(g.gram) > 0) {
        result.simples.push_back(b);
        simples.push_back(head(g.module, g.gram));
      }
      cells.push_back(std::move(g.module));
    }
    for (auto const& c : cells) {
      result.matrix.push_back(multiplicities(c, simples));
    }
    return result;
  }

  DecompositionResult decomposition_matrix(unsigned n, FieldSpec const& spec) {
    if (n > max_decomposition_rank()) {
      throw Error(ErrorKind::resource_limit,
                  "decomposition matrices are computed up to rank "
                      + std::to_string(max_decomposition_rank())
                      + " (raise TYPEC_MAX_DECOMP_RANK)");
    }
    if (spec.delta_is_zero()) {
      throw Error(ErrorKind::invalid_argument,
                  "decomposition matrices require delta != 0");
    }
    DecompositionResult       result{n, spec, {}, {}, {}, {}, {}, {}};
    std::vector<MatrixModule> cells, simples;
    for (unsigned a = n + 1; a-- > 0;) {
      unsigned const m = n - a;
      if (spec.characteristic() == 2 && m >= 1) {
        result.skipped_layers.push_back(a);
        continue;
      }
      result.layers.push_back(a);
      for (auto const& b : bipartitions(m)) {
        CellModule  module(b, a, n, spec);
        Matrix      g = module.gram();
        std::size_t r = rank(g);
        result.cells.push_back(CellSummary{{a, b}, module.dimension(), r});
        MatrixModule matrices = module.as_matrix_module();
        if (r > 0) {
          result.simples.push_back(CellLabel{a, b});
          simples.push_back(head(matrices, g));
        }
        cells.push_back(std::move(matrices));
      }
      result.layer_groups.push_back(group_decomposition(m, spec));
    }
    for (auto const& c : cells) {
      if (result.skipped_layers.empty()) {
        result.matrix.push_back(multiplicities(c, simples));
      } else {
        // simples of the skipped layers are unknown; count what matches
        unsigned unlabeled = 0;
        result.matrix.push_back(
            spin_multiplicities(c, simples, unlabeled));
      }
    }
    return result;
  }

}  // namespace typec
