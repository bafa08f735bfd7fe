#include "typec/specht.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "typec/error.hpp"

namespace typec {

  std::vector<Partition> partitions(unsigned k) {
    std::vector<Partition>                    result;
    Partition                                 current;
    std::function<void(unsigned, unsigned)> build = [&](unsigned rest,
                                                        unsigned largest) {
      if (rest == 0) {
        result.push_back(current);
        return;
      }
      for (unsigned part = std::min(rest, largest); part >= 1; --part) {
        current.push_back(part);
        build(rest - part, part);
        current.pop_back();
      }
    };
    build(k, k);
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<Tableau> standard_tableaux(Partition const& shape) {
    unsigned const k = std::accumulate(shape.begin(), shape.end(), 0u);
    std::vector<Tableau> result;
    Tableau              t(shape.size());
    // Place 1..k one at a time at the end of some row, keeping the shape of
    // the filled part a partition.
    std::function<void(unsigned)> place = [&](unsigned entry) {
      if (entry > k) {
        result.push_back(t);
        return;
      }
      for (std::size_t r = 0; r < shape.size(); ++r) {
        if (t[r].size() < shape[r] && (r == 0 || t[r - 1].size() > t[r].size())) {
          t[r].push_back(entry);
          place(entry + 1);
          t[r].pop_back();
        }
      }
    };
    place(1);
    return result;
  }

  namespace {
    using Tabloid     = std::vector<unsigned>;  // row of each entry, 0-based
    using Polytabloid = std::map<Tabloid, long>;

    unsigned size_of(Partition const& shape) {
      return std::accumulate(shape.begin(), shape.end(), 0u);
    }

    Polytabloid polytabloid(Tableau const& t, unsigned k) {
      // columns of t
      std::vector<std::vector<unsigned>> columns;
      for (std::size_t r = 0; r < t.size(); ++r) {
        for (std::size_t c = 0; c < t[r].size(); ++c) {
          if (columns.size() <= c) {
            columns.emplace_back();
          }
          columns[c].push_back(t[r][c]);
        }
      }
      Polytabloid result;
      Tabloid     rows(k + 1, 0);
      // For each column choose a permutation of its entries; sign tracked by
      // counting inversions.
      std::function<void(std::size_t, long)> choose = [&](std::size_t col,
                                                          long        sign) {
        if (col == columns.size()) {
          result[Tabloid(rows.begin() + 1, rows.end())] += sign;
          return;
        }
        std::vector<unsigned> order(columns[col].size());
        std::iota(order.begin(), order.end(), 0u);
        do {
          long s = sign;
          for (std::size_t i = 0; i < order.size(); ++i) {
            for (std::size_t j = i + 1; j < order.size(); ++j) {
              if (order[i] > order[j]) {
                s = -s;
              }
            }
          }
          // entry columns[col][order[r]] is moved to row r
          for (std::size_t r = 0; r < order.size(); ++r) {
            rows[columns[col][order[r]]] = static_cast<unsigned>(r);
          }
          choose(col + 1, s);
        } while (std::next_permutation(order.begin(), order.end()));
      };
      choose(0, 1);
      for (auto it = result.begin(); it != result.end();) {
        it = it->second == 0 ? result.erase(it) : std::next(it);
      }
      return result;
    }

    Tableau relabel(Tableau t, std::vector<unsigned> const& perm) {
      for (auto& row : t) {
        for (auto& x : row) {
          x = perm[x];
        }
      }
      return t;
    }
  }  // namespace

  IntegralSpecht integral_specht(Partition const& shape) {
    unsigned const k = size_of(shape);
    if (k > max_group_rank()) {
      throw Error(ErrorKind::resource_limit,
                  "Specht module above size " + std::to_string(max_group_rank()));
    }
    IntegralSpecht result{shape, standard_tableaux(shape), {}, {}};
    std::size_t const       dim = result.basis.size();

    std::vector<Polytabloid> vectors;
    std::map<Tabloid, std::size_t> index;
    for (auto const& t : result.basis) {
      vectors.push_back(polytabloid(t, k));
      for (auto const& [tabloid, c] : vectors.back()) {
        index.try_emplace(tabloid, index.size());
      }
    }

    result.gram.assign(dim, std::vector<long>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        long sum = 0;
        for (auto const& [tabloid, c] : vectors[i]) {
          auto it = vectors[j].find(tabloid);
          if (it != vectors[j].end()) {
            sum += c * it->second;
          }
        }
        result.gram[i][j] = sum;
      }
    }

    // Coordinates of σ·e_T in the standard basis, solved over Q. The module
    // is spanned by the standard polytabloids, so every tabloid occurring in
    // σ·e_T already occurs in some e_T.
    FieldSpec const q = FieldSpec::rational(Rational(0));
    auto solve = [&](Polytabloid const& target) {
      Matrix system(index.size(), dim + 1, q);
      for (std::size_t j = 0; j < dim; ++j) {
        for (auto const& [tabloid, c] : vectors[j]) {
          system(index.at(tabloid), j) = FieldElement::from_integer(q, c);
        }
      }
      for (auto const& [tabloid, c] : target) {
        auto it = index.find(tabloid);
        if (it == index.end()) {
          throw Error(ErrorKind::invalid_argument,
                      "polytabloid outside the Specht span");
        }
        system(it->second, dim) = FieldElement::from_integer(q, c);
      }
      auto pivots = row_reduce(system);
      std::vector<long> coords(dim, 0);
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == dim) {
          throw Error(ErrorKind::invalid_argument, "inconsistent straightening");
        }
        Rational value = std::get<Rational>(system(r, dim).value());
        if (value.get_den() != 1) {
          throw Error(ErrorKind::invalid_argument, "non-integral straightening");
        }
        coords[pivots[r]] = value.get_num().get_si();
      }
      return coords;
    };

    for (unsigned i = 1; i < k; ++i) {
      std::vector<unsigned> perm(k + 1);
      std::iota(perm.begin(), perm.end(), 0u);
      std::swap(perm[i], perm[i + 1]);
      IntMatrix g(dim, std::vector<long>(dim, 0));
      for (std::size_t j = 0; j < dim; ++j) {
        auto coords = solve(polytabloid(relabel(result.basis[j], perm), k));
        for (std::size_t r = 0; r < dim; ++r) {
          g[r][j] = coords[r];
        }
      }
      result.generators.push_back(std::move(g));
    }
    return result;
  }

  Matrix to_matrix(IntMatrix const& m, FieldSpec const& spec) {
    std::size_t const rows = m.size();
    std::size_t const cols = rows == 0 ? 0 : m[0].size();
    Matrix            result(rows, cols, spec);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (m[r][c] != 0) {
          result(r, c) = FieldElement::from_integer(spec, m[r][c]);
        }
      }
    }
    return result;
  }

  SpechtModule specht_module(Partition const& shape, FieldSpec const& spec) {
    IntegralSpecht integral = integral_specht(shape);
    SpechtModule   result{shape, integral.basis.size(), {}, to_matrix(integral.gram, spec)};
    for (auto const& g : integral.generators) {
      result.generators.push_back(to_matrix(g, spec));
    }
    return result;
  }

}  // namespace typec
