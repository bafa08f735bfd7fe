#pragma once

#include <vector>

#include "typec/linalg.hpp"
#include "typec/scalars.hpp"

namespace typec {

  // Weakly decreasing positive parts.
  using Partition = std::vector<unsigned>;
  // rows[r][c] is the entry in row r, column c (entries 1..k).
  using Tableau   = std::vector<std::vector<unsigned>>;
  using IntMatrix = std::vector<std::vector<long>>;

  std::vector<Partition> partitions(unsigned k);
  // Standard tableaux ordered by the sequence (row of 1, row of 2, ...).
  std::vector<Tableau> standard_tableaux(Partition const& shape);

  // Specht module S^λ in the standard polytabloid basis, with integral
  // matrices: generators[i - 1] is the adjacent transposition (i, i + 1)
  // and gram is the restriction of the tabloid inner product.
  struct IntegralSpecht {
    Partition              shape;
    std::vector<Tableau>   basis;
    std::vector<IntMatrix> generators;
    IntMatrix              gram;
  };

  // Throws resource-limit for |λ| above max_group_rank().
  IntegralSpecht integral_specht(Partition const& shape);

  // S^λ over a field.
  struct SpechtModule {
    Partition           shape;
    std::size_t         dimension;
    std::vector<Matrix> generators;
    Matrix              gram;
  };

  SpechtModule specht_module(Partition const& shape, FieldSpec const& spec);

  Matrix to_matrix(IntMatrix const& m, FieldSpec const& spec);

}  // namespace typec
