#pragma once

#include <string>

#include <json.hpp>

#include "typec/representations.hpp"

// JSON encodings shared by the command-line tool and the tests. Rationals
// are written as decimal strings, so documents never contain floats.
namespace typec::io {

  using Json = nlohmann::ordered_json;

  Json to_json(Rational const& q);
  Json to_json(LaurentScalar const& a);
  Json to_json(FieldElement const& x);
  Json to_json(FieldSpec const& spec);
  Json to_json(BrauerDiagram const& d);
  Json to_json(AlgebraElement const& x);
  Json to_json(RelationReport const& report);
  Json to_json(SignedPermutation const& w);
  Json to_json(SymmetricDangle const& v);
  Json to_json(InflationTriple const& t);
  Json to_json(GroupAlgebraScalar const& s);
  Json to_json(StratificationReport const& report);
  Json to_json(QuasiHereditaryVerdict const& verdict);
  Json to_json(Matrix const& m);
  Json to_json(Bipartition const& b);
  Json to_json(CellSummary const& c);
  Json to_json(GroupDecomposition const& g);
  Json to_json(DecompositionResult const& result);

  BrauerDiagram diagram_from_json(Json const& j);

  // "1-4,2-3" -> arcs {1,4}, {2,3}; the empty string is the empty dangle.
  SymmetricDangle parse_dangle(unsigned n, std::string const& text);
  // "2,1|1" -> ((2,1),(1)); either side may be empty, e.g. "|1,1".
  Bipartition parse_bipartition(std::string const& text);
  // delta is "generic", an integer or p/q; characteristic 0 or a prime.
  FieldSpec parse_field(std::string const& delta, unsigned characteristic);

  // Pretty JSON with a trailing newline.
  std::string dump(Json const& j);
  // Plain-text rendering of a document, for --format table.
  std::string render_table(Json const& j);

}  // namespace typec::io
