#include "typec/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "typec/error.hpp"

namespace typec::io {

  namespace {
    // JSON integer when it fits in 64 bits, decimal string otherwise
    Json integer(mpz_class const& z) {
      if (z.fits_slong_p()) {
        return z.get_si();
      }
      return z.get_str();
    }
  }  // namespace

  Json to_json(Rational const& q) {
    return q.get_str();
  }

  Json to_json(LaurentScalar const& a) {
    Json terms = Json::array();
    for (auto const& [exp, coeff] : a.terms()) {
      terms.push_back({{"exp", exp},
                       {"num", integer(coeff.get_num())},
                       {"den", integer(coeff.get_den())}});
    }
    return terms;
  }

  Json to_json(FieldElement const& x) {
    return x.to_string();
  }

  Json to_json(FieldSpec const& spec) {
    return {{"char", spec.characteristic()}, {"delta", spec.delta_string()}};
  }

  Json to_json(BrauerDiagram const& d) {
    Json pairs = Json::array();
    for (auto const& [x, y] : d.pairs()) {
      pairs.push_back({d.node_name(x), d.node_name(y)});
    }
    return {{"n", d.n()}, {"pairs", pairs}};
  }

  Json to_json(AlgebraElement const& x) {
    Json terms = Json::array();
    for (auto const& [d, c] : x.terms()) {
      terms.push_back({{"coeff", to_json(c)}, {"diagram", to_json(d)}});
    }
    return {{"n", x.n()}, {"terms", terms}};
  }

  Json to_json(RelationReport const& report) {
    Json entries = Json::array();
    for (auto const& e : report.entries) {
      entries.push_back({{"relation", e.relation},
                         {"indices", e.indices},
                         {"holds", e.holds}});
    }
    return entries;
  }

  Json to_json(SignedPermutation const& w) {
    return {{"m", w.m()}, {"images", w.images()}};
  }

  Json to_json(SymmetricDangle const& v) {
    Json arcs = Json::array();
    for (auto const& [x, y] : v.arcs()) {
      arcs.push_back({x, y});
    }
    return {{"n", v.n()}, {"arcs", arcs}};
  }

  Json to_json(InflationTriple const& t) {
    return {{"layer", t.layer},
            {"top", to_json(t.top)},
            {"bottom", to_json(t.bottom)},
            {"perm", to_json(t.perm)}};
  }

  Json to_json(GroupAlgebraScalar const& s) {
    if (s.zero) {
      return {{"zero", true}};
    }
    return {{"zero", false},
            {"delta_power", s.delta_power},
            {"element", to_json(s.element)}};
  }

  Json to_json(StratificationReport const& report) {
    Json layers = Json::array();
    for (auto const& l : report.layers) {
      layers.push_back(
          {{"a", l.a}, {"dangles", l.dangles}, {"group_order", l.group_order}});
    }
    Json c2 = report.condition2 ? Json(*report.condition2) : Json("unavailable");
    return {{"condition1", report.condition1},
            {"condition2", c2},
            {"condition3", report.condition3},
            {"layers", layers}};
  }

  Json to_json(QuasiHereditaryVerdict const& v) {
    return {{"quasi_hereditary", v.quasi_hereditary},
            {"closed_form", v.closed_form},
            {"divergent", v.divergent},
            {"delta_nonzero", v.delta_nonzero},
            {"layer_forms_nonzero", v.layer_forms_nonzero},
            {"nonsemisimple_groups", v.nonsemisimple_groups},
            {"reasons", v.reasons}};
  }

  Json to_json(Matrix const& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        row.push_back(m(r, c).to_string());
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  Json to_json(Bipartition const& b) {
    return Json::array({b.first, b.second});
  }

  Json to_json(CellSummary const& c) {
    return {{"layer", c.cell.layer},
            {"bipartition", to_json(c.cell.label)},
            {"dim", c.dimension},
            {"gram_rank", c.gram_rank}};
  }

  Json to_json(GroupDecomposition const& g) {
    Json cells = Json::array(), simples = Json::array();
    for (auto const& b : g.cells) {
      cells.push_back(to_json(b));
    }
    for (auto const& b : g.simples) {
      simples.push_back(to_json(b));
    }
    return {{"m", g.m}, {"cells", cells}, {"simples", simples},
            {"decomposition", g.matrix}};
  }

  Json to_json(DecompositionResult const& result) {
    Json cells = Json::array(), simples = Json::array(), groups = Json::array();
    for (auto const& c : result.cells) {
      cells.push_back(to_json(c));
    }
    for (auto const& s : result.simples) {
      simples.push_back({{"layer", s.layer}, {"bipartition", to_json(s.label)}});
    }
    for (std::size_t i = 0; i < result.layer_groups.size(); ++i) {
      Json g     = to_json(result.layer_groups[i]);
      g["layer"] = result.layers[i];
      groups.push_back(std::move(g));
    }
    return {{"n", result.n},
            {"char", result.spec.characteristic()},
            {"delta", result.spec.delta_string()},
            {"cells", cells},
            {"simples", simples},
            {"decomposition", result.matrix},
            {"layer_groups", groups},
            {"skipped_layers", result.skipped_layers}};
  }

  BrauerDiagram diagram_from_json(Json const& j) {
    try {
      unsigned const n = j.at("n").get<unsigned>();
      auto node = [n](std::string const& name) -> BrauerDiagram::Node {
        if (name.size() < 2 || (name[0] != 'T' && name[0] != 'B')) {
          throw Error(ErrorKind::invalid_argument, "bad node name " + name);
        }
        unsigned long position = std::stoul(name.substr(1));
        if (position < 1 || position > 2 * n) {
          throw Error(ErrorKind::index_out_of_range, "node " + name);
        }
        return static_cast<BrauerDiagram::Node>(
            name[0] == 'T' ? position - 1 : 2 * n + position - 1);
      };
      std::vector<BrauerDiagram::Pair> pairs;
      for (auto const& p : j.at("pairs")) {
        pairs.emplace_back(node(p.at(0).get<std::string>()),
                           node(p.at(1).get<std::string>()));
      }
      return BrauerDiagram(n, pairs);
    } catch (nlohmann::json::exception const& e) {
      throw Error(ErrorKind::invalid_argument,
                  std::string("malformed diagram document: ") + e.what());
    }
  }

  namespace {
    unsigned parse_unsigned(std::string const& text) {
      if (text.empty()
          || !std::all_of(text.begin(), text.end(),
                          [](unsigned char c) { return std::isdigit(c); })) {
        throw Error(ErrorKind::invalid_argument,
                    "expected a positive integer, got '" + text + "'");
      }
      return static_cast<unsigned>(std::stoul(text));
    }

    std::vector<std::string> split(std::string const& text, char sep) {
      std::vector<std::string> parts;
      std::string              current;
      std::istringstream       in(text);
      while (std::getline(in, current, sep)) {
        parts.push_back(current);
      }
      if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
      }
      return parts;
    }

    Partition parse_partition(std::string const& text) {
      Partition p;
      if (text.empty()) {
        return p;
      }
      for (auto const& part : split(text, ',')) {
        p.push_back(parse_unsigned(part));
      }
      return p;
    }
  }  // namespace

  SymmetricDangle parse_dangle(unsigned n, std::string const& text) {
    std::vector<SymmetricDangle::Arc> arcs;
    if (!text.empty()) {
      for (auto const& arc : split(text, ',')) {
        auto ends = split(arc, '-');
        if (ends.size() != 2) {
          throw Error(ErrorKind::invalid_argument,
                      "arc '" + arc + "' is not of the form i-j");
        }
        arcs.emplace_back(parse_unsigned(ends[0]), parse_unsigned(ends[1]));
      }
    }
    return SymmetricDangle(n, std::move(arcs));
  }

  Bipartition parse_bipartition(std::string const& text) {
    auto sides = split(text, '|');
    if (sides.size() != 2) {
      throw Error(ErrorKind::invalid_argument,
                  "bipartition '" + text + "' needs exactly one '|'");
    }
    Bipartition b{parse_partition(sides[0]), parse_partition(sides[1])};
    validate(b);
    return b;
  }

  FieldSpec parse_field(std::string const& delta, unsigned characteristic) {
    if (delta == "generic") {
      if (characteristic != 0) {
        throw Error(ErrorKind::invalid_argument,
                    "generic delta is only available in characteristic 0");
      }
      return FieldSpec::generic();
    }
    Rational q = parse_rational(delta);
    return characteristic == 0 ? FieldSpec::rational(q)
                               : FieldSpec::modular(characteristic, q);
  }

  std::string dump(Json const& j) {
    return j.dump(2) + "\n";
  }

  namespace {
    bool is_scalar(Json const& j) {
      return !j.is_structured()
             || (j.is_array()
                 && std::all_of(j.begin(), j.end(),
                                [](Json const& x) { return !x.is_structured(); }));
    }

    std::string scalar_text(Json const& j) {
      if (j.is_string()) {
        return j.get<std::string>();
      }
      return j.dump();
    }

    // Array of objects whose values are all scalars: one aligned row each.
    bool is_record_list(Json const& j) {
      if (!j.is_array() || j.empty()) {
        return false;
      }
      for (auto const& x : j) {
        if (!x.is_object() || x.size() != j.front().size()) {
          return false;
        }
        for (auto const& [key, value] : x.items()) {
          if (!j.front().contains(key) || !is_scalar(value)) {
            return false;
          }
        }
      }
      return true;
    }

    void render(Json const& j, std::string const& indent, std::ostream& out) {
      if (is_record_list(j)) {
        std::vector<std::string>              keys;
        std::vector<std::vector<std::string>> cells;
        for (auto const& [key, value] : j.front().items()) {
          keys.push_back(key);
        }
        std::vector<std::size_t> width;
        for (auto const& k : keys) {
          width.push_back(k.size());
        }
        for (auto const& row : j) {
          std::vector<std::string> line;
          for (std::size_t c = 0; c < keys.size(); ++c) {
            line.push_back(scalar_text(row.at(keys[c])));
            width[c] = std::max(width[c], line.back().size());
          }
          cells.push_back(std::move(line));
        }
        auto emit = [&](std::vector<std::string> const& line) {
          out << indent;
          for (std::size_t c = 0; c < line.size(); ++c) {
            out << line[c];
            if (c + 1 < line.size()) {
              out << std::string(width[c] - line[c].size() + 2, ' ');
            }
          }
          out << "\n";
        };
        emit(keys);
        for (auto const& line : cells) {
          emit(line);
        }
        return;
      }
      if (j.is_object()) {
        for (auto const& [key, value] : j.items()) {
          if (is_scalar(value)) {
            out << indent << key << ": " << scalar_text(value) << "\n";
          } else {
            out << indent << key << ":\n";
            render(value, indent + "  ", out);
          }
        }
        return;
      }
      if (j.is_array()) {
        bool matrix = std::all_of(j.begin(), j.end(), is_scalar);
        for (auto const& x : j) {
          if (matrix) {
            out << indent << scalar_text(x) << "\n";
          } else {
            out << indent << "-\n";
            render(x, indent + "  ", out);
          }
        }
        return;
      }
      out << indent << scalar_text(j) << "\n";
    }
  }  // namespace

  std::string render_table(Json const& j) {
    std::ostringstream out;
    render(j, "", out);
    return out.str();
  }

}  // namespace typec::io
