#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "typec/error.hpp"
#include "typec/serialize.hpp"

using namespace typec;
using io::Json;

namespace {

  struct Options {
    unsigned                 n = 1;
    std::string              word;
    unsigned                 layer = 0;
    std::vector<std::string> arcs;
    std::string              bipartition;
    std::string              delta = "generic";
    unsigned                 characteristic = 0;
    std::string              format = "json";
    std::uint64_t            seed = 0;
    unsigned                 bound = 0;
  };

  FieldSpec field(Options const& o) {
    return io::parse_field(o.delta, o.characteristic);
  }

  Json with_field(FieldSpec const& spec, unsigned n) {
    return {{"n", n}, {"char", spec.characteristic()},
            {"delta", spec.delta_string()}};
  }

  Json relations(Options const& o) {
    return io::to_json(verify_relations(o.n));
  }

  Json mult(Options const& o) {
    return io::to_json(evaluate_word(o.n, o.word));
  }

  Json dims(Options const& o) {
    Json          layers = Json::array();
    unsigned long total  = 0;
    for (unsigned a = 0; a <= o.n; ++a) {
      std::size_t const   v = enumerate_dangles(o.n, a).size();
      unsigned long const h = group_order(o.n - a);
      layers.push_back({{"a", a}, {"dangles", v}, {"group_order", h},
                        {"dimension", v * v * h}});
      total += v * v * h;
    }
    return {{"n", o.n}, {"layers", layers}, {"total", total},
            {"enumerated", enumerate_symmetric_diagrams(o.n).size()}};
  }

  Json dangles(Options const& o) {
    Json list = Json::array();
    for (auto const& v : enumerate_dangles(o.n, o.layer)) {
      list.push_back(io::to_json(v));
    }
    return {{"n", o.n}, {"layer", o.layer}, {"count", list.size()},
            {"dangles", list}};
  }

  BrauerDiagram chosen_diagram(Options const& o, bool random) {
    if (random) {
      auto const         all = enumerate_symmetric_diagrams(o.n);
      std::mt19937_64    rng(o.seed);
      return all[rng() % all.size()];
    }
    AlgebraElement x = evaluate_word(o.n, o.word);
    if (x.terms().size() != 1) {
      throw Error(ErrorKind::invalid_argument,
                  "word does not evaluate to a single diagram");
    }
    return x.terms().begin()->first;
  }

  Json psi_command(Options const& o, bool random) {
    BrauerDiagram   d = chosen_diagram(o, random);
    InflationTriple t = psi(d);
    return {{"diagram", io::to_json(d)},
            {"triple", io::to_json(t)},
            {"round_trip", psi_inverse(t) == d}};
  }

  Json phi_command(Options const& o) {
    if (o.arcs.size() != 2) {
      throw Error(ErrorKind::invalid_argument,
                  "phi needs --arcs exactly twice");
    }
    SymmetricDangle f = io::parse_dangle(o.n, o.arcs[0]);
    SymmetricDangle g = io::parse_dangle(o.n, o.arcs[1]);
    return {{"f", io::to_json(f)},
            {"g", io::to_json(g)},
            {"phi", io::to_json(phi(f, g))}};
  }

  Json stratify(Options const& o) {
    return io::to_json(check_stratification(o.n, field(o)));
  }

  Json gram(Options const& o, bool single) {
    FieldSpec const spec   = field(o);
    Json            result = with_field(spec, o.n);
    if (single) {
      Bipartition b = io::parse_bipartition(o.bipartition);
      GramResult  g = gram_matrix(cell_module(b, o.layer, o.n, spec));
      result["layer"]       = o.layer;
      result["bipartition"] = io::to_json(b);
      result["dim"]         = g.gram.rows();
      result["gram_rank"]   = g.rank;
      result["determinant"] = g.determinant.to_string();
      result["gram"]        = io::to_json(g.gram);
      return result;
    }
    Json cells = Json::array();
    for (auto const& c : cell_summaries(o.n, spec)) {
      cells.push_back(io::to_json(c));
    }
    result["cells"] = cells;
    return result;
  }

  Json decomp(Options const& o) {
    return io::to_json(decomposition_matrix(o.n, field(o)));
  }

  Json enumerate(Options const& o) {
    unsigned const bound = o.bound ? o.bound : max_enumeration_rank();
    if (o.n > bound) {
      throw Error(ErrorKind::resource_limit,
                  "rank " + std::to_string(o.n) + " exceeds bound "
                      + std::to_string(bound));
    }
    Json list = Json::array();
    for (auto const& d : enumerate_symmetric_diagrams(o.n)) {
      list.push_back(io::to_json(d));
    }
    return {{"n", o.n}, {"count", list.size()}, {"diagrams", list}};
  }

  Json qh(Options const& o) {
    FieldSpec const spec   = field(o);
    Json            result = with_field(spec, o.n);
    result["verdict"]      = io::to_json(qh_verdict(o.n, spec));
    return result;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the type-C Brauer algebra"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "type-C rank")->required()->check(
        CLI::PositiveNumber);
    sub->add_option("--format", o.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
  };
  auto field_flags = [&](CLI::App* sub) {
    sub->add_option("--delta", o.delta, "generic, an integer or p/q");
    sub->add_option("--char", o.characteristic, "0 or a prime");
  };

  auto* relations_cmd = app.add_subcommand("relations", "check the defining relations");
  common(relations_cmd);
  auto* mult_cmd = app.add_subcommand("mult", "evaluate a word in the generators");
  common(mult_cmd);
  mult_cmd->add_option("--word", o.word, "tokens r<i>, e<i>, f<k>, 1")->required();
  auto* dims_cmd = app.add_subcommand("dims", "layer dimensions");
  common(dims_cmd);
  auto* dangles_cmd = app.add_subcommand("dangles", "list symmetric dangles");
  common(dangles_cmd);
  dangles_cmd->add_option("--layer", o.layer, "number of arcs")->required();
  auto* psi_cmd = app.add_subcommand("psi", "inflation triple of a diagram");
  common(psi_cmd);
  auto* psi_word = psi_cmd->add_option("--word", o.word, "word giving the diagram");
  auto* psi_seed = psi_cmd->add_option("--seed", o.seed, "pick a random diagram");
  psi_word->excludes(psi_seed);
  auto* phi_cmd = app.add_subcommand("phi", "bilinear form on two dangles");
  common(phi_cmd);
  phi_cmd->add_option("--arcs", o.arcs, "dangle as i-j,k-l; given twice")
      ->required()
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  auto* stratify_cmd = app.add_subcommand("stratify", "check the stratification");
  common(stratify_cmd);
  field_flags(stratify_cmd);
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrices of cell modules");
  common(gram_cmd);
  field_flags(gram_cmd);
  auto* gram_layer = gram_cmd->add_option("--layer", o.layer, "number of arcs");
  auto* gram_bip   = gram_cmd->add_option("--bipartition", o.bipartition,
                                          "label such as 2,1|1");
  gram_layer->needs(gram_bip);
  gram_bip->needs(gram_layer);
  auto* decomp_cmd = app.add_subcommand("decomp", "decomposition matrix");
  common(decomp_cmd);
  field_flags(decomp_cmd);
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list symmetric diagrams");
  common(enumerate_cmd);
  enumerate_cmd->add_option("--bound", o.bound, "largest rank to enumerate");
  auto* qh_cmd = app.add_subcommand("qh", "quasi-hereditary verdict");
  common(qh_cmd);
  field_flags(qh_cmd);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Json result;
    if (relations_cmd->parsed()) {
      result = relations(o);
    } else if (mult_cmd->parsed()) {
      result = mult(o);
    } else if (dims_cmd->parsed()) {
      result = dims(o);
    } else if (dangles_cmd->parsed()) {
      result = dangles(o);
    } else if (psi_cmd->parsed()) {
      if (psi_word->count() == 0 && psi_seed->count() == 0) {
        throw Error(ErrorKind::invalid_argument, "psi needs --word or --seed");
      }
      result = psi_command(o, psi_seed->count() > 0);
    } else if (phi_cmd->parsed()) {
      result = phi_command(o);
    } else if (stratify_cmd->parsed()) {
      result = stratify(o);
    } else if (gram_cmd->parsed()) {
      result = gram(o, gram_bip->count() > 0);
    } else if (decomp_cmd->parsed()) {
      result = decomp(o);
    } else if (enumerate_cmd->parsed()) {
      result = enumerate(o);
    } else if (qh_cmd->parsed()) {
      result = qh(o);
    }
    std::cout << (o.format == "table" ? io::render_table(result)
                                      : io::dump(result));
    return 0;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::resource_limit ? 1 : 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
