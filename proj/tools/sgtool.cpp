// Copyright 2026 The sgd Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sgtool: command-line front end for the signed distance library.
//
// Exit codes: 0 success, 1 domain or input error, 2 usage error,
// 3 a distance formula disagreed with direct computation (a bug).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgd/io.hpp"
#include "sgd/sgd.hpp"

namespace {

using sgd::Json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormulaMismatch = 3;

struct FormulaMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

sgd::DistanceKind parse_which(const std::string& which) {
  return which == "min" ? sgd::DistanceKind::Min : sgd::DistanceKind::Max;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string pair_list_text(const std::vector<std::pair<sgd::Vertex, sgd::Vertex>>& pairs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out << ' ';
    out << '(' << pairs[i].first << ',' << pairs[i].second << ')';
  }
  return out.str();
}

void write_or_print(const std::string& out_path, const std::string& text, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot write " + out_path);
  file << text;
}

// --------------------------------------------------------------------------

void cmd_info(const std::string& file, const std::string& format, std::ostream& out) {
  const auto g = sgd::read_graph_file(file);
  const auto pred = sgd::structural_predicates(g);
  std::vector<int> net;
  for (sgd::Vertex v = 0; v < g.order(); ++v) net.push_back(sgd::net_degree(g, v));
  const bool balanced = sgd::is_balanced(g);

  if (format == "text") {
    out << "order: " << g.order() << '\n'
        << "size: " << g.size() << '\n'
        << "negative_edges: " << g.negative_edge_count() << '\n'
        << "connected: " << std::boolalpha << pred.is_connected << '\n'
        << "two_connected: " << pred.is_two_connected << '\n'
        << "geodetic: " << pred.is_geodetic << '\n'
        << "odd_cycle: " << pred.has_odd_cycle << '\n'
        << "balanced: " << balanced << '\n'
        << "net_regular: " << sgd::is_net_regular(g) << '\n'
        << "net_degrees:";
    for (int d : net) out << ' ' << d;
    out << '\n';
    return;
  }
  emit_json(out, Json{{"order", g.order()},
                      {"size", g.size()},
                      {"negative_edges", g.negative_edge_count()},
                      {"connected", pred.is_connected},
                      {"two_connected", pred.is_two_connected},
                      {"geodetic", pred.is_geodetic},
                      {"odd_cycle", pred.has_odd_cycle},
                      {"balanced", balanced},
                      {"net_regular", sgd::is_net_regular(g)},
                      {"net_degrees", net}});
}

void cmd_dist(const std::string& file, const std::string& which, const std::string& format,
              std::ostream& out) {
  const auto d = sgd::distance_matrix(sgd::read_graph_file(file), parse_which(which));
  if (format == "csv") {
    out << sgd::matrix_to_csv(d);
  } else {
    emit_json(out, sgd::matrix_to_json(d));
  }
}

void cmd_compat(const std::string& file, const std::string& format, std::ostream& out) {
  const auto pairs = sgd::incompatible_pairs(sgd::read_graph_file(file));
  if (format == "text") {
    out << (pairs.empty() ? std::string("compatible") : "incompatible: " + pair_list_text(pairs)) << '\n';
    return;
  }
  Json list = Json::array();
  for (const auto& [u, v] : pairs) list.push_back(Json::array({u, v}));
  emit_json(out, Json{{"compatible", pairs.empty()}, {"incompatible_pairs", std::move(list)}});
}

void cmd_witness(const std::string& file, const std::string& format, std::ostream& out) {
  const auto g = sgd::read_graph_file(file);
  const auto w = sgd::least_incompatible_witness(g);
  if (format == "text") {
    if (!w) {
      out << "compatible\n";
      return;
    }
    auto seq = [](const std::vector<sgd::Vertex>& vs) {
      std::ostringstream s;
      for (std::size_t i = 0; i < vs.size(); ++i) s << (i ? " " : "") << vs[i];
      return s.str();
    };
    out << "pair: (" << w->u << ',' << w->v << ")\n"
        << "distance: " << w->distance() << '\n'
        << "positive path: " << seq(w->path_pos) << '\n'
        << "negative path: " << seq(w->path_neg) << '\n'
        << "negative cycle: " << seq(w->cycle) << '\n';
    return;
  }
  if (!w) {
    emit_json(out, Json{{"compatible", true}});
  } else {
    Json j = sgd::witness_to_json(*w);
    j["compatible"] = false;
    emit_json(out, j);
  }
}

void cmd_product(const std::string& kind, const std::string& f1, const std::string& f2,
                 const std::string& out_path, std::ostream& out) {
  const auto g1 = sgd::read_graph_file(f1);
  const auto g2 = sgd::read_graph_file(f2);
  sgd::SignedGraph product = [&] {
    if (kind == "cartesian") return sgd::cartesian(g1, g2);
    if (kind == "lex") return sgd::lexicographic(g1, g2);
    if (!sgd::tensor_is_connected(g1, g2)) {
      throw sgd::DomainError("tensor product disconnected: neither factor has an odd cycle");
    }
    return sgd::tensor(g1, g2);
  }();
  write_or_print(out_path, sgd::serialize_edge_list(product), out);
}

void cmd_dist_formula(const std::string& kind, const std::string& f1, const std::string& f2,
                      const std::string& format, std::ostream& out) {
  const auto g1 = sgd::read_graph_file(f1);
  const auto g2 = sgd::read_graph_file(f2);
  const bool cart = kind == "cartesian";
  const auto formula = cart ? sgd::cartesian_distance_formula(g1, g2) : sgd::lexicographic_distance_formula(g1, g2);
  const auto direct = sgd::distance_matrices(cart ? sgd::cartesian(g1, g2) : sgd::lexicographic(g1, g2));
  const bool eq_max = formula == direct.max;
  const bool eq_min = formula == direct.min;

  if (format == "csv") {
    out << sgd::matrix_to_csv(formula);
  } else {
    emit_json(out, Json{{"kind", kind},
                        {"formula", sgd::matrix_to_json(formula)},
                        {"equals_direct_max", eq_max},
                        {"equals_direct_min", eq_min}});
  }
  if (!eq_max || !eq_min) throw FormulaMismatch("distance formula disagrees with direct computation");
}

void cmd_charpoly(const std::string& file, const std::string& which, const std::string& format,
                  std::ostream& out) {
  const auto p = sgd::char_poly(sgd::distance_matrix(sgd::read_graph_file(file), parse_which(which)));
  if (format == "text") {
    out << p.to_string() << '\n';
    return;
  }
  emit_json(out, Json{{"coefficients", sgd::polynomial_to_json(p)}, {"text", p.to_string()}});
}

void cmd_spectrum(const std::string& file, const std::string& which, double tol, const std::string& format,
                  std::ostream& out) {
  const auto s = sgd::eig_symmetric(sgd::distance_matrix(sgd::read_graph_file(file), parse_which(which)), tol);
  if (format == "text") {
    out << s.to_string() << '\n';
    return;
  }
  emit_json(out, sgd::spectrum_to_json(s));
}

sgd::Sign single_sign(const std::string& token) {
  const auto s = sgd::parse_sign(token);
  if (!s) throw std::invalid_argument("expected a sign (+ or -), got '" + token + "'");
  return *s;
}

std::size_t order_param(const std::string& token) {
  std::size_t pos = 0;
  const unsigned long value = std::stoul(token, &pos);
  if (pos != token.size()) throw std::invalid_argument("expected a vertex count, got '" + token + "'");
  return value;
}

void cmd_gen(const std::string& kind, const std::vector<std::string>& params, const std::string& out_path,
             std::ostream& out) {
  auto need = [&](std::size_t count, const char* usage) {
    if (params.size() != count) throw std::invalid_argument(std::string("usage: gen ") + usage);
  };
  sgd::SignedGraph g = [&] {
    if (kind == "path") {
      need(2, "path N PATTERN");
      return sgd::make_path(order_param(params[0]), sgd::parse_sign_pattern(params[1]));
    }
    if (kind == "cycle") {
      need(2, "cycle N PATTERN");
      return sgd::make_cycle(order_param(params[0]), sgd::parse_sign_pattern(params[1]));
    }
    if (kind == "complete") {
      need(2, "complete N SIGN");
      return sgd::make_complete(order_param(params[0]), single_sign(params[1]));
    }
    need(1, "petersen SIGN");
    return sgd::make_petersen(single_sign(params[0]));
  }();
  write_or_print(out_path, sgd::serialize_edge_list(g), out);
}

void cmd_petersen_table(const std::string& format, std::ostream& out) {
  const auto table = sgd::enumerate_petersen_signings();
  if (format == "text") {
    for (const auto& c : table.classes) {
      out << c.label << "  size " << c.class_size << "  negative edges " << c.representative.negative_edge_count()
          << "  " << c.char_poly.to_string() << '\n';
    }
    out << "signings: " << table.signings_processed << '\n';
    return;
  }
  emit_json(out, sgd::petersen_table_to_json(table));
}

void cmd_conjecture(const sgd::ConjectureSearchOptions& opt, const std::string& out_dir, std::ostream& out) {
  const auto result = sgd::conjecture_search(opt);
  if (!out_dir.empty() && !result.candidates.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& c : result.candidates) {
      const std::string stem = out_dir + "/trial" + std::to_string(c.trial);
      sgd::write_graph_file(stem + "_g1.sg", c.g1);
      sgd::write_graph_file(stem + "_g2.sg", c.g2);
      std::ofstream record(stem + "_witness.json");
      record << Json{{"trial", c.trial},
                     {"witness", sgd::witness_to_json(c.witness)},
                     {"oracle_confirmed", c.oracle_confirmed}}
                    .dump(2)
             << '\n';
    }
  }
  emit_json(out, sgd::conjecture_result_to_json(result));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed graph distances, products, and distance spectra"};
  app.require_subcommand(1);

  std::string file, file2, format = "json", which = "max", kind, out_path, out_dir;
  double tol = sgd::kDefaultClusterTolerance;
  std::vector<std::string> params;
  sgd::ConjectureSearchOptions conj;

  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };
  auto add_which = [&](CLI::App* cmd) {
    cmd->add_option("--which", which, "Distance matrix: max or min")->check(CLI::IsMember({"max", "min"}));
  };

  auto* info = app.add_subcommand("info", "Order, size, structural predicates, balance, net degrees");
  info->add_option("FILE", file)->required();
  add_format(info, {"json", "text"});

  auto* dist = app.add_subcommand("dist", "Signed distance matrix D^max or D^min");
  dist->add_option("FILE", file)->required();
  add_which(dist);
  add_format(dist, {"json", "csv"});

  auto* compat = app.add_subcommand("compat", "Distance-compatibility verdict and incompatible pairs");
  compat->add_option("FILE", file)->required();
  add_format(compat, {"json", "text"});

  auto* witness = app.add_subcommand("witness", "Least-distance incompatibility witness");
  witness->add_option("FILE", file)->required();
  add_format(witness, {"json", "text"});

  auto* product = app.add_subcommand("product", "Cartesian, lexicographic or tensor product");
  product->add_option("--kind", kind)->required()->check(CLI::IsMember({"cartesian", "lex", "tensor"}));
  product->add_option("FILE1", file)->required();
  product->add_option("FILE2", file2)->required();
  product->add_option("-o,--output", out_path, "Write the edge list here instead of stdout");

  auto* formula = app.add_subcommand("dist-formula", "Kronecker-form product distance matrix, checked against BFS");
  formula->add_option("--kind", kind)->required()->check(CLI::IsMember({"cartesian", "lex"}));
  formula->add_option("FILE1", file)->required();
  formula->add_option("FILE2", file2)->required();
  add_format(formula, {"json", "csv"});

  auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial of a distance matrix");
  charpoly->add_option("FILE", file)->required();
  add_which(charpoly);
  add_format(charpoly, {"json", "text"});

  auto* spectrum = app.add_subcommand("spectrum", "Numeric distance spectrum with multiplicities");
  spectrum->add_option("FILE", file)->required();
  spectrum->add_option("--tol", tol, "Eigenvalue clustering tolerance")->check(CLI::PositiveNumber);
  add_which(spectrum);
  add_format(spectrum, {"json", "text"});

  auto* gen = app.add_subcommand("gen", "Named graphs: path N PAT | cycle N PAT | complete N S | petersen S");
  gen->add_option("KIND", kind)->required()->check(CLI::IsMember({"path", "cycle", "complete", "petersen"}));
  gen->add_option("PARAMS", params);
  // Sign patterns such as "-+++" look like options to the parser.
  gen->allow_extras();
  gen->add_option("-o,--output", out_path, "Write the edge list here instead of stdout");

  auto* petersen = app.add_subcommand("petersen-table", "Classify all 2^15 signed Petersen graphs");
  add_format(petersen, {"json", "text"});

  auto* conjecture = app.add_subcommand("conjecture", "Random search for incompatible tensor products");
  conjecture->add_option("--trials", conj.trials)->capture_default_str();
  conjecture->add_option("--max-n", conj.max_n)->capture_default_str()->check(CLI::Range(2, 12));
  conjecture->add_option("--seed", conj.seed)->capture_default_str();
  conjecture->add_option("--out-dir", out_dir, "Directory for candidate edge lists and witness records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  // Output is assembled in a buffer so that a failure never leaves a
  // partial payload on stdout.
  std::ostringstream out;
  try {
    if (*info) cmd_info(file, format, out);
    else if (*dist) cmd_dist(file, which, format, out);
    else if (*compat) cmd_compat(file, format, out);
    else if (*witness) cmd_witness(file, format, out);
    else if (*product) cmd_product(kind, file, file2, out_path, out);
    else if (*formula) cmd_dist_formula(kind, file, file2, format, out);
    else if (*charpoly) cmd_charpoly(file, which, format, out);
    else if (*spectrum) cmd_spectrum(file, which, tol, format, out);
    else if (*gen) {
      for (const auto& extra : gen->remaining()) params.push_back(extra);
      cmd_gen(kind, params, out_path, out);
    }
    else if (*petersen) cmd_petersen_table(format, out);
    else if (*conjecture) cmd_conjecture(conj, out_dir, out);
  } catch (const FormulaMismatch& e) {
    std::cout << out.str();
    std::cerr << "error: " << e.what() << '\n';
    return kExitFormulaMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  std::cout << out.str();
  return 0;
}
