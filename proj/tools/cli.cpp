#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "arbor/density.hpp"
#include "arbor/errors.hpp"
#include "arbor/game.hpp"
#include "arbor/graph_io.hpp"
#include "arbor/nucleolus.hpp"
#include "arbor/oracle.hpp"
#include "arbor/prime.hpp"

namespace arbor::cli {

namespace {

using Json = nlohmann::ordered_json;

Json labels(const VertexSet& vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(v.value);
  return out;
}

Json indices(const EdgeSet& es) {
  Json out = Json::array();
  for (EdgeId e : es) out.push_back(e.value);
  return out;
}

Json rationals(const Multigraph& g, const Allocation& x) {
  Json out = Json::array();
  for (const Edge& e : g.edges()) out.push_back(to_string(x.at(e.id)));
  return out;
}

Json af_document(const Multigraph& g) {
  if (!is_connected(g)) throw StructuralError("graph is not connected");
  const DensityCertificate cert = fractional_arboricity(g);
  Json doc;
  doc["af"] = to_string(cert.value);
  doc["arboricity"] = ceil_to_int64(cert.value);
  doc["witness"] = labels(cert.witness);
  return doc;
}

Json prime_document(const Multigraph& g) {
  const PrimePartition pp = prime_partition(g);
  const AncestorPoset poset = ancestors(g, pp);
  Json doc;
  doc["af"] = to_string(pp.af);
  Json sets = Json::array();
  for (const PrimeSet& p : pp.prime_sets) {
    Json s;
    s["id"] = p.id;
    s["edges"] = indices(p.edges);
    s["level"] = p.level;
    s["n_p"] = p.n_p;
    sets.push_back(std::move(s));
  }
  doc["prime_sets"] = std::move(sets);
  doc["non_prime"] = indices(pp.non_prime);
  Json parents = Json::object();
  for (std::size_t p = 0; p < poset.size(); ++p) {
    if (!poset.parents[p].empty()) parents[std::to_string(p)] = poset.parents[p];
  }
  doc["parents"] = std::move(parents);
  return doc;
}

Json nucleolus_document(const Multigraph& g, bool variant) {
  const NucleolusResult r = nucleolus_details(g, variant);
  Json doc;
  doc["core_nonempty"] = r.core.nonempty;
  doc["af"] = to_string(r.core.af);
  doc["arboricity"] = r.core.a;
  doc["gamma_E"] = to_string(r.grand_cost);
  doc["epsilon"] = to_string(r.assignment.epsilon);
  doc["multipliers"] = r.assignment.multipliers;
  doc["allocation"] = rationals(g, r.allocation);
  return doc;
}

Json core_check_document(const Multigraph& g, const std::string& allocation_path) {
  const CoreCheckResult r = core_membership(g, read_allocation_file(allocation_path, g));
  Json doc;
  doc["verdict"] = std::string(to_string(r.verdict));
  doc["witness"] = r.witness ? indices(*r.witness) : Json(nullptr);
  doc["max_tree_weight"] = to_string(r.max_tree_weight);
  return doc;
}

Json oracle_document(const Multigraph& g, const std::string& query, std::optional<std::size_t> cap) {
  Json doc;
  if (query == "af") {
    const BruteArboricity r = brute_fractional_arboricity(g, cap.value_or(14));
    doc["af"] = to_string(r.value);
    doc["arboricity"] = ceil_to_int64(r.value);
    doc["witness"] = labels(r.witness);
  } else if (query == "densest-list") {
    Json list = Json::array();
    for (const VertexSet& h : enumerate_densest_subgraphs(g, cap.value_or(16))) list.push_back(labels(h));
    doc["af"] = to_string(fractional_arboricity(g).value);
    doc["densest"] = std::move(list);
  } else {
    doc["allocation"] = rationals(g, maschler_nucleolus(g, cap.value_or(10)));
  }
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arboricity games: densest subgraphs, prime partitions and the nucleolus", "arbor"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  std::optional<std::size_t> cap;
  bool variant = false;
  app.add_option("--output", output, "Write the JSON document here instead of stdout");
  app.add_option("--cap", cap, "Size cap for oracle enumeration");
  app.add_flag("--variant", variant, "Use fractional arboricity as the grand coalition cost");

  std::string graph_path, allocation_path, query;
  auto* af = app.add_subcommand("af", "Fractional arboricity with a densest witness");
  af->add_option("graph", graph_path, "Edge list file")->required();
  auto* prime = app.add_subcommand("prime-partition", "Prime sets, non-prime edges and parents");
  prime->add_option("graph", graph_path, "Edge list file")->required();
  auto* nuc = app.add_subcommand("nucleolus", "Nucleolus of the arboricity game");
  nuc->add_option("graph", graph_path, "Edge list file")->required();
  auto* check = app.add_subcommand("core-check", "Core membership of an allocation");
  check->add_option("graph", graph_path, "Edge list file")->required();
  check->add_option("allocation", allocation_path, "One rational per edge")->required();
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference computations");
  oracle->add_option("graph", graph_path, "Edge list file")->required();
  oracle->add_option("query", query, "af, densest-list or nucleolus")
      ->required()
      ->check(CLI::IsMember({"af", "densest-list", "nucleolus"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : input;
  }

  try {
    const Multigraph g = read_graph_file(graph_path);
    if (g.edge_count() == 0) throw InputError(graph_path + ": no edges");
    Json doc;
    if (af->parsed()) doc = af_document(g);
    else if (prime->parsed()) doc = prime_document(g);
    else if (nuc->parsed()) doc = nucleolus_document(g, variant);
    else if (check->parsed()) doc = core_check_document(g, allocation_path);
    else doc = oracle_document(g, query, cap);

    const std::string text = doc.dump(2) + "\n";
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream file(output);
      if (!file || !(file << text)) throw InputError("cannot write " + output);
    }
    return ok;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::input:
        return input;
      case ErrorKind::structural:
      case ErrorKind::precondition:
        return precondition;
      case ErrorKind::resource:
        return resource;
      case ErrorKind::invariant:
        return internal;
    }
    return internal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return internal;
  }
}

}  // namespace arbor::cli
