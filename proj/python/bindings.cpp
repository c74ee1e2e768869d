#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "arbor/density.hpp"
#include "arbor/errors.hpp"
#include "arbor/game.hpp"
#include "arbor/graph_io.hpp"
#include "arbor/nucleolus.hpp"
#include "arbor/oracle.hpp"
#include "arbor/prime.hpp"

namespace py = pybind11;
using namespace arbor;

namespace {

using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Rationals cross the boundary as "p/q" strings; the Python layer wraps them in Fraction.
std::vector<std::uint32_t> labels(const VertexSet& vs) {
  std::vector<std::uint32_t> out;
  for (VertexId v : vs) out.push_back(v.value);
  return out;
}

std::vector<std::uint32_t> indices(const EdgeSet& es) {
  std::vector<std::uint32_t> out;
  for (EdgeId e : es) out.push_back(e.value);
  return out;
}

std::vector<std::string> per_edge(const Multigraph& g, const Allocation& x) {
  std::vector<std::string> out;
  for (const Edge& e : g.edges()) out.push_back(to_string(x.at(e.id)));
  return out;
}

Multigraph build(const Pairs& edges) {
  for (const auto& [u, v] : edges) {
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  }
  if (edges.empty()) throw InputError("graph has no edges");
  return Multigraph::from_pairs(edges);
}

py::dict fractional_arboricity_py(const Pairs& edges) {
  const Multigraph g = build(edges);
  const DensityCertificate c = fractional_arboricity(g);
  py::dict d;
  d["af"] = to_string(c.value);
  d["arboricity"] = ceil_to_int64(c.value);
  d["witness"] = labels(c.witness);
  return d;
}

py::dict prime_partition_py(const Pairs& edges) {
  const Multigraph g = build(edges);
  const PrimePartition pp = prime_partition(g);
  const AncestorPoset poset = ancestors(g, pp);
  py::list sets;
  for (const PrimeSet& p : pp.prime_sets) {
    py::dict s;
    s["id"] = p.id;
    s["edges"] = indices(p.edges);
    s["level"] = p.level;
    s["n_p"] = p.n_p;
    sets.append(s);
  }
  py::dict d;
  d["af"] = to_string(pp.af);
  d["prime_sets"] = sets;
  d["non_prime"] = indices(pp.non_prime);
  d["parents"] = poset.parents;
  d["ancestors"] = poset.ancestors;
  return d;
}

py::dict nucleolus_py(const Pairs& edges, bool variant) {
  const Multigraph g = build(edges);
  const NucleolusResult r = nucleolus_details(g, variant);
  py::dict d;
  d["core_nonempty"] = r.core.nonempty;
  d["af"] = to_string(r.core.af);
  d["gamma_E"] = to_string(r.grand_cost);
  d["epsilon"] = to_string(r.assignment.epsilon);
  d["multipliers"] = r.assignment.multipliers;
  d["allocation"] = per_edge(g, r.allocation);
  return d;
}

py::dict core_check_py(const Pairs& edges, const std::vector<std::string>& allocation) {
  const Multigraph g = build(edges);
  std::vector<Rational> values;
  for (const std::string& s : allocation) values.push_back(parse_rational(s));
  const CoreCheckResult r = core_membership(g, to_allocation(g, values));
  py::dict d;
  d["verdict"] = std::string(to_string(r.verdict));
  d["witness"] = r.witness ? py::cast(indices(*r.witness)) : py::none();
  d["max_tree_weight"] = to_string(r.max_tree_weight);
  return d;
}

}  // namespace

PYBIND11_MODULE(_arbor, m) {
  m.doc() = "Densest subgraphs, prime partitions and the nucleolus of arboricity games";

  auto base = py::register_exception<Error>(m, "ArborError");
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());

  m.def("fractional_arboricity", &fractional_arboricity_py, py::arg("edges"));
  m.def("prime_partition", &prime_partition_py, py::arg("edges"));
  m.def("nucleolus", &nucleolus_py, py::arg("edges"), py::arg("variant") = false);
  m.def("core_check", &core_check_py, py::arg("edges"), py::arg("allocation"));
  m.def(
      "brute_fractional_arboricity",
      [](const Pairs& edges, std::size_t edge_cap) { return to_string(brute_fractional_arboricity(build(edges), edge_cap).value); },
      py::arg("edges"), py::arg("edge_cap") = 14);
  m.def(
      "densest_subgraphs",
      [](const Pairs& edges, std::size_t vertex_cap) {
        std::vector<std::vector<std::uint32_t>> out;
        for (const VertexSet& h : enumerate_densest_subgraphs(build(edges), vertex_cap)) out.push_back(labels(h));
        return out;
      },
      py::arg("edges"), py::arg("vertex_cap") = 16);
  m.def(
      "maschler_nucleolus",
      [](const Pairs& edges, std::size_t edge_cap) {
        const Multigraph g = build(edges);
        return per_edge(g, maschler_nucleolus(g, edge_cap));
      },
      py::arg("edges"), py::arg("edge_cap") = 10);
}
