#include <sstream>

#include "mu2/graphs.hpp"

namespace mu2 {

namespace {

std::string node_id(int v) { return "\"" + std::to_string(v) + "\""; }

}  // namespace

std::string to_dot(const Digraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v : g.vertices()) os << "  " << node_id(v) << ";\n";
  for (const Arc& a : g.arcs())
    os << "  " << node_id(a.first) << " -> " << node_id(a.second) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v : g.vertices()) os << "  " << node_id(v) << ";\n";
  for (const Edge& e : g.edges())
    os << "  " << node_id(e.first) << " -- " << node_id(e.second) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const Multigraph& m, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v : m.vertices()) os << "  " << node_id(v) << ";\n";
  for (const auto& [e, k] : m.multiplicity())
    for (int i = 0; i < k; ++i)
      os << "  " << node_id(e.first) << " -- " << node_id(e.second) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mu2
