#pragma once

// Text formats.
//
//   hypergraph:  "n R", then R lines "[weight] <spec tokens> : v1 ... vk"
//                or "gscb w0 ... wk : v1 ... vk"
//   flow graph:  "N M s t", then M lines "tail head capacity"
//   cooc:        "n m", then m lines "w_c k v1 ... vk"
//   seeds:       whitespace-separated node ids
//
// Blank lines and text after '#' are ignored. Errors raise ParseError with
// the 1-based line number.

#include <iosfwd>
#include <string>
#include <vector>

#include "augsparse/cooc.hpp"
#include "augsparse/flownet.hpp"
#include "augsparse/reduce.hpp"

namespace augsparse {

Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

FlowNetwork read_flow_network(std::istream& in);
// Capacities are printed with 17 significant digits so reading the output
// back reproduces the network exactly.
void write_flow_network(std::ostream& out, const FlowNetwork& net);

CoocInstance read_cooc(std::istream& in);
void write_cooc(std::ostream& out, const CoocInstance& inst);

std::vector<NodeId> read_node_list(std::istream& in);

// Open a file or throw Error naming it.
std::ifstream open_input(const std::string& path);
std::ofstream open_output(const std::string& path);

}  // namespace augsparse
