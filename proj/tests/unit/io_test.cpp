#include <gtest/gtest.h>

#include <sstream>

#include "augsparse/error.hpp"
#include "augsparse/io.hpp"
#include "augsparse/oracle.hpp"

namespace augsparse {
namespace {

std::size_t parse_error_line(const std::string& text, auto reader) {
  std::istringstream in(text);
  try {
    reader(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return 0;
}

TEST(HypergraphFormat, ReadsBothEdgeKinds) {
  std::istringstream in(
      "# two edges\n"
      "5 3\n"
      "clique : 0 1 2\n"
      "2.5 dlinear 2 : 1 2 3 4   # weighted\n"
      "gscb 2 3 3 2 : 0 3 4\n");
  const Hypergraph h = read_hypergraph(in);
  ASSERT_EQ(h.edges.size(), 3u);
  EXPECT_EQ(h.n, 5u);
  EXPECT_EQ(std::get<SplittingSpec>(h.edges[1].penalty), SplittingSpec::delta_linear(2, 2.5));
  EXPECT_EQ(std::get<GscbFunction>(h.edges[2].penalty).values(),
            (std::vector<double>{2, 3, 3, 2}));
  EXPECT_EQ(h.edges[2].members, (std::vector<NodeId>{0, 3, 4}));
}

TEST(HypergraphFormat, RoundTrip) {
  oracle::Rng rng(111);
  Hypergraph h = oracle::random_hypergraph(rng, 12, 10, 1, 8);
  h.edges.push_back({{2, 5, 7}, oracle::random_gscb(rng, 3)});
  std::stringstream buffer;
  write_hypergraph(buffer, h);
  const Hypergraph back = read_hypergraph(buffer);
  ASSERT_EQ(back.edges.size(), h.edges.size());
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    EXPECT_EQ(back.edges[e].members, h.edges[e].members);
    EXPECT_EQ(back.edges[e].penalty, h.edges[e].penalty);
  }
}

TEST(HypergraphFormat, ErrorsCarryLineNumbers) {
  auto read = [](std::istream& in) { read_hypergraph(in); };
  EXPECT_EQ(parse_error_line("3 1\nclique 0 1\n", read), 2u);
  EXPECT_EQ(parse_error_line("3 2\nclique : 0 1\n\nsqroot : 1 2\n", read), 4u);
  EXPECT_EQ(parse_error_line("3 1\nclique : 0 7\n", read), 2u);
  EXPECT_EQ(parse_error_line("3 1\ngscb 0 1 3 : 0 1\n", read), 2u);
  EXPECT_EQ(parse_error_line("3 1\ngscb 0 1 : 0 1\n", read), 2u);
  EXPECT_EQ(parse_error_line("3 1\nclique : 0 0\n", read), 2u);
  EXPECT_EQ(parse_error_line("3 2\nclique : 0 1\n", read), 3u);
  EXPECT_EQ(parse_error_line("3\n", read), 1u);
  EXPECT_EQ(parse_error_line("3 1\nclique : 0 1\nextra\n", read), 3u);
}

TEST(FlowFormat, RoundTripIsBitIdentical) {
  const FlowNetwork net(4, 0, 3, {{0, 1, 0.1}, {1, 3, 1.0 / 3.0}, {0, 2, 1e-7}, {2, 3, 12345.678}});
  std::stringstream first;
  write_flow_network(first, net);
  const FlowNetwork back = read_flow_network(first);
  EXPECT_TRUE(std::equal(net.arcs().begin(), net.arcs().end(), back.arcs().begin(),
                         back.arcs().end()));
  std::ostringstream second;
  write_flow_network(second, back);
  EXPECT_EQ(first.str(), second.str());
  EXPECT_EQ(max_flow_min_cut(back).flow_value, max_flow_min_cut(net).flow_value);
}

TEST(FlowFormat, ErrorsCarryLineNumbers) {
  auto read = [](std::istream& in) { read_flow_network(in); };
  EXPECT_EQ(parse_error_line("2 1 0 1\n0 1 x\n", read), 2u);
  EXPECT_EQ(parse_error_line("2 1 0 1\n0 5 1\n", read), 2u);
  EXPECT_EQ(parse_error_line("2 1 0 1\n0 1 -2\n", read), 2u);
  EXPECT_EQ(parse_error_line("2 2 0 1\n0 1 1\n", read), 3u);
  EXPECT_EQ(parse_error_line("2 1 0\n", read), 1u);
}

TEST(CoocFormat, RoundTripAndErrors) {
  const CoocInstance inst = gen_powerlaw(50, 40, 2.0, 3);
  std::stringstream buffer;
  write_cooc(buffer, inst);
  const CoocInstance back = read_cooc(buffer);
  ASSERT_EQ(back.sets.size(), inst.sets.size());
  for (std::size_t c = 0; c < inst.sets.size(); ++c) {
    EXPECT_EQ(back.sets[c].members, inst.sets[c].members);
    EXPECT_EQ(back.sets[c].weight, inst.sets[c].weight);
  }
  auto read = [](std::istream& in) { read_cooc(in); };
  EXPECT_EQ(parse_error_line("4 1\n1 3 0 1\n", read), 2u);
  EXPECT_EQ(parse_error_line("4 1\n0 2 0 1\n", read), 2u);
  EXPECT_EQ(parse_error_line("4 2\n1 2 0 1\n1 2 0 9\n", read), 3u);
}

TEST(NodeList, ReadsIdsAcrossLines) {
  std::istringstream in("3 1\n# comment\n7\n");
  EXPECT_EQ(read_node_list(in), (std::vector<NodeId>{3, 1, 7}));
  auto read = [](std::istream& s) { read_node_list(s); };
  EXPECT_EQ(parse_error_line("1\n2\nx\n", read), 3u);
}

}  // namespace
}  // namespace augsparse
