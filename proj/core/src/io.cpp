#include "augsparse/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "augsparse/error.hpp"

namespace augsparse {
namespace {

// Reads non-blank, comment-stripped lines and tracks their numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      tokens.clear();
      std::istringstream words(line);
      for (std::string w; words >> w;) tokens.push_back(std::move(w));
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::vector<std::string> require(const char* what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) throw ParseError(std::string("unexpected end of input, expected ") + what,
                                        number_ + 1);
    return tokens;
  }

  void expect_end() {
    std::vector<std::string> tokens;
    if (next(tokens)) throw ParseError("unexpected trailing content", number_);
  }

  std::size_t line() const noexcept { return number_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, number_); }

  double real(const std::string& token) const {
    double value = 0.0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
      fail("expected a number, got '" + token + "'");
    }
    return value;
  }

  std::uint64_t count(const std::string& token) const {
    std::uint64_t value = 0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      fail("expected a nonnegative integer, got '" + token + "'");
    }
    return value;
  }

  NodeId node(const std::string& token, std::size_t n) const {
    const std::uint64_t v = count(token);
    if (v >= n) fail("node id " + token + " outside [0, " + std::to_string(n) + ")");
    return static_cast<NodeId>(v);
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

bool is_number(const std::string& token) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::string format_real(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

std::vector<NodeId> read_members(const LineReader& reader, const std::vector<std::string>& tokens,
                                 std::size_t first, std::size_t n) {
  std::vector<NodeId> members;
  for (std::size_t t = first; t < tokens.size(); ++t) members.push_back(reader.node(tokens[t], n));
  return members;
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.require("header 'n R'");
  if (header.size() != 2) reader.fail("header must be 'n R'");
  Hypergraph h;
  h.n = reader.count(header[0]);
  const std::uint64_t edges = reader.count(header[1]);
  for (std::uint64_t e = 0; e < edges; ++e) {
    const auto tokens = reader.require("a hyperedge line");
    const auto colon = std::find(tokens.begin(), tokens.end(), ":");
    if (colon == tokens.end()) reader.fail("hyperedge line needs ':' before its members");
    const auto split = static_cast<std::size_t>(colon - tokens.begin());
    std::vector<NodeId> members = read_members(reader, tokens, split + 1, h.n);
    if (members.empty()) reader.fail("hyperedge has no members");
    try {
      if (split >= 1 && tokens[0] == "gscb") {
        std::vector<double> w;
        for (std::size_t t = 1; t < split; ++t) w.push_back(reader.real(tokens[t]));
        if (w.size() != members.size() + 1) {
          reader.fail("gscb needs " + std::to_string(members.size() + 1) + " penalties, got " +
                      std::to_string(w.size()));
        }
        h.edges.push_back({std::move(members), GscbFunction::create(std::move(w))});
      } else {
        std::vector<std::string> spec_tokens(tokens.begin(), colon);
        double weight = 1.0;
        if (!spec_tokens.empty() && is_number(spec_tokens.front())) {
          weight = reader.real(spec_tokens.front());
          spec_tokens.erase(spec_tokens.begin());
        }
        SplittingSpec spec = parse_splitting_spec(spec_tokens);
        spec.weight *= weight;
        spec.validate();
        h.edges.push_back({std::move(members), std::move(spec)});
      }
      Hypergraph single{h.n, {h.edges.back()}};
      single.validate();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      reader.fail(err.what());
    }
  }
  reader.expect_end();
  return h;
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.n << ' ' << h.edges.size() << '\n';
  for (const Hyperedge& e : h.edges) {
    if (const auto* spec = std::get_if<SplittingSpec>(&e.penalty)) {
      out << spec->to_string();
    } else {
      out << "gscb";
      for (double w : std::get<GscbFunction>(e.penalty).values()) out << ' ' << format_real(w);
    }
    out << " :";
    for (NodeId v : e.members) out << ' ' << v;
    out << '\n';
  }
}

FlowNetwork read_flow_network(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.require("header 'N M s t'");
  if (header.size() != 4) reader.fail("header must be 'N M s t'");
  const std::uint64_t nodes = reader.count(header[0]);
  const std::uint64_t count = reader.count(header[1]);
  const NodeId source = reader.node(header[2], nodes);
  const NodeId sink = reader.node(header[3], nodes);
  std::vector<Arc> arcs;
  arcs.reserve(count);
  for (std::uint64_t a = 0; a < count; ++a) {
    const auto tokens = reader.require("an arc line 'tail head capacity'");
    if (tokens.size() != 3) reader.fail("arc line must be 'tail head capacity'");
    const double cap = reader.real(tokens[2]);
    if (cap < 0.0) reader.fail("negative capacity");
    arcs.push_back({reader.node(tokens[0], nodes), reader.node(tokens[1], nodes), cap});
  }
  reader.expect_end();
  try {
    return FlowNetwork(nodes, source, sink, std::move(arcs));
  } catch (const Error& err) {
    throw ParseError(err.what(), 0);
  }
}

void write_flow_network(std::ostream& out, const FlowNetwork& net) {
  out << net.node_count() << ' ' << net.arcs().size() << ' ' << net.source() << ' ' << net.sink()
      << '\n';
  for (const Arc& a : net.arcs()) {
    out << a.tail << ' ' << a.head << ' ' << format_real(a.capacity) << '\n';
  }
}

CoocInstance read_cooc(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.require("header 'n m'");
  if (header.size() != 2) reader.fail("header must be 'n m'");
  CoocInstance inst;
  inst.n = reader.count(header[0]);
  const std::uint64_t sets = reader.count(header[1]);
  for (std::uint64_t c = 0; c < sets; ++c) {
    const auto tokens = reader.require("a set line 'w_c k v1 ... vk'");
    if (tokens.size() < 2) reader.fail("set line must be 'w_c k v1 ... vk'");
    const double weight = reader.real(tokens[0]);
    if (!(weight > 0.0)) reader.fail("set weight must be positive");
    const std::uint64_t k = reader.count(tokens[1]);
    if (tokens.size() != k + 2) {
      reader.fail("set declares " + std::to_string(k) + " members but lists " +
                  std::to_string(tokens.size() - 2));
    }
    inst.sets.push_back({read_members(reader, tokens, 2, inst.n), weight});
  }
  reader.expect_end();
  try {
    inst.validate();
  } catch (const Error& err) {
    throw ParseError(err.what(), 0);
  }
  return inst;
}

void write_cooc(std::ostream& out, const CoocInstance& inst) {
  out << inst.n << ' ' << inst.sets.size() << '\n';
  for (const CoocSet& set : inst.sets) {
    out << format_real(set.weight) << ' ' << set.members.size();
    for (NodeId v : set.members) out << ' ' << v;
    out << '\n';
  }
}

std::vector<NodeId> read_node_list(std::istream& in) {
  LineReader reader(in);
  std::vector<NodeId> nodes;
  std::vector<std::string> tokens;
  while (reader.next(tokens)) {
    for (const std::string& t : tokens) {
      const std::uint64_t v = reader.count(t);
      if (v > std::numeric_limits<NodeId>::max()) reader.fail("node id too large");
      nodes.push_back(static_cast<NodeId>(v));
    }
  }
  return nodes;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace augsparse
