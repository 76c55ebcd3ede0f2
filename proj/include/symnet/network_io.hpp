#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "symnet/errors.hpp"
#include "symnet/network.hpp"

namespace symnet {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace detail

// Line format ('#' starts a comment):
//   nodes <n>
//   bias <i> <decimal>
//   edge <i> <j> <decimal>
//   cutset [<i> ...]
inline Network parse_network(std::string_view text) {
  std::optional<Network::Builder> builder;
  std::vector<std::uint8_t> bias_seen;
  bool cutset_seen = false;
  std::size_t line_no = 0;

  auto node_id = [&](std::string_view token) -> NodeId {
    std::size_t id = detail::parse_count(token, line_no);
    if (id < 1 || id > builder->size())
      throw ParseError(line_no, "node id " + std::string(token) + " out of range 1.." +
                                    std::to_string(builder->size()));
    return id - 1;
  };
  auto number = [&](std::string_view token) {
    try {
      return Weight::parse(token);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;

    const auto& kw = tok[0];
    if (kw == "nodes") {
      if (builder) throw ParseError(line_no, "repeated 'nodes' line");
      if (tok.size() != 2) throw ParseError(line_no, "usage: nodes <n>");
      std::size_t n = detail::parse_count(tok[1], line_no);
      if (n == 0) throw ParseError(line_no, "node count must be at least 1");
      builder.emplace(n);
      bias_seen.assign(n, 0);
      continue;
    }
    if (!builder) throw ParseError(line_no, "'nodes' must come before '" + std::string(kw) + "'");
    if (kw == "bias") {
      if (tok.size() != 3) throw ParseError(line_no, "usage: bias <i> <decimal>");
      NodeId i = node_id(tok[1]);
      if (bias_seen[i]) throw ParseError(line_no, "repeated bias for node " + std::string(tok[1]));
      bias_seen[i] = 1;
      builder->bias(i, number(tok[2]));
    } else if (kw == "edge") {
      if (tok.size() != 4) throw ParseError(line_no, "usage: edge <i> <j> <decimal>");
      NodeId i = node_id(tok[1]), j = node_id(tok[2]);
      if (i == j) throw ParseError(line_no, "self-loop on node " + std::string(tok[1]));
      if (builder->has_edge(i, j))
        throw ParseError(line_no, "duplicate edge " + std::string(tok[1]) + " " + std::string(tok[2]));
      builder->edge(i, j, number(tok[3]));
    } else if (kw == "cutset") {
      if (cutset_seen) throw ParseError(line_no, "repeated 'cutset' line");
      cutset_seen = true;
      std::vector<NodeId> members;
      for (std::size_t t = 1; t < tok.size(); ++t) members.push_back(node_id(tok[t]));
      try {
        builder->cutset(std::move(members));
      } catch (const ArgumentError& e) {
        throw ParseError(line_no, e.what());
      }
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(kw) + "'");
    }
  }
  if (!builder) throw ParseError(0, "missing 'nodes' line");
  return std::move(*builder).build();
}

// Canonical text: nodes line, one bias line per node, edges sorted, then cutset.
inline std::string serialize_network(const Network& net) {
  std::ostringstream out;
  out << "nodes " << net.size() << '\n';
  for (NodeId i = 0; i < net.size(); ++i) out << "bias " << i + 1 << ' ' << net.bias(i) << '\n';
  for (const auto& e : net.edges()) out << "edge " << e.a + 1 << ' ' << e.b + 1 << ' ' << e.weight << '\n';
  if (net.declared_cutset()) {
    out << "cutset";
    for (NodeId c : *net.declared_cutset()) out << ' ' << c + 1;
    out << '\n';
  }
  return out.str();
}

inline Network load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open network file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

}  // namespace symnet
