#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symnet/errors.hpp"
#include "symnet/network.hpp"

namespace symnet::fixtures {

using namespace symnet::literals;

// G = 3X2X3 - X1X3 + 2X3X4 - 2X4X5 - 3X3 - X2 + 2X1 + X5.
// The X5 bias term comes from the worked propagation example ("-theta_5 = -1").
inline Network fig1() {
  Network::Builder b(5);
  b.bias(0, 2_w).bias(1, -1_w).bias(2, -3_w).bias(3, 0_w).bias(4, 1_w);
  b.edge(1, 2, 3_w).edge(0, 2, -1_w).edge(2, 3, 2_w).edge(3, 4, -2_w);
  return std::move(b).build();
}

// energy = 50AB - 200BC - 100AC - 3AD - 3DE - 3AE + 0.1A + 0.1B + 0.1C + 4D + 4E,
// stored in goodness form with A..E = nodes 1..5 and cutset {A} declared.
inline Network example51() {
  Network::Builder b(5);
  b.bias(0, -0.1_w).bias(1, -0.1_w).bias(2, -0.1_w).bias(3, -4_w).bias(4, -4_w);
  b.edge(0, 1, -50_w).edge(1, 2, 200_w).edge(0, 2, 100_w);
  b.edge(0, 3, 3_w).edge(3, 4, 3_w).edge(0, 4, 3_w);
  b.cutset({0});
  return std::move(b).build();
}

// Chain of 2i units, all biases 1, unit edges except a -4 middle edge (i, i+1).
// Mirror-symmetric; its only optima are 1..101..1 and 1..011..1.
inline Network chain2i(std::size_t i) {
  if (i < 2) throw ArgumentError("chain2i needs i >= 2");
  const std::size_t n = 2 * i;
  Network::Builder b(n);
  for (NodeId k = 0; k < n; ++k) b.bias(k, 1_w);
  for (NodeId k = 0; k + 1 < n; ++k) b.edge(k, k + 1, k + 1 == i ? -4_w : 1_w);
  return std::move(b).build();
}

// 6-cycle with -3 edges and unit biases; optima 010101 and 101010.
inline Network ring6() {
  Network::Builder b(6);
  for (NodeId k = 0; k < 6; ++k) {
    b.bias(k, 1_w);
    b.edge(k, (k + 1) % 6, -3_w);
  }
  return std::move(b).build();
}

struct RingPreset {
  Network net;
  PointerSnapshot pointers;  // every node points at its clockwise (next) neighbor
};

// n-cycle with every pointer aimed clockwise: a self-consistent but invalid tree.
inline RingPreset illegal_ring(std::size_t n) {
  if (n < 3) throw ArgumentError("illegal_ring needs n >= 3");
  Network::Builder b(n);
  for (NodeId k = 0; k < n; ++k) b.edge(k, (k + 1) % n, -1_w);
  for (NodeId k = 0; k < n; ++k) b.bias(k, 1_w);
  RingPreset preset{std::move(b).build(), {}};
  preset.pointers.resize(n);
  for (NodeId k = 0; k < n; ++k) {
    preset.pointers[k].assign(preset.net.degree(k), 0);
    preset.pointers[k][*preset.net.neighbor_index(k, (k + 1) % n)] = 1;
  }
  return preset;
}

inline std::vector<std::string> names() {
  return {"fig1", "example51", "ring6", "chain2i:<i>", "illegal_ring:<n>"};
}

// Resolve "fig1", "example51", "ring6", "chain2i[:i]" (default 3), "illegal_ring[:n]" (default 6).
inline Network by_name(std::string_view name) {
  auto arg = [&](std::string_view prefix, std::size_t fallback) -> std::optional<std::size_t> {
    if (name == prefix) return fallback;
    if (name.size() > prefix.size() + 1 && name.substr(0, prefix.size()) == prefix &&
        name[prefix.size()] == ':') {
      try {
        return std::stoul(std::string(name.substr(prefix.size() + 1)));
      } catch (const std::exception&) {
        throw ArgumentError("bad fixture parameter in '" + std::string(name) + "'");
      }
    }
    return std::nullopt;
  };
  if (name == "fig1") return fig1();
  if (name == "example51") return example51();
  if (name == "ring6") return ring6();
  if (auto i = arg("chain2i", 3)) return chain2i(*i);
  if (auto n = arg("illegal_ring", 6)) return illegal_ring(*n).net;
  throw ArgumentError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace symnet::fixtures
