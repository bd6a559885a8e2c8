#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "copoly/graph.hpp"

namespace copoly {

inline constexpr int kMaxCanonOrder = 10;

/// Isomorphism class of a simple graph: the upper-triangle adjacency
/// bitstring (column-major, first pair most significant) of the
/// lexicographically smallest relabeling.
struct CanonKey {
    std::uint8_t n = 0;
    std::uint64_t bits = 0;

    friend bool operator==(const CanonKey&, const CanonKey&) = default;
    friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
};

/// Isomorphism class of a multigraph: order, loop counts and pair
/// multiplicities of the smallest relabeling, flattened.
struct MultiCanonKey {
    std::vector<std::uint32_t> words;

    friend bool operator==(const MultiCanonKey&, const MultiCanonKey&) = default;
    friend auto operator<=>(const MultiCanonKey&, const MultiCanonKey&) = default;
};

/// Throws CapacityError for n > 10.
CanonKey canonical_key(const SimpleGraph& g);
MultiCanonKey canonical_key(const MultiGraph& g);

/// Vertex at each position of the canonical relabeling.
std::vector<int> canonical_order(const SimpleGraph& g);

/// Rebuilds a representative graph from its key.
SimpleGraph graph_from_key(const CanonKey& key);

struct CanonKeyHash {
    std::size_t operator()(const CanonKey& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.bits * 0x9E3779B97F4A7C15ull ^ k.n);
    }
};

struct MultiCanonKeyHash {
    std::size_t operator()(const MultiCanonKey& k) const noexcept {
        std::size_t h = k.words.size();
        for (std::uint32_t w : k.words) h = h * 0x100000001B3ull ^ w;
        return h;
    }
};

}  // namespace copoly
