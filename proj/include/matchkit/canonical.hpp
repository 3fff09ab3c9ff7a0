#pragma once

#include "matchkit/graph.hpp"

#include <optional>
#include <string>

namespace matchkit {

// Canonical byte string identifying a graph up to isomorphism; with a root,
// up to root-preserving isomorphism. Computed by iterated color refinement
// with backtracking over the first non-singleton class, taking the
// lexicographically least relabeled adjacency encoding.
inline constexpr int kDefaultCanonicalCap = 200;

std::string canonical_form(const Graph& g, std::optional<int> root = std::nullopt,
                           int vertex_cap = kDefaultCanonicalCap);

using BallSignature = std::string;

BallSignature canonical_signature(const RootedBall& ball, int vertex_cap = kDefaultCanonicalCap);

bool rooted_isomorphic(const RootedBall& a, const RootedBall& b);

}  // namespace matchkit
