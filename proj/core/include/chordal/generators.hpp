#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

// splitmix64, seeded directly with the 64-bit seed.  All random choices in
// the generators are derived from this stream; bounded draws use plain
// modular reduction (next() % bound) so corpora are reproducible bit-for-bit
// across platforms and languages.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class GenFamily { chordal, ktree, split, all_graphs };

struct GenSpec {
  GenFamily family = GenFamily::chordal;
  int n = 1;
  int k = 0;          // k-tree width, or clique size for split graphs
  double density = 0.5;
  std::uint64_t seed = 0;
};

// Connected chordal graph grown vertex by vertex; each new vertex's
// back-neighborhood is a non-empty subset of an existing maximal clique,
// with density biasing the subset size (density 1 forces full cliques).
Graph random_chordal(int n, double density, std::uint64_t seed);

// k-tree: K_{k+1} plus vertices attached to uniformly chosen existing
// k-cliques.  Chordal and k-connected.  Throws DomainError when n <= k.
Graph random_ktree(int n, int k, std::uint64_t seed);

// Clique on n_clique vertices, stable set of n_stable vertices, each
// cross pair joined with probability p.  With drop_isolated_stable, stable
// vertices that end up isolated are removed (result is then connected).
Graph random_split(int n_clique, int n_stable, double p, std::uint64_t seed,
                   bool drop_isolated_stable = false);

// Random spanning tree plus independent extra edges with probability
// density; always connected.
Graph random_connected_graph(int n, double density, std::uint64_t seed);

Graph generate(const GenSpec& spec);
std::string genspec_comment(const GenSpec& spec);

// Every connected chordal graph on n labeled vertices exactly once, by
// filtering all edge subsets.  Throws ResourceError when n > 7.
void for_each_connected_chordal(int n, const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_small_chordal(int n);

// Every connected graph on n labeled vertices; same bound.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);

}  // namespace chordal
