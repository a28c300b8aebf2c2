#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drg/graph.hpp"

namespace drg {

// Intersection numbers of a distance-regular graph, written
// {b0, b1, ..., b_{D-1}; c1, c2, ..., cD}.  Construction validates the basic
// feasibility conditions and the integrality of the distance-layer sizes.
class IntersectionArray {
  public:
    IntersectionArray(std::vector<int> b, std::vector<int> c);

    int diameter() const { return static_cast<int>(b_.size()); }
    int k() const { return b_[0]; }

    // b_i for 0 <= i <= D (b_D = 0), c_i for 0 <= i <= D (c_0 = 0).
    int b(int i) const;
    int c(int i) const;
    int a(int i) const { return k() - b(i) - c(i); }

    int lambda() const { return a(1); }
    // Number of common neighbours of a pair at distance 2; requires D >= 2.
    int mu() const;

    // Vertices at distance i from a fixed vertex.
    long k_i(int i) const { return layer_[static_cast<std::size_t>(i)]; }
    long order() const;   // total number of vertices
    long size() const;    // number of edges

    bool bipartite_feasible() const;  // all a_i zero

    // "{b0,b1,...;c1,...,cD}"
    std::string to_string() const;
    static IntersectionArray parse(const std::string& text);

    bool operator==(const IntersectionArray& o) const { return b_ == o.b_ && c_ == o.c_; }

  private:
    std::vector<int> b_;      // indices 0..D-1
    std::vector<int> c_;      // c_[i] holds c_{i+1}, indices 0..D-1
    std::vector<long> layer_;  // k_0 .. k_D
};

// Computes the intersection array by checking every (vertex, vertex) pair.
// Throws DisconnectedGraph, NotRegular, or NotDistanceRegular (which names
// the first violating pair).
IntersectionArray intersection_array_of(const Graph& g, int threads = 1);

// Same check as a predicate: nullopt when connected and regular but not
// distance-regular.  Disconnected or irregular input still throws.
std::optional<IntersectionArray> try_intersection_array(const Graph& g, int threads = 1);

// A Taylor graph: diameter 3, antipodal 2-cover with array {k, mu, 1; 1, mu, k}.
bool is_taylor(const IntersectionArray& ia);

// Lower bound v * (1 - |T| / (mu * k_2)) on the order of a component left by
// deleting an edge set T, valid when some vertex of the component has no
// endpoint in T.  Requires diameter >= 2.
double shadow_bound(const IntersectionArray& ia, long t_total);

// Refined form: t[i-1] edges of T join distance layers i-1 and i from a
// fixed vertex a of the component (t has one entry per layer 1..D); the
// bound is v - sum_i t_i / (c_i k_i) * (k_i + ... + k_D).
double shadow_bound_profile(const IntersectionArray& ia, const std::vector<long>& t);

}  // namespace drg
