#pragma once

#include <vector>

#include "drg/graph.hpp"
#include "drg/intersection_array.hpp"

namespace drg {

struct Eigenvalue {
    double value;
    long multiplicity;
};

// Adjacency spectrum, eigenvalues in strictly decreasing order with
// multiplicities summing to the number of vertices.
class Spectrum {
  public:
    Spectrum(std::vector<Eigenvalue> values, long order);

    const std::vector<Eigenvalue>& values() const { return values_; }
    long order() const { return order_; }

    double largest() const { return values_.front().value; }
    double smallest() const { return values_.back().value; }

    // Counts of eigenvalues above / below `tol` in absolute value.
    long positive_count(double tol = 1e-9) const;
    long negative_count(double tol = 1e-9) const;

    // Whether -largest() appears in the spectrum (within tol); for a
    // connected regular graph this characterizes bipartiteness.
    bool has_minus_k(double tol = 1e-9) const;

  private:
    std::vector<Eigenvalue> values_;
    long order_;
};

// Distinct eigenvalues of a distance-regular graph from its intersection
// array: roots of the tridiagonal intersection matrix isolated by Sturm
// bisection to 1e-12 brackets, multiplicities from the standard sequences.
// Throws NonIntegralMultiplicity if a multiplicity strays from an integer by
// more than 1e-6, InvalidArray if the trace identities fail.
Spectrum drg_spectrum(const IntersectionArray& ia);

// Value of the standard sequence (u_0, ..., u_D) at eigenvalue theta.
std::vector<double> standard_sequence(const IntersectionArray& ia, double theta);

// Fallback for arbitrary graphs: dense Jacobi eigensolver on the adjacency
// matrix, eigenvalues clustered into multiplicity classes.  O(v^3); intended
// for graphs of a few hundred vertices.
Spectrum dense_spectrum(const Graph& g);

}  // namespace drg
