#pragma once

#include <cstdint>
#include <vector>

#include "greenbn/linalg.hpp"
#include "greenbn/partition.hpp"
#include "greenbn/poly.hpp"

namespace greenbn {

// Conjugacy class of the hyperoctahedral group W(B_n): cycle types of the
// positive and negative cycles.
struct ConjClass {
    Partition pos_cycles;
    Partition neg_cycles;
    long long size = 0;

    int rank() const { return pos_cycles.weight() + neg_cycles.weight(); }
};

// 2^n n!
long long group_order(int n);

// One class per bipartition of n, in bipartition order.
std::vector<ConjClass> conj_classes(int n);

// Value of the irreducible character indexed by a on the class c, computed
// by border-strip removal on the pair of shapes.
long long char_value(const BiPartition& a, const ConjClass& c);

struct CharTable {
    int n = 0;
    std::vector<BiPartition> irreps;   // bipartition order
    std::vector<ConjClass> classes;    // bipartition order of (pos, neg)
    std::vector<std::vector<long long>> values;  // values[i][c]

    int num_irreps() const { return static_cast<int>(irreps.size()); }
    int num_classes() const { return static_cast<int>(classes.size()); }
};

CharTable char_table(int n);

// det(t * id - w) = prod (t^a - 1) * prod (t^b + 1) over the cycle type.
Poly det_char_poly(const ConjClass& c);

// prod_{i=1..n} (t^{2i} - 1) / (t - 1).
Poly poincare(int n);

// Molien-type sum over the classes; f is a rational class function given in
// the order of conj_classes(n). Throws "fake degree not polynomial" if the
// class-wise sum fails to produce a polynomial.
Poly fake_degree(const std::vector<Rational>& f, int n);

// Fake degree of the irreducible indexed by a.
Poly fake_degree(const CharTable& table, const BiPartition& a);

// Matrix of t^n * fake_degree(chi_A chi_B sign), indexed like table.irreps.
MatrixRF omega(const CharTable& table);

}  // namespace greenbn
