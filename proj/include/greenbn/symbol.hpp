#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "greenbn/partition.hpp"
#include "greenbn/residual.hpp"

namespace greenbn {

// Deformation of the parameter ratio: Plain is the ratio m itself,
// PlusEps/MinusEps an infinitesimal two-sided perturbation, Plus0/Minus0
// the two row-order conventions at m = 0 (display only; entries agree).
enum class SymbolVariant { Plain, Plus0, Minus0, PlusEps, MinusEps };

// Symbol entry value with a symbolic infinitesimal: value + eps_coeff * eps,
// value doubled as usual, eps infinitesimally small and positive.
struct SymEntry {
    int twice_value = 0;
    int eps = 0;

    friend bool operator==(SymEntry a, SymEntry b) {
        return a.twice_value == b.twice_value && a.eps == b.eps;
    }
    friend bool operator<(SymEntry a, SymEntry b) {
        if (a.twice_value != b.twice_value) return a.twice_value < b.twice_value;
        return a.eps < b.eps;
    }
    friend bool operator>(SymEntry a, SymEntry b) { return b < a; }
};

// Two-row symbol of a bipartition at ratio m. The top row holds the entries
// attached to the first component, the bottom row those of the second; for
// negative m the construction is by component swap, so the labels still
// refer to the bipartition's own components.
struct MSymbol {
    std::vector<SymEntry> top;
    std::vector<SymEntry> bottom;
    MParam m;
    SymbolVariant variant = SymbolVariant::Plain;

    // Both rows pooled and sorted; this multiset decides similarity.
    std::vector<SymEntry> pooled() const;
    std::string str() const;
};

// a-value as an exact number value + eps_coeff * eps, value doubled.
struct AValue {
    long long twice = 0;
    long long eps = 0;

    friend bool operator==(AValue a, AValue b) { return a.twice == b.twice && a.eps == b.eps; }
    friend bool operator!=(AValue a, AValue b) { return !(a == b); }
    friend bool operator<(AValue a, AValue b) {
        if (a.twice != b.twice) return a.twice < b.twice;
        return a.eps < b.eps;
    }
    friend bool operator<=(AValue a, AValue b) { return a < b || a == b; }
    std::string str() const;
};

// Symbol of a at ratio m with the bottom row holding `rows` entries
// (rows >= l(second component); the top row length follows from m).
// Variant restrictions: Plus0/Minus0 need m = 0, Plain needs m != 0 unless
// the caller passes Plus0/Minus0 at 0.
MSymbol msymbol(const BiPartition& a, MParam m, int rows,
                SymbolVariant variant = SymbolVariant::Plain);
// Convenience: minimal admissible row count.
MSymbol msymbol(const BiPartition& a, MParam m,
                SymbolVariant variant = SymbolVariant::Plain);

// Canonical pooled entry multiset at a fixed common length (rows = n), the
// similarity-class key for weight-n bipartitions.
std::vector<SymEntry> symbol_class_key(const BiPartition& a, MParam m,
                                       SymbolVariant variant = SymbolVariant::Plain);

// Equal entry multisets at common representative lengths.
bool similar(const BiPartition& a, const BiPartition& b, MParam m);

// Sum of pairwise minima of the pooled entries minus the same for the zero
// bipartition at equal lengths. Constant on similarity classes.
AValue a_value(const BiPartition& a, MParam m,
               SymbolVariant variant = SymbolVariant::Plain);

// All of [(a)]_m within weight-n bipartitions, sorted.
std::vector<BiPartition> similarity_class_of(const BiPartition& a, int n, MParam m);

// Basis of the weight-n bipartitions ordered by increasing a-value with
// similarity classes contiguous; `blocks` lists index ranges.
struct OrderedBasis {
    std::vector<BiPartition> items;
    std::vector<std::vector<int>> blocks;   // consecutive index groups
    std::vector<AValue> a_values;           // per item
    std::vector<int> block_of;              // item index -> block index

    int size() const { return static_cast<int>(items.size()); }
    int index_of(const BiPartition& a) const;  // -1 if absent
};

// Ties between distinct equal-a classes are broken deterministically from
// the seed; seed 0 sorts by the class key, then by smallest member.
OrderedBasis order_basis(int n, MParam m, uint64_t refinement_seed = 0);

// V_A tensored with the sign character: components conjugated and swapped.
BiPartition tensor_sign(const BiPartition& a);

std::ostream& operator<<(std::ostream& os, const MSymbol& s);

}  // namespace greenbn
