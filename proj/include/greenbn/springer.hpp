#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greenbn/partition.hpp"
#include "greenbn/residual.hpp"
#include "greenbn/symbol.hpp"

namespace greenbn {

// Greedy block decomposition of a residual tableau into horizontal and
// vertical straight blocks, peeled from the outside in.
struct BlockSplitting {
    struct Block {
        bool horizontal;
        int length;
        int twice_end_entry;
    };
    std::vector<Block> blocks;  // in peel order (decreasing end entries)
    BiPartition result;
};

// Divides the tableau of `shape` into blocks; needs distinct extremities
// (or an eps variant, which is defined for every shape).
// Throws "splitting undefined" when the choice of blocks is ambiguous.
BlockSplitting split(const Partition& shape, MParam m,
                     SymbolVariant variant = SymbolVariant::Plain);

// Inverse of split: greedily places horizontal blocks of lengths xi and
// vertical blocks of lengths eta, always the block that reaches the larger
// entry first. Throws "join undefined" on a tie or a non-partition result.
Partition join(const BiPartition& a, MParam m);

// Bipartition attached to a residual point with the given jumps.
BiPartition xi_eta_of_point(const JumpSet& j, MParam m);

// Cuts the boxes carrying entries j_{p-1}+1..j_p off the extremity block
// ending on the p-th jump (p is 1-based into the padded jump list) and
// reattaches them at the extremity carrying j_{p-1}. Empty when the cut or
// the reattachment does not exist.
std::optional<Partition> flip(const Partition& shape, int p, MParam m);

// All residual shapes with the same central character, i.e. the partitions
// whose tableau entry multisets coincide with that point's.
std::vector<Partition> partitions_of_point(const JumpSet& j, int n, MParam m);

// Similarity class of xi_eta_of_point.
std::vector<BiPartition> sigma_point(const JumpSet& j, int n, MParam m);

// Constituents of maximal a-value in the induction of (a x trivial of S_t);
// the eps variants filter with the deformed a-value.
std::vector<BiPartition> trunc_ind(const BiPartition& a, int t, MParam m,
                                   SymbolVariant variant = SymbolVariant::Plain);

// Springer correspondents of a residual subspace: the union over the
// B-part's point class of iterated one-row truncated inductions by the
// A-parts (largest first). Plain variant returns the full similarity class;
// eps variants return the singleton correspondent.
std::vector<BiPartition> sigma_subspace(const SubspaceType& type, MParam m,
                                        SymbolVariant variant = SymbolVariant::Plain);

// Whether a type-A hook of length t fits into the tableau of nu
// (nu residual at m).
bool strip_insertable(const Partition& nu, int t, MParam m);

// Partition label generalizing unipotent class elementary divisors:
// weight 2n+m^2 (integer m, even parts with even multiplicity, at least |m|
// odd parts with odd multiplicity) or 2n+m^2-1/4 (half-integer m, parity
// roles swapped).
struct UnipotentLabel {
    Partition parts;

    friend bool operator==(const UnipotentLabel& a, const UnipotentLabel& b) {
        return a.parts == b.parts;
    }
    friend bool operator<(const UnipotentLabel& a, const UnipotentLabel& b) {
        return a.parts < b.parts;
    }
    std::string str() const { return parts.str(); }
};

bool is_unipotent_label(const Partition& p, int n, MParam m);
std::vector<UnipotentLabel> unipotent_set(int n, MParam m);

// Generalized Bala-Carter map: odd-multiplicity parts l_i give a residual
// point with jumps (l_i - 1)/2, the remaining pairs give the A-parts.
SubspaceType f_bc(const UnipotentLabel& label, int n, MParam m);

// Springer map on unipotent labels: the similarity class attached to label.
std::vector<BiPartition> phi(const UnipotentLabel& label, int n, MParam m);

// Inverse of phi on similarity classes (any representative may be passed).
UnipotentLabel psi(const BiPartition& rep, MParam m);

// Central character conjecturally attached to the column A:
// center(f_bc(psi([A]))).
CentralCharacter predicted_central_character(const BiPartition& a, MParam m);

}  // namespace greenbn
