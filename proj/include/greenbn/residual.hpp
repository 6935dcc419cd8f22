#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "greenbn/partition.hpp"

namespace greenbn {

// Parameter ratio m in (1/2)Z, stored doubled. All half-integer quantities
// in this codebase (tableau entries, jumps, coordinates, a-values) are
// stored as twice their value, so they stay in exact integer arithmetic.
struct MParam {
    int twice_m = 0;

    static MParam of_twice(int tm) { return MParam{tm}; }
    static MParam integer(int m) { return MParam{2 * m}; }
    // Parses "2", "-2", "7/2", "-1/2".
    static MParam parse(const std::string& s);

    bool is_integer() const { return twice_m % 2 == 0; }
    bool negative() const { return twice_m < 0; }
    MParam abs() const { return MParam{twice_m < 0 ? -twice_m : twice_m}; }
    MParam negated() const { return MParam{-twice_m}; }
    // ceil(|m|)
    int ceil_abs() const { return (abs().twice_m + 1) / 2; }

    friend bool operator==(MParam a, MParam b) { return a.twice_m == b.twice_m; }
    friend bool operator!=(MParam a, MParam b) { return a.twice_m != b.twice_m; }

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, MParam m);

// Young diagram of shape with box (row r, col c), both 1-based, filled with
// |content + m| where content = c - r. Entries are stored doubled.
class MTableau {
public:
    MTableau(const Partition& shape, MParam m);

    const Partition& shape() const { return shape_; }
    MParam m() const { return m_; }
    // |c - r + m|, doubled.
    int twice_entry(int r, int c) const;
    // content + m (signed), doubled.
    int twice_signed(int r, int c) const { return 2 * (c - r) + m_.twice_m; }

    // Multiset of all entries, sorted decreasing (doubled values).
    std::vector<int> entry_multiset() const;

private:
    Partition shape_;
    MParam m_;
};

MTableau m_tableau(const Partition& shape, MParam m);

// Number of boxes carrying each entry value: twice_value -> count.
std::map<int, int> multiplicities(const Partition& shape, MParam m);

// One extremity per qualifying row end and per qualifying column end
// (a single box may contribute in both roles). Sorted, doubled values.
std::vector<int> extremities(const Partition& shape, MParam m);

// Extremity boxes with their role, for hook stripping and flips.
struct ExtremityBox {
    int row, col;        // 1-based
    int twice_value;
    bool from_row;       // true: last box of its row; false: of its column
};
std::vector<ExtremityBox> extremity_boxes(const Partition& shape, MParam m);

// Multiplicity conditions for c(shape, k, mk) to be a residual point.
bool is_residual(const Partition& shape, MParam m);
// The equivalent criterion: all extremities distinct.
bool has_distinct_extremities(const Partition& shape, MParam m);

// Strictly increasing jump values of a residual point, padded with 0
// (integer m) or -1/2 (half-integer m) so the count is ceil|m| + 2r.
// Doubled values. Throws "not a residual point" on non-residual input.
struct JumpSet {
    std::vector<int> twice_jumps;
    MParam m;

    int count() const { return static_cast<int>(twice_jumps.size()); }
    std::string str() const;
};

JumpSet jumps(const Partition& shape, MParam m);

// Builds the JumpSet with padding and validity checks from raw values.
JumpSet make_jump_set(std::vector<int> twice_jumps, MParam m);

// W0-orbit of the center of a residual subspace: the multiset of the
// absolute coordinate values in units of k, doubled, sorted decreasing.
struct CentralCharacter {
    std::vector<int> twice_coords;

    int rank() const { return static_cast<int>(twice_coords.size()); }
    friend bool operator==(const CentralCharacter& a, const CentralCharacter& b) {
        return a.twice_coords == b.twice_coords;
    }
    friend bool operator<(const CentralCharacter& a, const CentralCharacter& b) {
        return a.twice_coords < b.twice_coords;
    }
    std::string str() const;
};

// Residual subspace type: factors A_{d-1} for each part d of a_parts,
// plus a type-B part b_part, residual at m.
struct SubspaceType {
    Partition a_parts;
    Partition b_part;

    int rank() const { return a_parts.weight() + b_part.weight(); }
    friend bool operator==(const SubspaceType& a, const SubspaceType& b) {
        return a.a_parts == b.a_parts && a.b_part == b.b_part;
    }
    friend bool operator<(const SubspaceType& a, const SubspaceType& b) {
        if (!(a.a_parts == b.a_parts)) return a.a_parts < b.a_parts;
        return a.b_part < b.b_part;
    }
    // "A2xA6xA8xB16" style label; A0 factors are suppressed, the B part
    // carries its residual partition.
    std::string str() const;
};

// Strips hooks ending on duplicated extremities until the rest is residual.
// Returns (hook lengths, residual remainder).
std::pair<Partition, Partition> sp_m(const Partition& shape, MParam m);

// Coordinates of the center of a subspace of the given type: each A-factor
// of size d contributes |{-(d-1)/2, ..., (d-1)/2}|, the B part the entries
// of its tableau.
CentralCharacter center_coordinates(const SubspaceType& type, MParam m);

// Central character of a single residual point.
CentralCharacter point_central_character(const Partition& shape, MParam m);

// All W0-orbits of residual subspaces of rank n at ratio m, deduplicated by
// (a_parts, central character of the B part), sorted.
std::vector<SubspaceType> enumerate_subspaces(int n, MParam m);

// All generic types (A-parts, B-partition without residuality) whose center
// specializes to cc at ratio m.
std::vector<std::pair<Partition, Partition>> confluence_class(const CentralCharacter& cc,
                                                              int n, MParam m);

// True iff m lies in +-{0, 1/2, 1, ..., n-1}.
bool is_special_ratio(MParam m, int n);

}  // namespace greenbn
