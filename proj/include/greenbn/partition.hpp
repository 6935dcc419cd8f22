#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace greenbn {

// Integer partition, stored weakly decreasing with no zero parts.
// The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    // Accepts parts in any order, drops zeros, sorts decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return p_; }
    int length() const { return static_cast<int>(p_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return p_.empty(); }
    // i is 1-based; parts beyond the length read as 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? p_[static_cast<size_t>(i - 1)] : 0;
    }
    // Parts in weakly increasing order, padded with zeros to len entries.
    std::vector<int> increasing_padded(int len) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b);

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Partition& p);

private:
    std::vector<int> p_;
    int weight_ = 0;
};

struct BiPartition {
    Partition first;   // xi
    Partition second;  // eta

    int weight() const { return first.weight() + second.weight(); }
    friend bool operator==(const BiPartition& a, const BiPartition& b) {
        return a.first == b.first && a.second == b.second;
    }
    friend bool operator!=(const BiPartition& a, const BiPartition& b) { return !(a == b); }
    friend bool operator<(const BiPartition& a, const BiPartition& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
    BiPartition swapped() const { return {second, first}; }
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const BiPartition& b);

// Sequence of nonnegative integers with significant order.
using Composition = std::vector<int>;

Partition conjugate(const Partition& p);

// n(lambda) = sum (i-1) * lambda_i over decreasing parts.
long long n_value(const Partition& p);

// True iff lambda dominates mu (equal weights required).
bool dominance_leq(const Partition& mu, const Partition& lambda);

// All partitions obtained from p by adding t boxes, no two in a column.
std::vector<Partition> add_horizontal_strips(const Partition& p, int t);

// Constituents of inducing (xi,eta) x trivial from W(B_l) x S_t: all pairs
// of horizontal strip extensions with total size t, each with multiplicity 1.
std::vector<BiPartition> induce_one_row(const BiPartition& a, int t);

// All partitions of n, deterministic order.
const std::vector<Partition>& partitions_of(int n);

// All bipartitions of n, deterministic order.
std::vector<BiPartition> bipartitions(int n);

// Parses "3+2+1", "[3,2,1]" or "3,2,1"; "[]" and "" give the empty partition.
Partition parse_partition(const std::string& s);
// Parses "([3,1],[2])".
BiPartition parse_bipartition(const std::string& s);

}  // namespace greenbn
