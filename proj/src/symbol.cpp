#include "greenbn/symbol.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace greenbn {

namespace {

std::string twice_str(int tv) {
    std::ostringstream os;
    if (tv % 2 == 0) os << tv / 2;
    else os << tv << "/2";
    return os.str();
}

// Row of entries part_i + offset(i), doubled, with an eps tag on every entry.
std::vector<SymEntry> symbol_row(const Partition& p, int len, int twice_step, int twice_shift,
                                 int eps) {
    std::vector<SymEntry> row;
    row.reserve(static_cast<size_t>(len));
    auto inc = p.increasing_padded(len);
    for (int i = 0; i < len; ++i)
        row.push_back({2 * inc[static_cast<size_t>(i)] + twice_step * i + twice_shift, eps});
    return row;
}

struct BuildSpec {
    int eps_top = 0;     // eps tag on first-component entries
    int eps_bottom = 0;  // eps tag on second-component entries
};

BuildSpec variant_spec(SymbolVariant v, MParam m) {
    switch (v) {
        case SymbolVariant::Plain:
            return {};
        case SymbolVariant::Plus0:
        case SymbolVariant::Minus0:
            if (m.twice_m != 0)
                throw std::invalid_argument("msymbol: +-0 variants require m = 0");
            return {};
        case SymbolVariant::PlusEps:
            return {0, -1};
        case SymbolVariant::MinusEps:
            return {0, +1};
    }
    return {};
}

}  // namespace

namespace {

// Positive-ratio construction with explicit eps tags per component row.
MSymbol build_symbol(const BiPartition& a, MParam m, int rows, int eps_first, int eps_second) {
    const int diff = m.ceil_abs();               // top length - bottom length
    const int twice_s = m.is_integer() ? 0 : 2;  // bottom offset shift
    int top_len = rows + diff, bottom_len = rows;
    if (a.first.length() > top_len || a.second.length() > bottom_len)
        throw std::invalid_argument("msymbol: rows too small for the bipartition");
    MSymbol s;
    s.m = m;
    s.top = symbol_row(a.first, top_len, 4, 0, eps_first);
    s.bottom = symbol_row(a.second, bottom_len, 4, twice_s, eps_second);
    return s;
}

}  // namespace

MSymbol msymbol(const BiPartition& a, MParam m, int rows, SymbolVariant variant) {
    BuildSpec spec = variant_spec(variant, m);
    if (m.twice_m < 0) {
        // Defined through the component swap; similarity and a-values at -m
        // then match those of the swapped bipartition at +m. The deformation
        // stays attached to the second component of a.
        MSymbol s = build_symbol(a.swapped(), m.abs(), rows, spec.eps_bottom, spec.eps_top);
        std::swap(s.top, s.bottom);
        s.m = m;
        s.variant = variant;
        return s;
    }
    MSymbol s = build_symbol(a, m, rows, spec.eps_top, spec.eps_bottom);
    s.variant = variant;
    return s;
}

MSymbol msymbol(const BiPartition& a, MParam m, SymbolVariant variant) {
    const int diff = m.ceil_abs();
    int shortNeeded, longNeeded;
    if (m.twice_m < 0) {
        shortNeeded = a.first.length();
        longNeeded = a.second.length();
    } else {
        shortNeeded = a.second.length();
        longNeeded = a.first.length();
    }
    int rows = std::max(shortNeeded, longNeeded - diff);
    return msymbol(a, m, rows, variant);
}

std::vector<SymEntry> MSymbol::pooled() const {
    std::vector<SymEntry> v = top;
    v.insert(v.end(), bottom.begin(), bottom.end());
    std::sort(v.begin(), v.end());
    return v;
}

std::string MSymbol::str() const {
    auto fmt = [](const std::vector<SymEntry>& row) {
        std::ostringstream os;
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << " ";
            os << twice_str(row[i].twice_value);
            if (row[i].eps > 0) os << "+e";
            if (row[i].eps < 0) os << "-e";
        }
        return os.str();
    };
    bool bottom_first = m.twice_m < 0 || variant == SymbolVariant::Minus0;
    if (bottom_first) return "(" + fmt(bottom) + " / " + fmt(top) + ")";
    return "(" + fmt(top) + " / " + fmt(bottom) + ")";
}

std::ostream& operator<<(std::ostream& os, const MSymbol& s) {
    return os << s.str();
}

std::string AValue::str() const {
    std::ostringstream os;
    if (twice % 2 == 0) os << twice / 2;
    else os << twice << "/2";
    if (eps > 0) os << "+" << eps << "e";
    if (eps < 0) os << eps << "e";
    return os.str();
}

std::vector<SymEntry> symbol_class_key(const BiPartition& a, MParam m, SymbolVariant variant) {
    return msymbol(a, m, a.weight(), variant).pooled();
}

bool similar(const BiPartition& a, const BiPartition& b, MParam m) {
    if (a.weight() != b.weight()) throw std::invalid_argument("similar: unequal weights");
    return symbol_class_key(a, m) == symbol_class_key(b, m);
}

namespace {

// Sum over unordered pairs of distinct positions of the smaller entry;
// entries presorted ascending.
AValue pair_min_sum(const std::vector<SymEntry>& sorted) {
    AValue acc;
    const long long n = static_cast<long long>(sorted.size());
    for (long long i = 0; i < n; ++i) {
        acc.twice += static_cast<long long>(sorted[static_cast<size_t>(i)].twice_value) *
                     (n - 1 - i);
        acc.eps += static_cast<long long>(sorted[static_cast<size_t>(i)].eps) * (n - 1 - i);
    }
    return acc;
}

}  // namespace

AValue a_value(const BiPartition& a, MParam m, SymbolVariant variant) {
    const int rows = a.weight();
    auto full = msymbol(a, m, rows, variant).pooled();
    auto zero = msymbol(BiPartition{}, m, rows, variant).pooled();
    AValue va = pair_min_sum(full), vz = pair_min_sum(zero);
    return AValue{va.twice - vz.twice, va.eps - vz.eps};
}

std::vector<BiPartition> similarity_class_of(const BiPartition& a, int n, MParam m) {
    if (a.weight() != n) throw std::invalid_argument("similarity_class_of: weight mismatch");
    auto key = symbol_class_key(a, m);
    std::vector<BiPartition> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& xi : partitions_of(k))
            for (const auto& eta : partitions_of(n - k)) {
                BiPartition b{xi, eta};
                if (symbol_class_key(b, m) == key) out.push_back(b);
            }
    std::sort(out.begin(), out.end());
    return out;
}

int OrderedBasis::index_of(const BiPartition& a) const {
    for (int i = 0; i < size(); ++i)
        if (items[static_cast<size_t>(i)] == a) return i;
    return -1;
}

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t key_hash(uint64_t seed, const std::vector<SymEntry>& key) {
    uint64_t h = splitmix64(seed ^ 0x51ab5393u);
    for (const auto& e : key) {
        h = splitmix64(h ^ static_cast<uint64_t>(static_cast<int64_t>(e.twice_value)));
        h = splitmix64(h ^ static_cast<uint64_t>(static_cast<int64_t>(e.eps)));
    }
    return h;
}

}  // namespace

OrderedBasis order_basis(int n, MParam m, uint64_t refinement_seed) {
    struct Block {
        std::vector<SymEntry> key;
        std::vector<BiPartition> members;
        AValue a;
        uint64_t h = 0;
    };
    std::map<std::vector<SymEntry>, Block> grouped;
    for (const auto& b : bipartitions(n)) {
        auto key = symbol_class_key(b, m);
        auto& blk = grouped[key];
        if (blk.members.empty()) {
            blk.key = key;
            blk.a = a_value(b, m);
        }
        blk.members.push_back(b);
    }
    std::vector<Block> blocks;
    for (auto& [k, blk] : grouped) {
        std::sort(blk.members.begin(), blk.members.end());
        blk.h = key_hash(refinement_seed, blk.key);
        blocks.push_back(std::move(blk));
    }
    std::sort(blocks.begin(), blocks.end(), [&](const Block& x, const Block& y) {
        if (x.a != y.a) return x.a < y.a;
        if (refinement_seed != 0 && x.h != y.h) return x.h < y.h;
        if (x.key != y.key) return x.key < y.key;
        return x.members.front() < y.members.front();
    });
    OrderedBasis basis;
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
        std::vector<int> ids;
        for (const auto& item : blocks[bi].members) {
            ids.push_back(basis.size());
            basis.items.push_back(item);
            basis.a_values.push_back(blocks[bi].a);
            basis.block_of.push_back(static_cast<int>(bi));
        }
        basis.blocks.push_back(std::move(ids));
    }
    return basis;
}

BiPartition tensor_sign(const BiPartition& a) {
    return {conjugate(a.second), conjugate(a.first)};
}

}  // namespace greenbn
