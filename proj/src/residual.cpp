#include "greenbn/residual.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace greenbn {

MParam MParam::parse(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return MParam{2 * v};
        }
        size_t p1 = 0, p2 = 0;
        int num = std::stoi(s.substr(0, slash), &p1);
        int den = std::stoi(s.substr(slash + 1), &p2);
        if (p1 != slash || p2 != s.size() - slash - 1) throw std::invalid_argument(s);
        if (den == 1) return MParam{2 * num};
        if (den == 2) return MParam{num};
        throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("m: expected a half-integer like '2' or '-7/2', got '" + s +
                                    "'");
    }
}

std::string MParam::str() const {
    std::ostringstream os;
    if (is_integer()) os << twice_m / 2;
    else os << twice_m << "/2";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, MParam m) {
    return os << m.str();
}

MTableau::MTableau(const Partition& shape, MParam m) : shape_(shape), m_(m) {}

int MTableau::twice_entry(int r, int c) const {
    int v = twice_signed(r, c);
    return v < 0 ? -v : v;
}

std::vector<int> MTableau::entry_multiset() const {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(shape_.weight()));
    for (int r = 1; r <= shape_.length(); ++r)
        for (int c = 1; c <= shape_.part(r); ++c) v.push_back(twice_entry(r, c));
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}

MTableau m_tableau(const Partition& shape, MParam m) {
    return MTableau(shape, m);
}

std::map<int, int> multiplicities(const Partition& shape, MParam m) {
    std::map<int, int> mult;
    MTableau t(shape, m);
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.part(r); ++c) ++mult[t.twice_entry(r, c)];
    return mult;
}

std::vector<ExtremityBox> extremity_boxes(const Partition& shape, MParam m) {
    std::vector<ExtremityBox> out;
    MTableau t(shape, m);
    for (int r = 1; r <= shape.length(); ++r) {
        int c = shape.part(r);
        if (t.twice_signed(r, c) >= 0) out.push_back({r, c, t.twice_entry(r, c), true});
    }
    Partition conj = conjugate(shape);
    for (int c = 1; c <= conj.length(); ++c) {
        int r = conj.part(c);
        if (t.twice_signed(r, c) <= 0) out.push_back({r, c, t.twice_entry(r, c), false});
    }
    return out;
}

std::vector<int> extremities(const Partition& shape, MParam m) {
    std::vector<int> out;
    for (const auto& b : extremity_boxes(shape, m)) out.push_back(b.twice_value);
    std::sort(out.begin(), out.end());
    return out;
}

bool has_distinct_extremities(const Partition& shape, MParam m) {
    auto e = extremities(shape, m);
    return std::adjacent_find(e.begin(), e.end()) == e.end();
}

namespace {

int mult_at(const std::map<int, int>& mult, int twice_l) {
    auto it = mult.find(twice_l);
    return it == mult.end() ? 0 : it->second;
}

}  // namespace

bool is_residual(const Partition& shape, MParam m) {
    const auto mult = multiplicities(shape, m);
    const int tam = m.abs().twice_m;
    const int top = mult.empty() ? 0 : mult.rbegin()->first;
    if (m.is_integer()) {
        for (int l = 2; l <= top; l += 2) {
            int here = mult_at(mult, l), next = mult_at(mult, l + 2);
            if (l >= tam || tam == 0) {
                if (here != next && here != next + 1) return false;
            } else {
                if (here != next - 1 && here != next) return false;
            }
        }
        int m0 = mult_at(mult, 0), m1 = mult_at(mult, 2);
        if (tam == 0) return m0 == (m1 + 1) / 2;
        return m0 == m1 / 2;
    }
    for (int l = 1; l <= top; l += 2) {
        int here = mult_at(mult, l), next = mult_at(mult, l + 2);
        if (l >= tam) {
            if (here != next && here != next + 1) return false;
        } else {
            if (here != next - 1 && here != next) return false;
        }
    }
    return true;
}

JumpSet make_jump_set(std::vector<int> twice_jumps, MParam m) {
    std::sort(twice_jumps.begin(), twice_jumps.end());
    const int pad = m.is_integer() ? 0 : -1;
    if ((static_cast<int>(twice_jumps.size()) - m.ceil_abs()) % 2 != 0)
        twice_jumps.insert(twice_jumps.begin(), pad);
    if (std::adjacent_find(twice_jumps.begin(), twice_jumps.end()) != twice_jumps.end())
        throw std::invalid_argument("jumps must be distinct");
    if (static_cast<int>(twice_jumps.size()) < m.ceil_abs() ||
        (!twice_jumps.empty() && twice_jumps.front() < pad))
        throw std::invalid_argument("malformed jump set");
    return JumpSet{std::move(twice_jumps), m};
}

JumpSet jumps(const Partition& shape, MParam m) {
    if (!is_residual(shape, m)) throw std::domain_error("not a residual point");
    const auto mult = multiplicities(shape, m);
    const int tam = m.abs().twice_m;
    const int top = mult.empty() ? 0 : mult.rbegin()->first;
    std::vector<int> js;
    const int start = m.is_integer() ? 2 : 1;
    // The low range runs to |m|-1 even past the largest entry: a vanishing
    // pair of multiplicities there still counts as a jump.
    const int stop = std::max(top, tam - 2);
    for (int l = start; l <= stop; l += 2) {
        int here = mult_at(mult, l), next = mult_at(mult, l + 2);
        if (l >= tam) {
            if (here == next + 1) js.push_back(l);
        } else {
            if (here == next) js.push_back(l);
        }
    }
    return make_jump_set(std::move(js), m);
}

std::string JumpSet::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < twice_jumps.size(); ++i) {
        if (i) os << ",";
        if (twice_jumps[i] % 2 == 0) os << twice_jumps[i] / 2;
        else os << twice_jumps[i] << "/2";
    }
    os << ")";
    return os.str();
}

std::string CentralCharacter::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < twice_coords.size(); ++i) {
        if (i) os << ",";
        if (twice_coords[i] % 2 == 0) os << twice_coords[i] / 2;
        else os << twice_coords[i] << "/2";
    }
    os << "}";
    return os.str();
}

std::string SubspaceType::str() const {
    std::ostringstream os;
    bool any = false;
    for (int d : a_parts.parts())
        if (d >= 2) {
            if (any) os << "x";
            os << "A" << d - 1;
            any = true;
        }
    if (!b_part.empty() || !any) {
        if (any) os << "x";
        os << "B" << b_part.weight() << b_part.str();
    }
    return os.str();
}

std::pair<Partition, Partition> sp_m(const Partition& shape, MParam m) {
    Partition cur = shape;
    std::vector<int> hooks;
    for (int guard = 0; guard <= shape.weight(); ++guard) {
        auto boxes = extremity_boxes(cur, m);
        std::map<int, std::vector<ExtremityBox>> byval;
        for (const auto& b : boxes) byval[b.twice_value].push_back(b);
        int dup = -1;
        for (const auto& [v, bs] : byval)
            if (bs.size() >= 2) dup = v;
        if (dup < 0) break;
        const auto& pair = byval[dup];
        int hr = -1, hc = -1;
        for (const auto& b : pair) {
            if (b.from_row) hr = b.row;
            else hc = b.col;
        }
        if (hr < 0 || hc < 0)
            throw std::logic_error("sp_m: duplicated extremity without row/column pair");
        Partition conj = conjugate(cur);
        int armEnd = cur.part(hr), legEnd = conj.part(hc);
        hooks.push_back(armEnd - hc + legEnd - hr + 1);
        std::vector<int> next;
        for (int i = 1; i <= cur.length(); ++i) {
            if (i < hr) next.push_back(cur.part(i));
            else if (i < legEnd) next.push_back(cur.part(i + 1) - 1);
            else if (i == legEnd) next.push_back(hc - 1);
            else next.push_back(cur.part(i));
        }
        cur = Partition(std::move(next));
    }
    if (!is_residual(cur, m)) throw std::logic_error("sp_m: remainder is not residual");
    return {Partition(std::move(hooks)), cur};
}

namespace {

void append_a_factor_coords(std::vector<int>& twice, int d) {
    for (int i = 0; i < d; ++i) {
        int v = -(d - 1) + 2 * i;
        twice.push_back(v < 0 ? -v : v);
    }
}

}  // namespace

CentralCharacter center_coordinates(const SubspaceType& type, MParam m) {
    std::vector<int> twice;
    for (int d : type.a_parts.parts()) append_a_factor_coords(twice, d);
    MTableau t(type.b_part, m);
    for (int r = 1; r <= type.b_part.length(); ++r)
        for (int c = 1; c <= type.b_part.part(r); ++c) twice.push_back(t.twice_entry(r, c));
    std::sort(twice.begin(), twice.end(), std::greater<int>());
    return CentralCharacter{std::move(twice)};
}

CentralCharacter point_central_character(const Partition& shape, MParam m) {
    return CentralCharacter{MTableau(shape, m).entry_multiset()};
}

std::vector<SubspaceType> enumerate_subspaces(int n, MParam m) {
    std::map<std::pair<Partition, CentralCharacter>, SubspaceType> orbits;
    for (int a = 0; a <= n; ++a)
        for (const auto& alpha : partitions_of(a))
            for (const auto& nu : partitions_of(n - a)) {
                if (!is_residual(nu, m)) continue;
                auto key = std::make_pair(alpha, point_central_character(nu, m));
                auto it = orbits.find(key);
                if (it == orbits.end()) orbits.emplace(key, SubspaceType{alpha, nu});
            }
    std::vector<SubspaceType> out;
    for (auto& [k, v] : orbits) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Partition, Partition>> confluence_class(const CentralCharacter& cc,
                                                              int n, MParam m) {
    if (cc.rank() != n) throw std::invalid_argument("confluence_class: rank mismatch");
    bool realized = false;
    for (const auto& s : enumerate_subspaces(n, m))
        if (center_coordinates(s, m) == cc) {
            realized = true;
            break;
        }
    if (!realized) throw std::invalid_argument("not a central character at this ratio");
    std::vector<std::pair<Partition, Partition>> out;
    for (int a = 0; a <= n; ++a)
        for (const auto& alpha : partitions_of(a))
            for (const auto& mu : partitions_of(n - a)) {
                if (center_coordinates(SubspaceType{alpha, mu}, m) == cc)
                    out.emplace_back(alpha, mu);
            }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_special_ratio(MParam m, int n) {
    int tam = m.abs().twice_m;
    return n >= 1 && tam <= 2 * (n - 1);
}

}  // namespace greenbn
