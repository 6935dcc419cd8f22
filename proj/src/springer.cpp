#include "greenbn/springer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace greenbn {

namespace {

// Entry of the box (r,c) at ratio m deformed by the variant: |content+m+d|
// with d = +eps, -eps or 0, kept symbolic.
SymEntry deformed_entry(int twice_signed, SymbolVariant variant) {
    switch (variant) {
        case SymbolVariant::PlusEps:
            if (twice_signed >= 0) return {twice_signed, +1};
            return {-twice_signed, -1};
        case SymbolVariant::MinusEps:
            if (twice_signed > 0) return {twice_signed, -1};
            if (twice_signed == 0) return {0, +1};
            return {-twice_signed, +1};
        default:
            return {twice_signed < 0 ? -twice_signed : twice_signed, 0};
    }
}

// Sign of content+m+d for the variant; 0 only for Plain exactly on the
// diagonal.
int deformed_sign(int twice_signed, SymbolVariant variant) {
    if (twice_signed != 0) return twice_signed > 0 ? 1 : -1;
    switch (variant) {
        case SymbolVariant::PlusEps:
            return 1;
        case SymbolVariant::MinusEps:
            return -1;
        default:
            return 0;
    }
}

}  // namespace

BlockSplitting split(const Partition& shape, MParam m, SymbolVariant variant) {
    if ((variant == SymbolVariant::Plain || variant == SymbolVariant::Plus0 ||
         variant == SymbolVariant::Minus0) &&
        !is_residual(shape, m))
        throw std::domain_error("splitting undefined");
    BlockSplitting out;
    std::vector<int> cur(shape.parts());
    int r0 = 1, c0 = 1;
    std::vector<int> xi, eta;
    auto signed_at = [&](int r, int c) { return 2 * (c - r) + m.twice_m; };
    while (!cur.empty()) {
        const int len = cur.front();
        const int height = static_cast<int>(cur.size());
        const int rowSigned = signed_at(r0, c0 + len - 1);
        const int colSigned = signed_at(r0 + height - 1, c0);
        SymEntry rowEnd = deformed_entry(rowSigned, variant);
        SymEntry colEnd = deformed_entry(colSigned, variant);
        bool horizontal;
        if (len == 1 && height == 1) {
            int s = deformed_sign(rowSigned, variant);
            if (s == 0) throw std::domain_error("splitting undefined");
            horizontal = s > 0;
        } else if (rowEnd == colEnd) {
            throw std::domain_error("splitting undefined");
        } else {
            horizontal = colEnd < rowEnd;
        }
        if (horizontal) {
            out.blocks.push_back({true, len, rowEnd.twice_value});
            xi.push_back(len);
            cur.erase(cur.begin());
            r0 += 1;
        } else {
            out.blocks.push_back({false, height, colEnd.twice_value});
            eta.push_back(height);
            for (int& row : cur) row -= 1;
            while (!cur.empty() && cur.back() == 0) cur.pop_back();
            c0 += 1;
        }
    }
    out.result = {Partition(std::move(xi)), Partition(std::move(eta))};
    return out;
}

Partition join(const BiPartition& a, MParam m) {
    std::vector<int> xs(a.first.parts());    // decreasing
    std::vector<int> ys(a.second.parts());
    size_t xi = 0, yi = 0;
    int h = 0, v = 0;
    const int n = a.weight();
    const int dim = n + 1;
    std::vector<std::vector<bool>> grid(static_cast<size_t>(dim),
                                        std::vector<bool>(static_cast<size_t>(dim), false));
    auto paint = [&](int r, int c) {
        if (r > dim || c > dim || grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)])
            throw std::domain_error("join undefined");
        grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = true;
    };
    while (xi < xs.size() || yi < ys.size()) {
        const int startSigned = 2 * (v - h) + m.twice_m;
        bool horizontal;
        if (xi == xs.size()) horizontal = false;
        else if (yi == ys.size()) horizontal = true;
        else {
            int rh = startSigned + 2 * (xs[xi] - 1);
            int rv = startSigned - 2 * (ys[yi] - 1);
            int reachH = rh < 0 ? -rh : rh;
            int reachV = rv < 0 ? -rv : rv;
            if (reachH == reachV) throw std::domain_error("join undefined");
            horizontal = reachH > reachV;
        }
        if (horizontal) {
            for (int c = v + 1; c <= v + xs[xi]; ++c) paint(h + 1, c);
            ++h;
            ++xi;
        } else {
            for (int r = h + 1; r <= h + ys[yi]; ++r) paint(r, v + 1);
            ++v;
            ++yi;
        }
    }
    std::vector<int> rows;
    for (int r = 0; r < dim; ++r) {
        int len = 0;
        while (len < dim && grid[static_cast<size_t>(r)][static_cast<size_t>(len)]) ++len;
        for (int c = len; c < dim; ++c)
            if (grid[static_cast<size_t>(r)][static_cast<size_t>(c)])
                throw std::domain_error("join undefined");
        if (len) rows.push_back(len);
        else break;
    }
    int total = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i && rows[i] > rows[i - 1]) throw std::domain_error("join undefined");
        total += rows[i];
    }
    if (total != n) throw std::domain_error("join undefined");
    return Partition(std::move(rows));
}

BiPartition xi_eta_of_point(const JumpSet& j, MParam m) {
    if (j.m != m) throw std::invalid_argument("xi_eta_of_point: parameter mismatch");
    if (m.twice_m < 0) return xi_eta_of_point(JumpSet{j.twice_jumps, m.abs()}, m.abs()).swapped();
    const auto& tj = j.twice_jumps;
    const int K = static_cast<int>(tj.size());
    const int tail = m.ceil_abs() - 1;  // number of shifted trailing parts
    const int r = (K - m.ceil_abs()) / 2;
    std::vector<int> xs, ys;
    const int plus = m.is_integer() ? 0 : 1;  // +1/2 on the half-integer grid, doubled
    for (int i = 1; i <= std::min(2 * r + 1, K); i += 2)
        xs.push_back((tj[static_cast<size_t>(i - 1)] + plus) / 2);
    for (int q = 2; q <= tail + 1; ++q) {
        int idx = 2 * r + q;
        int sub = m.is_integer() ? 2 * (q - 1) : 2 * q - 3;
        xs.push_back((tj[static_cast<size_t>(idx - 1)] - sub) / 2);
    }
    for (int i = 2; i <= 2 * r; i += 2)
        ys.push_back((tj[static_cast<size_t>(i - 1)] + (m.is_integer() ? 2 : plus)) / 2);
    for (int x : xs)
        if (x < 0) throw std::invalid_argument("malformed jump set");
    for (int y : ys)
        if (y < 0) throw std::invalid_argument("malformed jump set");
    return {Partition(std::move(xs)), Partition(std::move(ys))};
}

std::optional<Partition> flip(const Partition& shape, int p, MParam m) {
    JumpSet j = jumps(shape, m);  // throws on non-residual input
    if (p < 2 || p > j.count()) return std::nullopt;
    const int tHi = j.twice_jumps[static_cast<size_t>(p - 1)];
    const int tLo = j.twice_jumps[static_cast<size_t>(p - 2)];
    const int t = (tHi - tLo) / 2;
    auto boxes = extremity_boxes(shape, m);
    const ExtremityBox* hi = nullptr;
    const ExtremityBox* lo = nullptr;
    for (const auto& b : boxes) {
        if (b.twice_value == tHi) hi = &b;
        if (b.twice_value == tLo) lo = &b;
    }
    if (!hi || !lo) return std::nullopt;

    std::vector<int> rows(shape.parts());
    Partition conj = conjugate(shape);
    auto signed_at = [&](int r, int c) { return 2 * (c - r) + m.twice_m; };

    // Cut the boxes with entries in (j_{p-1}, j_p] off the block ending on hi.
    if (hi->from_row) {
        int r = hi->row;
        int len = shape.part(r);
        if (len < t) return std::nullopt;
        if (signed_at(r, len - t + 1) != tLo + 2) return std::nullopt;
        if (shape.part(r + 1) > len - t) return std::nullopt;
        rows[static_cast<size_t>(r - 1)] = len - t;
    } else {
        int c = hi->col;
        int height = conj.part(c);
        if (height < t) return std::nullopt;
        if (signed_at(height - t + 1, c) != -(tLo + 2)) return std::nullopt;
        if (conj.part(c + 1) > height - t) return std::nullopt;
        for (int r = height - t + 1; r <= height; ++r) rows[static_cast<size_t>(r - 1)] -= 1;
    }

    // Reattach the strip at the extremity carrying j_{p-1}.
    if (lo->from_row) {
        int r = lo->row;
        int cur = rows[static_cast<size_t>(r - 1)];
        if (cur != shape.part(r)) return std::nullopt;  // target row was cut
        int above = (r == 1) ? cur + t : rows[static_cast<size_t>(r - 2)];
        if (above < cur + t) return std::nullopt;
        rows[static_cast<size_t>(r - 1)] = cur + t;
    } else {
        int c = lo->col;
        int height = conj.part(c);
        // Column heights after the cut.
        auto col_height = [&](int col) {
            int hgt = 0;
            for (int rr = 0; rr < static_cast<int>(rows.size()); ++rr)
                if (rows[static_cast<size_t>(rr)] >= col) hgt = rr + 1;
            return hgt;
        };
        if (col_height(c) != height) return std::nullopt;  // target column was cut
        int left = (c == 1) ? height + t : col_height(c - 1);
        if (left < height + t) return std::nullopt;
        for (int r = height + 1; r <= height + t; ++r) {
            if (r - 1 < static_cast<int>(rows.size())) {
                if (rows[static_cast<size_t>(r - 1)] != c - 1) return std::nullopt;
                rows[static_cast<size_t>(r - 1)] = c;
            } else if (c == 1) {
                rows.push_back(1);
            } else {
                return std::nullopt;
            }
        }
    }
    for (size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i] < rows[i + 1]) return std::nullopt;
    Partition result(std::move(rows));
    if (result == shape) return std::nullopt;
    if (MTableau(result, m).entry_multiset() != MTableau(shape, m).entry_multiset())
        return std::nullopt;
    return result;
}

std::vector<Partition> partitions_of_point(const JumpSet& j, int n, MParam m) {
    Partition base = join(xi_eta_of_point(j, m), m);
    if (base.weight() != n) throw std::invalid_argument("partitions_of_point: rank mismatch");
    auto target = MTableau(base, m).entry_multiset();
    std::vector<Partition> out;
    for (const auto& lam : partitions_of(n))
        if (is_residual(lam, m) && MTableau(lam, m).entry_multiset() == target)
            out.push_back(lam);
    return out;
}

std::vector<BiPartition> sigma_point(const JumpSet& j, int n, MParam m) {
    BiPartition rep = xi_eta_of_point(j, m);
    if (rep.weight() != n) throw std::invalid_argument("sigma_point: rank mismatch");
    return similarity_class_of(rep, n, m);
}

std::vector<BiPartition> trunc_ind(const BiPartition& a, int t, MParam m, SymbolVariant variant) {
    auto candidates = induce_one_row(a, t);
    AValue best;
    bool first = true;
    std::vector<std::pair<AValue, BiPartition>> scored;
    scored.reserve(candidates.size());
    for (const auto& c : candidates) {
        AValue av = a_value(c, m, variant);
        scored.emplace_back(av, c);
        if (first || best < av) {
            best = av;
            first = false;
        }
    }
    std::vector<BiPartition> out;
    for (auto& [av, c] : scored)
        if (av == best) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BiPartition> sigma_subspace(const SubspaceType& type, MParam m,
                                        SymbolVariant variant) {
    std::vector<int> aparts(type.a_parts.parts());  // decreasing
    if (variant == SymbolVariant::PlusEps || variant == SymbolVariant::MinusEps) {
        BiPartition cur = split(type.b_part, m, variant).result;
        for (int t : aparts) {
            auto next = trunc_ind(cur, t, m, variant);
            if (next.size() != 1)
                throw std::logic_error("sigma_subspace: deformed induction not a singleton");
            cur = next.front();
        }
        return {cur};
    }
    JumpSet j = jumps(type.b_part, m);
    std::set<BiPartition> cur;
    for (const auto& b : sigma_point(j, type.b_part.weight(), m)) cur.insert(b);
    for (int t : aparts) {
        std::set<BiPartition> next;
        for (const auto& b : cur)
            for (const auto& c : trunc_ind(b, t, m, SymbolVariant::Plain)) next.insert(c);
        cur = std::move(next);
    }
    return std::vector<BiPartition>(cur.begin(), cur.end());
}

bool strip_insertable(const Partition& nu, int t, MParam m) {
    if (t <= 0) return false;
    if (m.is_integer() ? (t % 2 == 0) : (t % 2 == 1)) return false;
    const int twiceHalf = t - 1;  // (t-1)/2, the entry the strip ends on
    for (int e : extremities(nu, m))
        if (e == twiceHalf) return false;
    if (m.twice_m > 0) {
        int l = nu.length();
        if (2 * l < m.twice_m && twiceHalf < m.twice_m - 2 * l) return false;
    } else if (m.twice_m < 0) {
        int l = conjugate(nu).length();
        if (2 * l < -m.twice_m && twiceHalf < -m.twice_m - 2 * l) return false;
    }
    return true;
}

bool is_unipotent_label(const Partition& p, int n, MParam m) {
    const int tm = m.abs().twice_m;
    long long want = 2LL * n + (m.is_integer() ? (1LL * tm * tm) / 4 : (1LL * tm * tm - 1) / 4);
    if (p.weight() != want) return false;
    std::map<int, int> mult;
    for (int x : p.parts()) ++mult[x];
    int oddCount = 0;
    for (auto [v, r] : mult) {
        if (m.is_integer()) {
            if (v % 2 == 0 && r % 2 != 0) return false;
            if (v % 2 == 1 && r % 2 == 1) ++oddCount;
        } else {
            if (v % 2 == 1 && r % 2 != 0) return false;
            if (v % 2 == 0 && r % 2 == 1) ++oddCount;
        }
    }
    int need = m.is_integer() ? tm / 2 : (tm - 1) / 2;
    return oddCount >= need;
}

std::vector<UnipotentLabel> unipotent_set(int n, MParam m) {
    const int tm = m.abs().twice_m;
    long long weight = 2LL * n + (m.is_integer() ? (1LL * tm * tm) / 4 : (1LL * tm * tm - 1) / 4);
    std::vector<UnipotentLabel> out;
    for (const auto& p : partitions_of(static_cast<int>(weight)))
        if (is_unipotent_label(p, n, m)) out.push_back({p});
    std::sort(out.begin(), out.end());
    return out;
}

SubspaceType f_bc(const UnipotentLabel& label, int n, MParam m) {
    if (!is_unipotent_label(label.parts, n, m))
        throw std::invalid_argument("f_bc: not a unipotent label for this rank and ratio");
    std::map<int, int> mult;
    for (int x : label.parts.parts()) ++mult[x];
    std::vector<int> tj, aparts;
    long long n0 = 0;
    for (auto [v, r] : mult) {
        if (r % 2 == 1) {
            tj.push_back(v - 1);  // jump (v-1)/2, doubled
            n0 += v;
        }
        for (int k = 0; k < r / 2; ++k) aparts.push_back(v);
    }
    JumpSet j = make_jump_set(std::move(tj), m);
    Partition nu = join(xi_eta_of_point(j, m), m);
    const int tm = m.abs().twice_m;
    long long msq = m.is_integer() ? (1LL * tm * tm) / 4 : (1LL * tm * tm - 1) / 4;
    if (2 * nu.weight() != n0 - msq)
        throw std::logic_error("f_bc: B-part weight mismatch");
    SubspaceType type{Partition(std::move(aparts)), nu};
    if (type.rank() != n) throw std::logic_error("f_bc: rank mismatch");
    return type;
}

namespace {

// Pooled symbol entries of a 2-composition, padded with `pad` extra leading
// zero parts on both components; twice values.
std::vector<int> composition_symbol_key(const Composition& xs, const Composition& ys, MParam m,
                                        int pad) {
    const int twice_s = m.is_integer() ? 0 : 2;
    std::vector<int> key;
    for (int i = 0; i < pad + static_cast<int>(xs.size()); ++i) {
        int part = i < pad ? 0 : xs[static_cast<size_t>(i - pad)];
        key.push_back(2 * part + 4 * i);
    }
    for (int jdx = 0; jdx < pad + static_cast<int>(ys.size()); ++jdx) {
        int part = jdx < pad ? 0 : ys[static_cast<size_t>(jdx - pad)];
        key.push_back(2 * part + 4 * jdx + twice_s);
    }
    std::sort(key.begin(), key.end());
    return key;
}

std::vector<int> plain_key(const std::vector<SymEntry>& entries) {
    std::vector<int> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(e.twice_value);
    return v;
}

}  // namespace

std::vector<BiPartition> phi(const UnipotentLabel& label, int n, MParam m) {
    if (m.twice_m < 0) {
        auto cls = phi(label, n, m.abs());
        std::vector<BiPartition> out;
        for (const auto& b : cls) out.push_back(b.swapped());
        std::sort(out.begin(), out.end());
        return out;
    }
    if (!is_unipotent_label(label.parts, n, m))
        throw std::invalid_argument("phi: not a unipotent label for this rank and ratio");
    const bool integer = m.is_integer();
    const int mk = integer ? m.twice_m / 2 : (m.twice_m - 1) / 2;  // tail length
    std::vector<int> lam;
    {
        auto dec = label.parts.parts();
        lam.assign(dec.rbegin(), dec.rend());  // increasing
    }
    if ((static_cast<int>(lam.size()) - mk) % 2 != 0) lam.insert(lam.begin(), 0);
    const int len = static_cast<int>(lam.size());
    const int r = (len - mk) / 2;
    // Un-merge equal pairs of the wrong parity whose right member lies in
    // the tail (the shifted tail parts are odd for integer ratios, even
    // otherwise). Pairing proceeds from the right so that a pair fully
    // inside the tail is preferred and the straddling pair only picks up a
    // leftover single copy.
    std::vector<int> mu = lam;
    for (int q = len - 2; q >= std::max(0, len - mk - 1); --q) {
        if (q + 1 < len - mk) break;
        if (mu[static_cast<size_t>(q)] == mu[static_cast<size_t>(q + 1)] &&
            (mu[static_cast<size_t>(q)] % 2 == (integer ? 0 : 1))) {
            mu[static_cast<size_t>(q)] += 1;
            mu[static_cast<size_t>(q + 1)] -= 1;
            --q;
        }
    }
    std::vector<int> mustar(static_cast<size_t>(len));
    for (int i = 0; i < 2 * r; ++i) mustar[static_cast<size_t>(i)] = mu[static_cast<size_t>(i)] + i;
    for (int i = 2 * r; i < len; ++i)
        mustar[static_cast<size_t>(i)] = mu[static_cast<size_t>(i)] + (integer ? 2 * r : 2 * r - 1);
    Composition xstar, ystar;
    for (int v : mustar) {
        if (v % 2 == 1) xstar.push_back(v / 2);
        else ystar.push_back(v / 2);
    }
    Composition xs(xstar.size()), ys(ystar.size());
    for (size_t i = 0; i < xstar.size(); ++i) xs[i] = xstar[i] - static_cast<int>(i);
    for (size_t jdx = 0; jdx < ystar.size(); ++jdx) ys[jdx] = ystar[jdx] - static_cast<int>(jdx);
    // Readjust to the symbol length pattern l(xi) = l(eta) + ceil|m|.
    // Prepending a zero part to one row is the shift composed with
    // unpadding the other, so the similarity class is unchanged.
    {
        int target = m.ceil_abs();
        int diff = static_cast<int>(xs.size()) - static_cast<int>(ys.size());
        while (diff < target) {
            xs.insert(xs.begin(), 0);
            ++diff;
        }
        while (diff > target) {
            ys.insert(ys.begin(), 0);
            --diff;
        }
    }
    // The class of the composition's symbol among genuine bipartitions.
    int pad = n - static_cast<int>(ys.size());
    if (pad < 0) throw std::logic_error("phi: composition longer than rank");
    auto key = composition_symbol_key(xs, ys, m, pad);
    std::vector<BiPartition> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& xi : partitions_of(k))
            for (const auto& eta : partitions_of(n - k)) {
                BiPartition b{xi, eta};
                if (plain_key(symbol_class_key(b, m)) == key) out.push_back(b);
            }
    if (out.empty()) throw std::logic_error("phi: empty similarity class");
    std::sort(out.begin(), out.end());
    return out;
}

UnipotentLabel psi(const BiPartition& rep, MParam m) {
    if (m.twice_m < 0) return psi(rep.swapped(), m.abs());
    const bool integer = m.is_integer();
    const int n = rep.weight();
    const int mk = integer ? m.twice_m / 2 : (m.twice_m - 1) / 2;  // tail length
    const int diff = m.ceil_abs();                                 // symbol length difference
    const int L = n;
    auto pooled = msymbol(rep, m, L).pooled();
    // Interleaved increasing assignment: xi eta xi eta ... then the tail on xi.
    Composition xs, ys;
    const int twice_s = integer ? 0 : 2;
    for (int j = 0; j < L; ++j) {
        int ev = pooled[static_cast<size_t>(2 * j)].twice_value;
        int od = pooled[static_cast<size_t>(2 * j + 1)].twice_value;
        xs.push_back((ev - 4 * j) / 2);
        ys.push_back((od - 4 * j - twice_s) / 2);
    }
    for (int q = 0; q < diff; ++q) {
        int v = pooled[static_cast<size_t>(2 * L + q)].twice_value;
        xs.push_back((v - 4 * (L + q)) / 2);
    }
    for (int v : xs)
        if (v < 0) throw std::invalid_argument("psi: entries do not form a symbol");
    for (int v : ys)
        if (v < 0) throw std::invalid_argument("psi: entries do not form a symbol");
    if (!integer) ys.insert(ys.begin(), 0);  // composition lengths, not symbol lengths
    const int N = static_cast<int>(ys.size());
    std::vector<int> xstar(xs.size()), ystar(ys.size());
    for (size_t i = 0; i < xs.size(); ++i) xstar[i] = xs[i] + static_cast<int>(i);
    for (size_t jdx = 0; jdx < ys.size(); ++jdx) ystar[jdx] = ys[jdx] + static_cast<int>(jdx);
    std::vector<int> head;
    for (int i = 0; i < N; ++i) head.push_back(2 * xstar[static_cast<size_t>(i)] + 1);
    for (int jdx = 0; jdx < N; ++jdx) head.push_back(2 * ystar[static_cast<size_t>(jdx)]);
    std::sort(head.begin(), head.end());
    std::vector<int> mustar = head;
    for (int q = 0; q < mk; ++q)
        mustar.push_back(2 * xstar[static_cast<size_t>(N + q)] + 1);
    std::vector<int> mu(mustar.size());
    for (int i = 0; i < 2 * N; ++i) mu[static_cast<size_t>(i)] = mustar[static_cast<size_t>(i)] - i;
    for (int q = 0; q < mk; ++q)
        mu[static_cast<size_t>(2 * N + q)] =
            mustar[static_cast<size_t>(2 * N + q)] - (integer ? 2 * N : 2 * N - 1);
    // Drop zeros, then merge descent pairs (x+1, x-1) -> (x, x).
    std::vector<int> lam;
    for (int v : mu) {
        if (v < 0) throw std::invalid_argument("psi: negative composition entry");
        if (v != 0) lam.push_back(v);
    }
    for (size_t q = 0; q + 1 < lam.size();) {
        if (lam[q] == lam[q + 1] + 2) {
            lam[q] -= 1;
            lam[q + 1] += 1;
            q += 2;
        } else {
            ++q;
        }
    }
    for (size_t q = 0; q + 1 < lam.size(); ++q)
        if (lam[q] > lam[q + 1]) throw std::logic_error("psi: result is not a partition");
    UnipotentLabel out{Partition(std::move(lam))};
    if (!is_unipotent_label(out.parts, n, m))
        throw std::logic_error("psi: result is not a unipotent label");
    return out;
}

CentralCharacter predicted_central_character(const BiPartition& a, MParam m) {
    const int n = a.weight();
    return center_coordinates(f_bc(psi(a, m), n, m), m);
}

}  // namespace greenbn
