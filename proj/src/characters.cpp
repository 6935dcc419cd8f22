#include "greenbn/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace greenbn {

long long group_order(int n) {
    long long f = 1;
    for (int i = 1; i <= n; ++i) f *= i;
    return f << n;
}

namespace {

long long cycle_centralizer(const Partition& p) {
    // prod i^{m_i} m_i!
    std::map<int, int> mult;
    for (int x : p.parts()) ++mult[x];
    long long z = 1;
    for (auto [v, r] : mult) {
        for (int k = 0; k < r; ++k) z *= v;
        for (int k = 2; k <= r; ++k) z *= k;
    }
    return z;
}

long long power2(int k) { return 1LL << k; }

// Rim hook removals of size t: (shape after removal, height parity sign).
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& p, int t) {
    std::vector<std::pair<Partition, int>> out;
    if (t <= 0 || t > p.weight()) return out;
    const int L = p.length();
    std::vector<int> beta(static_cast<size_t>(L));
    for (int i = 1; i <= L; ++i) beta[static_cast<size_t>(i - 1)] = p.part(i) + (L - i);
    for (int i = 0; i < L; ++i) {
        int b = beta[static_cast<size_t>(i)];
        if (b < t) continue;
        int target = b - t;
        bool occupied = false;
        int height = 0;
        for (int k = 0; k < L; ++k) {
            if (k == i) continue;
            int x = beta[static_cast<size_t>(k)];
            if (x == target) occupied = true;
            if (x > target && x < b) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[static_cast<size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts(static_cast<size_t>(L));
        for (int k = 1; k <= L; ++k) parts[static_cast<size_t>(k - 1)] = nb[static_cast<size_t>(k - 1)] - (L - k);
        out.emplace_back(Partition(std::move(parts)), height % 2 == 0 ? 1 : -1);
    }
    return out;
}

struct MNKey {
    Partition xi, eta;
    size_t pos_left, neg_left;
    bool operator<(const MNKey& o) const {
        return std::tie(pos_left, neg_left, xi, eta) <
               std::tie(o.pos_left, o.neg_left, o.xi, o.eta);
    }
};

long long mn_value(const Partition& xi, const Partition& eta, const std::vector<int>& pos,
                   size_t pos_left, const std::vector<int>& neg, size_t neg_left,
                   std::map<MNKey, long long>& memo) {
    if (pos_left == 0 && neg_left == 0) return (xi.empty() && eta.empty()) ? 1 : 0;
    MNKey key{xi, eta, pos_left, neg_left};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int t;
    int delta;
    size_t np = pos_left, nn = neg_left;
    if (pos_left > 0) {
        t = pos[--np];
        delta = 1;
    } else {
        t = neg[--nn];
        delta = -1;
    }
    long long acc = 0;
    for (const auto& [rest, sign] : remove_rim_hooks(xi, t))
        acc += sign * mn_value(rest, eta, pos, np, neg, nn, memo);
    for (const auto& [rest, sign] : remove_rim_hooks(eta, t))
        acc += delta * sign * mn_value(xi, rest, pos, np, neg, nn, memo);
    memo.emplace(key, acc);
    return acc;
}

}  // namespace

std::vector<ConjClass> conj_classes(int n) {
    std::vector<ConjClass> out;
    const long long order = group_order(n);
    for (const auto& bp : bipartitions(n)) {
        long long cz = cycle_centralizer(bp.first) * power2(bp.first.length()) *
                       cycle_centralizer(bp.second) * power2(bp.second.length());
        out.push_back({bp.first, bp.second, order / cz});
    }
    return out;
}

long long char_value(const BiPartition& a, const ConjClass& c) {
    if (a.weight() != c.rank()) throw std::invalid_argument("char_value: rank mismatch");
    std::map<MNKey, long long> memo;
    return mn_value(a.first, a.second, c.pos_cycles.parts(), c.pos_cycles.parts().size(),
                    c.neg_cycles.parts(), c.neg_cycles.parts().size(), memo);
}

CharTable char_table(int n) {
    CharTable t;
    t.n = n;
    t.irreps = bipartitions(n);
    t.classes = conj_classes(n);
    t.values.resize(t.irreps.size());
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        t.values[i].resize(t.classes.size());
        for (size_t c = 0; c < t.classes.size(); ++c)
            t.values[i][c] = char_value(t.irreps[i], t.classes[c]);
    }
    return t;
}

Poly det_char_poly(const ConjClass& c) {
    Poly out = Poly::one();
    for (int a : c.pos_cycles.parts())
        out = out * (Poly::monomial(Rational(1), a) - Poly::one());
    for (int b : c.neg_cycles.parts())
        out = out * (Poly::monomial(Rational(1), b) + Poly::one());
    return out;
}

Poly poincare(int n) {
    Poly out = Poly::one();
    for (int i = 1; i <= n; ++i) {
        std::vector<Rational> ones(static_cast<size_t>(2 * i), Rational(1));
        out = out * Poly(std::move(ones));
    }
    return out;
}

namespace {

int sign_char_value(const ConjClass& c) {
    int e = (c.pos_cycles.weight() - c.pos_cycles.length() + c.neg_cycles.weight()) % 2;
    return e == 0 ? 1 : -1;
}

// (t-1)^n P0(t) / det(t id - w), a polynomial for every class.
Poly molien_factor(const ConjClass& c, int n) {
    Poly num = Poly::one();
    for (int i = 1; i <= n; ++i)
        num = num * (Poly::monomial(Rational(1), 2 * i) - Poly::one());
    Poly q, r;
    Poly::divmod(num, det_char_poly(c), q, r);
    if (!r.is_zero()) throw std::domain_error("fake degree not polynomial");
    return q;
}

}  // namespace

Poly fake_degree(const std::vector<Rational>& f, int n) {
    auto classes = conj_classes(n);
    if (f.size() != classes.size()) throw std::invalid_argument("fake_degree: class count");
    Poly acc;
    for (size_t c = 0; c < classes.size(); ++c) {
        if (f[c].is_zero()) continue;
        Rational w = f[c] * Rational(classes[c].size * sign_char_value(classes[c]));
        Poly term = molien_factor(classes[c], n);
        term *= w;
        acc += term;
    }
    acc *= Rational(1, group_order(n));
    return acc;
}

Poly fake_degree(const CharTable& table, const BiPartition& a) {
    int idx = -1;
    for (size_t i = 0; i < table.irreps.size(); ++i)
        if (table.irreps[i] == a) idx = static_cast<int>(i);
    if (idx < 0) throw std::invalid_argument("fake_degree: unknown irreducible");
    std::vector<Rational> f;
    for (size_t c = 0; c < table.classes.size(); ++c)
        f.emplace_back(static_cast<long long>(table.values[static_cast<size_t>(idx)][c]));
    return fake_degree(f, table.n);
}

MatrixRF omega(const CharTable& table) {
    const int n = table.n;
    const int k = table.num_irreps();
    // In the Molien sum for chi_A chi_B sign, the sign character cancels
    // against the eps(w) weight, leaving |C| chi_A chi_B / det per class.
    std::vector<Poly> factors;
    for (const auto& c : table.classes) {
        Poly f = molien_factor(c, n);
        f *= Rational(c.size);
        factors.push_back(f);
    }
    const Rational invOrder(1, group_order(n));
    MatrixRF w(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            Poly acc;
            for (int c = 0; c < table.num_classes(); ++c) {
                long long prod = table.values[static_cast<size_t>(a)][static_cast<size_t>(c)] *
                                 table.values[static_cast<size_t>(b)][static_cast<size_t>(c)];
                if (prod == 0) continue;
                Poly term = factors[static_cast<size_t>(c)];
                term *= Rational(prod);
                acc += term;
            }
            acc *= invOrder;
            Poly shifted = acc.shifted_up(n);
            w.at(a, b) = RatFunc(shifted);
            w.at(b, a) = RatFunc(shifted);
        }
    return w;
}

}  // namespace greenbn
