#include "greenbn/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace greenbn {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    for (int x : p_)
        if (x < 0) throw std::invalid_argument("Partition: negative part");
    std::sort(p_.begin(), p_.end(), std::greater<int>());
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
    weight_ = std::accumulate(p_.begin(), p_.end(), 0);
}

std::vector<int> Partition::increasing_padded(int len) const {
    if (len < length()) throw std::invalid_argument("Partition: padding shorter than length");
    std::vector<int> v(static_cast<size_t>(len), 0);
    for (int i = 0; i < length(); ++i)
        v[static_cast<size_t>(len - 1 - i)] = p_[static_cast<size_t>(i)];
    return v;
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
    return a.p_ < b.p_;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < p_.size(); ++i) {
        if (i) os << ",";
        os << p_[i];
    }
    os << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.str();
}

std::string BiPartition::str() const {
    return "(" + first.str() + "," + second.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const BiPartition& b) {
    return os << b.str();
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition();
    std::vector<int> q(static_cast<size_t>(p.part(1)), 0);
    for (int x : p.parts())
        for (int c = 0; c < x; ++c) ++q[static_cast<size_t>(c)];
    return Partition(std::move(q));
}

long long n_value(const Partition& p) {
    long long acc = 0;
    const auto& parts = p.parts();
    for (size_t i = 0; i < parts.size(); ++i) acc += static_cast<long long>(i) * parts[i];
    return acc;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw std::invalid_argument("dominance_leq: unequal weights");
    int len = std::max(mu.length(), lambda.length());
    long long sl = 0, sm = 0;
    for (int i = 1; i <= len; ++i) {
        sl += lambda.part(i);
        sm += mu.part(i);
        if (sl < sm) return false;
    }
    return true;
}

std::vector<Partition> add_horizontal_strips(const Partition& p, int t) {
    if (t < 0) throw std::invalid_argument("add_horizontal_strips: negative size");
    // mu interlaces p: p_i <= mu_i <= p_{i-1}, one extra row allowed.
    std::vector<Partition> out;
    int rows = p.length() + 1;
    std::vector<int> mu(static_cast<size_t>(rows), 0);
    // Row 1 of mu is unbounded above; recurse over rows.
    std::vector<int> cur(static_cast<size_t>(rows), 0);
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row > rows) {
            if (remaining == 0) {
                std::vector<int> v(cur.begin(), cur.end());
                out.emplace_back(std::move(v));
            }
            return;
        }
        int lo = p.part(row);
        int hi = (row == 1) ? p.part(1) + remaining : p.part(row - 1);
        hi = std::min(hi, lo + remaining);
        for (int v = lo; v <= hi; ++v) {
            cur[static_cast<size_t>(row - 1)] = v;
            self(self, row + 1, remaining - (v - lo));
        }
        cur[static_cast<size_t>(row - 1)] = lo;
    };
    rec(rec, 1, t);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BiPartition> induce_one_row(const BiPartition& a, int t) {
    std::vector<BiPartition> out;
    for (int t1 = 0; t1 <= t; ++t1) {
        auto xs = add_horizontal_strips(a.first, t1);
        auto ys = add_horizontal_strips(a.second, t - t1);
        for (const auto& x : xs)
            for (const auto& y : ys) out.push_back({x, y});
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Partition>& partitions_of(int n) {
    static std::map<int, std::vector<Partition>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int x = std::min(remaining, maxPart); x >= 1; --x) {
            cur.push_back(x);
            self(self, remaining - x, x);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
    std::sort(out.begin(), out.end());
    return cache.emplace(n, std::move(out)).first->second;
}

std::vector<BiPartition> bipartitions(int n) {
    std::vector<BiPartition> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& xi : partitions_of(k))
            for (const auto& eta : partitions_of(n - k)) out.push_back({xi, eta});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<int> parse_int_list(const std::string& s, char sep) {
    std::vector<int> v;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, sep)) {
        size_t b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = tok.find_last_not_of(" \t");
        v.push_back(std::stoi(tok.substr(b, e - b + 1)));
    }
    return v;
}

}  // namespace

Partition parse_partition(const std::string& s) {
    std::string body = s;
    size_t b = body.find_first_not_of(" \t");
    if (b == std::string::npos) return Partition();
    size_t e = body.find_last_not_of(" \t");
    body = body.substr(b, e - b + 1);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("partition: missing ']' in '" + s + "'");
        body = body.substr(1, body.size() - 2);
    }
    if (body.empty()) return Partition();
    char sep = body.find('+') != std::string::npos ? '+' : ',';
    return Partition(parse_int_list(body, sep));
}

BiPartition parse_bipartition(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos || s[b] != '(' || s[e] != ')')
        throw std::invalid_argument("bipartition: expected '([..],[..])' in '" + s + "'");
    std::string body = s.substr(b + 1, e - b - 1);
    // Split at the comma separating the two bracketed lists.
    int depth = 0;
    size_t cut = std::string::npos;
    for (size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '[') ++depth;
        else if (body[i] == ']') --depth;
        else if (body[i] == ',' && depth == 0) {
            cut = i;
            break;
        }
    }
    if (cut == std::string::npos)
        throw std::invalid_argument("bipartition: expected two components in '" + s + "'");
    return {parse_partition(body.substr(0, cut)), parse_partition(body.substr(cut + 1))};
}

}  // namespace greenbn
