// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its time budget.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "greenbn/green.hpp"
#include "greenbn/report.hpp"
#include "greenbn/springer.hpp"
#include "greenbn/verify.hpp"

using namespace greenbn;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
BiPartition BP(std::vector<int> a, std::vector<int> b) { return {P(std::move(a)), P(std::move(b))}; }

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<std::string()> run;  // empty string = pass, else failure note
};

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

// ---- criterion 1: a-values of the rank-3 list at m = 2 ----------------

std::string crit_a_values() {
    MParam m = MParam::integer(2);
    const std::vector<std::pair<BiPartition, long long>> want{
        {BP({}, {1, 1, 1}), 12}, {BP({}, {2, 1}), 8}, {BP({1}, {1, 1}), 6},
        {BP({}, {3}), 5},        {BP({1}, {2}), 4},   {BP({1, 1}, {1}), 3},
        {BP({1, 1, 1}, {}), 3},  {BP({2}, {1}), 2},   {BP({2, 1}, {}), 1},
        {BP({3}, {}), 0}};
    if (bipartitions(3).size() != want.size()) return "wrong bipartition count";
    for (const auto& [item, a] : want) {
        AValue v = a_value(item, m);
        if (v.eps != 0 || v.twice != 2 * a)
            return item.str() + ": a=" + v.str() + " expected " + std::to_string(a);
    }
    return "";
}

// ---- criterion 2: the full rank-3 graded table at m = 2 ---------------

// Rows are raw P-matrix data: label B at degree l <=> coefficient of t^l in
// P_{B,A} equals the multiplicity.
const std::map<std::string, std::map<int, std::vector<BiPartition>>>& expected_table() {
    static const std::map<std::string, std::map<int, std::vector<BiPartition>>> table = [] {
        std::map<std::string, std::map<int, std::vector<BiPartition>>> t;
        auto sorted = [](std::vector<BiPartition> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        t[BP({}, {1, 1, 1}).str()] = {
            {3, sorted({BP({3}, {})})},
            {4, sorted({BP({2}, {1})})},
            {5, sorted({BP({1}, {2}), BP({2, 1}, {})})},
            {6, sorted({BP({}, {3}), BP({1, 1}, {1}), BP({2}, {1})})},
            {7, sorted({BP({1}, {1, 1}), BP({1}, {2}), BP({2, 1}, {})})},
            {8, sorted({BP({}, {2, 1}), BP({1, 1}, {1}), BP({2}, {1})})},
            {9, sorted({BP({1}, {1, 1}), BP({1}, {2}), BP({1, 1, 1}, {})})},
            {10, sorted({BP({}, {2, 1}), BP({1, 1}, {1})})},
            {11, sorted({BP({1}, {1, 1})})},
            {12, sorted({BP({}, {1, 1, 1})})}};
        t[BP({}, {2, 1}).str()] = {
            {3, sorted({BP({3}, {})})},
            {4, sorted({BP({2}, {1})})},
            {5, sorted({BP({1}, {2}), BP({2, 1}, {})})},
            {6, sorted({BP({}, {3}), BP({1, 1}, {1}), BP({2}, {1})})},
            {7, sorted({BP({1}, {1, 1}), BP({1}, {2})})},
            {8, sorted({BP({}, {2, 1})})}};
        t[BP({1}, {1, 1}).str()] = {
            {2, sorted({BP({2, 1}, {}), BP({3}, {})})},
            {3, sorted({BP({1, 1}, {1}), BP({2}, {1})})},
            {4, sorted({BP({1}, {2}), BP({1, 1, 1}, {}), BP({2, 1}, {})})},
            {5, sorted({BP({1, 1}, {1}), BP({2}, {1})})},
            {6, sorted({BP({1}, {1, 1})})}};
        t[BP({}, {3}).str()] = {{2, sorted({BP({3}, {})})},
                                {3, sorted({BP({2}, {1})})},
                                {4, sorted({BP({1}, {2})})},
                                {5, sorted({BP({}, {3})})}};
        t[BP({1}, {2}).str()] = {{2, sorted({BP({2, 1}, {}), BP({3}, {})})},
                                 {3, sorted({BP({1, 1}, {1}), BP({2}, {1})})},
                                 {4, sorted({BP({1}, {2})})}};
        t[BP({1, 1}, {1}).str()] = {{2, sorted({BP({2, 1}, {})})},
                                    {3, sorted({BP({1, 1}, {1})})}};
        t[BP({1, 1, 1}, {}).str()] = {{3, sorted({BP({1, 1, 1}, {})})}};
        t[BP({2}, {1}).str()] = {{1, sorted({BP({2, 1}, {}), BP({3}, {})})},
                                 {2, sorted({BP({2}, {1})})}};
        t[BP({2, 1}, {}).str()] = {{1, sorted({BP({2, 1}, {})})}};
        t[BP({3}, {}).str()] = {{0, sorted({BP({3}, {})})}};
        return t;
    }();
    return table;
}

std::string crit_green_table() {
    MParam m = MParam::integer(2);
    GreenSolution sol = solve_green(3, m);
    // The unique non-singleton similarity block.
    bool found_pair = false;
    for (const auto& block : sol.basis.blocks) {
        if (block.size() == 1) continue;
        if (block.size() != 2) return "unexpected block size";
        std::vector<BiPartition> members{sol.basis.items[static_cast<size_t>(block[0])],
                                         sol.basis.items[static_cast<size_t>(block[1])]};
        std::sort(members.begin(), members.end());
        if (!(members[0] == BP({1, 1}, {1}) && members[1] == BP({1, 1, 1}, {})))
            return "wrong non-singleton block";
        found_pair = true;
    }
    if (!found_pair) return "missing the paired block";
    const auto& want = expected_table();
    for (const auto& item : sol.basis.items) {
        GradedTable g = graded_table(sol, item);
        auto it = want.find(item.str());
        if (it == want.end()) return "missing expected column " + item.str();
        if (!(g.rows == it->second)) return "column " + item.str() + " differs";
    }
    return "";
}

// ---- criterion 3: central characters of the rank-3 table --------------

std::string crit_central_characters() {
    MParam m = MParam::integer(2);
    const std::vector<std::tuple<BiPartition, std::vector<int>, std::vector<int>>> want{
        {BP({}, {1, 1, 1}), {1, 1, 1}, {}},
        {BP({}, {2, 1}), {2, 1}, {}},
        {BP({1}, {1, 1}), {1, 1}, {1}},
        {BP({}, {3}), {3}, {}},
        {BP({1}, {2}), {2}, {1}},
        {BP({1, 1}, {1}), {1}, {1, 1}},
        {BP({1, 1, 1}, {}), {1}, {1, 1}},
        {BP({2}, {1}), {1}, {2}},
        {BP({2, 1}, {}), {}, {2, 1}},
        {BP({3}, {}), {}, {3}}};
    for (const auto& [item, aparts, bpart] : want) {
        SubspaceType type = f_bc(psi(item, m), 3, m);
        if (!(type.a_parts == P(aparts)) || !(type.b_part == P(bpart)))
            return item.str() + ": got " + type.str();
        // predicted central character agrees with the type's center
        if (!(predicted_central_character(item, m) == center_coordinates(type, m)))
            return item.str() + ": center mismatch";
    }
    return "";
}

// ---- criterion 4: the rank-22 worked example ---------------------------

std::string crit_rank22() {
    MParam m = MParam::integer(2);
    const std::vector<int> halves{7, 6, 6, 5, 5, 4, 4, 4, 3, 3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 0, 0};
    std::vector<int> coords;
    for (int h : halves) coords.push_back(2 * h);
    std::sort(coords.begin(), coords.end(), std::greater<int>());

    // Shapes realizing the coordinates, their jumps, and the class sizes.
    std::vector<Partition> shapes;
    for (const auto& lam : partitions_of(22))
        if (MTableau(lam, m).entry_multiset() == coords) shapes.push_back(lam);
    if (shapes.empty()) return "no shape realizes the coordinates";
    std::vector<int> wantJumps{0, 2, 6, 8, 12, 14};  // doubled (0,1,3,4,6,7)
    for (const auto& lam : shapes) {
        if (!is_residual(lam, m)) return lam.str() + " not residual";
        if (jumps(lam, m).twice_jumps != wantJumps) return lam.str() + ": wrong jumps";
    }
    if (shapes.size() != 15) return "expected 15 shapes";
    JumpSet j = make_jump_set(wantJumps, m);
    auto sigma = sigma_point(j, 22, m);
    if (sigma.size() != 15) return "expected 15 correspondents";

    // Flip path from (2^8 3^2) to the canonical shape.
    Partition start = P({3, 3, 2, 2, 2, 2, 2, 2, 2, 2});
    Partition canonical = join(BP({3, 6, 6}, {2, 5}), m);
    std::set<Partition> reached{start};
    std::vector<Partition> queue{start};
    while (!queue.empty()) {
        Partition cur = queue.back();
        queue.pop_back();
        for (int p = 2; p <= j.count(); ++p)
            if (auto next = flip(cur, p, m))
                if (reached.insert(*next).second) queue.push_back(*next);
    }
    if (!reached.count(canonical)) return "flip path misses the canonical shape";
    if (reached.size() != shapes.size()) return "flip graph does not cover the class";

    // Split/join round trip over all fifteen shapes.
    std::set<BiPartition> splits;
    for (const auto& lam : shapes) {
        BiPartition s = split(lam, m).result;
        if (!splits.insert(s).second) return "splitting not injective";
        if (!(join(s, m) == lam)) return lam.str() + ": join(split) differs";
        if (!std::binary_search(sigma.begin(), sigma.end(), s))
            return lam.str() + ": splitting outside the class";
    }

    // The generic types specializing onto this center: fifteen, all with an
    // empty A side.
    auto conf = confluence_class(CentralCharacter{coords}, 22, m);
    if (conf.size() != 15) return "expected a 15-element confluence class";
    for (const auto& [aparts, mu] : conf)
        if (!aparts.empty()) return "confluent type with a nonempty A side";
    return "";
}

// ---- criterion 5: Springer correspondents of the rank-35 subspace ------

std::string crit_rank35_sigma() {
    MParam m = MParam::integer(2);
    SubspaceType type{P({9, 7, 3}), P({6, 6, 1, 1, 1, 1})};
    auto sigma = sigma_subspace(type, m);
    if (sigma.size() != 16) return "expected 16 correspondents, got " +
                                   std::to_string(sigma.size());
    BiPartition rep = BP({1, 3, 4, 6, 6}, {2, 4, 4, 5});
    if (!std::binary_search(sigma.begin(), sigma.end(), rep)) return "representative missing";
    auto cls = similarity_class_of(rep, 35, m);
    if (!(cls == sigma)) return "sigma is not the full similarity class";

    UnipotentLabel label = psi(rep, m);
    if (!(label.parts == P({15, 13, 9, 9, 7, 7, 7, 3, 3, 1})))
        return "psi label " + label.str();
    for (const auto& member : sigma)
        if (!(psi(member, m) == label)) return "psi not constant on the class";

    SubspaceType back = f_bc(label, 35, m);
    if (!(back.a_parts == type.a_parts)) return "round trip changes the A side";
    if (!(center_coordinates(back, m) == center_coordinates(type, m)))
        return "round trip changes the center";

    if (!(phi(label, 35, m) == sigma)) return "phi misses the class";
    if (confluence_class(center_coordinates(type, m), 35, m).size() != 16)
        return "expected a 16-element confluence class";
    return "";
}

// ---- criterion 6: the half-integer rank-35 example ----------------------

std::string crit_rank35_half() {
    MParam m = MParam::of_twice(7);
    UnipotentLabel label{P({14, 13, 13, 12, 10, 7, 7, 4, 1, 1})};
    auto cls = phi(label, 35, m);
    if (cls.size() != 1 || !(cls.front() == BP({1, 2, 3, 4, 4, 4, 4}, {4, 9})))
        return "phi class mismatch";

    SubspaceType type = f_bc(label, 35, m);
    if (!(type.a_parts == P({13, 7, 1}))) return "wrong A side";
    if (jumps(type.b_part, m).twice_jumps != std::vector<int>({3, 9, 11, 13}))
        return "wrong jumps";

    auto step1 = trunc_ind(split(type.b_part, m).result, 13, m);
    if (!(step1 == std::vector<BiPartition>({BP({4, 4, 4, 4, 2}, {9})})))
        return "first induction step";
    auto step2 = trunc_ind(step1.front(), 7, m);
    if (!(step2 == std::vector<BiPartition>({BP({4, 4, 4, 4, 3, 2}, {9, 4})})))
        return "second induction step";
    auto step3 = trunc_ind(step2.front(), 1, m);
    if (!(step3 == std::vector<BiPartition>({BP({4, 4, 4, 4, 3, 2, 1}, {9, 4})})))
        return "third induction step";
    if (!similar(step3.front(), cls.front(), m)) return "induction misses the phi class";
    auto sigma = sigma_subspace(type, m);
    if (!(sigma == cls)) return "sigma differs from the phi class";
    return "";
}

// ---- criterion 7: the combinatorial property suites ---------------------

std::string crit_property_suites() {
    for (const CheckResult& r :
         {check_residual_equivalence(10), check_jump_weights(10), check_split_join(10),
          check_flips(10), check_springer_triangle(8), check_generic_count(8),
          check_phi_psi(8)})
        if (!r.pass) return r.name + ": " + r.detail;
    return "";
}

// ---- criterion 8: green solver invariants -------------------------------

std::string crit_green_invariants() {
    for (const CheckResult& r : {check_green_invariants(3, 6), check_green_refinement(3, 6, 5),
                                 check_green_sign_shift(3, 3)})
        if (!r.pass) return r.name + ": " + r.detail;
    for (int n = 1; n <= 3; ++n)
        for (int mm : {1, 2})
            if (!check_swap_symmetry(n, MParam::integer(mm)))
                return "swap symmetry n=" + std::to_string(n) + " m=" + std::to_string(mm);
    return "";
}

// ---- criterion 9: character-theory oracle -------------------------------

using Mat2 = std::array<std::array<int, 2>, 2>;

std::string crit_characters() {
    // Explicit 2x2 signed permutation matrices and their five characters.
    std::vector<Mat2> elems;
    for (int perm = 0; perm < 2; ++perm)
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) {
                Mat2 g{};
                if (perm == 0) {
                    g[0][0] = s1;
                    g[1][1] = s2;
                } else {
                    g[0][1] = s1;
                    g[1][0] = s2;
                }
                elems.push_back(g);
            }
    auto classify = [](const Mat2& g) -> BiPartition {
        if (g[0][0] != 0) {
            int negs = (g[0][0] < 0) + (g[1][1] < 0);
            if (negs == 0) return BP({1, 1}, {});
            if (negs == 1) return BP({1}, {1});
            return BP({}, {1, 1});
        }
        return (g[0][1] * g[1][0] == 1) ? BP({2}, {}) : BP({}, {2});
    };
    auto brute = [&](const BiPartition& irrep, const Mat2& g) -> long long {
        bool swapped = g[0][0] == 0;
        int negs = swapped ? (g[0][1] < 0) + (g[1][0] < 0) : (g[0][0] < 0) + (g[1][1] < 0);
        if (irrep == BP({2}, {})) return 1;
        if (irrep == BP({1, 1}, {})) return swapped ? -1 : 1;
        if (irrep == BP({}, {2})) return negs % 2 == 0 ? 1 : -1;
        if (irrep == BP({}, {1, 1})) return (swapped ? -1 : 1) * (negs % 2 == 0 ? 1 : -1);
        return g[0][0] + g[1][1];  // defining representation
    };
    CharTable t2 = char_table(2);
    for (const auto& g : elems) {
        BiPartition label = classify(g);
        for (size_t i = 0; i < t2.irreps.size(); ++i) {
            long long fromTable = 0;
            for (size_t c = 0; c < t2.classes.size(); ++c)
                if (t2.classes[c].pos_cycles == label.first &&
                    t2.classes[c].neg_cycles == label.second)
                    fromTable = t2.values[i][c];
            if (fromTable != brute(t2.irreps[i], g))
                return "table mismatch at " + t2.irreps[i].str();
        }
    }
    // Class sizes from the brute-force partition of the eight elements.
    std::map<BiPartition, long long> sizes;
    for (const auto& g : elems) ++sizes[classify(g)];
    for (const auto& c : t2.classes)
        if (sizes[{c.pos_cycles, c.neg_cycles}] != c.size) return "class size mismatch";

    for (const CheckResult& r : {check_char_orthogonality(6), check_fake_degrees(5)})
        if (!r.pass) return r.name + ": " + r.detail;
    return "";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1 rank-3 a-values", 1.0, crit_a_values},
        {"2 rank-3 graded tables", 10.0, crit_green_table},
        {"3 rank-3 central characters", 10.0, crit_central_characters},
        {"4 rank-22 point example", 5.0, crit_rank22},
        {"5 rank-35 subspace example", 30.0, crit_rank35_sigma},
        {"6 rank-35 half-integer example", 30.0, crit_rank35_half},
        {"7 property suites", 300.0, crit_property_suites},
        {"8 solver invariants", 600.0, crit_green_invariants},
        {"9 character oracle", 120.0, crit_characters},
    };
    bool all_ok = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            failure = c.run();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = failure.empty() && secs <= c.budget_seconds;
        if (failure.empty() && secs > c.budget_seconds) failure = "over time budget";
        std::printf("[%s] criterion %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                    failure.empty() ? "" : ": ", failure.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
