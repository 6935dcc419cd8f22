#include "greenbn/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "greenbn/green.hpp"
#include "greenbn/springer.hpp"

namespace greenbn {

namespace {

std::vector<MParam> ratios_between(int lo_twice, int hi_twice) {
    std::vector<MParam> out;
    for (int t = lo_twice; t <= hi_twice; ++t) out.push_back(MParam::of_twice(t));
    return out;
}

std::vector<MParam> special_ratios(int n) {
    if (n < 1) return {};
    return ratios_between(-2 * (n - 1), 2 * (n - 1));
}

CheckResult pass(const std::string& name, long long cases) {
    std::ostringstream os;
    os << cases << " cases";
    return {name, true, os.str()};
}

CheckResult fail(const std::string& name, const std::string& witness) {
    return {name, false, witness};
}

int mult_of(const std::map<int, int>& mult, int key) {
    auto it = mult.find(key);
    return it == mult.end() ? 0 : it->second;
}

// Central-character groups of residual shapes at a fixed ratio.
std::map<std::vector<int>, std::vector<Partition>> residual_groups(int n, MParam m) {
    std::map<std::vector<int>, std::vector<Partition>> groups;
    for (const auto& lam : partitions_of(n))
        if (is_residual(lam, m)) groups[MTableau(lam, m).entry_multiset()].push_back(lam);
    return groups;
}

}  // namespace

CheckResult check_residual_equivalence(int max_n) {
    long long cases = 0;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& m : ratios_between(-2 * n, 2 * n)) {
                ++cases;
                if (is_residual(lam, m) != has_distinct_extremities(lam, m))
                    return fail("residual-equivalence",
                                lam.str() + " m=" + m.str());
            }
    return pass("residual-equivalence", cases);
}

CheckResult check_multiplicity_ladder(int max_n) {
    long long cases = 0;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& m : ratios_between(-2 * n, 2 * n)) {
                ++cases;
                auto mult = multiplicities(lam, m);
                int tam = m.abs().twice_m;
                int top = mult.empty() ? 0 : mult.rbegin()->first;
                int start = m.is_integer() ? (tam > 0 ? tam : 2) : std::max(tam, 1);
                for (int l = start; l <= top; l += 2) {
                    int d = mult_of(mult, l) - mult_of(mult, l + 2);
                    if (d < 0 || d > 2)
                        return fail("multiplicity-ladder", lam.str() + " m=" + m.str());
                }
                int lowStart = m.is_integer() ? 2 : 1;
                for (int l = lowStart; l < tam; l += 2) {
                    int d = mult_of(mult, l) - mult_of(mult, l + 2);
                    if (d < -1 || d > 1)
                        return fail("multiplicity-ladder(low)", lam.str() + " m=" + m.str());
                }
            }
    return pass("multiplicity-ladder", cases);
}

CheckResult check_jump_extremities(int max_n) {
    long long cases = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& m : ratios_between(-2 * n, 2 * n)) {
                if (!is_residual(lam, m)) continue;
                ++cases;
                auto mult = multiplicities(lam, m);
                JumpSet j = jumps(lam, m);
                std::set<int> jumpSet(j.twice_jumps.begin(), j.twice_jumps.end());
                std::set<int> extSet;
                for (int e : extremities(lam, m)) extSet.insert(e);
                for (const auto& [value, count] : mult) {
                    bool isJump = jumpSet.count(value) > 0;
                    bool isExt = extSet.count(value) > 0;
                    if (isJump != isExt)
                        return fail("jumps-vs-extremities", lam.str() + " m=" + m.str());
                }
                int positive = 0;
                for (int v : j.twice_jumps)
                    if (v > 0) ++positive;
                int tam = m.abs().twice_m;
                int expected;
                if (tam == 0) expected = mult_of(mult, 2);
                else if (m.is_integer()) expected = mult_of(mult, 2) + tam / 2 - 1;
                else expected = mult_of(mult, 1) + (tam - 1) / 2;
                if (positive != expected)
                    return fail("positive-jump-count", lam.str() + " m=" + m.str());
            }
    return pass("jumps-vs-extremities", cases);
}

CheckResult check_jump_weights(int max_n) {
    long long cases = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& m : ratios_between(-2 * n, 2 * n)) {
                if (!is_residual(lam, m)) continue;
                ++cases;
                JumpSet j = jumps(lam, m);
                long long sum = 0;  // sum of 2 j_i + 1 = twice_j + 1
                for (int v : j.twice_jumps) sum += v + 1;
                int tam = m.abs().twice_m;
                long long want =
                    2LL * n + (m.is_integer() ? (1LL * tam * tam) / 4 : (1LL * tam * tam - 1) / 4);
                if (sum != want) return fail("jump-weights", lam.str() + " m=" + m.str());
            }
    return pass("jump-weights", cases);
}

CheckResult check_split_join(int max_n) {
    long long cases = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& m : special_ratios(n))
            for (const auto& [cc, group] : residual_groups(n, m)) {
                ++cases;
                JumpSet j = jumps(group.front(), m);
                BiPartition rep = xi_eta_of_point(j, m);
                Partition canonical = join(rep, m);
                if (split(canonical, m).result != rep)
                    return fail("split-of-canonical", canonical.str() + " m=" + m.str());
                auto cls = similarity_class_of(rep, n, m);
                if (cls.size() != group.size())
                    return fail("class-size", rep.str() + " m=" + m.str());
                std::set<BiPartition> seen;
                for (const auto& lam : group) {
                    BiPartition s = split(lam, m).result;
                    if (!std::binary_search(cls.begin(), cls.end(), s))
                        return fail("split-into-class", lam.str() + " m=" + m.str());
                    if (!seen.insert(s).second)
                        return fail("split-injective", lam.str() + " m=" + m.str());
                    if (join(s, m) != lam)
                        return fail("join-split-roundtrip", lam.str() + " m=" + m.str());
                }
            }
    return pass("split-join-bijection", cases);
}

CheckResult check_flips(int max_n) {
    long long cases = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& m : special_ratios(n))
            for (const auto& [cc, group] : residual_groups(n, m)) {
                ++cases;
                Partition start = join(xi_eta_of_point(jumps(group.front(), m), m), m);
                auto key0 = symbol_class_key(split(start, m).result, m);
                std::set<Partition> reached{start};
                std::vector<Partition> queue{start};
                while (!queue.empty()) {
                    Partition cur = queue.back();
                    queue.pop_back();
                    int count = jumps(cur, m).count();
                    for (int p = 2; p <= count; ++p) {
                        auto next = flip(cur, p, m);
                        if (!next) continue;
                        if (symbol_class_key(split(*next, m).result, m) != key0)
                            return fail("flip-similarity", cur.str() + " p=" + std::to_string(p));
                        auto back = flip(*next, p, m);
                        if (!back || *back != cur)
                            return fail("flip-roundtrip", cur.str() + " p=" + std::to_string(p));
                        if (reached.insert(*next).second) queue.push_back(*next);
                    }
                }
                if (reached.size() != group.size() ||
                    !std::equal(reached.begin(), reached.end(), group.begin()))
                    return fail("flip-connectivity", start.str() + " m=" + m.str());
            }
    return pass("flip-connectivity", cases);
}

CheckResult check_type_injectivity(int max_n) {
    long long cases = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& m : special_ratios(n)) {
            std::set<CentralCharacter> seen;
            for (const auto& type : enumerate_subspaces(n, m)) {
                ++cases;
                if (!seen.insert(center_coordinates(type, m)).second)
                    return fail("type-injectivity", type.str() + " m=" + m.str());
            }
        }
    return pass("type-injectivity", cases);
}

CheckResult check_springer_triangle(int max_n) {
    long long cases = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& m : special_ratios(n))
            for (const auto& type : enumerate_subspaces(n, m)) {
                ++cases;
                auto sigma = sigma_subspace(type, m);
                if (sigma.empty()) return fail("springer-triangle", type.str());
                UnipotentLabel label = psi(sigma.front(), m);
                SubspaceType back = f_bc(label, n, m);
                if (!(center_coordinates(back, m) == center_coordinates(type, m)) ||
                    !(back.a_parts == type.a_parts))
                    return fail("springer-triangle", type.str() + " m=" + m.str());
            }
    return pass("springer-triangle", cases);
}

CheckResult check_confluence_counts(int max_n) {
    long long cases = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& m : special_ratios(n))
            for (const auto& type : enumerate_subspaces(n, m)) {
                ++cases;
                auto sigma = sigma_subspace(type, m);
                auto cls = similarity_class_of(sigma.front(), n, m);
                if (!(sigma == cls))
                    return fail("sigma-full-class", type.str() + " m=" + m.str());
                auto conf = confluence_class(center_coordinates(type, m), n, m);
                if (conf.size() != sigma.size())
                    return fail("confluence-count", type.str() + " m=" + m.str());
            }
    return pass("confluence-counts", cases);
}

CheckResult check_generic_count(int max_n) {
    long long cases = 0;
    for (int n = 1; n <= max_n; ++n)
        for (int tm : {2 * n - 1, 2 * n, 2 * n + 1, 4 * n}) {
            MParam m = MParam::of_twice(tm);
            if (is_special_ratio(m, n)) continue;
            ++cases;
            size_t want = bipartitions(n).size();
            if (enumerate_subspaces(n, m).size() != want)
                return fail("generic-count", "n=" + std::to_string(n) + " m=" + m.str());
            for (const auto& block : order_basis(n, m).blocks)
                if (block.size() != 1)
                    return fail("generic-singletons", "n=" + std::to_string(n) + " m=" + m.str());
        }
    return pass("generic-count", cases);
}

CheckResult check_phi_psi(int max_n) {
    long long cases = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& m : special_ratios(n)) {
            auto labels = unipotent_set(n, m);
            OrderedBasis basis = order_basis(n, m);
            if (labels.size() != basis.blocks.size())
                return fail("phi-psi-count", "n=" + std::to_string(n) + " m=" + m.str());
            for (const auto& label : labels) {
                ++cases;
                auto cls = phi(label, n, m);
                if (!(psi(cls.front(), m) == label))
                    return fail("psi-phi", label.str() + " m=" + m.str());
            }
            for (const auto& block : basis.blocks) {
                ++cases;
                const BiPartition& rep = basis.items[static_cast<size_t>(block.front())];
                UnipotentLabel label = psi(rep, m);
                auto cls = phi(label, n, m);
                std::vector<BiPartition> want;
                for (int idx : block) want.push_back(basis.items[static_cast<size_t>(idx)]);
                std::sort(want.begin(), want.end());
                if (!(cls == want)) return fail("phi-psi", rep.str() + " m=" + m.str());
            }
        }
    return pass("phi-psi-roundtrip", cases);
}

CheckResult check_deformed_sigma(int max_n) {
    long long cases = 0;
    for (int n = 1; n <= max_n; ++n) {
        // Gluing between consecutive ratios, on every generic type.
        for (int tm = -2 * n + 1; tm <= 2 * n; ++tm) {
            MParam hi = MParam::of_twice(tm), lo = MParam::of_twice(tm - 1);
            for (int a = 0; a <= n; ++a)
                for (const auto& alpha : partitions_of(a))
                    for (const auto& mu : partitions_of(n - a)) {
                        ++cases;
                        SubspaceType type{alpha, mu};
                        auto below = sigma_subspace(type, hi, SymbolVariant::MinusEps);
                        auto above = sigma_subspace(type, lo, SymbolVariant::PlusEps);
                        if (!(below == above))
                            return fail("deformed-gluing", type.str() + " m=" + hi.str());
                    }
        }
        // The eps path generates the plain class at the ratio itself.
        for (const auto& m : special_ratios(n))
            for (const auto& type : enumerate_subspaces(n, m)) {
                ++cases;
                auto plain = sigma_subspace(type, m);
                for (auto variant : {SymbolVariant::PlusEps, SymbolVariant::MinusEps}) {
                    auto eps = sigma_subspace(type, m, variant);
                    if (eps.size() != 1 ||
                        !std::binary_search(plain.begin(), plain.end(), eps.front()))
                        return fail("deformed-inside-plain", type.str() + " m=" + m.str());
                    auto closure = similarity_class_of(eps.front(), n, m);
                    if (!(closure == plain))
                        return fail("deformed-closure", type.str() + " m=" + m.str());
                }
            }
    }
    return pass("deformed-sigma", cases);
}

CheckResult check_strip_insertable(int max_n) {
    long long cases = 0;
    for (int n = 2; n <= max_n; ++n)
        for (int k = 0; k < n; ++k) {
            int t = n - k;
            for (const auto& nu : partitions_of(k))
                for (const auto& m : ratios_between(-2 * n, 2 * n)) {
                    if (!is_residual(nu, m)) continue;
                    ++cases;
                    std::vector<int> target = MTableau(nu, m).entry_multiset();
                    // A-part of size t contributes |{-(t-1)/2..(t-1)/2}|.
                    for (int i = 0; i < t; ++i) {
                        int tw = -(t - 1) + 2 * i;
                        target.push_back(tw < 0 ? -tw : tw);
                    }
                    std::sort(target.begin(), target.end(), std::greater<int>());
                    bool oracle = false;
                    for (const auto& mu : partitions_of(n))
                        if (MTableau(mu, m).entry_multiset() == target) {
                            oracle = true;
                            break;
                        }
                    if (oracle != strip_insertable(nu, t, m))
                        return fail("strip-insertable",
                                    nu.str() + " t=" + std::to_string(t) + " m=" + m.str());
                }
        }
    return pass("strip-insertable", cases);
}

CheckResult check_symbol_invariants(int max_n) {
    long long cases = 0;
    for (int n = 0; n <= max_n; ++n) {
        auto bips = bipartitions(n);
        for (const auto& m : ratios_between(-2 * n, 2 * n)) {
            // Shift invariance of the class key comparison and of a-values.
            for (const auto& a : bips) {
                ++cases;
                auto k1 = msymbol(a, m, n).pooled();
                auto k2 = msymbol(a, m, n + 2).pooled();
                auto z1 = msymbol(BiPartition{}, m, n).pooled();
                auto z2 = msymbol(BiPartition{}, m, n + 2).pooled();
                auto sum = [](const std::vector<SymEntry>& v) {
                    long long acc = 0;
                    for (size_t i = 0; i < v.size(); ++i)
                        acc += static_cast<long long>(v[i].twice_value) *
                               (static_cast<long long>(v.size()) - 1 - static_cast<long long>(i));
                    return acc;
                };
                if (sum(k1) - sum(z1) != sum(k2) - sum(z2))
                    return fail("a-shift-invariance", a.str() + " m=" + m.str());
            }
            // a-values constant on blocks; singletons beyond the special range.
            OrderedBasis basis = order_basis(n, m);
            for (const auto& block : basis.blocks) {
                ++cases;
                for (int idx : block)
                    if (!(basis.a_values[static_cast<size_t>(idx)] ==
                          basis.a_values[static_cast<size_t>(block.front())]))
                        return fail("a-constant-on-class", m.str());
                if (!is_special_ratio(m, n) && block.size() != 1)
                    return fail("generic-singleton-class", m.str());
            }
        }
        // Swap symmetry of similarity at m = 0.
        for (const auto& a : bips) {
            ++cases;
            if (n > 0 && !similar(a, a.swapped(), MParam::integer(0)))
                return fail("swap-at-zero", a.str());
        }
    }
    return pass("symbol-invariants", cases);
}

CheckResult check_green_invariants(int max_n, int max_twice_m) {
    long long cases = 0;
    for (int n = 0; n <= max_n; ++n) {
        CharTable table = char_table(n);
        MatrixRF w = omega(table);
        for (int tm = -max_twice_m; tm <= max_twice_m; ++tm) {
            ++cases;
            MParam m = MParam::of_twice(tm);
            GreenSolution sol = solve_green(table, w, m);
            SolutionReport rep = verify_solution(sol);
            if (!rep.ok())
                return fail("green-invariants", "n=" + std::to_string(n) + " m=" + m.str());
            // Predicted central characters: constant on blocks, distinct
            // across blocks.
            if (n >= 1) {
                std::set<CentralCharacter> seen;
                for (const auto& block : sol.basis.blocks) {
                    CentralCharacter cc = predicted_central_character(
                        sol.basis.items[static_cast<size_t>(block.front())], m);
                    for (int idx : block)
                        if (!(predicted_central_character(
                                  sol.basis.items[static_cast<size_t>(idx)], m) == cc))
                            return fail("predicted-cc-constant",
                                        "n=" + std::to_string(n) + " m=" + m.str());
                    if (!seen.insert(cc).second)
                        return fail("predicted-cc-distinct",
                                    "n=" + std::to_string(n) + " m=" + m.str());
                }
            }
        }
    }
    return pass("green-invariants", cases);
}

CheckResult check_green_refinement(int max_n, int max_twice_m, int num_seeds) {
    long long cases = 0;
    std::vector<uint64_t> seeds;
    for (int s = 0; s < num_seeds; ++s) seeds.push_back(static_cast<uint64_t>(s));
    for (int n = 1; n <= max_n; ++n)
        for (int tm = 0; tm <= max_twice_m; ++tm) {
            ++cases;
            if (!check_refinement_independence(n, MParam::of_twice(tm), seeds))
                return fail("refinement-independence",
                            "n=" + std::to_string(n) + " tm=" + std::to_string(tm));
        }
    return pass("refinement-independence", cases);
}

CheckResult check_green_swap(int max_n) {
    long long cases = 0;
    for (int n = 1; n <= max_n; ++n)
        for (int tm : {0, 1, 2, 3, 4}) {
            ++cases;
            if (!check_swap_symmetry(n, MParam::of_twice(tm)))
                return fail("swap-symmetry", "n=" + std::to_string(n) + " tm=" + std::to_string(tm));
        }
    return pass("swap-symmetry", cases);
}

CheckResult check_green_sign_shift(int max_n, int max_m) {
    // At m = 0 the sign class is no longer a singleton (swapping components
    // preserves similarity), so the monomial shift only holds from 1/2 up.
    long long cases = 0;
    for (int n = 1; n <= max_n; ++n)
        for (int tm = 1; tm <= 2 * max_m; ++tm) {
            ++cases;
            if (!check_sign_shift(n, MParam::of_twice(tm)))
                return fail("sign-shift", "n=" + std::to_string(n) + " tm=" + std::to_string(tm));
        }
    return pass("sign-shift", cases);
}

CheckResult check_char_orthogonality(int max_n) {
    long long cases = 0;
    for (int n = 0; n <= max_n; ++n) {
        CharTable t = char_table(n);
        const long long order = group_order(n);
        for (int a = 0; a < t.num_irreps(); ++a)
            for (int b = a; b < t.num_irreps(); ++b) {
                ++cases;
                long long acc = 0;
                for (int c = 0; c < t.num_classes(); ++c)
                    acc += t.classes[static_cast<size_t>(c)].size *
                           t.values[static_cast<size_t>(a)][static_cast<size_t>(c)] *
                           t.values[static_cast<size_t>(b)][static_cast<size_t>(c)];
                if (acc != (a == b ? order : 0))
                    return fail("row-orthogonality", "n=" + std::to_string(n));
            }
        for (int c = 0; c < t.num_classes(); ++c)
            for (int d = c; d < t.num_classes(); ++d) {
                ++cases;
                long long acc = 0;
                for (int a = 0; a < t.num_irreps(); ++a)
                    acc += t.values[static_cast<size_t>(a)][static_cast<size_t>(c)] *
                           t.values[static_cast<size_t>(a)][static_cast<size_t>(d)];
                long long want = (c == d) ? order / t.classes[static_cast<size_t>(c)].size : 0;
                if (acc != want) return fail("column-orthogonality", "n=" + std::to_string(n));
            }
    }
    return pass("character-orthogonality", cases);
}

CheckResult check_fake_degrees(int max_n) {
    long long cases = 0;
    for (int n = 1; n <= max_n; ++n) {
        CharTable t = char_table(n);
        Poly p0 = poincare(n);
        Poly sum;
        for (const auto& a : t.irreps) {
            ++cases;
            Poly r = fake_degree(t, a);
            for (const auto& coeff : r.coeffs())
                if (!coeff.is_integer() || coeff.sign() < 0)
                    return fail("fake-degree-coeffs", a.str() + " n=" + std::to_string(n));
            long long dim = 0;  // value on the identity class (1^n, -)
            for (const auto& c : t.classes)
                if (c.neg_cycles.empty() && c.pos_cycles.length() == n) dim = char_value(a, c);
            Poly term = r;
            term *= Rational(dim);
            sum += term;
        }
        if (!(sum == p0)) return fail("coinvariant-sum", "n=" + std::to_string(n));
        BiPartition triv{Partition({n}), Partition()};
        BiPartition sign{Partition(), Partition(std::vector<int>(static_cast<size_t>(n), 1))};
        if (!(fake_degree(t, triv) == Poly::one()))
            return fail("fake-degree-triv", "n=" + std::to_string(n));
        if (!(fake_degree(t, sign) == Poly::monomial(Rational(1), n * n)))
            return fail("fake-degree-sign", "n=" + std::to_string(n));
    }
    return pass("fake-degrees", cases);
}

std::vector<CheckResult> run_verification(int max_n) {
    auto capped = [max_n](int bound) { return std::min(max_n, bound); };
    std::vector<CheckResult> out;
    out.push_back(check_residual_equivalence(capped(10)));
    out.push_back(check_multiplicity_ladder(capped(10)));
    out.push_back(check_jump_extremities(capped(10)));
    out.push_back(check_jump_weights(capped(10)));
    out.push_back(check_split_join(capped(10)));
    out.push_back(check_flips(capped(10)));
    out.push_back(check_type_injectivity(capped(8)));
    out.push_back(check_springer_triangle(capped(8)));
    out.push_back(check_confluence_counts(capped(8)));
    out.push_back(check_generic_count(capped(8)));
    out.push_back(check_phi_psi(capped(8)));
    out.push_back(check_deformed_sigma(capped(6)));
    out.push_back(check_strip_insertable(capped(8)));
    out.push_back(check_symbol_invariants(capped(6)));
    out.push_back(check_green_invariants(capped(3), 6));
    out.push_back(check_green_refinement(capped(3), 6, 5));
    out.push_back(check_green_swap(capped(3)));
    out.push_back(check_green_sign_shift(capped(3), 3));
    out.push_back(check_char_orthogonality(capped(6)));
    out.push_back(check_fake_degrees(capped(5)));
    return out;
}

}  // namespace greenbn
