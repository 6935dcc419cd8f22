#pragma once

#include <string>
#include <vector>

#include "greenbn/residual.hpp"

namespace greenbn {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first failure witness, or a summary count
};

// Residuality via the multiplicity conditions agrees with the
// distinct-extremity criterion; all shapes of weight <= max_n, all ratios
// with |2m| <= 2 max_n.
CheckResult check_residual_equivalence(int max_n);

// M_p - M_{p+1} lies in {0,1,2} for p >= |m| on every tableau.
CheckResult check_multiplicity_ladder(int max_n);

// On residual shapes, jumps and extremities coincide among realized
// entries, and the positive jump count matches the multiplicity formula.
CheckResult check_jump_extremities(int max_n);

// Sum of (2 j_i + 1) over padded jumps is 2n + m^2 (resp. minus 1/4).
CheckResult check_jump_weights(int max_n);

// Splitting and joining are mutually inverse bijections between the
// residual shapes of a central character and its similarity class.
CheckResult check_split_join(int max_n);

// Every residual shape of a central character is reachable from the
// canonical one by flips, and flips preserve the splitting class.
CheckResult check_flips(int max_n);

// type -> central character is injective on the deduplicated orbit list.
CheckResult check_type_injectivity(int max_n);

// f_bc(psi(Sigma(L))) recovers the orbit of L, for every orbit and special
// ratio.
CheckResult check_springer_triangle(int max_n);

// Sigma(L) is a full similarity class of the size of the confluence class.
CheckResult check_confluence_counts(int max_n);

// At generic ratios the central characters are as many as the bipartitions.
CheckResult check_generic_count(int max_n);

// phi and psi are mutually inverse between unipotent labels and classes.
CheckResult check_phi_psi(int max_n);

// Deformed correspondents: the eps path lands inside the plain class, and
// consecutive ratios glue (Sigma at m-eps equals Sigma at m'+eps).
CheckResult check_deformed_sigma(int max_n);

// strip_insertable agrees with the existence of a shape realizing the
// enlarged entry multiset.
CheckResult check_strip_insertable(int max_n);

// Shift invariance of a-values and similarity, equivalence-relation and
// class-constancy checks, singleton classes for |m| > n-1, and the swap
// symmetry at m = 0.
CheckResult check_symbol_invariants(int max_n);

// Green solver invariants over n <= max_n and |2m| <= max_twice_m.
CheckResult check_green_invariants(int max_n, int max_twice_m);

// Solver determinism across refinement seeds.
CheckResult check_green_refinement(int max_n, int max_twice_m, int num_seeds);

// P at -m vs swapped P at m.
CheckResult check_green_swap(int max_n);

// Monomial shift of the sign-representation columns.
CheckResult check_green_sign_shift(int max_n, int max_m);

// Character table orthogonality for ranks <= max_n.
CheckResult check_char_orthogonality(int max_n);

// Fake degrees: R(triv) = 1, R(sign) = t^{n^2}, nonnegative integer
// coefficients, and sum dim * R = Poincare polynomial.
CheckResult check_fake_degrees(int max_n);

// All suites with the standard bounds derived from max_n.
std::vector<CheckResult> run_verification(int max_n);

}  // namespace greenbn
