#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "greenbn/characters.hpp"
#include "greenbn/linalg.hpp"
#include "greenbn/residual.hpp"
#include "greenbn/symbol.hpp"

namespace greenbn {

// Solution of P Lambda P^T = Omega over the ordered basis: P vanishes
// except on the diagonal and across strictly increasing similarity blocks,
// with P_{A,A} = t^{a(A)}; Lambda is symmetric and block diagonal.
struct GreenSolution {
    OrderedBasis basis;
    MatrixRF P;
    MatrixRF Lambda;
    MatrixRF Omega;

    // Coefficient of t^l in P[row][col] (throws if that entry is not a
    // polynomial).
    Rational p_coeff(int row, int col, int l) const;
};

// Solves the matrix equation for rank n at ratio m by block back
// substitution over the exact rational function field. The result is
// verified by multiplication before returning.
GreenSolution solve_green(int n, MParam m, uint64_t refinement_seed = 0);
// Same, but reusing a precomputed character table / omega matrix in
// bipartition order.
GreenSolution solve_green(const CharTable& table, const MatrixRF& omega_bip, MParam m,
                          uint64_t refinement_seed = 0);

// Degree-indexed rows of one column of P: degree -> row labels with
// multiplicity (coefficients of the polynomials P_{B,A}).
struct GradedTable {
    BiPartition column;
    std::map<int, std::vector<BiPartition>> rows;
};

// twist applies the sign-character relabeling B -> B (x) sign to the rows.
GradedTable graded_table(const GreenSolution& sol, const BiPartition& a, bool twist = false);

// P at -m equals P at m with both indices swapped.
bool check_swap_symmetry(int n, MParam m, uint64_t seed = 0);

// Columns of the sign representation at ratio m and at 1 (resp. 1/2) differ
// by the monomial t^{n(m-1)} (resp. t^{n(m-1/2)}).
bool check_sign_shift(int n, MParam m, uint64_t seed = 0);

// P entries, as a map (row bipartition, column bipartition) -> polynomial,
// agree across the given refinement seeds.
bool check_refinement_independence(int n, MParam m, const std::vector<uint64_t>& seeds);

// Structural invariants of a computed solution: exact residual, diagonal
// monomials, block supports, degree bounds and polynomiality.
struct SolutionReport {
    bool exact = false;
    bool polynomial_entries = false;
    bool integer_coefficients = false;
    bool degree_bounds = false;
    bool support_ok = false;
    bool ok() const {
        return exact && polynomial_entries && integer_coefficients && degree_bounds && support_ok;
    }
};

SolutionReport verify_solution(const GreenSolution& sol);

}  // namespace greenbn
