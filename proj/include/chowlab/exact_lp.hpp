#pragma once

#include "chowlab/chow.hpp"
#include "chowlab/func.hpp"
#include "chowlab/simplex.hpp"

namespace chowlab {

// Ground-truth oracle for tiny n: recovers the truth table of an LTF from its
// exact Chow vector by solving the feasibility LP over g(x) in [-1,1] with
// the n+1 Chow equalities. The feasible set is a single point when alpha is
// the exact Chow vector of an LTF, so the solve either returns that table
// (entries within 1e-6 of +-1, then snapped), raises NonIntegralError for
// inexact alpha that still lands inside the Chow body, or raises
// InfeasibleError.
TruthTable solve_exact_chow(const ChowVector& alpha);

// Recovers a weight representation reproducing a Boolean table exactly, via
// margin-1 separation: f(x) (w.x - theta) >= 1 for all 2^n points. Raises
// InfeasibleError when the table is not an LTF (e.g. parity).
Ltf recover_weights(const TruthTable& table);

// chow_exact -> solve_exact_chow round trip; true iff the recovered table
// equals tabulate(f) exactly.
bool verify_chow_uniqueness(const Ltf& f);

inline constexpr double kSnapTol = 1e-6;

}  // namespace chowlab
