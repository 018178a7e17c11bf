#pragma once

#include <vector>

#include <specgap/errors.hpp>

namespace specgap {

// Symmetric tridiagonal matrix: diag.size() = m, off.size() = m-1.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> off;
    int size() const { return static_cast<int>(diag.size()); }
};

// Number of eigenvalues strictly below x (Sturm sequence pivot count).
int sturm_count(const SymTridiag& T, double x);

struct TridiagPair {
    double value = 0.0;
    std::vector<double> vector;  // 2-norm normalized
};

// The k smallest eigenvalues, ascending, by Sturm-count bisection.  Each
// final bracket is certified to contain exactly one eigenvalue (count
// difference 1); a multiple eigenvalue raises ConvergenceError.
std::vector<double> eig_tridiag_smallest_values(const SymTridiag& T, int k);

// Same, with eigenvectors by shifted inverse iteration (at most 10 sweeps,
// second vector re-orthogonalized against the first).
std::vector<TridiagPair> eig_tridiag_smallest(const SymTridiag& T, int k);

}  // namespace specgap
