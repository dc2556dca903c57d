#pragma once

#include "nlcs/family.hpp"
#include "nlcs/fock.hpp"

namespace nlcs {

/// Deformed lowering operator A = a f(n^hat), acting as A|n> = sqrt(e_n)|n-1>.
/// Both factorizations a f(n^hat) and f(n^hat + 1) a are constructed and
/// compared entrywise; they must agree exactly.
FockOperator build_A(const RhoFamily& family, int dim);
/// A^dag, the conjugate transpose of build_A.
FockOperator build_A_dag(const RhoFamily& family, int dim);

/// Auxiliary operator B = a / f(n^hat); together with A it generates the
/// h4 algebra: [A, B^dag] = I and B^dag A = n^hat = A^dag B on the levels
/// below the truncation boundary.
FockOperator build_B(const RhoFamily& family, int dim);
FockOperator build_B_dag(const RhoFamily& family, int dim);

/// Normal-ordered Hamiltonian A^dag A = n^hat f^2(n^hat), diagonal with
/// entries e(n). This is the form consistent with the action identity
/// <J,gamma|H|J,gamma> = J.
FockOperator hamiltonian(const RhoFamily& family, int dim);

/// Symmetric-ordered Hamiltonian (A A^dag + A^dag A)/2 with diagonal
/// (e(n+1) + e(n))/2 away from the truncation boundary. Retained for the
/// comparative action-identity failure demonstration.
FockOperator manko_hamiltonian(const RhoFamily& family, int dim);

}  // namespace nlcs
