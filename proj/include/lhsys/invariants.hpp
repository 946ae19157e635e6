#pragma once

#include "lhsys/realization.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lhsys {

/// Commuting symbols for the 21 canonical generators, "X(1,1)".."X(3,-3)",
/// in basis order.
const VariableSpace::Ptr& sp6_symbol_space();

/// Commuting symbols h1..h21 for the Hamiltonian functions.
const VariableSpace::Ptr& h_symbol_space();

/// Casimir invariants extracted from the characteristic polynomial
///   det(D - lambda Id6) = lambda^6 + c2' lambda^4 + c4' lambda^2 + c6'
/// of the pairing-weighted parametric representation matrix D (the displayed
/// 6x6 matrix with the six diagonal boson symbols carrying weight 2, which
/// is the trace-form dual pairing up to a global factor). Odd coefficients
/// vanish identically; the returned set is normalized as C_{2k} = (-1)^k c',
/// which reproduces the Killing-form normalization of the printed C2.
struct CasimirSet {
    Polynomial c2, c4, c6;  // over sp6_symbol_space()
};

CasimirSet casimir_charpoly(const Sp6Algebra& alg = sp6());

/// Coefficients of det(D - lambda Id6) by lambda power, 0..6, for the parity
/// check (exposed for tests and the verify report).
std::array<Polynomial, 7> charpoly_coefficients(const Sp6Algebra& alg = sp6());

/// The quadratic Casimir written in the Hamiltonian functions: the exact
/// 12-term polynomial over h1..h21.
Polynomial c2_in_h();

/// Number of diagonal copies a polynomial on (T*R^3)^k lives on; throws when
/// the space is not a prolonged phase space.
int copy_count(const VariableSpace& space);

/// h_i^{(k)} = sum_l h_i(q^(l), p^(l)) over the prolonged space; i is 0-based.
Polynomial prolonged_hamiltonian(int i, int copies, const Sp6Algebra& alg = sp6());

/// F^(k) = C2(h_1^{(k)}, ..., h_21^{(k)}) as a polynomial on (T*R^3)^k.
Polynomial f_sym(int copies, const Sp6Algebra& alg = sp6());

/// Numeric F^(k) at a prolonged point (the literal substitution into C2).
double f_value(std::span<const Vec6d> copies);

/// Symplectic pairing Omega(x, y) = sum_i (p_i(y) q_i(x) - p_i(x) q_i(y)).
double omega(const Vec6d& x, const Vec6d& y);

/// F^(2) on a pair of points: -Omega(x, y)^2.
double f2_pair(const Vec6d& x, const Vec6d& y);

/// Copy permutation S_ij on a prolonged polynomial (1-based copy labels).
/// An involution; throws on out-of-range or equal copies.
Polynomial permute_copies(const Polynomial& f, int i, int j);

/// Components of the diagonal prolongation of a field to k copies.
std::vector<Polynomial> prolong_field(const LinearVectorField& x, int copies);

/// Lie derivative of f along the diagonal prolongation of x.
Polynomial prolong_apply(const LinearVectorField& x, int copies, const Polynomial& f);

/// Smallest s such that the prolonged basis fields are linearly independent
/// at a generic point of (T*R^3)^s, computed by an exact rank test at seeded
/// random integer points.
int minimal_prolongation_number(const std::array<LinearVectorField, 21>& fields,
                                std::uint64_t seed, int max_copies = 8);

}  // namespace lhsys
