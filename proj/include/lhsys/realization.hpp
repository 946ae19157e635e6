#pragma once

#include "lhsys/liealg.hpp"
#include "lhsys/polynomial.hpp"

#include <array>

namespace lhsys {

/// Block matrix J = (0, Id3; -Id3, 0) in the fixed coordinate ordering
/// z = (q1, q2, q3, p1, p2, p3).
const Mat6q& symplectic_J();

/// The canonical symplectic form w = dq1^dp1 + dq2^dp2 + dq3^dp3 as its
/// constant coefficient matrix (equal to J in the fixed ordering).
struct SymplecticForm {
    Mat6q matrix = symplectic_J();
    bool is_antisymmetric() const;
    Rational determinant() const;
};

/// Vector field on T*R^3 with affine-linear polynomial components,
/// X = (M z + m) . d/dz. All fields of the paper are homogeneous (m = 0);
/// the offset exists so lifts of degree-1 Hamiltonians stay representable.
class LinearVectorField {
public:
    LinearVectorField() : LinearVectorField(Mat6q::Zero(), Vec6q::Zero()) {}

    static LinearVectorField from_matrix(const Mat6q& m, const Vec6q& offset = Vec6q::Zero());

    const Mat6q& matrix() const { return matrix_; }
    const Vec6q& offset() const { return offset_; }

    /// Component polynomials on phase(3), degree <= 1; component a equals
    /// sum_b M_ab z_b + m_a by construction.
    const std::array<Polynomial, 6>& components() const { return components_; }
    const Polynomial& component(int a) const { return components_[static_cast<size_t>(a)]; }

    /// M^T J + J M == 0, exactly.
    bool is_hamiltonian() const;

    bool is_zero() const;

    Vec6d evaluate(const Vec6d& z) const;

    /// Directional derivative X(f) = sum_a component_a df/dz_a for f on phase(3).
    Polynomial apply(const Polynomial& f) const;

    bool operator==(const LinearVectorField& o) const {
        return matrix_ == o.matrix_ && offset_ == o.offset_;
    }
    bool operator!=(const LinearVectorField& o) const { return !(*this == o); }

    friend LinearVectorField operator+(const LinearVectorField& a, const LinearVectorField& b) {
        return from_matrix(a.matrix_ + b.matrix_, a.offset_ + b.offset_);
    }
    friend LinearVectorField operator-(const LinearVectorField& a, const LinearVectorField& b) {
        return from_matrix(a.matrix_ - b.matrix_, a.offset_ - b.offset_);
    }
    friend LinearVectorField operator*(const Rational& s, const LinearVectorField& f) {
        return from_matrix(s * f.matrix_, s * f.offset_);
    }

private:
    LinearVectorField(const Mat6q& m, const Vec6q& offset);
    Mat6q matrix_;
    Vec6q offset_;
    std::array<Polynomial, 6> components_;
};

/// The 21 vector fields of the sp(6,R) realization, in paper order X1..X21.
/// Generated from the fundamental representation (field matrices are its
/// transposes), which reproduces the printed list verbatim.
std::array<LinearVectorField, 21> realize_sp6(const Sp6Algebra& alg = sp6());

/// The 8 su(3) fields Y1..Y8, built twice: as the embedding's combinations
/// of the sp(6,R) fields and from the printed component expressions. The two
/// constructions are compared exactly; a mismatch throws std::logic_error.
std::array<LinearVectorField, 8> realize_su3(const Sp6Algebra& sp = sp6(),
                                             const Su3Algebra& su = su3());

/// Unique X with i_X w = dh under the fixed convention
/// X = sum_i (dh/dp_i d/dq_i - dh/dq_i d/dp_i). Requires deg(h) <= 2 (the
/// constant part is annihilated); throws std::invalid_argument otherwise.
LinearVectorField hamiltonian_lift(const Polynomial& h);

/// Inverse of the lift: the unique Hamiltonian with zero constant term.
/// Requires a Hamiltonian field (M^T J + J M = 0); throws std::domain_error
/// otherwise.
Polynomial hamiltonian_of(const LinearVectorField& x);

/// Lie bracket of affine-linear fields; equals the field with matrix
/// -[M_X, M_Y] under the fixed conventions.
LinearVectorField vf_bracket(const LinearVectorField& x, const LinearVectorField& y);

/// Hamiltonian functions of the 21 sp(6,R) fields (h1..h21) and of the 8
/// su(3) fields (h1'..h8'), from hamiltonian_of.
std::array<Polynomial, 21> sp6_hamiltonians(const Sp6Algebra& alg = sp6());
std::array<Polynomial, 8> su3_hamiltonians(const Sp6Algebra& sp = sp6(),
                                           const Su3Algebra& su = su3());

}  // namespace lhsys
