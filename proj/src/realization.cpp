#include "lhsys/realization.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace lhsys {

namespace {

const VariableSpace::Ptr& phase3() {
    static const VariableSpace::Ptr space = VariableSpace::phase(3);
    return space;
}

Rational det6(const Mat6q& m) {
    // Cofactor expansion; exact and cheap at this size.
    std::vector<std::vector<Rational>> a(6, std::vector<Rational>(6));
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) a[r][c] = m(r, c);
    std::function<Rational(std::vector<std::vector<Rational>>&)> rec =
        [&](std::vector<std::vector<Rational>>& x) -> Rational {
        const size_t n = x.size();
        if (n == 1) return x[0][0];
        Rational acc = 0;
        int sign = 1;
        for (size_t k = 0; k < n; ++k, sign = -sign) {
            if (x[0][k] == 0) continue;
            std::vector<std::vector<Rational>> sub(n - 1, std::vector<Rational>(n - 1));
            for (size_t r = 1; r < n; ++r) {
                size_t cc = 0;
                for (size_t c = 0; c < n; ++c) {
                    if (c == k) continue;
                    sub[r - 1][cc++] = x[r][c];
                }
            }
            acc += Rational(sign) * x[0][k] * rec(sub);
        }
        return acc;
    };
    return rec(a);
}

}  // namespace

const Mat6q& symplectic_J() {
    static const Mat6q j = [] {
        Mat6q m = Mat6q::Zero();
        for (int i = 0; i < 3; ++i) {
            m(i, 3 + i) = 1;
            m(3 + i, i) = -1;
        }
        return m;
    }();
    return j;
}

bool SymplecticForm::is_antisymmetric() const { return matrix.transpose() == -matrix; }

Rational SymplecticForm::determinant() const { return det6(matrix); }

LinearVectorField::LinearVectorField(const Mat6q& m, const Vec6q& offset)
    : matrix_(m), offset_(offset) {
    const auto& space = phase3();
    for (int a = 0; a < 6; ++a) {
        Polynomial c = Polynomial::constant(space, offset_(a));
        for (int b = 0; b < 6; ++b)
            if (matrix_(a, b) != 0) c += Polynomial::variable(space, b, matrix_(a, b));
        components_[static_cast<size_t>(a)] = c;
    }
}

LinearVectorField LinearVectorField::from_matrix(const Mat6q& m, const Vec6q& offset) {
    return LinearVectorField(m, offset);
}

bool LinearVectorField::is_hamiltonian() const {
    const Mat6q& j = symplectic_J();
    const Mat6q z = matrix_.transpose() * j + j * matrix_;
    return z == Mat6q::Zero();
}

bool LinearVectorField::is_zero() const {
    return matrix_ == Mat6q::Zero() && offset_ == Vec6q::Zero();
}

Vec6d LinearVectorField::evaluate(const Vec6d& z) const {
    Vec6d r;
    for (int a = 0; a < 6; ++a) {
        double acc = to_double(offset_(a));
        for (int b = 0; b < 6; ++b) acc += to_double(matrix_(a, b)) * z(b);
        r(a) = acc;
    }
    return r;
}

Polynomial LinearVectorField::apply(const Polynomial& f) const {
    if (!f.space()->same_as(*phase3()))
        throw std::invalid_argument("LinearVectorField::apply: polynomial not on T*R^3");
    Polynomial r = Polynomial::zero(f.space());
    for (int a = 0; a < 6; ++a) r += components_[static_cast<size_t>(a)] * f.partial(a);
    return r;
}

std::array<LinearVectorField, 21> realize_sp6(const Sp6Algebra& alg) {
    std::array<LinearVectorField, 21> fields;
    for (int k = 0; k < 21; ++k) {
        const Mat6q m = alg.rep[static_cast<size_t>(k)].transpose();
        fields[static_cast<size_t>(k)] = LinearVectorField::from_matrix(m);
    }
    return fields;
}

namespace {

// Printed component expressions of Y1..Y8, encoded as (component, variable,
// numerator) triples over a common denominator of 2 for Y1..Y6.
struct Entry {
    int comp;
    int var;
    int num;
    int den;
};

const std::array<std::vector<Entry>, 8>& printed_su3_entries() {
    // Variables indexed q1,q2,q3,p1,p2,p3 = 0..5.
    static const std::array<std::vector<Entry>, 8> table = {{
        // Y1
        {{0, 1, -1, 2}, {0, 4, 1, 2}, {1, 0, 1, 2}, {1, 3, 1, 2},
         {3, 1, 1, 2}, {3, 4, -1, 2}, {4, 0, 1, 2}, {4, 3, 1, 2}},
        // Y2
        {{1, 2, -1, 2}, {1, 5, 1, 2}, {2, 1, 1, 2}, {2, 4, 1, 2},
         {4, 2, 1, 2}, {4, 5, -1, 2}, {5, 1, 1, 2}, {5, 4, 1, 2}},
        // Y3
        {{0, 2, -1, 2}, {0, 5, 1, 2}, {2, 0, 1, 2}, {2, 3, 1, 2},
         {3, 2, 1, 2}, {3, 5, -1, 2}, {5, 0, 1, 2}, {5, 3, 1, 2}},
        // Y4
        {{0, 1, 1, 2}, {0, 4, 1, 2}, {1, 0, -1, 2}, {1, 3, 1, 2},
         {3, 1, 1, 2}, {3, 4, 1, 2}, {4, 0, 1, 2}, {4, 3, -1, 2}},
        // Y5
        {{1, 2, 1, 2}, {1, 5, 1, 2}, {2, 1, -1, 2}, {2, 4, 1, 2},
         {4, 2, 1, 2}, {4, 5, 1, 2}, {5, 1, 1, 2}, {5, 4, -1, 2}},
        // Y6
        {{0, 2, 1, 2}, {0, 5, 1, 2}, {2, 0, -1, 2}, {2, 3, 1, 2},
         {3, 2, 1, 2}, {3, 5, 1, 2}, {5, 0, 1, 2}, {5, 3, -1, 2}},
        // Y7 = p1 dq1 - p2 dq2 + q1 dp1 - q2 dp2
        {{0, 3, 1, 1}, {1, 4, -1, 1}, {3, 0, 1, 1}, {4, 1, -1, 1}},
        // Y8 = p2 dq2 - p3 dq3 + q2 dp2 - q3 dp3
        {{1, 4, 1, 1}, {2, 5, -1, 1}, {4, 1, 1, 1}, {5, 2, -1, 1}},
    }};
    return table;
}

LinearVectorField printed_su3_field(int k) {
    Mat6q m = Mat6q::Zero();
    for (const auto& e : printed_su3_entries()[static_cast<size_t>(k)])
        m(e.comp, e.var) = rat(e.num, e.den);
    return LinearVectorField::from_matrix(m);
}

}  // namespace

std::array<LinearVectorField, 8> realize_su3(const Sp6Algebra& sp, const Su3Algebra& su) {
    const auto sp_fields = realize_sp6(sp);
    std::array<LinearVectorField, 8> fields;
    for (int k = 0; k < 8; ++k) {
        Mat6q m = Mat6q::Zero();
        for (const auto& [idx, c] : su.embedding.coefficients[static_cast<size_t>(k)])
            m += c * sp_fields[static_cast<size_t>(idx)].matrix();
        const auto from_embedding = LinearVectorField::from_matrix(m);
        if (from_embedding != printed_su3_field(k))
            throw std::logic_error("realize_su3: embedded field " +
                                   su.embedding.generator_names[static_cast<size_t>(k)] +
                                   " differs from the printed expression");
        fields[static_cast<size_t>(k)] = from_embedding;
    }
    return fields;
}

LinearVectorField hamiltonian_lift(const Polynomial& h) {
    if (!h.space()->same_as(*phase3()))
        throw std::invalid_argument("hamiltonian_lift: polynomial not on T*R^3");
    if (h.degree() > 2)
        throw std::invalid_argument("hamiltonian_lift: degree > 2 gives a nonlinear field");

    // h = 1/2 z^T K z + l . z + const, K symmetric.
    Mat6q k = Mat6q::Zero();
    Vec6q l = Vec6q::Zero();
    for (const auto& [mono, c] : h.terms()) {
        std::vector<int> vars;
        for (size_t i = 0; i < mono.exponents.size(); ++i)
            for (int e = 0; e < mono.exponents[i]; ++e) vars.push_back(static_cast<int>(i));
        if (vars.empty()) continue;  // dh kills constants
        if (vars.size() == 1) {
            l(vars[0]) += c;
        } else {
            const int a = vars[0], b = vars[1];
            if (a == b) {
                k(a, a) += 2 * c;
            } else {
                k(a, b) += c;
                k(b, a) += c;
            }
        }
    }
    const Mat6q& j = symplectic_J();
    return LinearVectorField::from_matrix(j * k, j * l);
}

Polynomial hamiltonian_of(const LinearVectorField& x) {
    if (!x.is_hamiltonian())
        throw std::domain_error("hamiltonian_of: field is not Hamiltonian (M^T J + J M != 0)");
    const auto& space = phase3();
    const Mat6q& j = symplectic_J();
    const Mat6q jm = j * x.matrix();  // symmetric when x is Hamiltonian
    const Vec6q c = j * x.offset();
    Polynomial h = Polynomial::zero(space);
    for (int a = 0; a < 6; ++a) {
        if (c(a) != 0) h += Polynomial::variable(space, a, -c(a));
        for (int b = 0; b < 6; ++b) {
            if (jm(a, b) == 0) continue;
            h += Polynomial::variable(space, a, rat(-1, 2) * jm(a, b)) *
                 Polynomial::variable(space, b);
        }
    }
    return h;
}

LinearVectorField vf_bracket(const LinearVectorField& x, const LinearVectorField& y) {
    const Mat6q m = y.matrix() * x.matrix() - x.matrix() * y.matrix();
    const Vec6q off = y.matrix() * x.offset() - x.matrix() * y.offset();
    return LinearVectorField::from_matrix(m, off);
}

std::array<Polynomial, 21> sp6_hamiltonians(const Sp6Algebra& alg) {
    const auto fields = realize_sp6(alg);
    std::array<Polynomial, 21> h;
    for (int k = 0; k < 21; ++k)
        h[static_cast<size_t>(k)] = hamiltonian_of(fields[static_cast<size_t>(k)]);
    return h;
}

std::array<Polynomial, 8> su3_hamiltonians(const Sp6Algebra& sp, const Su3Algebra& su) {
    const auto fields = realize_su3(sp, su);
    std::array<Polynomial, 8> h;
    for (int k = 0; k < 8; ++k)
        h[static_cast<size_t>(k)] = hamiltonian_of(fields[static_cast<size_t>(k)]);
    return h;
}

}  // namespace lhsys
