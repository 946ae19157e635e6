#pragma once

#include "lhsys/rational.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lhsys {

/// Boson-basis label X_{i,j} with i, j in [-3,3]\{0}, stored in canonical
/// form under the identification X_{i,j} = -eps_i eps_j X_{-j,-i}.
struct GeneratorIndex {
    int i = 1;
    int j = 1;
    bool operator==(const GeneratorIndex&) const = default;
};

struct CanonicalLabel {
    GeneratorIndex label;
    int sign;  // +1 or -1
};

/// Maps an arbitrary in-range label to its canonical representative and the
/// sign picked up along the way. Idempotent on canonical labels. Throws on a
/// zero or out-of-range index.
CanonicalLabel canonicalize(int i, int j);

bool is_canonical(int i, int j);

/// "X(1,-2)" style, used for printing and JSON export.
std::string to_string(GeneratorIndex g);

/// The 21 canonical labels in the paper's enumeration order (X1..X21):
/// the gl(3) block row-major, then the position-type pairs, then the
/// momentum-type pairs.
const std::array<GeneratorIndex, 21>& sp6_basis();

/// 0-based position in sp6_basis(); throws when the label is not canonical.
int sp6_index_of(GeneratorIndex g);

/// Sparse exact-rational vector over a basis: (index, coefficient) pairs,
/// sorted by index, no zero coefficients.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const Rational& s, const SparseVec& v);
bool sparse_equal(const SparseVec& a, const SparseVec& b);

/// Full bracket table c_{ab}^c of a finite-dimensional real Lie algebra,
/// exact rational coefficients.
class StructureConstants {
public:
    explicit StructureConstants(int dim);

    int dim() const { return dim_; }
    const SparseVec& bracket(int a, int b) const;
    void set_bracket(int a, int b, SparseVec v);

    /// Bracket of two sparse elements through the table.
    SparseVec bracket_of(const SparseVec& u, const SparseVec& v) const;

    bool is_antisymmetric() const;

    struct JacobiViolation {
        int a, b, c;
    };
    /// Exhaustive exact Jacobi check; the list is empty iff the table passes.
    std::vector<JacobiViolation> jacobi_violations() const;

    /// Ordered triples (a, b, c) -> rational string, serialized as JSON.
    std::string to_json_string(std::span<const std::string> names) const;

private:
    int dim_;
    std::vector<SparseVec> table_;  // dim*dim entries, row-major
};

struct JacobiReport {
    std::vector<StructureConstants::JacobiViolation> violations;
    bool pass() const { return violations.empty(); }
};

JacobiReport verify_jacobi(const StructureConstants& sc);

/// sp(6,R) in the boson basis: canonical labels, the 6x6 fundamental
/// representation matrices, and the generated bracket table.
struct Sp6Algebra {
    std::array<GeneratorIndex, 21> basis;
    std::array<Mat6q, 21> rep;
    StructureConstants constants;
};

/// Generates the representation matrices from the index pattern of the
/// fundamental representation and derives the bracket table from matrix
/// commutators, certifying closure exactly. Never hand-typed per pair.
Sp6Algebra build_sp6();

/// Shared immutable instance.
const Sp6Algebra& sp6();

/// A named set of generators given as exact combinations of the 21
/// canonical sp(6,R) generators.
struct SubalgebraEmbedding {
    std::string name;
    std::vector<std::string> generator_names;
    std::vector<SparseVec> coefficients;  // one sparse 21-vector per generator
};

struct Su3Algebra {
    SubalgebraEmbedding embedding;
    StructureConstants constants;  // brackets computed through sp(6,R)
};

/// Builds the Cartan-Weyl su(3) inside sp(6,R): simple roots as printed,
/// E3+-, H1, H2 from brackets, and the 8x8 table with every bracket
/// decomposed (certified) in the embedding span.
Su3Algebra build_su3(const Sp6Algebra& sp6);

const Su3Algebra& su3();

/// Exact coefficients of `element` over `basis` inside an ambient_dim
/// coordinate space, or std::nullopt when the element lies outside the span.
/// Throws std::invalid_argument when the basis is linearly dependent.
std::optional<std::vector<Rational>> try_decompose(const SparseVec& element, int ambient_dim,
                                                   std::span<const SparseVec> basis);

/// As try_decompose, but a span failure throws std::domain_error (a closure
/// violation in the calling context).
std::vector<Rational> decompose(const SparseVec& element, int ambient_dim,
                                std::span<const SparseVec> basis);

}  // namespace lhsys
