#include "lhsys/verify.hpp"

#include "lhsys/invariants.hpp"
#include "lhsys/presets.hpp"
#include "lhsys/realization.hpp"
#include "lhsys/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

namespace lhsys {

bool all_pass(std::span<const CheckResult> checks) {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

namespace {

void add(std::vector<CheckResult>& out, std::string name, bool pass, std::string detail = "") {
    out.push_back({std::move(name), pass, std::move(detail)});
}

const VariableSpace::Ptr& phase3() {
    static const VariableSpace::Ptr s = VariableSpace::phase(3);
    return s;
}

Polynomial qvar(int i) { return Polynomial::variable(phase3(), "q" + std::to_string(i)); }
Polynomial pvar(int i) { return Polynomial::variable(phase3(), "p" + std::to_string(i)); }

// ---------------------------------------------------------------------------
// Printed fixtures (hand-typed once, used only to check generated objects).
// ---------------------------------------------------------------------------

// The 21 vector fields as printed, encoded by their matrix entries.
std::array<Mat6q, 21> printed_sp6_matrices() {
    struct E {
        int k, r, c, v;
    };
    static const std::vector<E> entries = {
        {0, 0, 0, 1},  {0, 3, 3, -1},  // X1 = q1 dq1 - p1 dp1
        {1, 1, 0, 1},  {1, 3, 4, -1},  // X2 = q1 dq2 - p2 dp1
        {2, 2, 0, 1},  {2, 3, 5, -1},  // X3
        {3, 0, 1, 1},  {3, 4, 3, -1},  // X4 = q2 dq1 - p1 dp2
        {4, 1, 1, 1},  {4, 4, 4, -1},  // X5
        {5, 2, 1, 1},  {5, 4, 5, -1},  // X6
        {6, 0, 2, 1},  {6, 5, 3, -1},  // X7
        {7, 1, 2, 1},  {7, 5, 4, -1},  // X8
        {8, 2, 2, 1},  {8, 5, 5, -1},  // X9
        {9, 3, 0, -1},                  // X10 = -q1 dp1
        {10, 3, 1, -1}, {10, 4, 0, -1}, // X11 = -q2 dp1 - q1 dp2
        {11, 3, 2, -1}, {11, 5, 0, -1}, // X12
        {12, 4, 1, -1},                 // X13 = -q2 dp2
        {13, 4, 2, -1}, {13, 5, 1, -1}, // X14
        {14, 5, 2, -1},                 // X15 = -q3 dp3
        {15, 0, 3, 1},                  // X16 = p1 dq1
        {16, 0, 4, 1},  {16, 1, 3, 1},  // X17 = p2 dq1 + p1 dq2
        {17, 0, 5, 1},  {17, 2, 3, 1},  // X18
        {18, 1, 4, 1},                  // X19 = p2 dq2
        {19, 1, 5, 1},  {19, 2, 4, 1},  // X20
        {20, 2, 5, 1},                  // X21 = p3 dq3
    };
    std::array<Mat6q, 21> m;
    for (auto& x : m) x = Mat6q::Zero();
    for (const auto& e : entries) m[static_cast<size_t>(e.k)](e.r, e.c) = e.v;
    return m;
}

// The Hamiltonian list h1..h21 as printed.
std::array<Polynomial, 21> printed_sp6_hamiltonians() {
    std::array<Polynomial, 21> h;
    int n = 0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) h[static_cast<size_t>(n++)] = qvar(i) * pvar(j);
    const Rational half = rat(1, 2);
    h[9] = half * (qvar(1) * qvar(1));
    h[10] = qvar(1) * qvar(2);
    h[11] = qvar(1) * qvar(3);
    h[12] = half * (qvar(2) * qvar(2));
    h[13] = qvar(2) * qvar(3);
    h[14] = half * (qvar(3) * qvar(3));
    h[15] = half * (pvar(1) * pvar(1));
    h[16] = pvar(1) * pvar(2);
    h[17] = pvar(1) * pvar(3);
    h[18] = half * (pvar(2) * pvar(2));
    h[19] = pvar(2) * pvar(3);
    h[20] = half * (pvar(3) * pvar(3));
    return h;
}

// The su(3) Hamiltonians h1'..h8' as printed.
std::array<Polynomial, 8> printed_su3_hamiltonians() {
    const Rational half = rat(1, 2);
    auto u = [&](int i, int j) { return qvar(i) * pvar(j) - qvar(j) * pvar(i); };
    auto v = [&](int i, int j) { return pvar(i) * pvar(j) - qvar(i) * qvar(j); };
    std::array<Polynomial, 8> h;
    h[0] = half * (u(1, 2) + v(1, 2));
    h[1] = half * (u(2, 3) + v(2, 3));
    h[2] = half * (u(1, 3) + v(1, 3));
    h[3] = half * (-u(1, 2) + v(1, 2));
    h[4] = half * (-u(2, 3) + v(2, 3));
    h[5] = half * (-u(1, 3) + v(1, 3));
    h[6] = half * (-(qvar(1) * qvar(1)) + qvar(2) * qvar(2) + pvar(1) * pvar(1) -
                   pvar(2) * pvar(2));
    h[7] = half * (-(qvar(2) * qvar(2)) + qvar(3) * qvar(3) + pvar(2) * pvar(2) -
                   pvar(3) * pvar(3));
    return h;
}

// The nonvanishing su(3) commutation table as printed, up to skew-symmetry;
// generator order E1+ E2+ E3+ E1- E2- E3- H1 H2 = 0..7.
std::map<std::pair<int, int>, SparseVec> printed_su3_table() {
    auto one = [](int c, long v) { return SparseVec{{c, rat(v)}}; };
    std::map<std::pair<int, int>, SparseVec> t;
    t[{0, 1}] = one(2, 1);                      // [E1+, E2+] = E3+
    t[{0, 3}] = one(6, 1);                      // [E1+, E1-] = H1
    t[{0, 5}] = one(4, -1);                     // [E1+, E3-] = -E2-
    t[{0, 6}] = one(0, -2);                     // [E1+, H1] = -2 E1+
    t[{0, 7}] = one(0, 1);                      // [E1+, H2] = E1+
    t[{1, 4}] = one(7, 1);                      // [E2+, E2-] = H2
    t[{1, 5}] = one(3, 1);                      // [E2+, E3-] = E1-
    t[{1, 6}] = one(1, 1);                      // [E2+, H1] = E2+
    t[{1, 7}] = one(1, -2);                     // [E2+, H2] = -2 E2+
    t[{2, 3}] = one(1, -1);                     // [E3+, E1-] = -E2+
    t[{2, 4}] = one(0, 1);                      // [E3+, E2-] = E1+
    t[{2, 5}] = SparseVec{{6, rat(1)}, {7, rat(1)}};  // [E3+, E3-] = H1 + H2
    t[{2, 6}] = one(2, -1);                     // [E3+, H1] = -E3+
    t[{2, 7}] = one(2, -1);                     // [E3+, H2] = -E3+
    t[{3, 4}] = one(5, -1);                     // [E1-, E2-] = -E3-
    t[{3, 6}] = one(3, 2);                      // [E1-, H1] = 2 E1-
    t[{3, 7}] = one(3, -1);                     // [E1-, H2] = -E1-
    t[{4, 6}] = one(4, -1);                     // [E2-, H1] = -E2-
    t[{4, 7}] = one(4, 2);                      // [E2-, H2] = 2 E2-
    t[{5, 6}] = one(5, 1);                      // [E3-, H1] = E3-
    t[{5, 7}] = one(5, 1);                      // [E3-, H2] = E3-
    return t;
}

// Commutative image of the printed quadratic Casimir over the generator
// symbols (each symmetrized product AB + BA read as 2AB).
Polynomial printed_c2_fixture() {
    const auto& s = sp6_symbol_space();
    auto x = [&](int i, int j) {
        return Polynomial::variable(s, sp6_index_of(GeneratorIndex{i, j}));
    };
    auto c = [&](long v) { return Polynomial::constant(s, rat(v)); };
    return x(1, 1) * x(1, 1) + x(2, 2) * x(2, 2) + x(3, 3) * x(3, 3) +
           c(2) * x(1, 2) * x(2, 1) + c(2) * x(1, 3) * x(3, 1) + c(2) * x(2, 3) * x(3, 2) -
           c(2) * x(-1, 2) * x(1, -2) - c(2) * x(-1, 3) * x(1, -3) - c(2) * x(-2, 3) * x(2, -3) -
           c(4) * x(-1, 1) * x(1, -1) - c(4) * x(-2, 2) * x(2, -2) - c(4) * x(-3, 3) * x(3, -3);
}

// Embedding expansions of the non-simple roots and Cartan generators as
// printed (the H1 display's last term is read as X(2,-2); the printed
// X(2,2) does not close the bracket).
std::map<int, SparseVec> printed_su3_embeddings() {
    auto idx = [](int i, int j) { return sp6_index_of(GeneratorIndex{i, j}); };
    auto half = [](int s) { return rat(s, 2); };
    std::map<int, SparseVec> m;
    m[2] = SparseVec{{idx(1, 3), half(1)}, {idx(3, 1), half(-1)}, {idx(-1, 3), half(-1)},
                     {idx(1, -3), half(1)}};
    m[5] = SparseVec{{idx(1, 3), half(-1)}, {idx(3, 1), half(1)}, {idx(-1, 3), half(-1)},
                     {idx(1, -3), half(1)}};
    m[6] = SparseVec{{idx(-1, 1), rat(-1)}, {idx(-2, 2), rat(1)}, {idx(1, -1), rat(1)},
                     {idx(2, -2), rat(-1)}};
    m[7] = SparseVec{{idx(-2, 2), rat(-1)}, {idx(-3, 3), rat(1)}, {idx(2, -2), rat(1)},
                     {idx(3, -3), rat(-1)}};
    for (auto& [k, v] : m)
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return m;
}

// Exact decomposition of a polynomial over a list of polynomials, via
// monomial coordinates. Returns false when outside the span.
bool poly_decompose(const Polynomial& p, std::span<const Polynomial> basis,
                    std::vector<Rational>* coeffs_out) {
    std::map<Monomial, int, GradedLex> index;
    auto touch = [&](const Polynomial& f) {
        for (const auto& [m, c] : f.terms())
            if (!index.count(m)) {
                const int next = static_cast<int>(index.size());
                index.emplace(m, next);
            }
    };
    touch(p);
    for (const auto& b : basis) touch(b);
    const int dim = static_cast<int>(index.size());
    auto to_vec = [&](const Polynomial& f) {
        SparseVec v;
        for (const auto& [m, c] : f.terms()) v.emplace_back(index.at(m), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    };
    std::vector<SparseVec> bvecs;
    for (const auto& b : basis) bvecs.push_back(to_vec(b));
    auto r = try_decompose(to_vec(p), dim, bvecs);
    if (!r) return false;
    if (coeffs_out) *coeffs_out = std::move(*r);
    return true;
}

std::string sparse_to_string(const SparseVec& v, std::span<const std::string> names) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c) << "*" << names[static_cast<size_t>(i)];
    }
    return os.str();
}

}  // namespace

std::vector<CheckResult> verify_sp6() {
    std::vector<CheckResult> out;
    const auto& alg = sp6();
    const auto fields = realize_sp6(alg);

    {
        bool ok = true;
        // All 36 in-range label pairs canonicalize idempotently and
        // sign-consistently with the identification.
        for (int i = -3; i <= 3 && ok; ++i) {
            if (i == 0) continue;
            for (int j = -3; j <= 3 && ok; ++j) {
                if (j == 0) continue;
                const auto c = canonicalize(i, j);
                const auto cc = canonicalize(c.label.i, c.label.j);
                ok = cc.sign == 1 && cc.label == c.label;
                // X_{i,j} = -eps_i eps_j X_{-j,-i}
                const int eps = (i > 0 ? 1 : -1) * (j > 0 ? 1 : -1);
                const auto mirror = canonicalize(-j, -i);
                ok = ok && mirror.label == c.label && c.sign == -eps * mirror.sign;
            }
        }
        add(out, "sp6/canonical-labels", ok, "21 labels, idempotent sign-tracking canonical map");
    }

    {
        // Closure of all 210 unordered field-bracket pairs, with exact
        // coefficients equal to the generated table.
        bool ok = true;
        std::string detail;
        std::vector<SparseVec> flat(21);
        for (int k = 0; k < 21; ++k) {
            SparseVec v;
            for (int r = 0; r < 6; ++r)
                for (int c = 0; c < 6; ++c) {
                    const Rational x = fields[static_cast<size_t>(k)].matrix()(r, c);
                    if (x != 0) v.emplace_back(6 * r + c, x);
                }
            flat[static_cast<size_t>(k)] = std::move(v);
        }
        for (int a = 0; a < 21 && ok; ++a)
            for (int b = a + 1; b < 21 && ok; ++b) {
                const auto br = vf_bracket(fields[static_cast<size_t>(a)],
                                           fields[static_cast<size_t>(b)]);
                SparseVec w;
                for (int r = 0; r < 6; ++r)
                    for (int c = 0; c < 6; ++c) {
                        const Rational x = br.matrix()(r, c);
                        if (x != 0) w.emplace_back(6 * r + c, x);
                    }
                auto coeffs = try_decompose(w, 36, flat);
                if (!coeffs) {
                    ok = false;
                    detail = "pair (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                             ") leaves the 21-field span";
                    break;
                }
                for (int c = 0; c < 21; ++c) {
                    Rational expected = 0;
                    for (const auto& [idx, val] : alg.constants.bracket(a, b))
                        if (idx == c) expected = val;
                    if ((*coeffs)[static_cast<size_t>(c)] != expected) {
                        ok = false;
                        detail = "pair (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                 ") disagrees with the generated constants";
                        break;
                    }
                }
            }
        add(out, "sp6/closure-210-pairs", ok, detail);
    }

    add(out, "sp6/antisymmetry", alg.constants.is_antisymmetric());

    {
        const auto rep = verify_jacobi(alg.constants);
        std::string detail;
        if (!rep.pass()) {
            const auto& v = rep.violations.front();
            detail = "first violation at triple (" + std::to_string(v.a) + "," +
                     std::to_string(v.b) + "," + std::to_string(v.c) + ")";
        }
        add(out, "sp6/jacobi-exhaustive", rep.pass(), detail);
    }
    return out;
}

std::vector<CheckResult> verify_su3(bool inject_fault) {
    std::vector<CheckResult> out;
    const auto& sp = sp6();
    const auto& su = su3();

    {
        // Embedded brackets against the printed table, entry by entry.
        auto table = printed_su3_table();
        if (inject_fault && !table.empty()) {
            // Corrupt one fixture entry: [E1+, E2+] = 2 E3+ instead of E3+.
            table[{0, 1}] = SparseVec{{2, rat(2)}};
        }
        bool ok = true;
        std::string detail;
        for (int a = 0; a < 8 && ok; ++a)
            for (int b = a + 1; b < 8 && ok; ++b) {
                SparseVec expected;
                auto it = table.find({a, b});
                if (it != table.end()) expected = it->second;
                if (!sparse_equal(su.constants.bracket(a, b), expected)) {
                    ok = false;
                    detail = "[" + su.embedding.generator_names[static_cast<size_t>(a)] + ", " +
                             su.embedding.generator_names[static_cast<size_t>(b)] +
                             "] != " + sparse_to_string(expected, su.embedding.generator_names);
                }
            }
        add(out, "su3/printed-table-28-pairs", ok, detail);
    }

    {
        const auto displays = printed_su3_embeddings();
        bool ok = true;
        std::string detail;
        for (const auto& [k, expected] : displays)
            if (!sparse_equal(su.embedding.coefficients[static_cast<size_t>(k)], expected)) {
                ok = false;
                detail = su.embedding.generator_names[static_cast<size_t>(k)] +
                         " expansion differs from the printed display";
            }
        add(out, "su3/embedding-displays", ok, detail);
    }

    {
        // Spec example: E3+ decomposes over the sp6 basis with the printed
        // coefficients; a synthetic 22nd symbol is rejected.
        bool ok = true;
        std::vector<SparseVec> unit_basis;
        for (int i = 0; i < 21; ++i) unit_basis.push_back({{i, rat(1)}});
        const auto coeffs = decompose(su.embedding.coefficients[2], 21, unit_basis);
        const auto idx = [](int i, int j) { return sp6_index_of(GeneratorIndex{i, j}); };
        ok = coeffs[static_cast<size_t>(idx(1, 3))] == rat(1, 2) &&
             coeffs[static_cast<size_t>(idx(3, 1))] == rat(-1, 2) &&
             coeffs[static_cast<size_t>(idx(-1, 3))] == rat(-1, 2) &&
             coeffs[static_cast<size_t>(idx(1, -3))] == rat(1, 2);
        SparseVec outside{{21, rat(1)}};
        ok = ok && !try_decompose(outside, 22, unit_basis).has_value();
        add(out, "su3/decompose-examples", ok);
    }

    add(out, "su3/antisymmetry", su.constants.is_antisymmetric());
    {
        const auto rep = verify_jacobi(su.constants);
        add(out, "su3/jacobi-exhaustive", rep.pass());
    }
    (void)sp;
    return out;
}

std::vector<CheckResult> verify_realization(std::uint64_t seed) {
    std::vector<CheckResult> out;
    const auto& alg = sp6();
    const auto fields = realize_sp6(alg);
    const auto hams = sp6_hamiltonians(alg);

    {
        const auto fixture = printed_sp6_matrices();
        bool ok = true;
        for (int k = 0; k < 21; ++k)
            if (!(fields[static_cast<size_t>(k)].matrix() == fixture[static_cast<size_t>(k)])) ok = false;
        add(out, "realization/printed-fields-21", ok);
    }

    {
        const auto fixture = printed_sp6_hamiltonians();
        bool ok = true;
        for (int k = 0; k < 21; ++k)
            if (hams[static_cast<size_t>(k)] != fixture[static_cast<size_t>(k)]) ok = false;
        add(out, "realization/printed-hamiltonians-21", ok);
    }

    std::array<LinearVectorField, 8> su_fields;
    std::array<Polynomial, 8> su_hams;
    {
        bool ok = true;
        std::string detail;
        try {
            su_fields = realize_su3();
            su_hams = su3_hamiltonians();
            const auto fixture = printed_su3_hamiltonians();
            for (int k = 0; k < 8; ++k)
                if (su_hams[static_cast<size_t>(k)] != fixture[static_cast<size_t>(k)]) ok = false;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        add(out, "realization/su3-printed-cross-check", ok, detail);
    }

    {
        // Inner-product condition, literally: for every field/Hamiltonian
        // pair, the covector i_X w equals dh componentwise.
        const Mat6q& j = symplectic_J();
        auto inner_matches = [&](const LinearVectorField& x, const Polynomial& h) {
            for (int b = 0; b < 6; ++b) {
                Polynomial lhs = Polynomial::zero(phase3());
                for (int a = 0; a < 6; ++a)
                    if (j(a, b) != 0) lhs += j(a, b) * x.component(a);
                if (lhs != h.partial(b)) return false;
            }
            return true;
        };
        bool ok = true;
        for (int k = 0; k < 21; ++k)
            ok = ok && inner_matches(fields[static_cast<size_t>(k)], hams[static_cast<size_t>(k)]);
        for (int k = 0; k < 8; ++k)
            ok = ok && inner_matches(su_fields[static_cast<size_t>(k)], su_hams[static_cast<size_t>(k)]);
        add(out, "realization/inner-product-condition-29", ok);
    }

    {
        // Lift reproduces every basis field; round trip on random
        // constant-free quadratics.
        bool ok = true;
        for (int k = 0; k < 21; ++k)
            ok = ok && hamiltonian_lift(hams[static_cast<size_t>(k)]) == fields[static_cast<size_t>(k)];
        for (int k = 0; k < 8; ++k)
            ok = ok && hamiltonian_lift(su_hams[static_cast<size_t>(k)]) == su_fields[static_cast<size_t>(k)];
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> num(-9, 9);
        for (int trial = 0; trial < 50 && ok; ++trial) {
            Polynomial h = Polynomial::zero(phase3());
            for (int a = 0; a < 6; ++a) {
                h += Polynomial::variable(phase3(), a, rat(num(rng), 3));
                for (int b = a; b < 6; ++b)
                    h += Polynomial::variable(phase3(), a, rat(num(rng), 2)) *
                         Polynomial::variable(phase3(), b);
            }
            ok = hamiltonian_of(hamiltonian_lift(h)) == h;
        }
        add(out, "realization/lift-roundtrip", ok);
    }

    {
        // Realization homomorphism and the global field/Poisson sign.
        bool homomorphism = true;
        bool kappa_global = true;
        int kappa = 0;
        for (int a = 0; a < 21; ++a)
            for (int b = 0; b < 21; ++b) {
                LinearVectorField expected = LinearVectorField::from_matrix(Mat6q::Zero());
                for (const auto& [c, v] : alg.constants.bracket(a, b))
                    expected = expected + v * fields[static_cast<size_t>(c)];
                const auto actual =
                    vf_bracket(fields[static_cast<size_t>(a)], fields[static_cast<size_t>(b)]);
                if (actual != expected) homomorphism = false;

                const Polynomial pb = poisson(hams[static_cast<size_t>(a)], hams[static_cast<size_t>(b)]);
                const auto lifted = hamiltonian_lift(pb);
                if (lifted.is_zero() && actual.is_zero()) continue;
                // actual must equal kappa * lifted for one global kappa.
                if (kappa == 0) {
                    if (actual == lifted)
                        kappa = 1;
                    else if (actual == rat(-1) * lifted)
                        kappa = -1;
                    else
                        kappa_global = false;
                } else if (actual != rat(kappa) * lifted) {
                    kappa_global = false;
                }
            }
        // su(3) pairs inherit the same kappa.
        for (int a = 0; a < 8 && kappa_global; ++a)
            for (int b = 0; b < 8; ++b) {
                const auto actual = vf_bracket(su_fields[static_cast<size_t>(a)],
                                               su_fields[static_cast<size_t>(b)]);
                const auto lifted =
                    hamiltonian_lift(poisson(su_hams[static_cast<size_t>(a)], su_hams[static_cast<size_t>(b)]));
                if (lifted.is_zero() && actual.is_zero()) continue;
                if (actual != rat(kappa) * lifted) {
                    kappa_global = false;
                    break;
                }
            }
        add(out, "realization/homomorphism-exact", homomorphism);
        add(out, "realization/kappa-global", kappa_global && kappa != 0,
            "kappa = " + std::to_string(kappa));
    }

    {
        // The Hamiltonians close under the Poisson bracket with a single
        // global sign against the sp6 table.
        bool ok = true;
        int kappa_prime = 0;
        std::vector<Polynomial> basis(hams.begin(), hams.end());
        for (int a = 0; a < 21 && ok; ++a)
            for (int b = 0; b < 21 && ok; ++b) {
                std::vector<Rational> coeffs;
                if (!poly_decompose(poisson(basis[static_cast<size_t>(a)], basis[static_cast<size_t>(b)]),
                                    basis, &coeffs)) {
                    ok = false;
                    break;
                }
                SparseVec got;
                for (int c = 0; c < 21; ++c)
                    if (coeffs[static_cast<size_t>(c)] != 0)
                        got.emplace_back(c, coeffs[static_cast<size_t>(c)]);
                const auto& table = alg.constants.bracket(a, b);
                if (got.empty() && table.empty()) continue;
                if (kappa_prime == 0) {
                    if (sparse_equal(got, table))
                        kappa_prime = 1;
                    else if (sparse_equal(got, sparse_scale(-1, table)))
                        kappa_prime = -1;
                    else
                        ok = false;
                } else if (!sparse_equal(got, sparse_scale(kappa_prime, table))) {
                    ok = false;
                }
            }
        add(out, "realization/h-poisson-closure", ok && kappa_prime != 0,
            "kappa' = " + std::to_string(kappa_prime));
    }

    {
        bool ok = true;
        for (const auto& f : fields) ok = ok && f.is_hamiltonian();
        for (const auto& f : su_fields) ok = ok && f.is_hamiltonian();
        add(out, "realization/matrices-in-sp6", ok, "M^T J + J M = 0 exactly");
    }

    {
        // Symplecticity of assembled system matrices over random draws.
        std::mt19937_64 rng(seed + 1);
        std::uniform_real_distribution<double> tdist(0.0, 10.0);
        const Mat6d jd = [] {
            Mat6d m = Mat6d::Zero();
            for (int i = 0; i < 3; ++i) {
                m(i, 3 + i) = 1;
                m(3 + i, i) = -1;
            }
            return m;
        }();
        double worst = 0.0;
        for (int draw = 0; draw < 1000; ++draw) {
            const auto kind = draw % 2 == 0 ? AlgebraKind::Sp6 : AlgebraKind::Su3;
            const auto spec = make_random_spec(kind, seed + 100 + static_cast<std::uint64_t>(draw));
            const Mat6d m = system_matrix(spec, tdist(rng));
            const Mat6d z = m.transpose() * jd + jd * m;
            worst = std::max(worst, z.cwiseAbs().maxCoeff());
        }
        add(out, "realization/symplecticity-1000-draws", worst <= 1e-14,
            "max |M^T J + J M| = " + format_double(worst));
    }

    return out;
}

std::vector<CheckResult> verify_casimir() {
    std::vector<CheckResult> out;
    const auto coeffs = charpoly_coefficients();

    add(out, "casimir/odd-lambda-coefficients-vanish",
        coeffs[1].is_zero() && coeffs[3].is_zero() && coeffs[5].is_zero());

    const auto cas = casimir_charpoly();
    add(out, "casimir/c2-matches-printed", cas.c2 == printed_c2_fixture());

    {
        std::vector<int> identity(21);
        for (int i = 0; i < 21; ++i) identity[static_cast<size_t>(i)] = i;
        const auto renamed = cas.c2.map_space(h_symbol_space(), identity);
        add(out, "casimir/c2-in-h-identity", renamed == c2_in_h());
    }

    {
        std::vector<double> pt(21, 0.0);
        pt[static_cast<size_t>(sp6_index_of({1, 1}))] = 1.0;
        add(out, "casimir/c2-unit-point", cas.c2.evaluate(pt) == 1.0);
    }

    add(out, "casimir/f1-identically-zero", f_sym(1).is_zero());

    {
        // F^(3) = F^(2) + S13 F^(2) + S23 F^(2), all on three copies.
        const auto f2 = f_sym(2);
        const auto space3 = VariableSpace::prolonged(3, 3);
        std::vector<int> embed(12);
        for (int v = 0; v < 12; ++v) embed[static_cast<size_t>(v)] = v;
        const auto f2_on3 = f2.map_space(space3, embed);
        const auto rhs = f2_on3 + permute_copies(f2_on3, 1, 3) + permute_copies(f2_on3, 2, 3);
        add(out, "casimir/f3-permutation-identity", f_sym(3) == rhs);
    }

    {
        const auto fields = realize_sp6();
        bool ok = true;
        for (int k = 1; k <= 3 && ok; ++k) {
            const auto f = f_sym(k);
            for (int a = 0; a < 21; ++a)
                if (!prolong_apply(fields[static_cast<size_t>(a)], k, f).is_zero()) {
                    ok = false;
                    break;
                }
        }
        add(out, "casimir/annihilation-f-k-le-3", ok,
            "prolonged basis fields annihilate F^(k), k = 1..3");
    }

    {
        // C4 and C6 composed with the prolonged Hamiltonians are likewise
        // constants of motion (k <= 2 bounds the symbolic cost).
        const auto fields = realize_sp6();
        bool ok = true;
        for (int k = 1; k <= 2 && ok; ++k) {
            std::vector<Polynomial> images;
            for (int i = 0; i < 21; ++i) images.push_back(prolonged_hamiltonian(i, k));
            for (const Polynomial* c : {&cas.c4, &cas.c6}) {
                const auto composed = c->substitute(images);
                for (int a = 0; a < 21 && ok; ++a)
                    if (!prolong_apply(fields[static_cast<size_t>(a)], k, composed).is_zero())
                        ok = false;
            }
        }
        add(out, "casimir/annihilation-c4-c6-k-le-2", ok);
    }

    {
        const int s = minimal_prolongation_number(realize_sp6(), 20240613);
        add(out, "casimir/minimal-prolongation-s", s == 6, "computed s = " + std::to_string(s));
    }

    return out;
}

std::vector<CheckResult> verify_presets() {
    std::vector<CheckResult> out;
    const Window window{0.0, 10.0};
    const auto hams = sp6_hamiltonians();
    const auto su_hams = su3_hamiltonians();

    // Double-precision images of the Hamiltonians for sampled comparisons.
    auto to_d = [](const Polynomial& p) {
        PolynomialD r = PolynomialD::zero(p.space());
        for (const auto& [m, c] : p.terms()) {
            PolynomialD term = PolynomialD::constant(p.space(), to_double(c));
            for (size_t v = 0; v < m.exponents.size(); ++v)
                for (int e = 0; e < m.exponents[v]; ++e)
                    term = term * PolynomialD::variable(p.space(), static_cast<int>(v));
            r += term;
        }
        return r;
    };
    auto expansion = [&](const LHSystemSpec& spec, double t) {
        PolynomialD acc = PolynomialD::zero(phase3());
        for (int i = 0; i < spec.basis_size(); ++i) {
            const double b = spec.coefficient(i)(t);
            if (b == 0.0) continue;
            acc += b * to_d(spec.algebra() == AlgebraKind::Sp6 ? hams[static_cast<size_t>(i)]
                                                               : su_hams[static_cast<size_t>(i)]);
        }
        return acc;
    };
    auto close = [](const PolynomialD& a, const PolynomialD& b) {
        PolynomialD d = a - b;
        double maxc = 0.0, scale = 1.0;
        for (const auto& [m, c] : d.terms()) maxc = std::max(maxc, std::abs(c));
        for (const auto& [m, c] : a.terms()) scale = std::max(scale, std::abs(c));
        return maxc <= 1e-12 * scale;
    };
    auto sample_times = [&](int n) {
        std::vector<double> ts;
        for (int i = 0; i < n; ++i)
            ts.push_back(window.t0 + (window.t1 - window.t0) * (i + 0.5) / n);
        return ts;
    };

    using CF = CoefficientFunction;
    auto qd = [&](int i) { return PolynomialD::variable(phase3(), "q" + std::to_string(i)); };
    auto pd = [&](int i) { return PolynomialD::variable(phase3(), "p" + std::to_string(i)); };

    {
        // h^E: the b-table expansion equals sum_i (p_i - e_i A_i)^2/(2 m_i) + e_i phi_i.
        EMFieldData data{
            {CF::constant(1.2), CF::harmonic(0.3, 1.1, 0.2, 1.5), CF::constant(0.8)},
            {CF::constant(0.7), CF::constant(-0.4), CF::harmonic(0.5, 0.9, 0.0, 0.2)},
            CF::polynomial_in_t({0.3, 0.1, 0.25})};
        const auto spec = em_preset(data, window);
        bool ok = true;
        for (double t : sample_times(32)) {
            const double g = data.gamma(t);
            std::array<PolynomialD, 3> a = {-0.5 * g * qd(2), 0.5 * g * qd(1), 0.5 * g * qd(3)};
            PolynomialD he = PolynomialD::zero(phase3());
            for (int i = 0; i < 3; ++i) {
                const double mi = data.m[static_cast<size_t>(i)](t);
                const double ei = data.e[static_cast<size_t>(i)](t);
                PolynomialD kin = pd(i + 1) - ei * a[static_cast<size_t>(i)];
                he += (0.5 / mi) * (kin * kin) + (0.5 * ei) * (qd(i + 1) * qd(i + 1));
            }
            if (!close(expansion(spec, t), he)) ok = false;
        }
        add(out, "presets/em-b-table-expansion", ok, "32 sampled t, 1e-12");
    }

    {
        // B = (0,0,gamma) from curl A, E matches -grad phi - dA/dt.
        EMFieldData data{
            {CF::constant(1.0), CF::constant(2.0), CF::constant(0.5)},
            {CF::constant(1.0), CF::constant(1.0), CF::constant(1.0)},
            CF::polynomial_in_t({0.0, 0.0, 1.0})};  // gamma = t^2, gamma'' = 2 != 0
        std::vector<std::string> warnings;
        (void)em_preset(data, window, &warnings);
        EMField field(data);
        bool ok = warnings.empty();
        for (double t : sample_times(8)) {
            const auto a = field.vector_potential(t);
            // curl in the q symbols
            const auto b1 = a[2].partial("q2") - a[1].partial("q3");
            const auto b2 = a[0].partial("q3") - a[2].partial("q1");
            const auto b3 = a[1].partial("q1") - a[0].partial("q2");
            const auto bf = field.magnetic_field(t);
            ok = ok && b1.is_zero() && b2.is_zero() &&
                 std::abs(b3.coefficient(Monomial(3)) - bf[2]) <= 1e-12 &&
                 std::abs(bf[2] - data.gamma(t)) <= 1e-12;
            // E from finite differences of A (independent route).
            const double h = 1e-6;
            const auto ap = field.vector_potential(t + h);
            const auto am = field.vector_potential(t - h);
            const auto e = field.electric_field(t);
            const auto phi = field.scalar_potential();
            for (int i = 0; i < 3 && ok; ++i) {
                PolynomialD expect =
                    -1.0 * phi.partial(i) - (1.0 / (2.0 * h)) * (ap[static_cast<size_t>(i)] -
                                                                 am[static_cast<size_t>(i)]);
                PolynomialD diff = expect - e[static_cast<size_t>(i)];
                for (const auto& [m, c] : diff.terms())
                    if (std::abs(c) > 1e-6) ok = false;
            }
        }
        add(out, "presets/em-field-displays", ok, "B = (0,0,gamma); E display vs finite-difference route");
    }

    {
        // h^CHO / h^II: expansion identity plus the constraint pattern.
        OscillatorData data{
            {CF::constant(1.5), CF::constant(0.9), CF::harmonic(0.2, 0.7, 0.1, 1.2)},
            {CF::constant(2.0), CF::harmonic(0.3, 1.3, 0.4, 1.1), CF::constant(1.4)},
            {CF::constant(0.4), CF::constant(0.6), CF::constant(0.2)},
            CF::harmonic(0.5, 1.0, 0.0, 0.0), CF::constant(0.3), CF::constant(-0.2)};
        const auto spec = cho_preset(data, window);
        bool ok = true;
        for (double t : sample_times(32)) {
            PolynomialD h2 = PolynomialD::zero(phase3());
            for (int i = 0; i < 3; ++i) {
                const double mi = data.m[static_cast<size_t>(i)](t);
                const double om = oscillator_frequency(data, i, t, false);
                h2 += (0.5 / mi) * (pd(i + 1) * pd(i + 1)) +
                      (0.5 * mi * om * om) * (qd(i + 1) * qd(i + 1));
            }
            h2 += data.b2(t) * (qd(1) * pd(2) - qd(2) * pd(1)) +
                  data.b3(t) * (qd(1) * pd(3) - qd(3) * pd(1)) +
                  data.b6(t) * (qd(2) * pd(3) - qd(3) * pd(2));
            ok = ok && close(expansion(spec, t), h2);
            // h^II constraint pattern.
            ok = ok && std::abs(spec.coefficient(3)(t) + data.b2(t)) <= 1e-15 &&
                 std::abs(spec.coefficient(6)(t) + data.b3(t)) <= 1e-15 &&
                 std::abs(spec.coefficient(7)(t) + data.b6(t)) <= 1e-15;
        }
        const double om = oscillator_frequency(
            OscillatorData{{CF::constant(1), CF::constant(1), CF::constant(1)},
                           {CF::constant(1), CF::constant(1), CF::constant(1)},
                           {CF::constant(1), CF::constant(1), CF::constant(1)},
                           CF(), CF(), CF()},
            0, 0.0, false);
        ok = ok && std::abs(om - std::sqrt(3.0) / 2.0) <= 1e-15;
        add(out, "presets/cho-h2-expansion", ok);
    }

    {
        // h^CCK expansion and the lambda = 0 reduction to CHO.
        OscillatorData data{
            {CF::constant(1.5), CF::constant(0.9), CF::constant(1.2)},
            {CF::constant(2.0), CF::constant(1.1), CF::constant(1.4)},
            {CF::constant(0.4), CF::harmonic(0.1, 0.5, 0.0, 0.5), CF::constant(0.2)},
            CF::constant(0.1), CF(), CF()};
        const auto spec = cck_preset(data, window);
        bool ok = true;
        for (double t : sample_times(16)) {
            PolynomialD h2 = PolynomialD::zero(phase3());
            for (int i = 0; i < 3; ++i) {
                const double mi = data.m[static_cast<size_t>(i)](t);
                const double om = oscillator_frequency(data, i, t, true);
                // exp factors via the spec's own kinetic coefficient (checks
                // internal consistency of potential vs kinetic exponents).
                const double ekin = spec.coefficient(15 + (i == 0 ? 0 : i == 1 ? 3 : 5))(t) * mi;
                const double epot = 1.0 / ekin;
                h2 += (0.5 / mi * ekin) * (pd(i + 1) * pd(i + 1)) +
                      (0.5 * mi * om * om * epot) * (qd(i + 1) * qd(i + 1));
            }
            h2 += data.b2(t) * (qd(1) * pd(2) - qd(2) * pd(1));
            ok = ok && close(expansion(spec, t), h2);
        }
        // lambda == 0 reduces to CHO with gamma == 0, coefficient-wise.
        OscillatorData nud = data;
        nud.gamma = {CF::constant(0.0), CF::constant(0.0), CF::constant(0.0)};
        const auto cck0 = cck_preset(nud, window);
        const auto cho0 = cho_preset(nud, window);
        for (double t : sample_times(16))
            for (int i = 0; i < 21; ++i)
                if (std::abs(cck0.coefficient(i)(t) - cho0.coefficient(i)(t)) > 1e-12) ok = false;
        add(out, "presets/cck-expansion-and-reduction", ok);
    }

    {
        // su3 preset: the a~ <-> a identification and the h~ expansion.
        const std::array<CF, 4> atilde = {CF::harmonic(0.4, 1.0, 0.3, 0.0), CF::constant(0.7),
                                          CF::constant(-0.3), CF::harmonic(0.2, 0.6, 0.0, 0.5)};
        const auto spec = su3_preset(atilde);
        bool ok = spec.algebra() == AlgebraKind::Su3;
        for (double t : sample_times(32)) {
            PolynomialD ht = atilde[0](t) * (pd(1) * pd(2) - qd(1) * qd(2)) +
                             atilde[1](t) * (qd(1) * pd(2) - qd(2) * pd(1)) +
                             atilde[2](t) * (pd(2) * pd(3) - qd(2) * qd(3)) +
                             atilde[3](t) * (qd(2) * pd(3) - qd(3) * pd(2));
            ok = ok && close(expansion(spec, t), ht);
            ok = ok && std::abs(spec.coefficient(0)(t) - (atilde[0](t) + atilde[1](t))) <= 1e-15 &&
                 std::abs(spec.coefficient(1)(t) - (atilde[2](t) + atilde[3](t))) <= 1e-15 &&
                 std::abs(spec.coefficient(3)(t) - (atilde[0](t) - atilde[1](t))) <= 1e-15 &&
                 std::abs(spec.coefficient(4)(t) - (atilde[2](t) - atilde[3](t))) <= 1e-15 &&
                 spec.coefficient(2)(t) == 0.0 && spec.coefficient(5)(t) == 0.0 &&
                 spec.coefficient(6)(t) == 0.0 && spec.coefficient(7)(t) == 0.0;
        }
        add(out, "presets/su3-identification-and-h-tilde", ok);
    }

    {
        const auto rep = minkowski_decomposition(1, 2);
        const auto rep34 = minkowski_decomposition(3, 4);
        add(out, "presets/minkowski-decomposition-chain", rep.all() && rep34.all(),
            "pullback, light-cone, and 1D-split identities exact");
    }

    return out;
}

std::vector<CheckResult> verify_scope(const std::string& scope, std::uint64_t seed,
                                      bool inject_fault) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> v) {
        for (auto& c : v) out.push_back(std::move(c));
    };
    if (scope == "sp6" || scope == "all") append(verify_sp6());
    if (scope == "su3" || scope == "all") append(verify_su3(inject_fault));
    if (scope == "realization" || scope == "all") append(verify_realization(seed));
    if (scope == "casimir" || scope == "all") append(verify_casimir());
    if (scope == "all") append(verify_presets());
    if (out.empty()) throw std::invalid_argument("unknown verify scope '" + scope + "'");
    return out;
}

LHSystemSpec make_random_spec(AlgebraKind kind, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> omega(0.2, 2.0);
    std::uniform_real_distribution<double> phase(0.0, 6.28318530717958648);
    std::map<std::string, CoefficientFunction> coeffs;
    for (const auto& name : coefficient_names(kind)) {
        if (unit(rng) > 0.45) continue;
        // c0 + c1 sin(w t + phi), |c0| + |c1| <= 2.
        const double c0 = 2.0 * unit(rng) - 1.0;
        const double c1 = (1.0 - std::abs(c0)) * (2.0 * unit(rng) - 1.0);
        coeffs.emplace(name, CoefficientFunction::sum(
                                 {CoefficientFunction::constant(c0),
                                  CoefficientFunction::harmonic(c1, omega(rng), phase(rng), 0.0)}));
    }
    if (coeffs.empty())
        coeffs.emplace(coefficient_names(kind).front(), CoefficientFunction::constant(0.5));
    return LHSystemSpec(kind, std::move(coeffs));
}

Vec6d random_phase_point(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Vec6d z;
    for (int i = 0; i < 6; ++i) z(i) = unit(rng);
    return z;
}

}  // namespace lhsys
