#include "lhsys/liealg.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lhsys {

namespace {

void check_index(int v) {
    if (v == 0 || v < -3 || v > 3)
        throw std::invalid_argument("generator index must lie in [-3,3] without 0");
}

}  // namespace

CanonicalLabel canonicalize(int i, int j) {
    check_index(i);
    check_index(j);
    if (i > 0 && j > 0) return {{i, j}, +1};
    if (i < 0 && j < 0) return {{-j, -i}, -1};  // eps_i eps_j = +1
    if (i < 0) {
        // position-type X_{-a,b}: representative has a <= b.
        const int a = -i, b = j;
        return a <= b ? CanonicalLabel{{i, j}, +1} : CanonicalLabel{{-b, a}, +1};
    }
    // momentum-type X_{a,-b}: representative has a <= b.
    const int a = i, b = -j;
    return a <= b ? CanonicalLabel{{i, j}, +1} : CanonicalLabel{{b, -a}, +1};
}

bool is_canonical(int i, int j) {
    const auto c = canonicalize(i, j);
    return c.sign == 1 && c.label.i == i && c.label.j == j;
}

std::string to_string(GeneratorIndex g) {
    return "X(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
}

const std::array<GeneratorIndex, 21>& sp6_basis() {
    static const std::array<GeneratorIndex, 21> basis = [] {
        std::array<GeneratorIndex, 21> b{};
        int n = 0;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) b[n++] = {i, j};
        for (int i = 1; i <= 3; ++i)
            for (int j = i; j <= 3; ++j) b[n++] = {-i, j};
        for (int i = 1; i <= 3; ++i)
            for (int j = i; j <= 3; ++j) b[n++] = {i, -j};
        return b;
    }();
    return basis;
}

int sp6_index_of(GeneratorIndex g) {
    const auto& basis = sp6_basis();
    for (int k = 0; k < 21; ++k)
        if (basis[static_cast<size_t>(k)] == g) return k;
    throw std::invalid_argument("not a canonical sp(6,R) label: " + to_string(g));
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
    std::map<int, Rational> acc;
    for (const auto& [i, c] : a) acc[i] += c;
    for (const auto& [i, c] : b) acc[i] += c;
    SparseVec r;
    for (auto& [i, c] : acc)
        if (c != 0) r.emplace_back(i, c);
    return r;
}

SparseVec sparse_scale(const Rational& s, const SparseVec& v) {
    SparseVec r;
    if (s == 0) return r;
    for (const auto& [i, c] : v) r.emplace_back(i, s * c);
    return r;
}

bool sparse_equal(const SparseVec& a, const SparseVec& b) { return a == b; }

StructureConstants::StructureConstants(int dim)
    : dim_(dim), table_(static_cast<size_t>(dim) * static_cast<size_t>(dim)) {
    if (dim <= 0) throw std::invalid_argument("StructureConstants: dim must be positive");
}

const SparseVec& StructureConstants::bracket(int a, int b) const {
    return table_[static_cast<size_t>(a) * static_cast<size_t>(dim_) + static_cast<size_t>(b)];
}

void StructureConstants::set_bracket(int a, int b, SparseVec v) {
    if (a < 0 || a >= dim_ || b < 0 || b >= dim_)
        throw std::invalid_argument("set_bracket: index out of range");
    table_[static_cast<size_t>(a) * static_cast<size_t>(dim_) + static_cast<size_t>(b)] =
        std::move(v);
}

SparseVec StructureConstants::bracket_of(const SparseVec& u, const SparseVec& v) const {
    std::map<int, Rational> acc;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v) {
            const Rational f = ca * cb;
            for (const auto& [c, cc] : bracket(a, b)) acc[c] += f * cc;
        }
    SparseVec r;
    for (auto& [i, c] : acc)
        if (c != 0) r.emplace_back(i, c);
    return r;
}

bool StructureConstants::is_antisymmetric() const {
    for (int a = 0; a < dim_; ++a)
        for (int b = a; b < dim_; ++b)
            if (!sparse_equal(bracket(a, b), sparse_scale(-1, bracket(b, a)))) return false;
    return true;
}

std::vector<StructureConstants::JacobiViolation> StructureConstants::jacobi_violations() const {
    std::vector<JacobiViolation> out;
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b)
            for (int c = 0; c < dim_; ++c) {
                std::map<int, Rational> acc;
                auto add = [&](const SparseVec& inner, int outer) {
                    for (const auto& [e, ce] : inner)
                        for (const auto& [d, cd] : bracket(e, outer)) acc[d] += ce * cd;
                };
                // [[a,b],c] + [[b,c],a] + [[c,a],b]
                add(bracket(a, b), c);
                add(bracket(b, c), a);
                add(bracket(c, a), b);
                for (const auto& [d, cd] : acc)
                    if (cd != 0) {
                        out.push_back({a, b, c});
                        break;
                    }
            }
    return out;
}

std::string StructureConstants::to_json_string(std::span<const std::string> names) const {
    nlohmann::json arr = nlohmann::json::array();
    auto label = [&](int k) -> std::string {
        return k < static_cast<int>(names.size()) ? names[static_cast<size_t>(k)]
                                                  : std::to_string(k);
    };
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b)
            for (const auto& [c, v] : bracket(a, b))
                arr.push_back({{"a", label(a)}, {"b", label(b)}, {"c", label(c)},
                               {"value", to_string(v)}});
    return arr.dump(2);
}

JacobiReport verify_jacobi(const StructureConstants& sc) { return {sc.jacobi_violations()}; }

namespace {

// Fundamental-representation matrix of a canonical label, from the index
// pattern of the displayed 6x6 parametric matrix: rows/columns 0..2 are the
// q-block, 3..5 the p-block.
Mat6q rep_matrix(GeneratorIndex g) {
    Mat6q m = Mat6q::Zero();
    if (g.i > 0 && g.j > 0) {
        m(g.i - 1, g.j - 1) = 1;
        m(3 + g.j - 1, 3 + g.i - 1) = -1;
    } else if (g.i < 0) {
        const int a = -g.i, b = g.j;
        m(a - 1, 3 + b - 1) = -1;
        if (a != b) m(b - 1, 3 + a - 1) = -1;
    } else {
        const int a = g.i, b = -g.j;
        m(3 + a - 1, b - 1) = 1;
        if (a != b) m(3 + b - 1, a - 1) = 1;
    }
    return m;
}

// Reads the basis coefficients of a matrix in the span of the 21
// representation matrices off its designated entries, then certifies the
// reconstruction. Exact; throws std::domain_error if the matrix lies outside
// the span.
SparseVec rep_coefficients(const Mat6q& m, const std::array<Mat6q, 21>& rep) {
    const auto& basis = sp6_basis();
    SparseVec coeffs;
    for (int k = 0; k < 21; ++k) {
        const auto g = basis[static_cast<size_t>(k)];
        Rational c;
        if (g.i > 0 && g.j > 0)
            c = m(g.i - 1, g.j - 1);
        else if (g.i < 0)
            c = -m(-g.i - 1, 3 + g.j - 1);
        else
            c = m(3 + g.i - 1, -g.j - 1);
        if (c != 0) coeffs.emplace_back(k, c);
    }
    Mat6q rebuilt = Mat6q::Zero();
    for (const auto& [k, c] : coeffs) rebuilt += c * rep[static_cast<size_t>(k)];
    if (rebuilt != m)
        throw std::domain_error("matrix outside the sp(6,R) representation span");
    return coeffs;
}

}  // namespace

Sp6Algebra build_sp6() {
    Sp6Algebra alg{sp6_basis(), {}, StructureConstants(21)};
    for (int k = 0; k < 21; ++k)
        alg.rep[static_cast<size_t>(k)] = rep_matrix(alg.basis[static_cast<size_t>(k)]);

    for (int a = 0; a < 21; ++a)
        for (int b = 0; b < 21; ++b) {
            const Mat6q comm = alg.rep[static_cast<size_t>(a)] * alg.rep[static_cast<size_t>(b)] -
                               alg.rep[static_cast<size_t>(b)] * alg.rep[static_cast<size_t>(a)];
            alg.constants.set_bracket(a, b, rep_coefficients(comm, alg.rep));
        }
    return alg;
}

const Sp6Algebra& sp6() {
    static const Sp6Algebra alg = build_sp6();
    return alg;
}

namespace {

SparseVec half_combo(int a, int sa, int b, int sb, int c, int sc, int d, int sd) {
    SparseVec v;
    v.emplace_back(a, rat(sa, 2));
    v.emplace_back(b, rat(sb, 2));
    v.emplace_back(c, rat(sc, 2));
    v.emplace_back(d, rat(sd, 2));
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
}

}  // namespace

Su3Algebra build_su3(const Sp6Algebra& sp) {
    const auto& sc6 = sp.constants;
    auto idx = [](int i, int j) { return sp6_index_of({i, j}); };

    // Simple roots as printed; the rest is generated by brackets.
    const SparseVec e1p = half_combo(idx(1, 2), +1, idx(2, 1), -1, idx(-1, 2), -1, idx(1, -2), +1);
    const SparseVec e2p = half_combo(idx(2, 3), +1, idx(3, 2), -1, idx(-2, 3), -1, idx(2, -3), +1);
    const SparseVec e1m = half_combo(idx(1, 2), -1, idx(2, 1), +1, idx(-1, 2), -1, idx(1, -2), +1);
    const SparseVec e2m = half_combo(idx(2, 3), -1, idx(3, 2), +1, idx(-2, 3), -1, idx(2, -3), +1);

    const SparseVec e3p = sc6.bracket_of(e1p, e2p);
    const SparseVec e3m = sparse_scale(-1, sc6.bracket_of(e1m, e2m));
    const SparseVec h1 = sc6.bracket_of(e1p, e1m);
    const SparseVec h2 = sc6.bracket_of(e2p, e2m);

    Su3Algebra alg{
        {"su(3)",
         {"E1+", "E2+", "E3+", "E1-", "E2-", "E3-", "H1", "H2"},
         {e1p, e2p, e3p, e1m, e2m, e3m, h1, h2}},
        StructureConstants(8)};

    const auto& gens = alg.embedding.coefficients;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const SparseVec w = sc6.bracket_of(gens[static_cast<size_t>(a)],
                                               gens[static_cast<size_t>(b)]);
            const auto coeffs = decompose(w, 21, gens);
            SparseVec row;
            for (int c = 0; c < 8; ++c)
                if (coeffs[static_cast<size_t>(c)] != 0)
                    row.emplace_back(c, coeffs[static_cast<size_t>(c)]);
            alg.constants.set_bracket(a, b, std::move(row));
        }
    return alg;
}

const Su3Algebra& su3() {
    static const Su3Algebra alg = build_su3(sp6());
    return alg;
}

std::optional<std::vector<Rational>> try_decompose(const SparseVec& element, int ambient_dim,
                                                   std::span<const SparseVec> basis) {
    const int n = static_cast<int>(basis.size());
    // Dense augmented system [B | e], columns are basis vectors.
    std::vector<std::vector<Rational>> m(static_cast<size_t>(ambient_dim),
                                         std::vector<Rational>(static_cast<size_t>(n) + 1));
    for (int c = 0; c < n; ++c)
        for (const auto& [r, v] : basis[static_cast<size_t>(c)]) {
            if (r < 0 || r >= ambient_dim)
                throw std::invalid_argument("try_decompose: basis index outside ambient space");
            m[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
        }
    for (const auto& [r, v] : element) {
        if (r < 0 || r >= ambient_dim)
            throw std::invalid_argument("try_decompose: element index outside ambient space");
        m[static_cast<size_t>(r)][static_cast<size_t>(n)] = v;
    }

    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col(static_cast<size_t>(n), -1);
    int row = 0;
    for (int col = 0; col < n && row < ambient_dim; ++col) {
        int pr = -1;
        for (int r = row; r < ambient_dim; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[static_cast<size_t>(pr)], m[static_cast<size_t>(row)]);
        const Rational inv = 1 / m[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (auto& x : m[static_cast<size_t>(row)]) x *= inv;
        for (int r = 0; r < ambient_dim; ++r) {
            if (r == row) continue;
            const Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int c2 = col; c2 <= n; ++c2)
                m[static_cast<size_t>(r)][static_cast<size_t>(c2)] -=
                    f * m[static_cast<size_t>(row)][static_cast<size_t>(c2)];
        }
        pivot_row_of_col[static_cast<size_t>(col)] = row;
        ++row;
    }
    for (int c = 0; c < n; ++c)
        if (pivot_row_of_col[static_cast<size_t>(c)] < 0)
            throw std::invalid_argument("try_decompose: basis is linearly dependent");
    // Inconsistent rows certify the element is outside the span.
    for (int r = row; r < ambient_dim; ++r)
        if (m[static_cast<size_t>(r)][static_cast<size_t>(n)] != 0) return std::nullopt;

    std::vector<Rational> coeffs(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c)
        coeffs[static_cast<size_t>(c)] =
            m[static_cast<size_t>(pivot_row_of_col[static_cast<size_t>(c)])][static_cast<size_t>(n)];
    return coeffs;
}

std::vector<Rational> decompose(const SparseVec& element, int ambient_dim,
                                std::span<const SparseVec> basis) {
    auto r = try_decompose(element, ambient_dim, basis);
    if (!r) throw std::domain_error("decompose: element lies outside the basis span");
    return *r;
}

}  // namespace lhsys
