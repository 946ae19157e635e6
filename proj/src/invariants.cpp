#include "lhsys/invariants.hpp"

#include <random>
#include <stdexcept>

namespace lhsys {

const VariableSpace::Ptr& sp6_symbol_space() {
    static const VariableSpace::Ptr space = [] {
        std::vector<std::string> names;
        for (const auto& g : sp6_basis()) names.push_back(to_string(g));
        return VariableSpace::symbols(std::move(names));
    }();
    return space;
}

const VariableSpace::Ptr& h_symbol_space() {
    static const VariableSpace::Ptr space = [] {
        std::vector<std::string> names;
        for (int i = 1; i <= 21; ++i) names.push_back("h" + std::to_string(i));
        return VariableSpace::symbols(std::move(names));
    }();
    return space;
}

namespace {

// det of a polynomial matrix by cofactor expansion along the first row.
Polynomial poly_det(std::vector<std::vector<Polynomial>>& m, const VariableSpace::Ptr& space) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    Polynomial acc = Polynomial::zero(space);
    int sign = 1;
    for (size_t k = 0; k < n; ++k, sign = -sign) {
        if (m[0][k].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub(n - 1, std::vector<Polynomial>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == k) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        Polynomial term = m[0][k] * poly_det(sub, space);
        acc += sign > 0 ? term : -term;
    }
    return acc;
}

bool is_diagonal_boson(GeneratorIndex g) { return g.i == -g.j; }

}  // namespace

std::array<Polynomial, 7> charpoly_coefficients(const Sp6Algebra& alg) {
    // Symbol space extended by lambda.
    std::vector<std::string> names = sp6_symbol_space()->names();
    names.push_back("lambda");
    const auto ext = VariableSpace::symbols(names);
    const int lam = ext->index_of("lambda");

    // D = sum_a w_a X_a Gamma_a with w = 2 on the diagonal boson symbols:
    // the displayed parametric matrix with pairing-correct symbol weights.
    std::vector<std::vector<Polynomial>> d(6, std::vector<Polynomial>(6, Polynomial::zero(ext)));
    for (int k = 0; k < 21; ++k) {
        const auto g = alg.basis[static_cast<size_t>(k)];
        const Rational w = is_diagonal_boson(g) ? 2 : 1;
        const auto sym = Polynomial::variable(ext, k, w);
        const Mat6q& rep = alg.rep[static_cast<size_t>(k)];
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c)
                if (rep(r, c) != 0)
                    d[static_cast<size_t>(r)][static_cast<size_t>(c)] += rep(r, c) * sym;
    }
    const auto lambda = Polynomial::variable(ext, lam);
    for (int i = 0; i < 6; ++i) d[static_cast<size_t>(i)][static_cast<size_t>(i)] -= lambda;

    const Polynomial det = poly_det(d, ext);

    // Split by lambda power and rebuild coefficients on the 21-symbol space.
    std::array<Polynomial, 7> coeffs;
    for (auto& c : coeffs) c = Polynomial::zero(sp6_symbol_space());
    for (const auto& [mono, c] : det.terms()) {
        const int p = mono.exponents[static_cast<size_t>(lam)];
        Monomial stripped = mono;
        stripped.exponents[static_cast<size_t>(lam)] = 0;
        // Rebuild the term on the 21-symbol space.
        Polynomial term = Polynomial::constant(sp6_symbol_space(), c);
        for (size_t v = 0; v < 21; ++v)
            for (int e = 0; e < stripped.exponents[v]; ++e)
                term = term * Polynomial::variable(sp6_symbol_space(), static_cast<int>(v));
        coeffs[static_cast<size_t>(p)] += term;
    }
    return coeffs;
}

CasimirSet casimir_charpoly(const Sp6Algebra& alg) {
    const auto coeffs = charpoly_coefficients(alg);
    for (int p : {1, 3, 5})
        if (!coeffs[static_cast<size_t>(p)].is_zero())
            throw std::logic_error("casimir_charpoly: odd lambda coefficient is nonzero");
    return CasimirSet{-coeffs[4], coeffs[2], -coeffs[0]};
}

Polynomial c2_in_h() {
    const auto& space = h_symbol_space();
    auto h = [&](int i) { return Polynomial::variable(space, "h" + std::to_string(i)); };
    auto c = [&](long n) { return Polynomial::constant(space, rat(n)); };
    return h(1) * h(1) + h(5) * h(5) + h(9) * h(9) + c(2) * h(2) * h(4) + c(2) * h(3) * h(7) +
           c(2) * h(6) * h(8) - c(2) * h(11) * h(17) - c(2) * h(12) * h(18) -
           c(2) * h(14) * h(20) - c(4) * h(10) * h(16) - c(4) * h(13) * h(19) -
           c(4) * h(15) * h(21);
}

int copy_count(const VariableSpace& space) {
    const int arity = space.arity();
    if (arity % 6 != 0) throw std::invalid_argument("not a prolonged phase space");
    const int k = arity / 6;
    if (!space.same_as(*VariableSpace::prolonged(3, k)))
        throw std::invalid_argument("not a prolonged phase space");
    return k;
}

namespace {

// Index of phase variable a (0..5) in copy l (0-based) of prolonged(3, k).
int prolonged_var(int a, int l) { return 6 * l + a; }

}  // namespace

Polynomial prolonged_hamiltonian(int i, int copies, const Sp6Algebra& alg) {
    if (copies < 1) throw std::invalid_argument("prolonged_hamiltonian: copies must be >= 1");
    static const auto hams_cache = sp6_hamiltonians();
    const auto& h = (&alg == &sp6()) ? hams_cache : sp6_hamiltonians(alg);
    const auto target = VariableSpace::prolonged(3, copies);
    Polynomial acc = Polynomial::zero(target);
    for (int l = 0; l < copies; ++l) {
        std::vector<int> var_map(6);
        for (int a = 0; a < 6; ++a) var_map[static_cast<size_t>(a)] = prolonged_var(a, l);
        acc += h[static_cast<size_t>(i)].map_space(target, var_map);
    }
    return acc;
}

Polynomial f_sym(int copies, const Sp6Algebra& alg) {
    std::vector<Polynomial> images;
    images.reserve(21);
    for (int i = 0; i < 21; ++i) images.push_back(prolonged_hamiltonian(i, copies, alg));
    return c2_in_h().substitute(images);
}

double f_value(std::span<const Vec6d> copies) {
    if (copies.empty()) throw std::invalid_argument("f_value: at least one copy required");
    static const auto hams = sp6_hamiltonians();
    std::vector<double> hk(21, 0.0);
    for (const auto& z : copies) {
        std::array<double, 6> pt{};
        for (int a = 0; a < 6; ++a) pt[static_cast<size_t>(a)] = z(a);
        for (int i = 0; i < 21; ++i)
            hk[static_cast<size_t>(i)] += hams[static_cast<size_t>(i)].evaluate(pt);
    }
    return c2_in_h().evaluate(hk);
}

double omega(const Vec6d& x, const Vec6d& y) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) acc += x(i) * y(3 + i) - x(3 + i) * y(i);
    return acc;
}

double f2_pair(const Vec6d& x, const Vec6d& y) {
    const double w = omega(x, y);
    return -w * w;
}

Polynomial permute_copies(const Polynomial& f, int i, int j) {
    const int k = copy_count(*f.space());
    if (i == j) throw std::invalid_argument("permute_copies: copies must differ");
    if (i < 1 || j < 1 || i > k || j > k)
        throw std::invalid_argument("permute_copies: copy label out of range");
    std::vector<int> var_map(static_cast<size_t>(6 * k));
    for (int v = 0; v < 6 * k; ++v) var_map[static_cast<size_t>(v)] = v;
    for (int a = 0; a < 6; ++a) {
        var_map[static_cast<size_t>(prolonged_var(a, i - 1))] = prolonged_var(a, j - 1);
        var_map[static_cast<size_t>(prolonged_var(a, j - 1))] = prolonged_var(a, i - 1);
    }
    return f.map_space(f.space(), var_map);
}

std::vector<Polynomial> prolong_field(const LinearVectorField& x, int copies) {
    if (copies < 1) throw std::invalid_argument("prolong_field: copies must be >= 1");
    const auto target = VariableSpace::prolonged(3, copies);
    std::vector<Polynomial> comps(static_cast<size_t>(6 * copies));
    for (int l = 0; l < copies; ++l) {
        std::vector<int> var_map(6);
        for (int a = 0; a < 6; ++a) var_map[static_cast<size_t>(a)] = prolonged_var(a, l);
        for (int a = 0; a < 6; ++a)
            comps[static_cast<size_t>(prolonged_var(a, l))] =
                x.component(a).map_space(target, var_map);
    }
    return comps;
}

Polynomial prolong_apply(const LinearVectorField& x, int copies, const Polynomial& f) {
    if (copy_count(*f.space()) != copies)
        throw std::invalid_argument("prolong_apply: copy count mismatch");
    const auto comps = prolong_field(x, copies);
    Polynomial acc = Polynomial::zero(f.space());
    for (int v = 0; v < 6 * copies; ++v) acc += comps[static_cast<size_t>(v)] * f.partial(v);
    return acc;
}

int minimal_prolongation_number(const std::array<LinearVectorField, 21>& fields,
                                std::uint64_t seed, int max_copies) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-9, 9);
    for (int k = 1; k <= max_copies; ++k) {
        int best_rank = 0;
        for (int attempt = 0; attempt < 3; ++attempt) {
            // Rows: field a evaluated at the prolonged point, exactly.
            std::vector<std::vector<Rational>> m(
                21, std::vector<Rational>(static_cast<size_t>(6 * k)));
            std::vector<Vec6q> pts(static_cast<size_t>(k));
            for (auto& p : pts)
                for (int a = 0; a < 6; ++a) p(a) = coord(rng);
            for (int a = 0; a < 21; ++a)
                for (int l = 0; l < k; ++l) {
                    const Vec6q v = fields[static_cast<size_t>(a)].matrix() * pts[static_cast<size_t>(l)];
                    for (int c = 0; c < 6; ++c)
                        m[static_cast<size_t>(a)][static_cast<size_t>(6 * l + c)] = v(c);
                }
            // Exact row echelon rank.
            int rank = 0;
            const int cols = 6 * k;
            for (int col = 0; col < cols && rank < 21; ++col) {
                int pr = -1;
                for (int r = rank; r < 21; ++r)
                    if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                        pr = r;
                        break;
                    }
                if (pr < 0) continue;
                std::swap(m[static_cast<size_t>(pr)], m[static_cast<size_t>(rank)]);
                for (int r = rank + 1; r < 21; ++r) {
                    const Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                                       m[static_cast<size_t>(rank)][static_cast<size_t>(col)];
                    if (f == 0) continue;
                    for (int c = col; c < cols; ++c)
                        m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                            f * m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
                }
                ++rank;
            }
            best_rank = std::max(best_rank, rank);
            if (best_rank == 21) break;
        }
        if (best_rank == 21) return k;
    }
    throw std::runtime_error("minimal_prolongation_number: no full-rank prolongation up to cap");
}

}  // namespace lhsys
