#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhsys/polynomial.hpp"

#include <map>
#include <random>
#include <vector>

using namespace lhsys;

namespace {

const VariableSpace::Ptr& phase() {
    static const auto s = VariableSpace::phase(3);
    return s;
}

Polynomial var(const char* name, Rational c = 1) {
    return Polynomial::variable(phase(), name, c);
}

// Independent term-merge oracle: dense exponent-map arithmetic, no shared
// code with the implementation.
using DenseTerms = std::map<std::vector<int>, Rational>;

DenseTerms dense(const Polynomial& p) {
    DenseTerms out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e(m.exponents.begin(), m.exponents.end());
        out[e] = c;
    }
    return out;
}

DenseTerms merge_add(const DenseTerms& a, const DenseTerms& b) {
    DenseTerms out = a;
    for (const auto& [e, c] : b) {
        out[e] += c;
        if (out[e] == 0) out.erase(e);
    }
    return out;
}

DenseTerms convolve(const DenseTerms& a, const DenseTerms& b) {
    DenseTerms out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
            if (out[e] == 0) out.erase(e);
        }
    return out;
}

DenseTerms diff(const DenseTerms& a, size_t v) {
    DenseTerms out;
    for (const auto& [e, c] : a) {
        if (e[v] == 0) continue;
        std::vector<int> d = e;
        d[v] -= 1;
        out[d] += c * e[v];
        if (out[d] == 0) out.erase(d);
    }
    return out;
}

Polynomial random_poly(std::mt19937_64& rng, int max_degree = 3) {
    std::uniform_int_distribution<int> nterms(1, 6), coeff(-6, 6), den(1, 3), vpick(0, 5);
    Polynomial p = Polynomial::zero(phase());
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Polynomial term = Polynomial::constant(phase(), rat(coeff(rng), den(rng)));
        std::uniform_int_distribution<int> deg(0, max_degree);
        const int d = deg(rng);
        for (int k = 0; k < d; ++k) term = term * Polynomial::variable(phase(), vpick(rng));
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("add: examples") {
    CHECK((var("q1") + (-var("q1"))).is_zero());
    const Polynomial q1p1 = var("q1") * var("p1");
    CHECK(q1p1 + q1p1 == rat(2) * q1p1);

    // h1 + h5 + h9 via the dense merge oracle.
    const Polynomial h1 = var("q1") * var("p1");
    const Polynomial h5 = var("q2") * var("p2");
    const Polynomial h9 = var("q3") * var("p3");
    const Polynomial sum = h1 + h5 + h9;
    CHECK(dense(sum) == merge_add(merge_add(dense(h1), dense(h5)), dense(h9)));
}

TEST_CASE("mul: examples and convolution oracle") {
    // q1 * p1 is the Hamiltonian h1.
    const Polynomial h1 = var("q1") * var("p1");
    CHECK(h1.coefficient_of({"q1", "p1"}) == 1);
    CHECK(h1.degree() == 2);
    CHECK(h1.terms().size() == 1);
    std::mt19937_64 rng0(1);
    CHECK((Polynomial::zero(phase()) * random_poly(rng0)).is_zero());

    const Polynomial s = var("q1") + var("p1");
    const Polynomial sq = s * s;
    CHECK(dense(sq) == convolve(dense(s), dense(s)));
    // q1^2 + 2 q1 p1 + p1^2
    CHECK(sq.coefficient_of({"q1", "q1"}) == rat(2) / 2);
    CHECK(sq.coefficient_of({"q1", "p1"}) == rat(2));
    CHECK(sq.coefficient_of({"p1", "p1"}) == 1);

    std::mt19937_64 rng(42);
    for (int i = 0; i < 30; ++i) {
        const Polynomial a = random_poly(rng), b = random_poly(rng);
        CHECK(dense(a * b) == convolve(dense(a), dense(b)));
    }
}

TEST_CASE("degree adds under mul; zero polynomial degree convention") {
    const Polynomial a = var("q1") * var("q2");
    const Polynomial b = var("p3");
    CHECK((a * b).degree() == 3);
    CHECK(Polynomial::zero(phase()).degree() == Polynomial::kMinusInfinity);
}

TEST_CASE("partial: examples and differentiation oracle") {
    const Polynomial h10 = rat(1, 2) * (var("q1") * var("q1"));
    CHECK(h10.partial("q1") == var("q1"));
    CHECK((var("q1") * var("p2")).partial("p1").is_zero());
    CHECK((var("p1") * var("p2")).partial("p2") == var("p1"));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        const Polynomial a = random_poly(rng);
        for (int v = 0; v < 6; ++v) CHECK(dense(a.partial(v)) == diff(dense(a), static_cast<size_t>(v)));
    }
    CHECK_THROWS_AS((void)var("q1").partial("zz"), std::invalid_argument);
}

TEST_CASE("evaluate: direct substitution and the ring-homomorphism property") {
    const Polynomial h1 = var("q1") * var("p1");
    CHECK(h1.evaluate({{"q1", 2.0}, {"p1", 3.0}}) == doctest::Approx(6.0).epsilon(1e-15));

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(-2.0, 2.0);
    for (int i = 0; i < 40; ++i) {
        const Polynomial a = random_poly(rng, 2), b = random_poly(rng, 2);
        std::vector<double> pt(6);
        for (auto& x : pt) x = unit(rng);
        const double lhs = (a * b).evaluate(pt);
        const double rhs = a.evaluate(pt) * b.evaluate(pt);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }

    CHECK_THROWS_AS((void)h1.evaluate(std::map<std::string, double>{{"q1", 1.0}}),
                    std::invalid_argument);
}

TEST_CASE("space mismatch is rejected") {
    const auto other = VariableSpace::symbols({"x", "y"});
    const auto px = Polynomial::variable(other, "x");
    CHECK_THROWS_AS((void)(var("q1") + px), std::invalid_argument);
    CHECK_THROWS_AS((void)(var("q1") * px), std::invalid_argument);
}

TEST_CASE("poisson: canonical pairs and no-pairing error") {
    CHECK(poisson(var("q1"), var("p1")) == Polynomial::constant(phase(), 1));
    const Polynomial h10 = rat(1, 2) * (var("q1") * var("q1"));
    const Polynomial h16 = rat(1, 2) * (var("p1") * var("p1"));
    CHECK(poisson(h10, h16) == var("q1") * var("p1"));  // = h1

    std::mt19937_64 rng(5);
    const Polynomial f = random_poly(rng);
    CHECK(poisson(f, f).is_zero());

    const auto bare = VariableSpace::symbols({"x", "y"});
    CHECK_THROWS_AS((void)poisson(Polynomial::variable(bare, "x"), Polynomial::variable(bare, "y")),
                    std::invalid_argument);
}

TEST_CASE("poisson bracket properties: bilinear, antisymmetric, Leibniz, Jacobi (exact)") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 25; ++i) {
        const Polynomial f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
        const Rational a = rat(3, 2), b = rat(-5, 3);
        CHECK(poisson(a * f + b * g, h) == a * poisson(f, h) + b * poisson(g, h));
        CHECK(poisson(f, g) == -poisson(g, f));
        CHECK(poisson(f, g * h) == poisson(f, g) * h + g * poisson(f, h));
        const Polynomial jac =
            poisson(f, poisson(g, h)) + poisson(g, poisson(h, f)) + poisson(h, poisson(f, g));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("ring structure on random inputs; canonical form is idempotent") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        // Canonical form: rebuilding from the stored terms is the identity.
        Polynomial rebuilt = Polynomial::zero(phase());
        for (const auto& [m, coeff] : a.terms()) {
            Polynomial term = Polynomial::constant(phase(), coeff);
            for (size_t v = 0; v < m.exponents.size(); ++v)
                for (int e = 0; e < m.exponents[v]; ++e)
                    term = term * Polynomial::variable(phase(), static_cast<int>(v));
            rebuilt += term;
        }
        CHECK(rebuilt == a);
        for (const auto& [m, coeff] : a.terms()) CHECK(coeff != 0);
    }
}

TEST_CASE("substitute composes ring morphisms") {
    // f(q1, p1) = q1 p1 with q1 -> x + y, p1 -> x - y gives x^2 - y^2.
    const auto xy = VariableSpace::symbols({"x", "y"});
    const auto x = Polynomial::variable(xy, "x"), y = Polynomial::variable(xy, "y");
    std::vector<Polynomial> images = {x + y, Polynomial::zero(xy), Polynomial::zero(xy),
                                      x - y, Polynomial::zero(xy), Polynomial::zero(xy)};
    const Polynomial f = var("q1") * var("p1");
    CHECK(f.substitute(images) == x * x - y * y);
}

TEST_CASE("textual serialization: canonical sorted term order with exact rationals") {
    const Polynomial p = rat(-4) * (var("q1") * var("p2")) + rat(1, 2) * var("q3") +
                         Polynomial::constant(phase(), rat(7, 3));
    CHECK(p.to_string() == "-4 * q1 * p2 + 1/2 * q3 + 7/3");
    CHECK(Polynomial::zero(phase()).to_string() == "0");
}
