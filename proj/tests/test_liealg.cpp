#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhsys/liealg.hpp"
#include "lhsys/verify.hpp"

#include <json.hpp>

#include <set>

using namespace lhsys;

namespace {

SparseVec sv(std::initializer_list<std::pair<GeneratorIndex, long>> items) {
    SparseVec v;
    for (const auto& [g, c] : items) v.emplace_back(sp6_index_of(g), rat(c));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

}  // namespace

TEST_CASE("canonicalization: 21 labels, idempotent, sign-tracking") {
    std::set<std::pair<int, int>> canon;
    for (int i = -3; i <= 3; ++i) {
        if (i == 0) continue;
        for (int j = -3; j <= 3; ++j) {
            if (j == 0) continue;
            const auto c = canonicalize(i, j);
            canon.insert({c.label.i, c.label.j});
            const auto cc = canonicalize(c.label.i, c.label.j);
            CHECK(cc.label == c.label);
            CHECK(cc.sign == 1);
        }
    }
    CHECK(canon.size() == 21);
    for (const auto& g : sp6_basis()) CHECK(is_canonical(g.i, g.j));

    // X_{-1,-1} = -X_{1,1}; X_{-2,1} = +X_{-1,2}; X_{2,-1} = +X_{1,-2}.
    CHECK(canonicalize(-1, -1).label == GeneratorIndex{1, 1});
    CHECK(canonicalize(-1, -1).sign == -1);
    CHECK(canonicalize(-2, 1).label == GeneratorIndex{-1, 2});
    CHECK(canonicalize(-2, 1).sign == 1);
    CHECK(canonicalize(2, -1).label == GeneratorIndex{1, -2});
    CHECK(canonicalize(2, -1).sign == 1);

    CHECK_THROWS_AS(canonicalize(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(1, 4), std::invalid_argument);
}

TEST_CASE("sp6 bracket examples") {
    const auto& alg = sp6();
    auto bracket = [&](GeneratorIndex a, GeneratorIndex b) {
        return alg.constants.bracket(sp6_index_of(a), sp6_index_of(b));
    };

    CHECK(sparse_equal(bracket({1, 2}, {2, 1}), sv({{{1, 1}, 1}, {{2, 2}, -1}})));
    CHECK(bracket({1, 1}, {1, 1}).empty());

    // The realization forces [X(-1,1), X(1,-1)] = -X(1,1): the printed
    // commutator formula is off by the diagonal-generator normalization, so
    // the homomorphism-consistent value is asserted here.
    CHECK(sparse_equal(bracket({-1, 1}, {1, -1}), sv({{{1, 1}, -1}})));

    // A couple of mixed-family checks against hand-expanded operator brackets
    // in the representation normalization.
    CHECK(sparse_equal(bracket({-1, 2}, {1, -2}), sv({{{1, 1}, -1}, {{2, 2}, -1}})));
    CHECK(sparse_equal(bracket({-1, 1}, {1, -2}), sv({{{1, 2}, -1}})));
}

TEST_CASE("sp6 closure: all 210 unordered pairs stay in the 21-dim span") {
    const auto checks = verify_sp6();
    for (const auto& c : checks) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("jacobi: exhaustive exact check and fault injection") {
    const auto& alg = sp6();
    CHECK(verify_jacobi(alg.constants).pass());
    CHECK(verify_jacobi(su3().constants).pass());

    StructureConstants corrupted = alg.constants;
    // Flip one entry: [X1, X2] gains a bogus X3 component.
    SparseVec v = corrupted.bracket(0, 1);
    v = sparse_add(v, SparseVec{{2, rat(1)}});
    corrupted.set_bracket(0, 1, v);
    const auto rep = verify_jacobi(corrupted);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("su3: embedding brackets match the printed table") {
    const auto checks = verify_su3();
    for (const auto& c : checks) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }

    const auto& su = su3();
    // [E1+, E1-] = H1, [E1+, H2] = E1+, [H1, H2] = 0.
    CHECK(sparse_equal(su.constants.bracket(0, 3), SparseVec{{6, rat(1)}}));
    CHECK(sparse_equal(su.constants.bracket(0, 7), SparseVec{{0, rat(1)}}));
    CHECK(su.constants.bracket(6, 7).empty());

    // Fault injection must fail naming the table identity.
    const auto bad = verify_su3(true);
    bool failed_named = false;
    for (const auto& c : bad)
        if (!c.pass && c.name.find("printed-table") != std::string::npos) failed_named = true;
    CHECK(failed_named);
}

TEST_CASE("decompose: basis reading, span certification, dependence rejection") {
    std::vector<SparseVec> unit;
    for (int i = 0; i < 21; ++i) unit.push_back({{i, rat(1)}});

    const SparseVec elem = sv({{{1, 1}, 1}, {{2, 2}, -1}});
    const auto coeffs = decompose(elem, 21, unit);
    CHECK(coeffs[static_cast<size_t>(sp6_index_of({1, 1}))] == 1);
    CHECK(coeffs[static_cast<size_t>(sp6_index_of({2, 2}))] == -1);

    // E3+ over the sp6 basis: (1/2, -1/2, -1/2, 1/2).
    const auto e3 = decompose(su3().embedding.coefficients[2], 21, unit);
    CHECK(e3[static_cast<size_t>(sp6_index_of({1, 3}))] == rat(1, 2));
    CHECK(e3[static_cast<size_t>(sp6_index_of({3, 1}))] == rat(-1, 2));
    CHECK(e3[static_cast<size_t>(sp6_index_of({-1, 3}))] == rat(-1, 2));
    CHECK(e3[static_cast<size_t>(sp6_index_of({1, -3}))] == rat(1, 2));

    // A 22nd symbol falls outside the span.
    CHECK_FALSE(try_decompose(SparseVec{{21, rat(1)}}, 22, unit).has_value());
    CHECK_THROWS_AS(decompose(SparseVec{{21, rat(1)}}, 22, unit), std::domain_error);

    // A dependent basis is rejected outright.
    std::vector<SparseVec> dependent = {SparseVec{{0, rat(1)}}, SparseVec{{0, rat(2)}}};
    CHECK_THROWS_AS((void)try_decompose(SparseVec{{0, rat(1)}}, 21, dependent),
                    std::invalid_argument);
}

TEST_CASE("structure constants export as JSON triples") {
    const auto& alg = sp6();
    std::vector<std::string> names;
    for (const auto& g : alg.basis) names.push_back(to_string(g));
    const auto parsed = nlohmann::json::parse(alg.constants.to_json_string(names));
    CHECK(parsed.is_array());
    CHECK(parsed.size() > 100);
    bool found = false;
    for (const auto& e : parsed)
        if (e.at("a") == "X(1,2)" && e.at("b") == "X(2,1)" && e.at("c") == "X(1,1)" &&
            e.at("value") == "1")
            found = true;
    CHECK(found);
}
