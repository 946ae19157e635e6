#pragma once

#include "lhsys/rational.hpp"
#include "lhsys/variable_space.hpp"

#include <charconv>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhsys {

/// Exponent vector over the owning space; length equals the space arity.
struct Monomial {
    std::vector<std::uint16_t> exponents;

    explicit Monomial(int arity = 0) : exponents(static_cast<size_t>(arity), 0) {}

    int total_degree() const {
        int d = 0;
        for (auto e : exponents) d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
};

/// Graded lexicographic order: by total degree, then by exponent vector.
/// Fixes the canonical term order used for printing and serialization.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.exponents < b.exponents;
    }
};

namespace detail {
inline std::string coeff_to_string(const Rational& c) { return to_string(c); }
inline std::string coeff_to_string(double c) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), c);
    return std::string(buf, ptr);
}
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(double c) { return c == 0.0; }
}  // namespace detail

/// Sparse multivariate polynomial in canonical form: no zero coefficients
/// are stored, terms are kept in graded-lex order, equality is structural.
/// Immutable in spirit: all operations return new values.
///
/// The default scalar is the exact Rational; a double instantiation is used
/// where preset coefficient functions enter symbolic identities.
template <class Scalar = Rational>
class PolynomialT {
public:
    using TermMap = std::map<Monomial, Scalar, GradedLex>;

    PolynomialT() = default;

    static PolynomialT zero(VariableSpace::Ptr space) { return PolynomialT(std::move(space)); }

    static PolynomialT constant(VariableSpace::Ptr space, Scalar c) {
        PolynomialT p(std::move(space));
        if (!detail::coeff_is_zero(c)) p.terms_.emplace(Monomial(p.space_->arity()), std::move(c));
        return p;
    }

    static PolynomialT variable(VariableSpace::Ptr space, int var, Scalar c = Scalar(1)) {
        PolynomialT p(std::move(space));
        if (var < 0 || var >= p.space_->arity())
            throw std::invalid_argument("PolynomialT::variable: index out of range");
        if (!detail::coeff_is_zero(c)) {
            Monomial m(p.space_->arity());
            m.exponents[static_cast<size_t>(var)] = 1;
            p.terms_.emplace(std::move(m), std::move(c));
        }
        return p;
    }

    static PolynomialT variable(VariableSpace::Ptr space, std::string_view name,
                                Scalar c = Scalar(1)) {
        const int idx = space->index_of(name);
        if (idx < 0)
            throw std::invalid_argument("PolynomialT::variable: unknown variable " +
                                        std::string(name));
        return variable(std::move(space), idx, std::move(c));
    }

    const VariableSpace::Ptr& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Degree of the zero polynomial is -infinity by convention.
    static constexpr int kMinusInfinity = INT32_MIN;
    int degree() const {
        if (terms_.empty()) return kMinusInfinity;
        return terms_.rbegin()->first.total_degree();
    }

    Scalar coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    /// Coefficient of a product of distinct first-power variables (by name),
    /// e.g. coefficient_of({"q1","p2"}). Repeat a name for higher powers.
    Scalar coefficient_of(std::initializer_list<std::string_view> vars) const {
        Monomial m(space_->arity());
        for (auto v : vars) {
            const int idx = space_->index_of(v);
            if (idx < 0) throw std::invalid_argument("coefficient_of: unknown variable");
            ++m.exponents[static_cast<size_t>(idx)];
        }
        return coefficient(m);
    }

    bool operator==(const PolynomialT& o) const {
        return space_->same_as(*o.space_) && terms_ == o.terms_;
    }
    bool operator!=(const PolynomialT& o) const { return !(*this == o); }

    PolynomialT operator-() const {
        PolynomialT r(space_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    PolynomialT& operator+=(const PolynomialT& o) {
        require_same_space(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    PolynomialT& operator-=(const PolynomialT& o) {
        require_same_space(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend PolynomialT operator+(PolynomialT a, const PolynomialT& b) { return a += b; }
    friend PolynomialT operator-(PolynomialT a, const PolynomialT& b) { return a -= b; }

    friend PolynomialT operator*(const PolynomialT& a, const PolynomialT& b) {
        a.require_same_space(b);
        PolynomialT r(a.space_);
        const size_t arity = a.space_ ? static_cast<size_t>(a.space_->arity()) : 0;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(static_cast<int>(arity));
                for (size_t i = 0; i < arity; ++i)
                    m.exponents[i] = static_cast<std::uint16_t>(ma.exponents[i] + mb.exponents[i]);
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend PolynomialT operator*(const Scalar& s, const PolynomialT& p) {
        PolynomialT r(p.space_);
        if (detail::coeff_is_zero(s)) return r;
        for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, s * c);
        return r;
    }
    friend PolynomialT operator*(const PolynomialT& p, const Scalar& s) { return s * p; }

    PolynomialT pow(unsigned n) const {
        PolynomialT r = constant(space_, Scalar(1));
        for (unsigned i = 0; i < n; ++i) r = r * (*this);
        return r;
    }

    /// Formal partial derivative. Throws on an unknown variable.
    PolynomialT partial(int var) const {
        if (var < 0 || var >= space_->arity())
            throw std::invalid_argument("partial: variable index out of range");
        PolynomialT r(space_);
        for (const auto& [m, c] : terms_) {
            const auto e = m.exponents[static_cast<size_t>(var)];
            if (e == 0) continue;
            Monomial d = m;
            --d.exponents[static_cast<size_t>(var)];
            r.add_term(d, c * Scalar(e));
        }
        return r;
    }
    PolynomialT partial(std::string_view name) const {
        const int idx = space_->index_of(name);
        if (idx < 0) throw std::invalid_argument("partial: unknown variable " + std::string(name));
        return partial(idx);
    }

    /// Floating evaluation at a full coordinate vector (one value per space
    /// variable, in space order).
    double evaluate(std::span<const double> point) const {
        if (static_cast<int>(point.size()) != space_->arity())
            throw std::invalid_argument("evaluate: point arity mismatch");
        double acc = 0.0;
        for (const auto& [m, c] : terms_) {
            double t = scalar_to_double(c);
            for (size_t i = 0; i < m.exponents.size(); ++i)
                for (int k = 0; k < m.exponents[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    /// Floating evaluation from a name -> value assignment. The assignment
    /// must cover every variable that occurs in the polynomial.
    double evaluate(const std::map<std::string, double>& assignment) const {
        std::vector<double> point(static_cast<size_t>(space_->arity()), 0.0);
        std::vector<bool> have(point.size(), false);
        for (const auto& [name, value] : assignment) {
            const int idx = space_->index_of(name);
            if (idx >= 0) {
                point[static_cast<size_t>(idx)] = value;
                have[static_cast<size_t>(idx)] = true;
            }
        }
        for (const auto& [m, c] : terms_)
            for (size_t i = 0; i < m.exponents.size(); ++i)
                if (m.exponents[i] > 0 && !have[i])
                    throw std::invalid_argument("evaluate: missing assignment for " +
                                                space_->name(static_cast<int>(i)));
        return evaluate(point);
    }

    /// Ring-morphism substitution: variable i is replaced by images[i]. All
    /// images must share one target space.
    PolynomialT substitute(std::span<const PolynomialT> images) const {
        if (static_cast<int>(images.size()) != space_->arity())
            throw std::invalid_argument("substitute: one image per variable required");
        VariableSpace::Ptr target =
            images.empty() ? space_ : images[0].space();
        for (const auto& img : images)
            if (!img.space()->same_as(*target))
                throw std::invalid_argument("substitute: images live in different spaces");
        PolynomialT r = zero(target);
        for (const auto& [m, c] : terms_) {
            PolynomialT term = constant(target, c);
            for (size_t i = 0; i < m.exponents.size(); ++i)
                for (int k = 0; k < m.exponents[i]; ++k) term = term * images[i];
            r += term;
        }
        return r;
    }

    /// Re-expresses the polynomial on another space; var_map[i] gives the
    /// index in `target` of this space's variable i. Used for prolongation
    /// embeddings and copy permutations.
    PolynomialT map_space(VariableSpace::Ptr target, std::span<const int> var_map) const {
        if (static_cast<int>(var_map.size()) != space_->arity())
            throw std::invalid_argument("map_space: var_map arity mismatch");
        PolynomialT r(target);
        for (const auto& [m, c] : terms_) {
            Monomial t(target->arity());
            for (size_t i = 0; i < m.exponents.size(); ++i) {
                if (m.exponents[i] == 0) continue;
                const int j = var_map[i];
                if (j < 0 || j >= target->arity())
                    throw std::invalid_argument("map_space: target index out of range");
                t.exponents[static_cast<size_t>(j)] =
                    static_cast<std::uint16_t>(t.exponents[static_cast<size_t>(j)] + m.exponents[i]);
            }
            r.add_term(t, c);
        }
        return r;
    }

    /// Canonical textual form: graded-lex-sorted `coeff * v^e ...` terms,
    /// highest degree first, exact rationals as num/den.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << detail::coeff_to_string(it->second);
            for (size_t i = 0; i < it->first.exponents.size(); ++i) {
                const auto e = it->first.exponents[i];
                if (e == 0) continue;
                os << " * " << space_->name(static_cast<int>(i));
                if (e > 1) os << "^" << static_cast<int>(e);
            }
        }
        return os.str();
    }

private:
    explicit PolynomialT(VariableSpace::Ptr space) : space_(std::move(space)) {}

    static double scalar_to_double(const Rational& c) { return to_double(c); }
    static double scalar_to_double(double c) { return c; }

    void require_same_space(const PolynomialT& o) const {
        if (!space_ || !o.space_ || !space_->same_as(*o.space_))
            throw std::invalid_argument("polynomial operands live in different variable spaces");
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (detail::coeff_is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    VariableSpace::Ptr space_;
    TermMap terms_;

    template <class S>
    friend PolynomialT<S> poisson(const PolynomialT<S>&, const PolynomialT<S>&);
};

using Polynomial = PolynomialT<Rational>;
using PolynomialD = PolynomialT<double>;

/// Canonical Poisson bracket over the space's declared pairing:
///   {f, g} = sum_i (df/dq_i dg/dp_i - df/dp_i dg/dq_i).
/// Throws when the shared space declares no pairing.
template <class Scalar>
PolynomialT<Scalar> poisson(const PolynomialT<Scalar>& f, const PolynomialT<Scalar>& g) {
    f.require_same_space(g);
    const auto& pairing = f.space()->pairing();
    if (pairing.empty())
        throw std::invalid_argument("poisson: variable space declares no conjugate pairing");
    PolynomialT<Scalar> r = PolynomialT<Scalar>::zero(f.space());
    for (const auto& [q, p] : pairing)
        r += f.partial(q) * g.partial(p) - f.partial(p) * g.partial(q);
    return r;
}

}  // namespace lhsys
