#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

namespace lhsys {

/// Exact rational scalar used throughout the symbolic layer. Demotion to
/// double happens only at evaluation / integration boundaries.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

/// Canonical form: `num` or `num/den` with den > 0.
std::string to_string(const Rational& r);

/// Parses "num" or "num/den"; throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

}  // namespace lhsys

namespace Eigen {

// Dense Eigen types over exact rationals (sums, products, transposes; no
// decompositions are used on rational matrices).
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Nested = mpq_class;
    static inline Real epsilon() { return {}; }
    static inline Real dummy_precision() { return {}; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

}  // namespace Eigen

namespace lhsys {

using Mat6q = Eigen::Matrix<Rational, 6, 6>;
using Vec6q = Eigen::Matrix<Rational, 6, 1>;
using Mat6d = Eigen::Matrix<double, 6, 6>;
using Vec6d = Eigen::Matrix<double, 6, 1>;

}  // namespace lhsys
