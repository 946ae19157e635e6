#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lhsys {

/// Ordered list of variable identifiers, optionally with declared conjugate
/// (q, p) index pairs. The pairing is what the Poisson bracket differentiates
/// against; unpaired variables behave as parameters.
///
/// Spaces are immutable and shared by the polynomials defined on them.
class VariableSpace {
public:
    using Ptr = std::shared_ptr<const VariableSpace>;

    /// Throws std::invalid_argument on duplicate names or a malformed pairing
    /// (index out of range, or a variable covered more than once).
    static Ptr create(std::vector<std::string> names,
                      std::vector<std::pair<int, int>> pairing = {});

    /// Canonical phase space T*R^dof: q1..q<dof>, p1..p<dof>, fully paired.
    static Ptr phase(int dof);

    /// k diagonal copies of T*R^dof. For copies == 1 this is phase(dof);
    /// otherwise variables carry a copy suffix: q1_1, ..., p<dof>_1, q1_2, ...
    static Ptr prolonged(int dof, int copies);

    /// Plain commuting symbols with no pairing.
    static Ptr symbols(std::vector<std::string> names);

    int arity() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of `name`, or -1 when absent.
    int index_of(std::string_view name) const;

    const std::vector<std::pair<int, int>>& pairing() const { return pairing_; }
    bool has_pairing() const { return !pairing_.empty(); }

    /// Structural equality (names and pairing).
    bool same_as(const VariableSpace& other) const;

private:
    VariableSpace(std::vector<std::string> names,
                  std::vector<std::pair<int, int>> pairing)
        : names_(std::move(names)), pairing_(std::move(pairing)) {}

    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> pairing_;
};

}  // namespace lhsys
