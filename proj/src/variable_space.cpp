#include "lhsys/variable_space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lhsys {

VariableSpace::Ptr VariableSpace::create(std::vector<std::string> names,
                                         std::vector<std::pair<int, int>> pairing) {
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size())
        throw std::invalid_argument("VariableSpace: duplicate variable names");

    const int n = static_cast<int>(names.size());
    std::set<int> covered;
    for (const auto& [q, p] : pairing) {
        for (int idx : {q, p}) {
            if (idx < 0 || idx >= n)
                throw std::invalid_argument("VariableSpace: pairing index out of range");
            if (!covered.insert(idx).second)
                throw std::invalid_argument("VariableSpace: variable paired more than once");
        }
        if (q == p) throw std::invalid_argument("VariableSpace: variable paired with itself");
    }
    return Ptr(new VariableSpace(std::move(names), std::move(pairing)));
}

VariableSpace::Ptr VariableSpace::phase(int dof) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> pairing;
    for (int i = 1; i <= dof; ++i) names.push_back("q" + std::to_string(i));
    for (int i = 1; i <= dof; ++i) names.push_back("p" + std::to_string(i));
    for (int i = 0; i < dof; ++i) pairing.emplace_back(i, dof + i);
    return create(std::move(names), std::move(pairing));
}

VariableSpace::Ptr VariableSpace::prolonged(int dof, int copies) {
    if (copies < 1) throw std::invalid_argument("prolonged: copy count must be >= 1");
    if (copies == 1) return phase(dof);
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> pairing;
    for (int c = 1; c <= copies; ++c) {
        const int base = (c - 1) * 2 * dof;
        for (int i = 1; i <= dof; ++i)
            names.push_back("q" + std::to_string(i) + "_" + std::to_string(c));
        for (int i = 1; i <= dof; ++i)
            names.push_back("p" + std::to_string(i) + "_" + std::to_string(c));
        for (int i = 0; i < dof; ++i) pairing.emplace_back(base + i, base + dof + i);
    }
    return create(std::move(names), std::move(pairing));
}

VariableSpace::Ptr VariableSpace::symbols(std::vector<std::string> names) {
    return create(std::move(names), {});
}

int VariableSpace::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool VariableSpace::same_as(const VariableSpace& other) const {
    if (this == &other) return true;
    return names_ == other.names_ && pairing_ == other.pairing_;
}

}  // namespace lhsys
