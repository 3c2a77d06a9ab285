#pragma once

#include <vector>

#include "hopf/report.hpp"

namespace hopf {

/// The grading group π, presented by a full multiplication table.
/// Element 0 is always the identity.
class FiniteGroup {
public:
    FiniteGroup() = default;
    explicit FiniteGroup(std::vector<std::vector<int>> table);

    static FiniteGroup cyclic(int n);

    int order() const { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    /// conj(a, b) = b·a·b⁻¹
    int conj(int a, int b) const { return mul(mul(b, a), inv(b)); }

    const std::vector<std::vector<int>> &table() const { return table_; }

    /// Full axiom report: permutation rows/cols, identity at 0, inverses,
    /// exhaustive associativity.
    Report validate() const;

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
};

}  // namespace hopf
