#include "hopf/group.hpp"

#include <stdexcept>

namespace hopf {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table)
    : table_(std::move(table)) {
    const int n = static_cast<int>(table_.size());
    for (const auto &row : table_)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("group table is not square");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table_[a][b] >= 0 && table_[a][b] < n && table_[a][b] == 0 &&
                inverse_[a] < 0)
                inverse_[a] = b;
    // Leave unset inverses at -1; validate() reports the problem.
}

FiniteGroup FiniteGroup::cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

Report FiniteGroup::validate() const {
    Report rep;
    const int n = order();
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        bool row_ok = true, col_ok = true;
        for (int b = 0; b < n; ++b) {
            int rv = table_[a][b], cv = table_[b][a];
            if (rv < 0 || rv >= n || seen_row[rv])
                row_ok = false;
            else
                seen_row[rv] = true;
            if (cv < 0 || cv >= n || seen_col[cv])
                col_ok = false;
            else
                seen_col[cv] = true;
        }
        rep.add("group.row-permutation", idx({a}), row_ok, "row is not a permutation");
        rep.add("group.col-permutation", idx({a}), col_ok, "column is not a permutation");
    }
    for (int a = 0; a < n; ++a) {
        rep.add("group.identity", idx({a}),
                table_[0][a] == a && table_[a][0] == a,
                "element 0 is not a two-sided identity");
        rep.add("group.inverse", idx({a}),
                inverse_[a] >= 0 && table_[a][inverse_[a]] == 0 &&
                    table_[inverse_[a]][a] == 0,
                "no two-sided inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                rep.add("group.assoc", idx({a, b, c}),
                        table_[table_[a][b]][c] == table_[a][table_[b][c]],
                        "(ab)c != a(bc)");
    return rep;
}

}  // namespace hopf
