#include "gcoalg/group.hpp"

#include <string>

namespace gcoalg {

namespace {

std::string elem(std::size_t g) { return std::to_string(g); }

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<std::size_t>>& table) {
    FiniteGroup g;
    g.order_ = table.size();
    if (g.order_ == 0) throw NotAGroup("empty multiplication table");
    for (const auto& row : table) {
        if (row.size() != g.order_) throw NotAGroup("multiplication table is not square");
        for (std::size_t v : row)
            if (v >= g.order_) throw NotAGroup("table entry " + elem(v) + " out of range");
    }
    g.table_ = table;

    // locate the two-sided identity
    bool found = false;
    for (std::size_t e = 0; e < g.order_ && !found; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < g.order_ && ok; ++x)
            ok = table[e][x] == x && table[x][e] == x;
        if (ok) {
            g.identity_ = e;
            found = true;
        }
    }
    if (!found) throw NotAGroup("no identity element");

    for (std::size_t a = 0; a < g.order_; ++a)
        for (std::size_t b = 0; b < g.order_; ++b)
            for (std::size_t c = 0; c < g.order_; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw NotAGroup("non-associative triple (" + elem(a) + ", " + elem(b) + ", " +
                                    elem(c) + ")");

    g.inverse_.assign(g.order_, 0);
    for (std::size_t a = 0; a < g.order_; ++a) {
        bool ok = false;
        for (std::size_t b = 0; b < g.order_; ++b)
            if (table[a][b] == g.identity_ && table[b][a] == g.identity_) {
                g.inverse_[a] = b;
                ok = true;
                break;
            }
        if (!ok) throw NotAGroup("element " + elem(a) + " has no inverse");
    }
    return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw NotAGroup("cyclic group of order 0");
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    return from_table(table);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    std::size_t n = g.order() * h.order();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i1 = 0; i1 < g.order(); ++i1)
        for (std::size_t j1 = 0; j1 < h.order(); ++j1)
            for (std::size_t i2 = 0; i2 < g.order(); ++i2)
                for (std::size_t j2 = 0; j2 < h.order(); ++j2)
                    table[i1 * h.order() + j1][i2 * h.order() + j2] =
                        g.mul(i1, i2) * h.order() + h.mul(j1, j2);
    return from_table(table);
}

}  // namespace gcoalg
