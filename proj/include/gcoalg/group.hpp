#pragma once

#include <cstddef>
#include <vector>

#include "gcoalg/errors.hpp"

namespace gcoalg {

/// A finite group given by its multiplication table. Elements are dense
/// indices 0..order-1; the identity is located by scan (it need not be
/// index 0 in tables loaded from files). Construction validates identity,
/// associativity (all triples) and inverses, and throws NotAGroup naming
/// the witness on failure.
class FiniteGroup {
  public:
    FiniteGroup() = default;  // the trivial group

    static FiniteGroup from_table(const std::vector<std::vector<std::size_t>>& table);
    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

    std::size_t order() const { return order_; }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inv(std::size_t a) const { return inverse_[a]; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

  private:
    std::size_t order_ = 1;
    std::vector<std::vector<std::size_t>> table_ = {{0}};
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_ = {0};
};

}  // namespace gcoalg
