#pragma once

// Integer row-echelon lattice over sparse vectors. Inserting vectors keeps a
// Hermite-style basis (one vector per pivot, pivot entries positive) together
// with each basis vector's expression in the inserted generators, so that
// membership queries return an integer combination.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "branchkit/integer.hpp"

namespace branchkit {

using SparseVec = std::vector<std::pair<int, Integer>>;  // sorted by index, no zeros

class IntegerLattice {
public:
    // Adds generator number `id`.
    void insert(SparseVec v, int id);
    // Coefficients c_id with sum c_id * generator_id = target, if one exists.
    std::optional<std::map<int, Integer>> solve(SparseVec target) const;

    std::size_t rank() const noexcept { return basis_.size(); }

private:
    struct Row {
        SparseVec vec;
        SparseVec combo;
    };
    std::map<int, Row> basis_;
};

// a*x + b*y, dropping zeros.
SparseVec axpby(const Integer& a, const SparseVec& x, const Integer& b, const SparseVec& y);

}  // namespace branchkit
