/// @file linform.hpp
/// @brief Matrices whose entries are homogeneous linear forms in the target
///        variables; the shape every representation matrix takes.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/multipoly.hpp"
#include "toric/qlinalg.hpp"

namespace toric {

/// Sparse linear form sum_j c_j * X_{v_j} (no constant term).
struct LinearForm {
    std::vector<std::pair<int, Rat>> terms;  // sorted by variable index

    void add(int var, const Rat& c);
    bool is_zero() const { return terms.empty(); }
    Rat eval(const std::vector<Rat>& x) const;
    MultiPoly to_poly(const RosterPtr& roster) const;
};

/// Column-sparse matrix of linear forms.  row_labels holds the A_nu basis
/// points when rows are a graded piece (empty otherwise).
struct LinearFormMatrix {
    RosterPtr x_roster;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Point> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<std::pair<std::size_t, LinearForm>>> columns;

    /// Numeric specialization at an X-point.
    QMat evaluate(const std::vector<Rat>& x) const;

    /// Entry as a polynomial (zero form for absent cells).
    MultiPoly cell_poly(std::size_t r, std::size_t c) const;
};

}  // namespace toric
