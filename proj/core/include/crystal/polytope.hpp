#pragma once

#include "crystal/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace crystal {

using Point = std::vector<int>;
using PointSet = std::set<Point>;

/// Point sets graded by the dilation level k >= 1.
struct GradedPointSet {
    std::map<int, PointSet> levels;
};

struct LatticeBox {
    std::vector<int> lo;
    std::vector<int> hi;

    int dim() const { return static_cast<int>(lo.size()); }
    bool contains(const Point& p) const;
};

/// <coeffs, a> + constant >= 0
struct Inequality {
    std::vector<Rational> coeffs;
    Rational constant;

    Rational evaluate(const Point& a) const;
    friend bool operator==(const Inequality&, const Inequality&) = default;
    friend bool operator<(const Inequality& x, const Inequality& y) {
        if (x.coeffs != y.coeffs) return x.coeffs < y.coeffs;
        return x.constant < y.constant;
    }
};

struct HalfSpaceSystem {
    int dim = 0;
    std::vector<Inequality> rows;

    bool satisfied_by(const Point& a) const;
};

/// Integer-cleared (primitive) rows, duplicates and trivially true rows removed,
/// sorted. With prune_redundant, rows implied by the others (exact
/// Fourier-Motzkin test over Q) are dropped as well.
HalfSpaceSystem normalize(const HalfSpaceSystem& sys, bool prune_redundant = false);

/// Exact feasibility over Q^dim of rows that are each >= 0 or (strict) > 0.
bool fourier_motzkin_feasible(int dim, std::vector<Inequality> rows, std::vector<bool> strict);

/// True iff every point of Q^dim satisfying sys also satisfies row.
bool implies(const HalfSpaceSystem& sys, const Inequality& row);

/// Integer points of the box satisfying every row, in lexicographic order.
PointSet lattice_points(const HalfSpaceSystem& sys, const LatticeBox& box);

struct LevelReport {
    int k = 0;
    std::size_t crystal_count = 0;
    std::size_t lattice_count = 0;
    bool match = false;
    std::optional<Point> first_discrepancy;
};

struct CompareReport {
    bool ok = true;
    std::vector<LevelReport> levels;
};

/// Level k of points must equal the lattice points of system_at(k) inside box_at(k).
CompareReport compare_levels(const GradedPointSet& points, const std::function<HalfSpaceSystem(int)>& system_at,
                             const std::function<LatticeBox(int)>& box_at);

/// Worker count for box filtering: CRYSTAL_POLYTOPE_THREADS when set, else hardware concurrency.
int configured_threads();

}  // namespace crystal
