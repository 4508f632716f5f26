#include "crystal/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace crystal {

bool LatticeBox::contains(const Point& p) const {
    if (static_cast<int>(p.size()) != dim()) return false;
    for (int k = 0; k < dim(); ++k)
        if (p[k] < lo[k] || p[k] > hi[k]) return false;
    return true;
}

Rational Inequality::evaluate(const Point& a) const {
    Rational s = constant;
    for (std::size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] * a[k];
    return s;
}

bool HalfSpaceSystem::satisfied_by(const Point& a) const {
    return std::all_of(rows.begin(), rows.end(), [&](const Inequality& r) { return r.evaluate(a) >= 0; });
}

namespace {

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

// Positive rescaling to coprime integers.
Inequality primitive(const Inequality& row) {
    BigInt lcm = 1;
    auto absorb = [&](const Rational& q) { lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(q)); };
    for (const auto& c : row.coeffs) absorb(c);
    absorb(row.constant);
    BigInt g = 0;
    auto gather = [&](const Rational& q) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(boost::multiprecision::numerator(Rational(q * lcm))));
    };
    for (const auto& c : row.coeffs) gather(c);
    gather(row.constant);
    if (g == 0) return row;
    Inequality out;
    for (const auto& c : row.coeffs) out.coeffs.push_back(Rational(c * lcm) / g);
    out.constant = Rational(row.constant * lcm) / g;
    return out;
}

struct Row {
    Inequality ineq;
    bool strict = false;
};

}  // namespace

bool fourier_motzkin_feasible(int dim, std::vector<Inequality> rows, std::vector<bool> strict) {
    std::vector<Row> cur;
    for (std::size_t r = 0; r < rows.size(); ++r) cur.push_back({primitive(rows[r]), strict[r]});
    for (int var = 0; var < dim; ++var) {
        std::vector<Row> pos, neg, next;
        for (auto& row : cur) {
            const Rational& c = row.ineq.coeffs[var];
            if (c > 0)
                pos.push_back(row);
            else if (c < 0)
                neg.push_back(row);
            else
                next.push_back(row);
        }
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                Rational wp = -n.ineq.coeffs[var], wn = p.ineq.coeffs[var];
                Row combo;
                combo.strict = p.strict || n.strict;
                combo.ineq.coeffs.resize(dim);
                for (int k = 0; k < dim; ++k) combo.ineq.coeffs[k] = wp * p.ineq.coeffs[k] + wn * n.ineq.coeffs[k];
                combo.ineq.constant = wp * p.ineq.constant + wn * n.ineq.constant;
                combo.ineq = primitive(combo.ineq);
                next.push_back(std::move(combo));
            }
        }
        std::sort(next.begin(), next.end(), [](const Row& a, const Row& b) {
            if (a.ineq == b.ineq) return a.strict > b.strict;
            return a.ineq < b.ineq;
        });
        next.erase(std::unique(next.begin(), next.end(), [](const Row& a, const Row& b) { return a.ineq == b.ineq; }),
                   next.end());
        cur = std::move(next);
    }
    for (const auto& row : cur) {
        if (row.strict ? row.ineq.constant <= 0 : row.ineq.constant < 0) return false;
    }
    return true;
}

bool implies(const HalfSpaceSystem& sys, const Inequality& row) {
    std::vector<Inequality> rows = sys.rows;
    std::vector<bool> strict(rows.size(), false);
    Inequality negated;
    for (const auto& c : row.coeffs) negated.coeffs.push_back(-c);
    negated.constant = -row.constant;
    rows.push_back(negated);
    strict.push_back(true);
    return !fourier_motzkin_feasible(sys.dim, std::move(rows), std::move(strict));
}

HalfSpaceSystem normalize(const HalfSpaceSystem& sys, bool prune_redundant) {
    HalfSpaceSystem out{sys.dim, {}};
    for (const auto& row : sys.rows) {
        if (static_cast<int>(row.coeffs.size()) != sys.dim)
            throw std::invalid_argument("inequality dimension does not match the system");
        Inequality p = primitive(row);
        if (all_zero(p.coeffs) && p.constant >= 0) continue;
        out.rows.push_back(std::move(p));
    }
    std::sort(out.rows.begin(), out.rows.end());
    out.rows.erase(std::unique(out.rows.begin(), out.rows.end()), out.rows.end());
    if (prune_redundant) {
        for (std::size_t r = out.rows.size(); r-- > 0;) {
            HalfSpaceSystem rest{out.dim, out.rows};
            rest.rows.erase(rest.rows.begin() + static_cast<std::ptrdiff_t>(r));
            if (implies(rest, out.rows[r])) out.rows = std::move(rest.rows);
        }
    }
    return out;
}

int configured_threads() {
    if (const char* env = std::getenv("CRYSTAL_POLYTOPE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

PointSet lattice_points(const HalfSpaceSystem& sys, const LatticeBox& box) {
    if (box.dim() != sys.dim) throw std::invalid_argument("box dimension does not match the system");
    for (int k = 0; k < box.dim(); ++k)
        if (box.lo[k] > box.hi[k]) return {};
    const HalfSpaceSystem norm = normalize(sys);
    // Integer rows after normalization; evaluate in 64-bit.
    struct IntRow {
        std::vector<long long> c;
        long long c0;
    };
    std::vector<IntRow> rows;
    for (const auto& r : norm.rows) {
        IntRow ir;
        for (const auto& c : r.coeffs) ir.c.push_back(static_cast<long long>(boost::multiprecision::numerator(c)));
        ir.c0 = static_cast<long long>(boost::multiprecision::numerator(r.constant));
        rows.push_back(std::move(ir));
    }
    const int dim = box.dim();
    auto scan = [&](int first_lo, int first_hi, std::vector<Point>& found) {
        if (dim == 0) {
            if (std::all_of(rows.begin(), rows.end(), [](const IntRow& r) { return r.c0 >= 0; })) found.push_back({});
            return;
        }
        Point p(box.lo);
        p[0] = first_lo;
        for (;;) {
            bool ok = true;
            for (const auto& r : rows) {
                long long s = r.c0;
                for (int k = 0; k < dim; ++k) s += r.c[k] * p[k];
                if (s < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) found.push_back(p);
            int k = dim - 1;
            while (k >= 0) {
                const int hi = k == 0 ? first_hi : box.hi[k];
                if (p[k] < hi) {
                    ++p[k];
                    break;
                }
                p[k] = k == 0 ? first_lo : box.lo[k];
                --k;
            }
            if (k < 0) break;
        }
    };
    std::vector<std::vector<Point>> chunks;
    if (dim == 0) {
        chunks.resize(1);
        scan(0, 0, chunks[0]);
    } else {
        const int span = box.hi[0] - box.lo[0] + 1;
        const int workers = std::min(configured_threads(), span);
        chunks.resize(workers);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            const int a = box.lo[0] + span * w / workers;
            const int b = box.lo[0] + span * (w + 1) / workers - 1;
            if (workers == 1)
                scan(a, b, chunks[w]);
            else
                pool.emplace_back([&, a, b, w] { scan(a, b, chunks[w]); });
        }
        for (auto& t : pool) t.join();
    }
    PointSet out;
    for (auto& c : chunks) out.insert(c.begin(), c.end());
    return out;
}

CompareReport compare_levels(const GradedPointSet& points, const std::function<HalfSpaceSystem(int)>& system_at,
                             const std::function<LatticeBox(int)>& box_at) {
    CompareReport report;
    for (const auto& [k, level] : points.levels) {
        const PointSet lattice = lattice_points(system_at(k), box_at(k));
        LevelReport lr;
        lr.k = k;
        lr.crystal_count = level.size();
        lr.lattice_count = lattice.size();
        lr.match = lattice == level;
        if (!lr.match) {
            std::vector<Point> diff;
            std::set_symmetric_difference(level.begin(), level.end(), lattice.begin(), lattice.end(),
                                          std::back_inserter(diff));
            if (!diff.empty()) lr.first_discrepancy = diff.front();
            report.ok = false;
        }
        report.levels.push_back(std::move(lr));
    }
    return report;
}

}  // namespace crystal
