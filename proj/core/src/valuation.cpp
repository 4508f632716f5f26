#include "crystal/valuation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace crystal {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int k) {
    if (k < 1 || k > nvars) throw std::invalid_argument("variable index out of range");
    Exponent e(nvars, 0);
    e[k - 1] = 1;
    return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int MultiPoly::degree_in(int k) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[k - 1]);
    return d;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::derivative(int k) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[k - 1] == 0) continue;
        Exponent d = e;
        --d[k - 1];
        out.add_term(d, c * e[k - 1]);
    }
    return out;
}

MultiPoly MultiPoly::substitute_zero(int k) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        if (e[k - 1] == 0) out.terms_.emplace(e, c);
    return out;
}

MultiPoly MultiPoly::truncated(int r) const {
    MultiPoly out(r);
    for (const auto& [e, c] : terms_) {
        if (std::any_of(e.begin() + std::min(r, nvars_), e.end(), [](int x) { return x != 0; })) continue;
        Exponent t(r, 0);
        std::copy_n(e.begin(), std::min(r, nvars_), t.begin());
        out.add_term(t, c);
    }
    return out;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    MultiPoly result = constant(nvars_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::string to_string(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool unit = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (mag != 1 || unit) {
            os << mag.str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << (wrote ? "*" : "") << "t" << i + 1;
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

namespace {

class Parser {
public:
    Parser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

    MultiPoly run() {
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long long integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 18) fail("integer too large");
        return std::stoll(s_.substr(start, pos_ - start));
    }
    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }
    MultiPoly term() {
        MultiPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }
    MultiPoly factor() {
        if (accept('-')) return factor() * Rational(-1);
        if (accept('+')) return factor();
        MultiPoly base = primary();
        if (accept('^')) {
            long long e = integer();
            if (e > 64) fail("exponent too large");
            return base.pow(static_cast<int>(e));
        }
        return base;
    }
    MultiPoly primary() {
        if (accept('(')) {
            MultiPoly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        skip();
        if (pos_ < s_.size() && s_[pos_] == 't') {
            ++pos_;
            long long k = integer();
            if (k < 1 || k > nvars_) fail("variable t" + std::to_string(k) + " outside t1..t" + std::to_string(nvars_));
            return MultiPoly::variable(nvars_, static_cast<int>(k));
        }
        return MultiPoly::constant(nvars_, Rational(integer()));
    }

    const std::string& s_;
    int nvars_;
    std::size_t pos_ = 0;
};

bool order_less(const Exponent& a, const Exponent& b, Flavor flavor) {
    if (flavor == Flavor::HI) return a < b;
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::vector<int> output_vector(const Exponent& e, Flavor flavor) {
    std::vector<int> out(e.begin(), e.end());
    if (flavor == Flavor::TILDE) std::reverse(out.begin(), out.end());
    return out;
}

/// Echelon basis keyed by leading exponent under the order.
struct Echelon {
    Flavor flavor;
    std::vector<std::pair<Exponent, MultiPoly>> rows;

    const MultiPoly* pivot(const Exponent& e) const {
        for (const auto& [k, p] : rows)
            if (k == e) return &p;
        return nullptr;
    }

    bool insert(MultiPoly p) {
        while (!p.is_zero()) {
            Exponent lead = leading_exponent(p, flavor);
            const MultiPoly* row = pivot(lead);
            if (!row) {
                const Rational c = p.terms().at(lead);
                p *= Rational(1) / c;
                rows.emplace_back(std::move(lead), std::move(p));
                return true;
            }
            p -= *row * p.terms().at(lead);
        }
        return false;
    }
};

RMatrix identity(int d) {
    RMatrix m(d, std::vector<Rational>(d, Rational(0)));
    for (int i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

RMatrix matmul(const RMatrix& a, const RMatrix& b) {
    const std::size_t d = a.size();
    RMatrix m(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < d; ++j) m[i][j] += a[i][k] * b[k][j];
    return m;
}

bool is_zero_matrix(const RMatrix& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

PolyMatrix polymatmul(const PolyMatrix& a, const PolyMatrix& b, int nvars) {
    const std::size_t d = a.size();
    PolyMatrix m(d, std::vector<MultiPoly>(d, MultiPoly(nvars)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            if (!a[i][k].is_zero())
                for (std::size_t j = 0; j < d; ++j)
                    if (!b[k][j].is_zero()) m[i][j] += a[i][k] * b[k][j];
    return m;
}

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m, int nvars) {
    const std::size_t d = m.size();
    if (d == 0) return MultiPoly::constant(nvars, 1);
    if (d == 1) return m[0][0];
    MultiPoly det(nvars);
    for (std::size_t col = 0; col < d; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        for (std::size_t i = 1; i < d; ++i) {
            std::vector<MultiPoly> row;
            for (std::size_t j = 0; j < d; ++j)
                if (j != col) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        MultiPoly term = m[0][col] * determinant(std::move(minor), nvars);
        if (col % 2) det -= term;
        else det += term;
    }
    return det;
}

void combinations(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        combinations(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// All products of `count` factors drawn with repetition from `pool`.
std::vector<MultiPoly> multiset_products(const std::vector<MultiPoly>& pool, int count, int nvars) {
    std::vector<MultiPoly> out;
    std::vector<std::size_t> idx;
    auto rec = [&](auto& self, std::size_t start, const MultiPoly& acc) -> void {
        if (static_cast<int>(idx.size()) == count) {
            out.push_back(acc);
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            idx.push_back(i);
            self(self, i, acc * pool[i]);
            idx.pop_back();
        }
    };
    rec(rec, 0, MultiPoly::constant(nvars, 1));
    return out;
}

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, int nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
    return Parser(text, nvars).run();
}

Exponent leading_exponent(const MultiPoly& f, Flavor flavor) {
    if (f.is_zero()) throw ZeroPolynomialError("valuation of the zero polynomial");
    if (flavor == Flavor::HI) return f.terms().rbegin()->first;
    const Exponent* best = nullptr;
    for (const auto& [e, c] : f.terms())
        if (!best || order_less(*best, e, flavor)) best = &e;
    return *best;
}

std::vector<int> value(const MultiPoly& f, const ValuationOrder& ord) {
    if (ord.r != f.nvars()) throw std::invalid_argument("valuation order rank differs from variable count");
    std::vector<int> v = output_vector(leading_exponent(f, ord.flavor), ord.flavor);
    for (int& x : v) x = -x;
    return v;
}

std::vector<int> value(const RationalFunction& f, const ValuationOrder& ord) {
    std::vector<int> a = value(f.num, ord);
    const std::vector<int> b = value(f.den, ord);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

std::vector<int> chevalley_value(const MultiPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError("valuation of the zero polynomial");
    MultiPoly g = f;
    std::vector<int> a(f.nvars(), 0);
    for (int k = 1; k <= f.nvars(); ++k) {
        int order = 0;
        for (;;) {
            MultiPoly next = g.derivative(k) * Rational(-1);
            if (next.is_zero()) break;
            g = std::move(next);
            ++order;
        }
        a[k - 1] = order;
        g = g.substitute_zero(k);
    }
    return a;
}

std::vector<RMatrix> builtin_generators_A(int n) {
    std::vector<RMatrix> gens;
    for (int i = 1; i <= n; ++i) {
        RMatrix m = identity(n + 1);
        for (auto& row : m) std::fill(row.begin(), row.end(), Rational(0));
        m[i][i - 1] = 1;
        gens.push_back(std::move(m));
    }
    return gens;
}

std::vector<RMatrix> builtin_generators_C2() {
    RMatrix f1(4, std::vector<Rational>(4, Rational(0)));
    RMatrix f2 = f1;
    f1[1][0] = 1;
    f1[3][2] = 1;
    f2[2][1] = 1;
    return {f1, f2};
}

std::vector<RMatrix> builtin_generators(const CartanMatrix& cartan) {
    if (cartan == CartanMatrix::builtin('A', cartan.rank())) return builtin_generators_A(cartan.rank());
    if (cartan.rank() == 2 && cartan == CartanMatrix::builtin('C', 2)) return builtin_generators_C2();
    throw std::invalid_argument("no built-in representation for this Cartan matrix (types A_n and C_2 only)");
}

PolyMatrix unipotent_product(const Word& word, const std::vector<RMatrix>& generators) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    const int d = static_cast<int>(generators.front().size());
    const int r = static_cast<int>(word.size());
    std::vector<std::vector<RMatrix>> powers;  // powers[i][m] = F_i^m / m!
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != d) throw std::invalid_argument("generators differ in size");
        for (const auto& row : g)
            if (static_cast<int>(row.size()) != d) throw std::invalid_argument("generator is not square");
        std::vector<RMatrix> pw{identity(d)};
        RMatrix cur = identity(d);
        BigInt fact = 1;
        for (int m = 1;; ++m) {
            fact *= m;
            cur = matmul(cur, g);
            if (is_zero_matrix(cur)) break;
            if (m >= d) throw std::invalid_argument("generator is not nilpotent");
            RMatrix scaled = cur;
            for (auto& row : scaled)
                for (auto& x : row) x /= Rational(fact);
            pw.push_back(std::move(scaled));
        }
        powers.push_back(std::move(pw));
    }

    PolyMatrix acc(d, std::vector<MultiPoly>(d, MultiPoly(r)));
    for (int i = 0; i < d; ++i) acc[i][i] = MultiPoly::constant(r, 1);
    for (int k = r; k >= 1; --k) {
        const int j = word[k - 1];
        if (j < 1 || j > static_cast<int>(generators.size())) throw std::invalid_argument("letter without generator");
        PolyMatrix factor(d, std::vector<MultiPoly>(d, MultiPoly(r)));
        const auto& pw = powers[j - 1];
        for (std::size_t m = 0; m < pw.size(); ++m) {
            Exponent e(r, 0);
            e[k - 1] = static_cast<int>(m);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    if (pw[m][a][b] != 0) factor[a][b].add_term(e, pw[m][a][b]);
        }
        acc = polymatmul(acc, factor, r);
    }
    return acc;
}

std::vector<MultiPoly> section_span(const PolyMatrix& m, const WeightVec& lambda) {
    const int d = static_cast<int>(m.size());
    if (lambda.rank() != d - 1) throw std::invalid_argument("section_span supports the natural type A representation only");
    require_dominant(lambda, lambda.rank());
    const int nvars = d == 0 ? 0 : m[0][0].nvars();
    std::vector<MultiPoly> result{MultiPoly::constant(nvars, 1)};
    for (int dd = 1; dd < d; ++dd) {
        const int c = lambda[dd];
        if (c == 0) continue;
        std::vector<std::vector<int>> rowsets;
        std::vector<int> cur;
        combinations(d, dd, 0, cur, rowsets);
        std::vector<MultiPoly> minors;
        for (const auto& rows : rowsets) {
            std::vector<std::vector<MultiPoly>> sub;
            for (int i : rows) sub.emplace_back(m[i].begin(), m[i].begin() + dd);
            MultiPoly det = determinant(std::move(sub), nvars);
            if (!det.is_zero()) minors.push_back(std::move(det));
        }
        std::vector<MultiPoly> next;
        for (const auto& prod : multiset_products(minors, c, nvars))
            for (const auto& base : result) next.push_back(base * prod);
        result = std::move(next);
    }
    std::set<MultiPoly> uniq(result.begin(), result.end());
    return {uniq.begin(), uniq.end()};
}

std::set<std::vector<int>> value_set_of_span(const std::vector<MultiPoly>& polys, const ValuationOrder& ord,
                                             Closure closure, int degree_cap) {
    std::set<std::vector<int>> out;
    auto collect = [&](const std::vector<MultiPoly>& span) {
        Echelon ech{ord.flavor, {}};
        for (const auto& p : span) {
            if (p.nvars() != ord.r) throw std::invalid_argument("valuation order rank differs from variable count");
            ech.insert(p);
        }
        for (const auto& [lead, p] : ech.rows) out.insert(output_vector(lead, ord.flavor));
    };
    if (closure == Closure::NONE) {
        collect(polys);
        return out;
    }
    if (degree_cap < 0) throw std::invalid_argument("negative degree cap");
    std::vector<MultiPoly> products;
    for (int deg = 0; deg <= degree_cap; ++deg) {
        auto level = multiset_products(polys, deg, ord.r);
        products.insert(products.end(), level.begin(), level.end());
    }
    collect(products);
    return out;
}

std::size_t span_rank(const std::vector<MultiPoly>& polys) {
    Echelon ech{Flavor::HI, {}};
    std::size_t n = 0;
    for (const auto& p : polys) n += ech.insert(p) ? 1 : 0;
    return n;
}

}  // namespace crystal
