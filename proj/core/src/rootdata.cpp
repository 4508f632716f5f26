#include "crystal/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace crystal {

bool WeightVec::is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool WeightVec::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

WeightVec WeightVec::scaled(int k) const {
    WeightVec out = *this;
    for (int& c : out.coords) c *= k;
    return out;
}

namespace {

std::vector<std::vector<int>> chain_matrix(int rank) {
    std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) {
        m[i][i] = 2;
        if (i + 1 < rank) m[i][i + 1] = m[i + 1][i] = -1;
    }
    return m;
}

// Symmetrizer via propagation over each connected component; empty if none exists.
std::vector<int> find_symmetrizer(int rank, const std::vector<int>& e) {
    auto c = [&](int i, int j) { return e[i * rank + j]; };
    std::vector<Rational> d(rank, Rational(0));
    for (int start = 0; start < rank; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < rank; ++j) {
                if (j == i || c(i, j) == 0) continue;
                Rational want = d[i] * c(i, j) / c(j, i);
                if (d[j] == 0) {
                    d[j] = want;
                    queue.push_back(j);
                } else if (d[j] != want) {
                    return {};
                }
            }
        }
    }
    BigInt lcm = 1;
    for (const auto& q : d) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(q));
    std::vector<BigInt> scaled;
    BigInt g = 0;
    for (const auto& q : d) {
        BigInt v = boost::multiprecision::numerator(q) * (lcm / boost::multiprecision::denominator(q));
        scaled.push_back(v);
        g = boost::multiprecision::gcd(g, v);
    }
    std::vector<int> out;
    for (const auto& v : scaled) out.push_back(static_cast<int>(v / g));
    return out;
}

// Sylvester's criterion on the symmetrized matrix.
bool positive_definite(int rank, const std::vector<int>& e, const std::vector<int>& d) {
    std::vector<std::vector<Rational>> b(rank, std::vector<Rational>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) b[i][j] = Rational(d[i]) * e[i * rank + j];
    for (int col = 0; col < rank; ++col) {
        if (b[col][col] <= 0) return false;
        for (int row = col + 1; row < rank; ++row) {
            Rational f = b[row][col] / b[col][col];
            for (int k = col; k < rank; ++k) b[row][k] -= f * b[col][k];
        }
    }
    return true;
}

}  // namespace

CartanMatrix::CartanMatrix(int rank, std::vector<int> entries) : rank_(rank), entries_(std::move(entries)) {
    symmetrizer_ = find_symmetrizer(rank_, entries_);
    if (symmetrizer_.empty()) throw std::invalid_argument("Cartan matrix is not symmetrizable");
    finite_ = positive_definite(rank_, entries_, symmetrizer_);
}

CartanMatrix CartanMatrix::from_rows(std::vector<std::vector<int>> rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw std::invalid_argument("Cartan matrix must have positive rank");
    std::vector<int> entries;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("Cartan matrix must be square");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int cij = entries[i * n + j], cji = entries[j * n + i];
            if (i == j && cij != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
            if (i != j && cij > 0) throw std::invalid_argument("off-diagonal Cartan entries must be <= 0");
            if (i != j && (cij == 0) != (cji == 0))
                throw std::invalid_argument("Cartan matrix must satisfy c_ij = 0 iff c_ji = 0");
        }
    }
    return CartanMatrix(n, std::move(entries));
}

CartanMatrix CartanMatrix::builtin(char family, int rank) {
    auto bad = [&] {
        return std::invalid_argument(std::string("unsupported Cartan type ") + family + std::to_string(rank));
    };
    std::vector<std::vector<int>> m;
    switch (family) {
    case 'A':
        if (rank < 1) throw bad();
        m = chain_matrix(rank);
        break;
    case 'B':
        if (rank < 2) throw bad();
        m = chain_matrix(rank);
        m[rank - 1][rank - 2] = -2;
        break;
    case 'C':
        if (rank < 2) throw bad();
        m = chain_matrix(rank);
        m[rank - 2][rank - 1] = -2;
        break;
    case 'D':
        if (rank < 4) throw bad();
        m = chain_matrix(rank);
        m[rank - 2][rank - 1] = m[rank - 1][rank - 2] = 0;
        m[rank - 3][rank - 1] = m[rank - 1][rank - 3] = -1;
        break;
    case 'E': {
        if (rank < 6 || rank > 8) throw bad();
        m.assign(rank, std::vector<int>(rank, 0));
        for (int i = 0; i < rank; ++i) m[i][i] = 2;
        auto link = [&](int a, int b) { m[a - 1][b - 1] = m[b - 1][a - 1] = -1; };
        link(1, 3);
        link(2, 4);
        link(3, 4);
        for (int i = 4; i < rank; ++i) link(i, i + 1);
        break;
    }
    case 'F':
        if (rank != 4) throw bad();
        m = chain_matrix(4);
        m[2][1] = -2;
        break;
    case 'G':
        if (rank != 2) throw bad();
        m = {{2, -3}, {-1, 2}};
        break;
    default:
        throw bad();
    }
    CartanMatrix out = from_rows(std::move(m));
    out.family_ = family;
    return out;
}

std::vector<std::vector<int>> CartanMatrix::rows() const {
    std::vector<std::vector<int>> out(rank_);
    for (int i = 0; i < rank_; ++i)
        out[i].assign(entries_.begin() + i * rank_, entries_.begin() + (i + 1) * rank_);
    return out;
}

int CartanMatrix::pair(const RootCombo& mu, int i) const {
    int s = 0;
    for (int j = 1; j <= rank_; ++j) s += (*this)(i, j) * mu.coords[j - 1];
    return s;
}

WeightVec CartanMatrix::to_weight(const RootCombo& mu) const {
    WeightVec w{std::vector<int>(rank_)};
    for (int i = 1; i <= rank_; ++i) w.coords[i - 1] = pair(mu, i);
    return w;
}

Word parse_word(const std::string& text) {
    Word out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad word letter: " + item);
        out.push_back(v);
    }
    return out;
}

std::string format_word(std::span<const int> word) {
    std::string out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(word[k]);
    }
    return out;
}

void require_letters(const CartanMatrix& cartan, std::span<const int> word) {
    for (int j : word)
        if (j < 1 || j > cartan.rank())
            throw std::invalid_argument("word letter " + std::to_string(j) + " out of range");
}

void require_finite_type(const CartanMatrix& cartan) {
    if (!cartan.is_finite_type()) throw std::invalid_argument("operation requires a finite-type Cartan matrix");
}

void require_dominant(const WeightVec& lambda, int rank) {
    if (lambda.rank() != rank) throw std::invalid_argument("weight has wrong rank");
    if (!lambda.is_dominant()) throw std::invalid_argument("weight must be dominant");
}

WeightVec reflect(const CartanMatrix& cartan, int i, const WeightVec& lambda) {
    WeightVec out = lambda;
    const int p = lambda[i];
    for (int j = 1; j <= cartan.rank(); ++j) out.coords[j - 1] -= p * cartan(j, i);
    return out;
}

RootCombo reflect(const CartanMatrix& cartan, int i, const RootCombo& mu) {
    RootCombo out = mu;
    out.coords[i - 1] -= cartan.pair(mu, i);
    return out;
}

bool is_reduced(const CartanMatrix& cartan, std::span<const int> word) {
    require_letters(cartan, word);
    const int n = cartan.rank();
    for (std::size_t k = 0; k < word.size(); ++k) {
        RootCombo beta{std::vector<int>(n, 0)};
        beta.coords[word[k] - 1] = 1;
        for (std::size_t j = k; j-- > 0;) beta = reflect(cartan, word[j], beta);
        if (std::all_of(beta.coords.begin(), beta.coords.end(), [](int c) { return c <= 0; })) return false;
    }
    return true;
}

std::vector<RootCombo> positive_roots(const CartanMatrix& cartan) {
    require_finite_type(cartan);
    const int n = cartan.rank();
    std::set<std::vector<int>> seen;
    std::vector<RootCombo> out;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<int> a(n, 0);
        a[i] = 1;
        seen.insert(a);
        queue.push_back(a);
    }
    while (!queue.empty()) {
        RootCombo beta{queue.front()};
        queue.pop_front();
        out.push_back(beta);
        for (int i = 1; i <= n; ++i) {
            RootCombo s = reflect(cartan, i, beta);
            bool positive = std::all_of(s.coords.begin(), s.coords.end(), [](int c) { return c >= 0; });
            if (positive && seen.insert(s.coords).second) queue.push_back(s.coords);
        }
    }
    std::sort(out.begin(), out.end(), [](const RootCombo& a, const RootCombo& b) {
        int ha = std::accumulate(a.coords.begin(), a.coords.end(), 0);
        int hb = std::accumulate(b.coords.begin(), b.coords.end(), 0);
        return ha != hb ? ha < hb : a.coords < b.coords;
    });
    return out;
}

Word complete_to_longest(const CartanMatrix& cartan, std::span<const int> word) {
    require_finite_type(cartan);
    if (!is_reduced(cartan, word)) throw std::invalid_argument("word is not reduced: " + format_word(word));
    const std::size_t target = positive_roots(cartan).size();
    Word out(word.begin(), word.end());
    while (out.size() < target) {
        bool grown = false;
        for (int i = 1; i <= cartan.rank() && !grown; ++i) {
            out.push_back(i);
            if (is_reduced(cartan, out))
                grown = true;
            else
                out.pop_back();
        }
        if (!grown) throw std::logic_error("reduced word cannot be extended");
    }
    return out;
}

RootCombo lowest_weight_gap(const CartanMatrix& cartan, const WeightVec& lambda) {
    require_dominant(lambda, cartan.rank());
    RootCombo gap{std::vector<int>(cartan.rank(), 0)};
    WeightVec mu = lambda;
    for (int i : complete_to_longest(cartan, Word{})) {
        gap.coords[i - 1] += mu[i];
        mu = reflect(cartan, i, mu);
    }
    return gap;
}

BigInt weyl_dim_oracle(const CartanMatrix& cartan, const WeightVec& lambda) {
    require_finite_type(cartan);
    require_dominant(lambda, cartan.rank());
    const auto& d = cartan.symmetrizer();
    Rational dim = 1;
    for (const auto& alpha : positive_roots(cartan)) {
        BigInt num = 0, den = 0;
        for (int j = 0; j < cartan.rank(); ++j) {
            num += BigInt(alpha.coords[j]) * d[j] * (lambda.coords[j] + 1);
            den += BigInt(alpha.coords[j]) * d[j];
        }
        dim *= Rational(num, den);
    }
    if (!is_integer(dim)) throw std::logic_error("Weyl dimension formula produced a non-integer");
    return boost::multiprecision::numerator(dim);
}

}  // namespace crystal
