#include "crystal/inequalities.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace crystal {

AffineForm AffineForm::zero(int rank) {
    AffineForm f;
    f.lambda_coeffs.assign(rank, Rational(0));
    return f;
}

AffineForm AffineForm::coordinate(int k, int rank) {
    AffineForm f = zero(rank);
    f.coeffs[k] = 1;
    return f;
}

Rational AffineForm::coeff(int k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? Rational(0) : it->second;
}

Rational AffineForm::constant_at(const WeightVec& lambda) const {
    Rational s = c0;
    for (std::size_t i = 0; i < lambda_coeffs.size(); ++i) s += lambda_coeffs[i] * lambda.coords.at(i);
    return s;
}

Rational AffineForm::evaluate(const WeightVec& lambda, const Point& a) const {
    Rational s = constant_at(lambda);
    for (const auto& [k, c] : coeffs) {
        if (k <= static_cast<int>(a.size())) s += c * a[k - 1];
    }
    return s;
}

bool AffineForm::is_zero() const { return coeffs.empty() && c0 == 0 && !has_symbolic_constant(); }

bool AffineForm::has_symbolic_constant() const {
    return std::any_of(lambda_coeffs.begin(), lambda_coeffs.end(), [](const Rational& q) { return q != 0; });
}

AffineForm AffineForm::restricted(int r) const {
    AffineForm out = *this;
    out.coeffs.erase(out.coeffs.upper_bound(r), out.coeffs.end());
    return out;
}

AffineForm& AffineForm::add_scaled(const AffineForm& other, const Rational& factor) {
    for (const auto& [k, c] : other.coeffs) {
        Rational v = coeff(k) + factor * c;
        if (v == 0)
            coeffs.erase(k);
        else
            coeffs[k] = v;
    }
    c0 += factor * other.c0;
    if (lambda_coeffs.size() < other.lambda_coeffs.size()) lambda_coeffs.resize(other.lambda_coeffs.size(), 0);
    for (std::size_t i = 0; i < other.lambda_coeffs.size(); ++i) lambda_coeffs[i] += factor * other.lambda_coeffs[i];
    return *this;
}

bool operator<(const AffineForm& x, const AffineForm& y) {
    if (x.coeffs != y.coeffs) return x.coeffs < y.coeffs;
    if (x.c0 != y.c0) return x.c0 < y.c0;
    return x.lambda_coeffs < y.lambda_coeffs;
}

std::string to_string(const AffineForm& form) {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Rational& c, const std::string& name) {
        if (c == 0) return;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational mag = c < 0 ? Rational(-c) : c;
        if (name.empty() || mag != 1) os << mag.str() << (name.empty() ? "" : "*");
        os << name;
        first = false;
    };
    term(form.c0, "");
    for (std::size_t i = 0; i < form.lambda_coeffs.size(); ++i) term(form.lambda_coeffs[i], "L" + std::to_string(i + 1));
    for (const auto& [k, c] : form.coeffs) term(c, "a" + std::to_string(k));
    if (first) os << "0";
    return os.str();
}

AffineForm beta_plus(const SequenceSpec& spec, int k) {
    const int ik = spec.letter(k);
    const int kp = spec.next_same(k);
    AffineForm f = AffineForm::coordinate(k, spec.rank());
    for (int j = k + 1; j < kp; ++j) f.add_scaled(AffineForm::coordinate(j, spec.rank()), spec.cartan()(ik, spec.letter(j)));
    f.add_scaled(AffineForm::coordinate(kp, spec.rank()), 1);
    return f;
}

AffineForm beta_minus(const SequenceSpec& spec, int k) {
    const int ik = spec.letter(k);
    const int km = spec.prev_same(k);
    AffineForm f = AffineForm::coordinate(k, spec.rank());
    if (km > 0) {
        f.add_scaled(AffineForm::coordinate(km, spec.rank()), 1);
    } else {
        f.lambda_coeffs[ik - 1] -= 1;
    }
    for (int j = km + 1; j < k; ++j) f.add_scaled(AffineForm::coordinate(j, spec.rank()), spec.cartan()(ik, spec.letter(j)));
    return f;
}

AffineForm lambda_form(const SequenceSpec& spec, int i) {
    const int first = spec.first_occurrence(i);
    AffineForm f = AffineForm::zero(spec.rank());
    f.lambda_coeffs[i - 1] = 1;
    for (int j = 1; j < first; ++j) f.add_scaled(AffineForm::coordinate(j, spec.rank()), -spec.cartan()(i, spec.letter(j)));
    f.add_scaled(AffineForm::coordinate(first, spec.rank()), -1);
    return f;
}

AffineForm shat(const SequenceSpec& spec, int k, const AffineForm& psi) {
    const Rational pk = psi.coeff(k);
    if (pk == 0) return psi;
    AffineForm out = psi;
    out.add_scaled(pk > 0 ? beta_plus(spec, k) : beta_minus(spec, k), -pk);
    return out;
}

std::vector<AffineForm> restrict_forms(const std::vector<AffineForm>& forms, int r) {
    std::set<AffineForm> out;
    for (const auto& f : forms) {
        AffineForm g = f.restricted(r);
        if (!g.is_zero()) out.insert(std::move(g));
    }
    return {out.begin(), out.end()};
}

namespace {

struct Closure {
    std::set<AffineForm> forms;
    int depth = 0;
    bool closed = false;
};

Closure close_under_shat(const SequenceSpec& spec, int window, int depth_cap, const std::vector<AffineForm>& seeds) {
    Closure c;
    c.forms.insert(seeds.begin(), seeds.end());
    std::vector<AffineForm> frontier(c.forms.begin(), c.forms.end());
    while (!frontier.empty()) {
        if (c.depth == depth_cap) return c;
        ++c.depth;
        std::vector<AffineForm> fresh;
        for (const auto& psi : frontier) {
            for (const auto& [k, coeff] : psi.coeffs) {
                if (k > window) break;
                AffineForm next = shat(spec, k, psi);
                if (c.forms.insert(next).second) fresh.push_back(std::move(next));
            }
        }
        frontier = std::move(fresh);
    }
    c.closed = true;
    return c;
}

std::vector<AffineForm> default_seeds(const SequenceSpec& spec, int window) {
    std::vector<AffineForm> seeds;
    for (int j = 1; j <= window; ++j) seeds.push_back(AffineForm::coordinate(j, spec.rank()));
    for (int i = 1; i <= spec.rank(); ++i) seeds.push_back(lambda_form(spec, i));
    return seeds;
}

}  // namespace

XiSet generate_xi(const SequenceSpec& spec, int window, int depth_cap,
                  const std::optional<std::vector<AffineForm>>& seeds_override) {
    const int base = static_cast<int>(spec.base().size());
    if (window < base) throw std::invalid_argument("window must cover the base word");
    if (depth_cap < 1) throw std::invalid_argument("depth cap must be >= 1");

    const int wider = window + spec.rank();
    const Closure here = close_under_shat(spec, window, depth_cap,
                                          seeds_override ? *seeds_override : default_seeds(spec, window));
    const Closure there = close_under_shat(spec, wider, depth_cap,
                                           seeds_override ? *seeds_override : default_seeds(spec, wider));
    XiSet xi;
    xi.forms.assign(here.forms.begin(), here.forms.end());
    xi.window = window;
    xi.depth_used = here.depth;
    xi.closed = here.closed && there.closed;
    xi.window_stable =
        restrict_forms(xi.forms, base) == restrict_forms({there.forms.begin(), there.forms.end()}, base);
    xi.certified = xi.closed && xi.window_stable;
    return xi;
}

bool ample_check(const XiSet& xi, const WeightVec& lambda) {
    if (!xi.certified) throw UncertifiedError("ampleness needs a certified closure");
    return std::all_of(xi.forms.begin(), xi.forms.end(),
                       [&](const AffineForm& f) { return f.constant_at(lambda) >= 0; });
}

std::vector<AffineForm> delta_hrep(const XiSet& xi, int r, const std::optional<WeightVec>& lambda) {
    if (!xi.certified) throw UncertifiedError("H-representation needs a certified closure");
    if (!lambda) return restrict_forms(xi.forms, r);
    if (!ample_check(xi, *lambda))
        throw NotAmpleError("pair is not ample; use crystal enumeration (delta-points) instead");
    std::vector<AffineForm> folded;
    for (const auto& f : restrict_forms(xi.forms, r)) {
        AffineForm g = f;
        g.c0 = f.constant_at(*lambda);
        std::fill(g.lambda_coeffs.begin(), g.lambda_coeffs.end(), Rational(0));
        folded.push_back(std::move(g));
    }
    return restrict_forms(folded, r);
}

HalfSpaceSystem to_system(const std::vector<AffineForm>& forms, int r, const WeightVec& lambda) {
    HalfSpaceSystem sys{r, {}};
    for (const auto& f : forms) {
        Inequality row;
        row.coeffs.assign(r, Rational(0));
        for (const auto& [k, c] : f.coeffs) {
            if (k > r) throw std::invalid_argument("form has support beyond the system dimension");
            row.coeffs[k - 1] = c;
        }
        row.constant = f.constant_at(lambda);
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

std::string format_hrep_text(const std::vector<AffineForm>& forms, int rank, int r) {
    std::ostringstream os;
    for (const auto& f : forms) {
        os << f.c0.str();
        for (int i = 1; i <= rank; ++i) {
            const Rational c = i <= static_cast<int>(f.lambda_coeffs.size()) ? f.lambda_coeffs[i - 1] : Rational(0);
            os << " + " << c.str() << "*L" << i;
        }
        for (int k = 1; k <= r; ++k) os << " + " << f.coeff(k).str() << "*a" << k;
        os << " >= 0\n";
    }
    return os.str();
}

}  // namespace crystal
