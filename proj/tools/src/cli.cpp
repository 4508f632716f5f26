#include "crystal_cli/cli.hpp"

#include "crystal/demazure.hpp"
#include "crystal/inequalities.hpp"
#include "crystal/valuation.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace crystal::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kConvention = "word is application-ordered, j_1 first";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string type;
    int rank = 0;
    std::string cartan_file;
    std::string word;
    std::string lambda;
    std::string point;
    int k_max = 1;
    int window = 0;
    int depth = 16;
    int degree_cap = 2;
    int vars = 0;
    std::string order = "hi";
    std::string poly;
    std::string method = "auto";
    std::string format = "json";
};

std::vector<int> parse_ints(const std::string& text, const char* what) {
    try {
        return parse_word(text);
    } catch (const std::exception&) {
        throw UsageError(std::string("cannot parse ") + what + ": " + text);
    }
}

CartanMatrix resolve_cartan(const RunConfig& cfg) {
    if (!cfg.cartan_file.empty()) {
        std::ifstream in(cfg.cartan_file);
        if (!in) throw UsageError("cannot open " + cfg.cartan_file);
        Json j;
        try {
            in >> j;
            return CartanMatrix::from_rows(j.get<std::vector<std::vector<int>>>());
        } catch (const Json::exception& e) {
            throw UsageError(std::string("bad Cartan matrix file: ") + e.what());
        }
    }
    if (cfg.type.size() != 1 || cfg.rank < 1) throw UsageError("need --type and --rank, or --cartan-file");
    return CartanMatrix::builtin(cfg.type[0], cfg.rank);
}

Word resolve_word(const RunConfig& cfg, const CartanMatrix& cartan) {
    if (cfg.word.empty()) throw UsageError("--word is required");
    Word w = parse_ints(cfg.word, "--word");
    require_letters(cartan, w);
    if (!is_reduced(cartan, w)) throw UsageError("word " + format_word(w) + " is not reduced");
    return w;
}

WeightVec resolve_lambda(const RunConfig& cfg, const CartanMatrix& cartan) {
    if (cfg.lambda.empty()) throw UsageError("--lambda is required");
    WeightVec lam{parse_ints(cfg.lambda, "--lambda")};
    if (lam.rank() != cartan.rank())
        throw UsageError("--lambda has " + std::to_string(lam.rank()) + " entries, rank is " + std::to_string(cartan.rank()));
    require_dominant(lam, cartan.rank());
    return lam;
}

ZElement resolve_point(const RunConfig& cfg) {
    if (cfg.point.empty()) throw UsageError("--point is required");
    return ZElement(parse_ints(cfg.point, "--point"));
}

int longest_length(const CartanMatrix& cartan) { return static_cast<int>(positive_roots(cartan).size()); }

Json meta(const std::optional<Word>& word, const std::optional<WeightVec>& lambda) {
    Json m;
    m["word"] = word ? Json(*word) : Json(nullptr);
    m["lambda"] = lambda ? Json(lambda->coords) : Json(nullptr);
    m["convention"] = kConvention;
    return m;
}

std::string csv_row(const std::vector<int>& v) { return format_word(v); }

void emit_json(std::ostream& out, Json m, Json data) {
    Json doc;
    doc["meta"] = std::move(m);
    doc["data"] = std::move(data);
    out << doc.dump(2) << "\n";
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (cfg.format == f) return;
    throw UsageError("--format " + cfg.format + " is not available for this subcommand");
}

void emit_points(std::ostream& out, const RunConfig& cfg, Json m, const PointSet& pts) {
    require_format(cfg, {"json", "csv"});
    if (cfg.format == "csv") {
        for (const auto& p : pts) out << csv_row(p) << "\n";
        return;
    }
    emit_json(out, std::move(m), Json(std::vector<Point>(pts.begin(), pts.end())));
}

void emit_vector(std::ostream& out, const RunConfig& cfg, Json m, const std::vector<int>& v) {
    require_format(cfg, {"json", "csv"});
    if (cfg.format == "csv") {
        out << csv_row(v) << "\n";
        return;
    }
    emit_json(out, std::move(m), Json(v));
}

Json rational_json(const Rational& q) {
    if (is_integer(q)) return Json(boost::multiprecision::numerator(q).convert_to<long long>());
    return Json(q.str());
}

XiSet closure_for(const RunConfig& cfg, const CartanMatrix& cartan, const Word& word) {
    const SequenceSpec spec = SequenceSpec::completed(cartan, word);
    const int window = cfg.window > 0 ? cfg.window : static_cast<int>(spec.base().size()) + 1;
    XiSet xi = generate_xi(spec, window, cfg.depth);
    if (!xi.certified)
        throw UncertifiedError("inequality closure not certified (closed=" + std::to_string(xi.closed) +
                               ", window_stable=" + std::to_string(xi.window_stable) +
                               "); raise --window or --depth");
    return xi;
}

/// Primitive integer multiple of a form, used for canonical symbolic output.
AffineForm primitive(const AffineForm& f) {
    BigInt lcm = 1, g = 0;
    auto each = [&](auto&& fn) {
        fn(f.c0);
        for (const auto& q : f.lambda_coeffs) fn(q);
        for (const auto& [k, q] : f.coeffs) fn(q);
    };
    each([&](const Rational& q) { lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(q)); });
    each([&](const Rational& q) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(boost::multiprecision::numerator(Rational(q * lcm))));
    });
    if (g == 0) return f;
    AffineForm out = AffineForm::zero(static_cast<int>(f.lambda_coeffs.size()));
    out.add_scaled(f, Rational(lcm) / Rational(g));
    return out;
}

std::vector<AffineForm> canonical_forms(const std::vector<AffineForm>& forms, int r, const std::optional<WeightVec>& lam,
                                        int rank) {
    if (lam) {
        HalfSpaceSystem sys = normalize(to_system(forms, r, *lam), true);
        std::vector<AffineForm> out;
        for (const auto& row : sys.rows) {
            AffineForm f = AffineForm::zero(rank);
            f.c0 = row.constant;
            for (int k = 1; k <= r; ++k)
                if (row.coeffs[k - 1] != 0) f.coeffs[k] = row.coeffs[k - 1];
            out.push_back(std::move(f));
        }
        return out;
    }
    std::set<AffineForm> uniq;
    for (const auto& f : forms) uniq.insert(primitive(f));
    return {uniq.begin(), uniq.end()};
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    const CartanMatrix cartan = resolve_cartan(cfg);
    const Word word = resolve_word(cfg, cartan);
    const WeightVec lam = resolve_lambda(cfg, cartan);
    if (cfg.k_max < 1) throw UsageError("--k-max must be >= 1");
    const GradedPointSet levels = semigroup_points(cartan, word, lam, cfg.k_max);
    require_format(cfg, {"json", "csv"});
    if (cfg.format == "csv") {
        for (const auto& [k, pts] : levels.levels)
            for (const auto& p : pts) out << k << "," << csv_row(p) << "\n";
        return kExitOk;
    }
    Json data = Json::array();
    for (const auto& [k, pts] : levels.levels) {
        Json level;
        level["k"] = k;
        level["count"] = pts.size();
        level["points"] = std::vector<Point>(pts.begin(), pts.end());
        data.push_back(std::move(level));
    }
    emit_json(out, meta(word, lam), std::move(data));
    return kExitOk;
}

int cmd_delta_points(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const CartanMatrix cartan = resolve_cartan(cfg);
    const Word word = resolve_word(cfg, cartan);
    const WeightVec lam = resolve_lambda(cfg, cartan);
    if (cfg.method != "auto" && cfg.method != "hrep" && cfg.method != "crystal")
        throw UsageError("--method must be auto, hrep or crystal");
    bool use_hrep = cfg.method == "hrep";
    std::optional<XiSet> xi;
    if (cfg.method != "crystal") {
        xi = closure_for(cfg, cartan, word);
        const bool ample = ample_check(*xi, lam);
        if (cfg.method == "hrep" && !ample)
            throw NotAmpleError("pair is not ample; rerun with --method crystal");
        use_hrep = ample;
    }
    PointSet pts;
    if (use_hrep) {
        const int r = static_cast<int>(word.size());
        pts = lattice_points(to_system(delta_hrep(*xi, r, lam), r, lam), delta_box(cartan, word, lam));
    } else {
        pts = enumerate_demazure(cartan, word, lam).coords;
    }
    err << "method: " << (use_hrep ? "hrep" : "crystal") << "\n";
    emit_points(out, cfg, meta(word, lam), pts);
    return kExitOk;
}

int cmd_delta_hrep(const RunConfig& cfg, std::ostream& out) {
    const CartanMatrix cartan = resolve_cartan(cfg);
    const Word word = resolve_word(cfg, cartan);
    std::optional<WeightVec> lam;
    if (!cfg.lambda.empty()) lam = resolve_lambda(cfg, cartan);
    const XiSet xi = closure_for(cfg, cartan, word);
    const int r = static_cast<int>(word.size());
    const auto forms = canonical_forms(delta_hrep(xi, r, lam), r, lam, cartan.rank());
    require_format(cfg, {"json", "csv", "hrep-text"});
    if (cfg.format == "hrep-text") {
        out << format_hrep_text(forms, cartan.rank(), r);
        return kExitOk;
    }
    if (cfg.format == "csv") {
        for (const auto& f : forms) {
            out << f.c0.str();
            for (const auto& q : f.lambda_coeffs) out << "," << q.str();
            for (int k = 1; k <= r; ++k) out << "," << f.coeff(k).str();
            out << "\n";
        }
        return kExitOk;
    }
    Json data = Json::array();
    for (const auto& f : forms) {
        Json row;
        row["const_abs"] = rational_json(f.c0);
        Json cl = Json::array();
        for (const auto& q : f.lambda_coeffs) cl.push_back(rational_json(q));
        row["const_lambda"] = std::move(cl);
        Json co = Json::array();
        for (int k = 1; k <= r; ++k) co.push_back(rational_json(f.coeff(k)));
        row["coeffs"] = std::move(co);
        data.push_back(std::move(row));
    }
    emit_json(out, meta(word, lam), std::move(data));
    return kExitOk;
}

int cmd_string_points(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const CartanMatrix cartan = resolve_cartan(cfg);
    const Word word = resolve_word(cfg, cartan);
    const WeightVec lam = resolve_lambda(cfg, cartan);
    err << "direction: " << format_word(string_direction(word)) << "\n";
    emit_points(out, cfg, meta(word, lam), string_points(cartan, word, lam));
    return kExitOk;
}

SequenceSpec longest_spec(const CartanMatrix& cartan, const Word& word) {
    require_finite_type(cartan);
    if (static_cast<int>(word.size()) != longest_length(cartan))
        throw UsageError("this subcommand needs a reduced word for the longest element");
    return SequenceSpec(cartan, word);
}

int cmd_eta(const RunConfig& cfg, std::ostream& out) {
    const CartanMatrix cartan = resolve_cartan(cfg);
    const Word word = resolve_word(cfg, cartan);
    const SequenceSpec spec = longest_spec(cartan, word);
    emit_vector(out, cfg, meta(word, std::nullopt), eta(spec, resolve_point(cfg)));
    return kExitOk;
}

int cmd_star(const RunConfig& cfg, std::ostream& out) {
    const CartanMatrix cartan = resolve_cartan(cfg);
    const Word word = resolve_word(cfg, cartan);
    const SequenceSpec spec = longest_spec(cartan, word);
    const ZElement x = resolve_point(cfg);
    if (x.top() > static_cast<int>(word.size())) throw UsageError("--point is longer than the word");
    emit_vector(out, cfg, meta(word, std::nullopt), star(spec, x).padded(static_cast<int>(word.size())));
    return kExitOk;
}

int cmd_ample(const RunConfig& cfg, std::ostream& out) {
    const CartanMatrix cartan = resolve_cartan(cfg);
    const Word word = resolve_word(cfg, cartan);
    const WeightVec lam = resolve_lambda(cfg, cartan);
    const XiSet xi = closure_for(cfg, cartan, word);
    const bool ample = ample_check(xi, lam);
    require_format(cfg, {"json", "csv"});
    if (cfg.format == "csv") {
        out << (ample ? "true" : "false") << "\n";
        return kExitOk;
    }
    Json data;
    data["ample"] = ample;
    data["certified"] = xi.certified;
    data["window"] = xi.window;
    data["depth_used"] = xi.depth_used;
    data["forms"] = xi.forms.size();
    emit_json(out, meta(word, lam), std::move(data));
    return kExitOk;
}

int cmd_valuation(const RunConfig& cfg, std::ostream& out) {
    if (cfg.vars < 1) throw UsageError("--vars must be >= 1");
    if (cfg.poly.empty()) throw UsageError("--poly is required");
    MultiPoly f;
    try {
        f = MultiPoly::parse(cfg.poly, cfg.vars);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::vector<int> v;
    if (cfg.method == "chevalley") {
        if (cfg.order != "hi") throw UsageError("--method chevalley computes the hi valuation only");
        v = chevalley_value(f);
        for (int& x : v) x = -x;
    } else if (cfg.method == "auto" || cfg.method == "leading") {
        if (cfg.order != "hi" && cfg.order != "tilde") throw UsageError("--order must be hi or tilde");
        v = value(f, {cfg.order == "hi" ? Flavor::HI : Flavor::TILDE, cfg.vars});
    } else {
        throw UsageError("--method must be leading or chevalley");
    }
    emit_vector(out, cfg, meta(std::nullopt, std::nullopt), v);
    return kExitOk;
}

int cmd_matrix(const RunConfig& cfg, std::ostream& out) {
    const CartanMatrix cartan = resolve_cartan(cfg);
    const Word word = resolve_word(cfg, cartan);
    const PolyMatrix m = unipotent_product(word, builtin_generators(cartan));
    require_format(cfg, {"json", "csv"});
    if (cfg.format == "csv") {
        for (const auto& row : m) {
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << to_string(row[j]);
            out << "\n";
        }
        return kExitOk;
    }
    Json data = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(to_string(e));
        data.push_back(std::move(r));
    }
    emit_json(out, meta(word, std::nullopt), std::move(data));
    return kExitOk;
}

struct CheckConfig {
    CartanMatrix cartan;
    Word word;
    WeightVec lambda;
};

bool has_type_a_representation(const CartanMatrix& cartan) {
    return cartan == CartanMatrix::builtin('A', cartan.rank());
}

Json run_checks(const CheckConfig& c, const RunConfig& cfg, bool& ok) {
    Json checks;
    auto record = [&](const char* name, bool pass) {
        checks[name] = pass;
        ok = ok && pass;
    };
    const int r = static_cast<int>(c.word.size());
    const DemazureSet dem = enumerate_demazure(c.cartan, c.word, c.lambda);
    record("demazure_eq_btilde", dem.coords == btilde_cut(c.cartan, c.word, c.lambda).coords);
    const bool longest = r == longest_length(c.cartan);
    if (longest) record("weyl_dimension", BigInt(dem.coords.size()) == weyl_dim_oracle(c.cartan, c.lambda));

    const XiSet xi = closure_for(cfg, c.cartan, c.word);
    const bool ample = ample_check(xi, c.lambda);
    checks["ample"] = ample;
    if (ample) {
        const auto forms = delta_hrep(xi, r);
        record("hrep_lattice_eq_crystal",
               lattice_points(to_system(forms, r, c.lambda), delta_box(c.cartan, c.word, c.lambda)) == dem.coords);
        const CompareReport rep = compare_levels(
            semigroup_points(c.cartan, c.word, c.lambda, cfg.k_max),
            [&](int k) { return to_system(forms, r, c.lambda.scaled(k)); },
            [&](int k) { return delta_box(c.cartan, c.word, c.lambda.scaled(k)); });
        record("semigroup_levels", rep.ok);
    }

    const PointSet str = string_points(c.cartan, c.word, c.lambda);
    const Word dir = string_direction(c.word);
    record("string_count", str.size() == dem.coords.size());
    record("string_bounds", std::all_of(str.begin(), str.end(), [&](const Point& p) {
               return string_bounds_hold(c.cartan, dir, c.lambda, p);
           }));
    if (longest) {
        const SequenceSpec spec(c.cartan, c.word);
        PointSet image;
        for (const auto& p : dem.coords) image.insert(eta(spec, ZElement(p)));
        const Word rev(c.word.rbegin(), c.word.rend());
        record("eta_onto_string", image == string_points(c.cartan, rev, c.lambda));
    }
    if (has_type_a_representation(c.cartan)) {
        const auto span = section_span(unipotent_product(c.word, builtin_generators(c.cartan)), c.lambda);
        const auto hi = value_set_of_span(span, {Flavor::HI, r});
        const auto tilde = value_set_of_span(span, {Flavor::TILDE, r});
        record("span_dimension", span_rank(span) == dem.coords.size());
        record("valuation_hi_eq_crystal", PointSet(hi.begin(), hi.end()) == dem.coords);
        record("valuation_tilde_eq_string", PointSet(tilde.begin(), tilde.end()) == str);
    }
    return checks;
}

std::vector<Word> all_prefixes_of_reduced_longest(const CartanMatrix& cartan) {
    const int n = longest_length(cartan);
    std::set<Word> out;
    std::vector<Word> frontier{{}};
    for (int len = 1; len <= n; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (int i = 1; i <= cartan.rank(); ++i) {
                Word x = w;
                x.push_back(i);
                if (is_reduced(cartan, x)) {
                    out.insert(x);
                    next.push_back(std::move(x));
                }
            }
        frontier = std::move(next);
    }
    return {out.begin(), out.end()};
}

int cmd_theorem_check(const RunConfig& cfg, std::ostream& out) {
    std::vector<CheckConfig> configs;
    if (!cfg.word.empty() || !cfg.lambda.empty() || !cfg.type.empty() || !cfg.cartan_file.empty()) {
        const CartanMatrix cartan = resolve_cartan(cfg);
        configs.push_back({cartan, resolve_word(cfg, cartan), resolve_lambda(cfg, cartan)});
    } else {
        for (char family : {'A', 'C'}) {
            const CartanMatrix cartan = CartanMatrix::builtin(family, 2);
            for (const auto& w : all_prefixes_of_reduced_longest(cartan))
                for (const WeightVec& lam : {WeightVec{{1, 0}}, WeightVec{{0, 1}}, WeightVec{{1, 1}}})
                    configs.push_back({cartan, w, lam});
        }
    }
    require_format(cfg, {"json", "csv"});
    bool ok = true;
    Json data = Json::array();
    for (const auto& c : configs) {
        bool this_ok = true;
        Json entry;
        entry["cartan"] = c.cartan.rows();
        entry["word"] = c.word;
        entry["lambda"] = c.lambda.coords;
        entry["checks"] = run_checks(c, cfg, this_ok);
        entry["pass"] = this_ok;
        ok = ok && this_ok;
        if (cfg.format == "csv") out << format_word(c.word) << ";" << format_word(c.lambda.coords) << ";"
                                     << (this_ok ? "pass" : "FAIL") << "\n";
        data.push_back(std::move(entry));
    }
    if (cfg.format == "json") {
        Json m = meta(configs.size() == 1 ? std::optional<Word>(configs[0].word) : std::nullopt,
                      configs.size() == 1 ? std::optional<WeightVec>(configs[0].lambda) : std::nullopt);
        emit_json(out, std::move(m), std::move(data));
    }
    return ok ? kExitOk : kExitMismatch;
}

void add_root_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--type", cfg.type, "Cartan type letter (A..G)");
    sub->add_option("--rank", cfg.rank, "rank of the built-in type");
    sub->add_option("--cartan-file", cfg.cartan_file, "JSON file holding the Cartan matrix rows");
}

void add_format(CLI::App* sub, RunConfig& cfg, std::vector<std::string> choices) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(std::move(choices)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Polyhedral realizations, string polytopes and highest-term valuations", "crystal"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::map<std::string, std::function<int()>> handlers;
    auto sub = [&](const char* name, const char* desc) { return app.add_subcommand(name, desc); };

    auto* enumerate = sub("enumerate", "Demazure crystal coordinates at levels 1..k-max");
    add_root_options(enumerate, cfg);
    enumerate->add_option("--word", cfg.word, "reduced word, j_1 first");
    enumerate->add_option("--lambda", cfg.lambda, "dominant weight, fundamental coordinates");
    enumerate->add_option("--k-max", cfg.k_max, "highest dilation level");
    add_format(enumerate, cfg, {"json", "csv"});
    handlers["enumerate"] = [&] { return cmd_enumerate(cfg, out); };

    auto* dpoints = sub("delta-points", "lattice points of the polyhedral realization");
    add_root_options(dpoints, cfg);
    dpoints->add_option("--word", cfg.word, "reduced word, j_1 first");
    dpoints->add_option("--lambda", cfg.lambda, "dominant weight");
    dpoints->add_option("--method", cfg.method, "auto | hrep | crystal");
    dpoints->add_option("--window", cfg.window, "closure window (default: longest length + 1)");
    dpoints->add_option("--depth", cfg.depth, "closure depth cap");
    add_format(dpoints, cfg, {"json", "csv"});
    handlers["delta-points"] = [&] { return cmd_delta_points(cfg, out, err); };

    auto* hrep = sub("delta-hrep", "H-representation of the polyhedral realization");
    add_root_options(hrep, cfg);
    hrep->add_option("--word", cfg.word, "reduced word, j_1 first");
    hrep->add_option("--lambda", cfg.lambda, "dominant weight (omit for symbolic constants)");
    hrep->add_option("--window", cfg.window, "closure window (default: longest length + 1)");
    hrep->add_option("--depth", cfg.depth, "closure depth cap");
    add_format(hrep, cfg, {"json", "csv", "hrep-text"});
    handlers["delta-hrep"] = [&] { return cmd_delta_hrep(cfg, out); };

    auto* spoints = sub("string-points", "string parameters of the Demazure crystal");
    add_root_options(spoints, cfg);
    spoints->add_option("--word", cfg.word, "reduced word, j_1 first");
    spoints->add_option("--lambda", cfg.lambda, "dominant weight");
    add_format(spoints, cfg, {"json", "csv"});
    handlers["string-points"] = [&] { return cmd_string_points(cfg, out, err); };

    for (const char* name : {"eta", "star"}) {
        auto* s = sub(name, std::string(name) == "eta" ? "transition map on B(infinity) coordinates"
                                                       : "Kashiwara involution on B(infinity) coordinates");
        add_root_options(s, cfg);
        s->add_option("--word", cfg.word, "reduced word for the longest element, j_1 first");
        s->add_option("--point", cfg.point, "coordinates a_1,...,a_N");
        add_format(s, cfg, {"json", "csv"});
    }
    handlers["eta"] = [&] { return cmd_eta(cfg, out); };
    handlers["star"] = [&] { return cmd_star(cfg, out); };

    auto* ample = sub("ample", "ampleness of (word, lambda) through a certified closure");
    add_root_options(ample, cfg);
    ample->add_option("--word", cfg.word, "reduced word, j_1 first");
    ample->add_option("--lambda", cfg.lambda, "dominant weight");
    ample->add_option("--window", cfg.window, "closure window (default: longest length + 1)");
    ample->add_option("--depth", cfg.depth, "closure depth cap");
    add_format(ample, cfg, {"json", "csv"});
    handlers["ample"] = [&] { return cmd_ample(cfg, out); };

    auto* val = sub("valuation", "highest-term valuation of a polynomial");
    val->add_option("--vars", cfg.vars, "number of variables t1..tr");
    val->add_option("--order", cfg.order, "hi | tilde");
    val->add_option("--poly", cfg.poly, "integer-coefficient polynomial");
    val->add_option("--method", cfg.method, "leading | chevalley");
    add_format(val, cfg, {"json", "csv"});
    handlers["valuation"] = [&] { return cmd_valuation(cfg, out); };

    auto* matrix = sub("matrix", "unipotent product exp(t_r F_{j_r}) ... exp(t_1 F_{j_1})");
    add_root_options(matrix, cfg);
    matrix->add_option("--word", cfg.word, "word, j_1 first");
    add_format(matrix, cfg, {"json", "csv"});
    handlers["matrix"] = [&] { return cmd_matrix(cfg, out); };

    auto* theorem = sub("theorem-check", "set-level cross-checks; all shipped configurations when no word is given");
    add_root_options(theorem, cfg);
    theorem->add_option("--word", cfg.word, "reduced word, j_1 first");
    theorem->add_option("--lambda", cfg.lambda, "dominant weight");
    theorem->add_option("--k-max", cfg.k_max, "highest dilation level for the semigroup check");
    theorem->add_option("--window", cfg.window, "closure window");
    theorem->add_option("--depth", cfg.depth, "closure depth cap");
    add_format(theorem, cfg, {"json", "csv"});
    handlers["theorem-check"] = [&] { return cmd_theorem_check(cfg, out); };

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    err << "convention: " << kConvention << "\n";
    try {
        return handlers.at(name)();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

}  // namespace crystal::cli
