#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <polypack/io.hpp>

#include "checks.hpp"

namespace pp = polypack;
using pp::io::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Global {
    std::int64_t field = 0;
    bool use_float = false;
    double eps = 1e-9;
    std::string out;
};

void emit(const Global& g, const std::string& text) {
    if (g.out.empty() || g.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw UsageError("cannot write " + g.out);
    f << text;
}

void emit(const Global& g, const json& j) { emit(g, j.dump(2) + "\n"); }

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

template <class S>
pp::Vec<S> parse_curvatures(const std::string& csv, std::int64_t field) {
    pp::Vec<S> k;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw UsageError("empty curvature in list");
        k.push_back(pp::io::scalar_from_json<S>(json(item), field));
    }
    return k;
}

// A packing file, or the output of `lift`/`section` (its ambient packing).
template <class S>
pp::Packing<S> load_packing(const std::string& path, std::int64_t field, const char* key = "ambient") {
    auto j = read_json(path);
    if (j.contains(key)) j = j.at(key);
    return pp::io::packing_from_json<S>(j, field);
}

// ---------------------------------------------------------------------------------------

struct GenerateArgs {
    std::string polytope;
    int dim = 0;
    int cbp = -1;
};

template <class S>
int cmd_generate(const Global& g, const GenerateArgs& a) {
    auto id = pp::polytope_id(a.polytope, a.dim);
    if (a.cbp < 0) {
        emit(g, pp::io::to_json(pp::ball_projection(pp::edge_scribed<S>(id))));
        return 0;
    }
    auto fp = pp::edge_scribed<double>(id);
    if (a.cbp >= fp.dim()) throw UsageError("--cbp must be below the polytope dimension");
    auto res = pp::cbp_projection(fp, a.cbp);
    if constexpr (std::is_same_v<S, double>) {
        emit(g, pp::io::to_json(res.packing));
    } else {
        // exact only when the projection has integer curvatures
        pp::Vec<S> k;
        std::vector<int> idx;
        for (std::size_t i = 0; i < res.packing.size(); ++i) {
            double c = pp::curvature(res.packing.balls[i]);
            if (std::abs(c - std::round(c)) > 1e-9)
                throw pp::field_error("this projection has irrational curvatures; use --float");
            k.push_back(S(std::llround(c)));
            idx.push_back(int(i));
        }
        auto p = pp::realize_curvatures(pp::ball_projection(pp::edge_scribed<S>(id)), idx, k);
        p.tag = res.packing.tag;
        emit(g, pp::io::to_json(p));
    }
    return 0;
}

struct OrbitArgs {
    std::string seed;
    int depth = -1;
    double max_curvature = 0;
    unsigned threads = 0;
    bool csv = false, no_balls = false, planar = false;
};

template <class S>
int cmd_orbit(const Global& g, const OrbitArgs& a) {
    auto p = load_packing<S>(a.seed, g.field, a.planar ? "planar" : "ambient");
    pp::OrbitBound bound{a.depth, a.max_curvature > 0 ? std::optional<double>(a.max_curvature) : std::nullopt};
    auto rep = pp::orbit(p, pp::generators(p), bound, {a.threads, true});
    if (a.csv) {
        auto inf = std::numeric_limits<double>::infinity();
        emit(g, pp::io::census_csv(pp::curvature_census(rep, -inf, inf)));
    } else {
        emit(g, pp::io::to_json(rep, !a.no_balls));
    }
    return 0;
}

struct LiftArgs {
    std::string kind, curvatures, seed;
    std::string center;
    int depth = 3;
};

template <class S>
json equivalence_json(const pp::EquivalenceReport& e) {
    return json{{"kind", e.kind},
                {"depth", e.depth},
                {"checked_words", e.checked_words},
                {"planar_balls", e.planar_balls},
                {"mismatches", e.mismatches},
                {"generators_restrict", e.generators_restrict},
                {"containment", e.containment},
                {"ambient_depth", e.ambient_depth},
                {"ambient_balls", e.ambient_balls}};
}

template <class S>
int report_lift(const Global& g, pp::SectionKind kind, const pp::Packing<S>& planar, int depth) {
    auto l = pp::lift(kind, planar);
    auto eq = pp::verify_arithmetic_equivalence(l, depth);
    pp::ApollonianGroup<S> pg;
    for (std::size_t i = 0; i < l.planar_gens.size(); ++i) pg.add(l.planar_gens[i], l.words[i]);
    auto orb = pp::orbit(l.planar, pg, {depth, std::nullopt});
    pp::Vec<S> seed;
    try {
        seed = pp::lifted_seed(l, planar);
    } catch (const std::exception&) {
        seed = pp::seed_quadruple(l);  // input not in realization order
    }
    json j{{"kind", pp::kind_name(kind)},
           {"seed", pp::io::to_json(seed)},
           {"planar", pp::io::to_json(l.planar)},
           {"ambient", pp::io::to_json(l.ambient)},
           {"words", l.words},
           {"orbit", pp::io::to_json(orb, false)},
           {"equivalence", equivalence_json<S>(eq)}};
    emit(g, j);
    return eq.ok() ? 0 : 2;
}

template <class S>
int cmd_lift(const Global& g, const LiftArgs& a) {
    auto kind = pp::parse_kind(a.kind);
    auto k = parse_curvatures<S>(a.curvatures, g.field);
    std::optional<S> center;
    if (!a.center.empty()) center = pp::io::scalar_from_json<S>(json(a.center), g.field);
    return report_lift(g, kind, pp::realize(kind, k, center), a.depth);
}

template <class S>
int cmd_section(const Global& g, const LiftArgs& a) {
    return report_lift(g, pp::parse_kind(a.kind), load_packing<S>(a.seed, g.field, "planar"), a.depth);
}

struct RenderArgs {
    std::string input;
    pp::io::RenderSpec spec;
    bool fit = true;
};

// Viewport around the bounding disk, or around all finite disks when there is none.
template <class S>
void fit_viewport(const std::vector<pp::Ball<S>>& balls, pp::io::RenderSpec& spec) {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (auto& b : balls) {
        double k = pp::num::to_double(pp::curvature(b));
        if (std::abs(k) < 1e-12 || k > spec.max_curvature) continue;
        double cx = pp::num::to_double(b.x[0]) / k, cy = b.dim() >= 2 ? pp::num::to_double(b.x[1]) / k : 0, r = 1 / std::abs(k);
        if (k < 0) {
            x0 = cx - r, x1 = cx + r, y0 = cy - r, y1 = cy + r;
            break;
        }
        x0 = std::min(x0, cx - r), x1 = std::max(x1, cx + r), y0 = std::min(y0, cy - r), y1 = std::max(y1, cy + r);
    }
    if (x0 > x1) return;
    spec.cx = (x0 + x1) / 2;
    spec.cy = (y0 + y1) / 2;
    spec.half_width = 1.02 * std::max(x1 - x0, y1 - y0) / 2;
}

template <class S>
int cmd_render(const Global& g, const RenderArgs& a) {
    auto j = read_json(a.input);
    if (j.contains("planar")) j = j.at("planar");
    std::int64_t field = j.value("field", g.field);
    std::vector<pp::Ball<S>> balls;
    std::vector<int> depths;
    for (auto& b : j.at("balls")) {
        balls.emplace_back(pp::io::vec_from_json<S>(b.at("coords"), field));
        depths.push_back(b.value("depth", 0));
    }
    auto spec = a.spec;
    if (a.fit) fit_viewport(balls, spec);
    emit(g, pp::io::render_svg(balls, spec, depths));
    return 0;
}

struct CensusArgs {
    std::string input;
    double lo = 0, hi = -1;
    bool as_json = false;
};

template <class S>
int cmd_census(const Global& g, const CensusArgs& a) {
    auto j = read_json(a.input);
    if (j.contains("orbit") && !j.contains("balls")) j = j.at("orbit");
    if (!j.contains("balls")) throw UsageError(a.input + " has no balls; run orbit without --no-balls");
    std::int64_t field = j.value("field", g.field);
    pp::OrbitReport<S> rep;
    for (auto& b : j.at("balls")) {
        rep.direct.push_back(pp::io::vec_from_json<S>(b.at("coords"), field));
        rep.entries.push_back({b.value("depth", 0), pp::curvature(pp::Ball<S>(rep.direct.back())), -1, -1});
    }
    double lo = a.lo, hi = a.hi;
    if (hi < lo) {
        lo = -std::numeric_limits<double>::infinity();
        hi = std::numeric_limits<double>::infinity();
    }
    auto c = pp::curvature_census(rep, lo, hi);
    if (a.as_json) {
        json out{{"counts", pp::io::census_json(c)}, {"non_integral", c.non_integral}};
        if (std::isfinite(hi)) out["missing"] = c.missing;
        emit(g, out);
    } else {
        emit(g, pp::io::census_csv(c));
    }
    return 0;
}

struct ProbeArgs {
    int depth = 6;
    double max_curvature = 200;
    unsigned threads = 0;
};

int cmd_probe(const Global& g, const ProbeArgs& a) {
    auto seed = pp::r4_packing<pp::Exact>();
    auto rep = pp::checks::probe_r4(a.depth, a.max_curvature, {a.threads, true});
    std::vector<std::string> initial;
    for (auto& b : seed.balls) initial.push_back(pp::num::str(pp::curvature(b)));
    auto top = std::int64_t(std::floor(a.max_curvature));
    json j{{"packing", "24-cell"},
           {"seed_curvatures", initial},
           {"bound", {{"depth", a.depth}, {"max_curvature", a.max_curvature}}},
           {"balls", rep.balls},
           {"per_depth", rep.per_depth},
           {"all_integral", rep.non_integral == 0},
           {"census", pp::io::census_json(rep.census)},
           {"coverage", {{"range", {0, top}}, {"present", top + 1 - std::int64_t(rep.missing.size())}, {"missing", rep.missing}}}};
    emit(g, j);
    return rep.non_integral == 0 ? 0 : 2;
}

int cmd_verify(const Global& g, const std::string& suite) {
    std::set<std::string> identity{"matrices", "coxeter", "spectra", "cbp", "descartes"};
    std::ostringstream os;
    int ran = 0, failed = 0;
    for (auto& c : pp::checks::all_checks()) {
        bool take = suite == "all" || suite == c.suite || (suite == "identities" && identity.count(c.suite));
        if (!take) continue;
        ++ran;
        pp::checks::Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {c.suite, false, std::string("exception: ") + e.what(), 0};
        }
        failed += !r.pass;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%-12s %-4s %7.2fs  ", c.suite.c_str(), r.pass ? "pass" : "FAIL", r.seconds);
        os << buf << r.name << ": " << r.detail << "\n";
        if (g.out.empty()) {
            std::cout << buf << r.name << ": " << r.detail << std::endl;
        }
    }
    if (!ran) throw UsageError("unknown suite " + suite);
    if (!g.out.empty()) emit(g, os.str());
    return failed ? 2 : 0;
}

template <class F>
int dispatch(const Global& g, F&& f) {
    if (g.use_float) {
        pp::float_eps() = g.eps;
        return f(double{});
    }
    return f(pp::Exact{});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polytopal ball packings: generation, orbits, sections, verification"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--field", g.field, "quadratic field Q(sqrt m) for exact input")->check(CLI::PositiveNumber);
    app.add_flag("--float", g.use_float, "double precision instead of exact arithmetic");
    app.add_option("--eps", g.eps, "float tolerance")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "output file (default stdout)");

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "ball-arrangement projection of an edge-scribed regular polytope");
    generate->add_option("--polytope", gen.polytope)->required();
    generate->add_option("--dim", gen.dim, "dimension of simplex, orthoplex or cube");
    generate->add_option("--cbp", gen.cbp, "center a face of this dimension at infinity");

    OrbitArgs orb;
    auto* orbit = app.add_subcommand("orbit", "Apollonian orbit of a packing");
    orbit->add_option("--seed", orb.seed, "packing JSON, or the output of lift/section")->required()->check(CLI::ExistingFile);
    orbit->add_option("--depth", orb.depth)->required()->check(CLI::NonNegativeNumber);
    orbit->add_option("--max-curvature", orb.max_curvature, "bound on |curvature|");
    orbit->add_option("--threads", orb.threads);
    orbit->add_flag("--csv", orb.csv, "curvature census as CSV");
    orbit->add_flag("--no-balls", orb.no_balls, "omit ball coordinates from the report");
    orbit->add_flag("--planar", orb.planar, "with lift/section output, use the planar cluster");

    LiftArgs lft;
    auto* lift = app.add_subcommand("lift", "lift a planar cluster given by curvatures");
    lift->add_option("--kind", lft.kind, "tetra, octa or cubic")->required();
    lift->add_option("--curvatures", lft.curvatures, "comma separated, e.g. -2,4,5")->required();
    lift->add_option("--center", lft.center, "octahedral central curvature (default: smaller root)");
    lift->add_option("--depth", lft.depth, "equivalence certification depth")->check(CLI::NonNegativeNumber);

    LiftArgs sec;
    auto* section = app.add_subcommand("section", "lift a planar packing read from a file");
    section->add_option("--kind", sec.kind)->required();
    section->add_option("--seed", sec.seed)->required()->check(CLI::ExistingFile);
    section->add_option("--depth", sec.depth)->check(CLI::NonNegativeNumber);

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite,
                       "all, identities, matrices, coxeter, spectra, cbp, descartes, sections, orbits, oracle, trinity, "
                       "diophantine, probe");

    RenderArgs rnd;
    auto* render = app.add_subcommand("render", "SVG of a packing or orbit report");
    render->add_option("--input", rnd.input)->required()->check(CLI::ExistingFile);
    auto* cx = render->add_option("--cx", rnd.spec.cx, "viewport center (default: fit the packing)");
    auto* cy = render->add_option("--cy", rnd.spec.cy);
    auto* hw = render->add_option("--half-width", rnd.spec.half_width)->check(CLI::PositiveNumber);
    render->add_option("--pixels", rnd.spec.pixels)->check(CLI::PositiveNumber);
    render->add_option("--max-curvature", rnd.spec.max_curvature);
    render->add_option("--label-below", rnd.spec.label_below, "label curvatures up to this value");
    render->add_flag("--depth-colors", rnd.spec.depth_colors);
    render->add_option("--stroke", rnd.spec.stroke);
    render->add_option("--fill", rnd.spec.fill);

    CensusArgs cen;
    auto* census = app.add_subcommand("census", "curvature census of an orbit report");
    census->add_option("--input", cen.input)->required()->check(CLI::ExistingFile);
    census->add_option("--min", cen.lo);
    census->add_option("--max", cen.hi, "with --min, also list missing integers");
    census->add_flag("--json", cen.as_json);

    ProbeArgs prb;
    auto* probe = app.add_subcommand("probe-r4", "curvature census of the 24-cell packing");
    probe->add_option("--depth", prb.depth)->check(CLI::NonNegativeNumber);
    probe->add_option("--max-curvature", prb.max_curvature)->check(CLI::PositiveNumber);
    probe->add_option("--threads", prb.threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*generate) return dispatch(g, [&](auto s) { return cmd_generate<decltype(s)>(g, gen); });
        if (*orbit) return dispatch(g, [&](auto s) { return cmd_orbit<decltype(s)>(g, orb); });
        if (*lift) return dispatch(g, [&](auto s) { return cmd_lift<decltype(s)>(g, lft); });
        if (*section) return dispatch(g, [&](auto s) { return cmd_section<decltype(s)>(g, sec); });
        rnd.fit = !*cx && !*cy && !*hw;
        if (*render) return dispatch(g, [&](auto s) { return cmd_render<decltype(s)>(g, rnd); });
        if (*census) return dispatch(g, [&](auto s) { return cmd_census<decltype(s)>(g, cen); });
        if (*probe) return cmd_probe(g, prb);
        if (*verify) return cmd_verify(g, suite);
    } catch (const UsageError& e) {
        std::cerr << "polypack: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "polypack: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "polypack: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
