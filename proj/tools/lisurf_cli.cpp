#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lisurf/calapso.hpp"
#include "lisurf/io.hpp"

using namespace lisurf;
namespace lio = lisurf::io;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

void emit(const lio::Json& j, const std::string& out) {
    const std::string text = lio::dump(j);
    if (out.empty() || out == "-")
        std::cout << text;
    else
        lio::write_text(out, text);
}

Complex parse_complex(const std::vector<double>& v) {
    if (v.empty()) return {};
    return {v.at(0), v.at(1)};
}

SurfaceBundle load_bundle(const std::string& path) { return lio::bundle_from_json(lio::read_json(path)); }

double min_abs_label(const EdgeLabelling& l) {
    double r = std::numeric_limits<double>::infinity();
    for (double a : l.a()) r = std::min(r, std::abs(a));
    for (double b : l.b()) r = std::min(r, std::abs(b));
    return r;
}

// ---- gen

struct GenOpts {
    std::string kind = "power";
    int N = 10, M = 10;
    double gamma = 2.0 / 3.0;
    double A = 1.2;
    double B_arg = 0.5;
    double eps = 1.0;
    double scale = 1.0;
    double label_scale = 1.0;
    std::vector<double> translate;
    std::string out;
};

int run_gen(const GenOpts& o) {
    HoloData h;
    const Complex off = parse_complex(o.translate);
    if (o.kind == "identity")
        h = gen_identity(o.N, o.M, o.eps, off);
    else if (o.kind == "power")
        h = gen_power(o.N, o.M, o.gamma, off);
    else if (o.kind == "exp")
        h = gen_exponential(o.N, o.M, o.A, std::polar(1.0, o.B_arg), off);
    else
        throw InputError("gen: unknown kind " + o.kind);
    if (!(o.scale > 0.0)) throw InputError("gen: --scale must be positive");
    if (o.scale != 1.0) h.phi = mobius_apply(SL2(Mat2{std::sqrt(o.scale), 0.0, 0.0, 1.0 / std::sqrt(o.scale)}), h.phi);
    if (o.label_scale != 1.0) h.labels = h.labels.scaled(o.label_scale);
    emit(lio::to_json(h), o.out);
    return 0;
}

// ---- surface

struct SurfaceOpts {
    std::string holo;
    std::string rep = "hyperplane";
    double mu = 1.0;
    double m = 1.0;
    int sign = 1;
    std::string out;
};

int run_surface(const SurfaceOpts& o) {
    const HoloData h = lio::holo_from_json(lio::read_json(o.holo));
    SurfaceBundle b;
    if (o.rep == "hyperplane") {
        b = weier_hyperplane(h.phi, h.labels, o.mu);
    } else if (o.rep == "quadric") {
        b = weier_quadric(h.phi, h.labels, o.m, o.mu);
    } else if (o.rep == "rep2") {
        // The datum is the secondary Gauss map with labels l - m.
        b = rep2(h.phi, h.labels.shifted(-o.m), o.m, o.mu);
    } else if (o.rep == "bryant") {
        const SurfaceBundle base = rep2(h.phi, h.labels.shifted(-o.m), o.m, o.mu);
        const LinearWeingartenPair p = brlw_pair(base.x, base.gn, o.mu);
        b = base;
        b.x = o.sign > 0 ? p.x_plus : p.x_minus;
        b.normal = o.sign > 0 ? p.n_plus : p.n_minus;
        b.gn = p.gt;
        b.space.kind = SpaceKind::general;
        b.prov.representation = "linear_weingarten";
        b.prov.params = {{"m", o.m}, {"mu", o.mu}, {"sign", static_cast<double>(o.sign)}};
        b.prov.notes = {{"base", "rep2"}};
    } else {
        throw InputError("surface: unknown representation " + o.rep);
    }
    emit(lio::to_json(b), o.out);
    return 0;
}

// ---- transforms

int run_calapso(const std::string& in, double t, const std::string& out) {
    emit(lio::to_json(calapso_bundle(load_bundle(in), t)), out);
    return 0;
}

int run_lawson(const std::string& in, std::optional<double> m, const std::string& out) {
    const SurfaceBundle q = load_bundle(in);
    const double mm = m ? *m : q.prov.param("m", std::numeric_limits<double>::quiet_NaN());
    emit(lio::to_json(lawson_transform(q, mm)), out);
    return 0;
}

int run_dual(const std::string& in, const std::string& out) {
    const SurfaceBundle b = load_bundle(in);
    if (b.prov.representation != "rep2" || !b.frame)
        throw InputError("dual: input must be a rep2 bundle with its frame");
    const double m = b.prov.param("m", std::numeric_limits<double>::quiet_NaN());
    if (!std::isfinite(m)) throw InputError("dual: bundle does not record m");
    const Net<SL2> inv = b.frame->map([](const SL2& f) { return f.inverse(); });
    SurfaceBundle d;
    d.x = from_herm_net(dual_cmc(*b.frame, b.space.mu));
    std::vector<Complex> psi;
    for (std::size_t k = 0; k < b.phi.values().size(); ++k)
        psi.push_back(mobius(inv.values()[k].mat(), b.phi.values()[k]));
    d.phi = Net<Complex>(b.phi.domain(), std::move(psi));
    d.labels = b.labels.shifted(m);
    d.gn = section_gn(light_cone_lift(d.phi), d.x);
    if (b.space.mu != 0.0) d.normal = hyperbolic_gauss_lift(d.x, d.gn, b.space.mu);
    d.space = b.space;
    d.frame = inv;
    d.prov.representation = "dual";
    d.prov.params = {{"m", m}, {"mu", b.space.mu}};
    d.prov.notes = {{"base", "rep2"}};
    emit(lio::to_json(d), out);
    return 0;
}

int run_secondary(const std::string& in, std::optional<double> m, const std::string& out) {
    const SurfaceBundle q = load_bundle(in);
    const double mm = m ? *m : q.prov.param("m", std::numeric_limits<double>::quiet_NaN());
    if (!std::isfinite(mm)) throw InputError("secondary-gauss: m is required");
    emit(lio::to_json(HoloData{secondary_gauss(q, mm), q.labels.shifted(mm)}), out);
    return 0;
}

// ---- check

struct CheckOpts {
    std::string in;
    std::string suite = "all";
    double tol = kDefaultTol;
    std::string report;
    std::uint64_t seed = 1;
    int samples = 3;
    std::vector<double> t;
};

// Uniform in +-min|label| / (N + M).
std::vector<double> spectral_samples(const CheckOpts& o, const EdgeLabelling& labels) {
    if (!o.t.empty()) return o.t;
    std::mt19937_64 rng(o.seed);
    const double tau = min_abs_label(labels) / static_cast<double>(labels.a().size() + labels.b().size());
    std::uniform_real_distribution<double> u(-tau, tau);
    std::vector<double> out;
    for (int k = 0; k < o.samples; ++k) out.push_back(u(rng));
    return out;
}

CheckReport tagged(CheckReport r, const std::string& suffix) {
    r.check += suffix;
    return r;
}

std::vector<CheckReport> run_suite(const SurfaceBundle& b, const std::string& suite, const CheckOpts& o) {
    const bool all = suite == "all";
    const bool lw = b.prov.representation == "linear_weingarten";
    std::vector<CheckReport> out;
    const std::vector<double> ts = spectral_samples(o, b.labels);
    const Net<Vec31> g = light_cone_lift(b.phi);
    if (lw && (all || suite == "christoffel")) out.push_back(check_legendre(b.x, b.gn, o.tol));
    if (!lw && (all || suite == "christoffel")) {
        out.push_back(planarity(b.x, o.tol));
        out.push_back(circularity(b.x, o.tol));
        out.push_back(christoffel_check(b.x, b.gn, o.tol));
        out.push_back(check_legendre(b.x, b.gn, o.tol));
    }
    if (all || suite == "curvature") {
        if (b.space.kind == SpaceKind::hyperplane) out.push_back(edge_orthogonality(b.x, b.space.p(), o.tol));
        if (b.space.kind == SpaceKind::quadric) out.push_back(quadric_membership(b.x, b.space.mu, o.tol));
        if (b.space.kind != SpaceKind::general) {
            out.push_back(lightcone_curvature_check(b.x, b.gn, 0.0, o.tol));
            if (b.normal) {
                const double h = b.space.kind == SpaceKind::hyperplane ? 0.0 : 1.0 / std::sqrt(std::abs(b.space.mu));
                out.push_back(mean_curvature_check(b.x, *b.normal, h, o.tol));
            }
        } else if (!all) {
            throw InputError("check: curvature suite needs a hyperplane or quadric bundle");
        }
    }
    if (all || suite == "flatness") {
        out.push_back(is_discrete_holomorphic(b.phi, b.labels, o.tol));
        out.push_back(moutard_check(moutard_lift(g, b.labels, 1.0, std::numeric_limits<double>::infinity()), b.labels, o.tol));
        for (double t : ts) out.push_back(tagged(flatness(g, b.labels, t, o.tol), " t=" + lio::format_double(t)));
    }
    if (lw && suite == "calapso") throw InputError("check: calapso suite needs an L-isothermic bundle");
    if (!lw && (all || suite == "calapso")) {
        for (double t : ts) {
            const CalapsoState s = calapso(b.x, b.gn, b.labels, t);
            const std::string tag = " t=" + lio::format_double(t);
            CheckReport c = s.closure;
            for (auto& item : c.items)
                for (auto& r : item.residuals) r.tol = o.tol;
            out.push_back(tagged(c, tag));
            out.push_back(tagged(label_shift_check(s, o.tol), tag));
            out.push_back(tagged(christoffel_check(s.x, s.g, o.tol), tag));
        }
    }
    if (all || suite == "weingarten") {
        if (lw) {
            if (!b.normal) throw InputError("check: linear Weingarten bundle without normal");
            const int sign = b.prov.param("sign", 1.0) > 0.0 ? 1 : -1;
            out.push_back(weingarten_check(b.x, *b.normal, b.space.mu, sign, o.tol));
        } else if (b.space.kind == SpaceKind::quadric) {
            const LinearWeingartenPair p = brlw_pair(b.x, b.gn, b.space.mu);
            out.push_back(tagged(weingarten_check(p.x_plus, p.n_plus, b.space.mu, 1, o.tol), " +"));
            out.push_back(tagged(weingarten_check(p.x_minus, p.n_minus, b.space.mu, -1, o.tol), " -"));
        } else if (!all) {
            throw InputError("check: weingarten suite needs a quadric or linear Weingarten bundle");
        }
    }
    if (out.empty()) throw InputError("check: unknown suite " + suite);
    return out;
}

int run_check(const CheckOpts& o) {
    const SurfaceBundle b = load_bundle(o.in);
    const std::vector<CheckReport> rs = run_suite(b, o.suite, o);
    bool pass = true;
    for (const auto& r : rs) {
        pass = pass && r.pass();
        std::cout << (r.pass() ? "PASS " : "FAIL ") << r.check << " max=" << lio::format_double(r.max_residual())
                  << " failures=" << r.failures() << '\n';
    }
    if (!o.report.empty()) lio::write_text(o.report, lio::dump(lio::to_json(rs)));
    std::cout << (pass ? "all checks passed" : "some checks failed") << '\n';
    return pass ? 0 : kExitFail;
}

// ---- export

struct ExportOpts {
    std::string in;
    std::string model = "slice";
    std::string format = "obj";
    std::string out;
    std::string attrs;
    std::optional<double> mu;
    double tol = 1e-8;
};

std::vector<double> face_residuals(const CheckReport& r, const GridDomain& d) {
    std::vector<double> v(static_cast<std::size_t>(d.N() * d.M()), 0.0);
    for (const auto& item : r.items) {
        if (item.site.kind != Site::Kind::face) continue;
        double worst = 0.0;
        for (const auto& res : item.residuals) worst = std::max(worst, res.value);
        v[static_cast<std::size_t>(item.site.n * d.M() + item.site.m)] = worst;
    }
    return v;
}

void attach_attributes(lio::MeshFile& mesh, const SurfaceBundle& b) {
    const GridDomain& d = b.x.domain();
    const auto curv = [&](auto&& f) {
        std::vector<double> v;
        for (int n = 0; n < d.N(); ++n)
            for (int m = 0; m < d.M(); ++m) {
                try {
                    v.push_back(f(n, m));
                } catch (const DegenerateError&) {
                    v.push_back(std::numeric_limits<double>::quiet_NaN());
                }
            }
        return v;
    };
    std::vector<std::pair<std::string, std::vector<double>>> cols;
    cols.emplace_back("H_g", curv([&](int n, int m) { return lightcone_mean_curvature(b.x, b.gn, n, m).value; }));
    if (b.normal) {
        cols.emplace_back("H", curv([&](int n, int m) { return mean_curvature(b.x, *b.normal, n, m).value; }));
        cols.emplace_back("K", curv([&](int n, int m) { return gauss_curvature(b.x, *b.normal, n, m).value; }));
    }
    cols.emplace_back("planarity", face_residuals(planarity(b.x), d));
    cols.emplace_back("circularity", face_residuals(circularity(b.x), d));
    cols.emplace_back("christoffel", face_residuals(christoffel_check(b.x, b.gn), d));
    mesh.attribute_names.clear();
    mesh.attributes.assign(mesh.faces.size(), {});
    for (const auto& [name, v] : cols) {
        mesh.attribute_names.push_back(name);
        for (std::size_t f = 0; f < v.size(); ++f) mesh.attributes[f].push_back(v[f]);
    }
}

int run_export(const ExportOpts& o) {
    const SurfaceBundle b = load_bundle(o.in);
    lio::Projection p;
    p.model = lio::parse_model(o.model);
    p.mu = o.mu ? *o.mu : b.space.mu;
    p.tol = o.tol;
    lio::MeshFile mesh = lio::make_mesh(lio::project(b.x, p));
    if (!o.attrs.empty() || o.format == "json") attach_attributes(mesh, b);

    std::ostringstream os;
    if (o.format == "obj") {
        lio::write_obj(mesh, os);
    } else if (o.format == "json") {
        lio::Json j;
        j["model"] = lio::to_string(p.model);
        j["vertices"] = mesh.vertices;
        j["faces"] = mesh.faces;
        j["attribute_names"] = mesh.attribute_names;
        lio::Json rows = lio::Json::array();
        for (const auto& r : mesh.attributes) {
            lio::Json row = lio::Json::array();
            for (double v : r) row.push_back(std::isfinite(v) ? lio::Json(v) : lio::Json(nullptr));
            rows.push_back(row);
        }
        j["attributes"] = rows;
        os << lio::dump(j);
    } else {
        throw InputError("export: unknown format " + o.format);
    }
    if (o.out.empty() || o.out == "-")
        std::cout << os.str();
    else
        lio::write_text(o.out, os.str());
    if (!o.attrs.empty()) {
        std::ostringstream cs;
        lio::write_csv(mesh, cs);
        lio::write_text(o.attrs, cs.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete L-isothermic nets and their Weierstrass-type representations"};
    app.require_subcommand(1);

    GenOpts gen;
    auto* g = app.add_subcommand("gen", "Generate a discrete holomorphic datum");
    g->add_option("--kind", gen.kind, "identity | power | exp")->check(CLI::IsMember({"identity", "power", "exp"}));
    g->add_option("--N", gen.N, "Faces in the n direction")->check(CLI::PositiveNumber);
    g->add_option("--M", gen.M, "Faces in the m direction")->check(CLI::PositiveNumber);
    g->add_option("--gamma", gen.gamma, "Exponent of the power datum");
    g->add_option("--A", gen.A, "Real ratio in the n direction (exp)");
    g->add_option("--B-arg", gen.B_arg, "Argument of the unimodular ratio in the m direction (exp)");
    g->add_option("--eps", gen.eps, "Mesh size (identity)");
    g->add_option("--translate", gen.translate, "Translation re im")->expected(2);
    g->add_option("--scale", gen.scale, "Apply z -> s z");
    g->add_option("--label-scale", gen.label_scale, "Multiply every label");
    g->add_option("--out,-o", gen.out, "Output path (default stdout)");

    SurfaceOpts surf;
    auto* s = app.add_subcommand("surface", "Build a surface bundle from a datum");
    s->add_option("--holo", surf.holo, "Datum JSON")->required();
    s->add_option("--rep", surf.rep, "hyperplane | quadric | rep2 | bryant")
        ->check(CLI::IsMember({"hyperplane", "quadric", "rep2", "bryant"}));
    s->add_option("--mu", surf.mu, "Space-form parameter");
    s->add_option("--m", surf.m, "Spectral parameter of the quadric constructions");
    s->add_option("--sign", surf.sign, "Branch of the linear Weingarten pair (bryant)")->check(CLI::IsMember({1, -1}));
    s->add_option("--out,-o", surf.out, "Output path");

    std::string c_in, c_out;
    double c_t = 0.0;
    auto* c = app.add_subcommand("calapso", "Calapso transform of a bundle");
    c->add_option("--in", c_in)->required();
    c->add_option("--t", c_t, "Spectral parameter")->required();
    c->add_option("--out,-o", c_out);

    std::string l_in, l_out;
    std::optional<double> l_m;
    auto* l = app.add_subcommand("lawson", "Lawson transform of a quadric bundle");
    l->add_option("--in", l_in)->required();
    l->add_option("--m", l_m, "Defaults to the bundle's m");
    l->add_option("--out,-o", l_out);

    std::string d_in, d_out;
    auto* d = app.add_subcommand("dual", "Dual cmc net of a rep2 bundle");
    d->add_option("--in", d_in)->required();
    d->add_option("--out,-o", d_out);

    std::string sg_in, sg_out;
    std::optional<double> sg_m;
    auto* sg = app.add_subcommand("secondary-gauss", "Secondary Gauss map of a quadric bundle");
    sg->add_option("--in", sg_in)->required();
    sg->add_option("--m", sg_m, "Defaults to the bundle's m");
    sg->add_option("--out,-o", sg_out);

    CheckOpts chk;
    auto* k = app.add_subcommand("check", "Run residual checks on a bundle");
    k->add_option("--in", chk.in)->required();
    k->add_option("--suite", chk.suite)->check(
        CLI::IsMember({"christoffel", "curvature", "flatness", "calapso", "weingarten", "all"}));
    k->add_option("--tol", chk.tol);
    k->add_option("--report", chk.report, "Write the JSON report here");
    k->add_option("--seed-rng", chk.seed, "Seed for sampled spectral parameters");
    k->add_option("--samples", chk.samples, "Number of sampled spectral parameters")->check(CLI::NonNegativeNumber);
    k->add_option("--t", chk.t, "Explicit spectral parameters (overrides sampling)");

    ExportOpts ex;
    auto* e = app.add_subcommand("export", "Project a bundle into a ball model and write a mesh");
    e->add_option("--in", ex.in)->required();
    e->add_option("--model", ex.model)->check(CLI::IsMember({"poincare", "hollow", "slice", "lightcone"}));
    e->add_option("--format", ex.format)->check(CLI::IsMember({"obj", "json"}));
    e->add_option("--out,-o", ex.out);
    e->add_option("--attrs", ex.attrs, "CSV sidecar with per-face H, K and residuals");
    e->add_option("--mu", ex.mu, "Slice parameter (defaults to the bundle's mu)");
    e->add_option("--tol", ex.tol, "Membership tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int rc = app.exit(err);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (*g) return run_gen(gen);
        if (*s) return run_surface(surf);
        if (*c) return run_calapso(c_in, c_t, c_out);
        if (*l) return run_lawson(l_in, l_m, l_out);
        if (*d) return run_dual(d_in, d_out);
        if (*sg) return run_secondary(sg_in, sg_m, sg_out);
        if (*k) return run_check(chk);
        if (*e) return run_export(ex);
    } catch (const NotClosedError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitFail;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitInput;
    } catch (const nlohmann::json::exception& err) {
        std::cerr << "error: malformed JSON: " << err.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
