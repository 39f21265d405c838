#include "lisurf/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace lisurf::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("json: missing field '") + key + "'");
    return j.at(key);
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) throw InputError(std::string("json: ") + what + " is not a number");
    return j.get<double>();
}

std::vector<double> numbers(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string("json: ") + what + " is not an array");
    std::vector<double> out;
    for (const auto& v : j) out.push_back(number(v, what));
    return out;
}

Json cplx(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex cplx_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("json: complex value must be [re, im]");
    return {number(j[0], "re"), number(j[1], "im")};
}

Json vec(const Vec31& v) { return Json::array({v.c[0], v.c[1], v.c[2], v.c[3]}); }

Vec31 vec_from(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw InputError("json: Vec31 value must be a 4-array");
    return {number(j[0], "x0"), number(j[1], "x1"), number(j[2], "x2"), number(j[3], "x3")};
}

template <class T, class F>
Json values(const Net<T>& net, F&& f) {
    Json out = Json::array();
    for (const auto& v : net.values()) out.push_back(f(v));
    return out;
}

template <class T, class F>
Net<T> net_from(const Json& j, const GridDomain& d, F&& f) {
    if (!j.is_array() || j.size() != d.vertex_count()) throw InputError("json: value count does not match domain");
    std::vector<T> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(f(v));
    return Net<T>(d, std::move(out));
}

SpaceKind kind_from(const std::string& s) {
    if (s == "hyperplane") return SpaceKind::hyperplane;
    if (s == "quadric") return SpaceKind::quadric;
    if (s == "general") return SpaceKind::general;
    throw InputError("json: unknown space kind '" + s + "'");
}

const char* site_kind(Site::Kind k) {
    switch (k) {
        case Site::Kind::vertex: return "vertex";
        case Site::Kind::hedge: return "hedge";
        case Site::Kind::vedge: return "vedge";
        case Site::Kind::face: return "face";
    }
    return "face";
}

// Infinite tolerances have no JSON literal; they are written as null.
Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json to_json(const GridDomain& d) { return {{"N", d.N()}, {"M", d.M()}}; }

Json to_json(const EdgeLabelling& l) { return {{"a", l.a()}, {"b", l.b()}}; }

Json to_json(const HoloData& h) {
    return {{"domain", to_json(h.phi.domain())}, {"labels", to_json(h.labels)}, {"values", values(h.phi, cplx)}};
}

Json to_json(const Net<Vec31>& x) { return values(x, vec); }

Json to_json(const Net<Complex>& z) { return values(z, cplx); }

Json to_json(const SurfaceBundle& b) {
    Json j;
    j["space"] = {{"mu", b.space.mu}, {"kind", to_string(b.space.kind)}};
    j["domain"] = to_json(b.x.domain());
    j["labels"] = to_json(b.labels);
    j["x"] = to_json(b.x);
    j["gn"] = to_json(b.gn);
    if (b.normal) j["normal"] = to_json(*b.normal);
    j["phi"] = to_json(b.phi);
    if (b.frame)
        j["frame"] = values(*b.frame, [](const SL2& s) {
            const Mat2& m = s.mat();
            return Json::array({cplx(m.a), cplx(m.b), cplx(m.c), cplx(m.d)});
        });
    Json params = Json::object();
    for (const auto& [k, v] : b.prov.params) params[k] = v;
    Json notes = Json::object();
    for (const auto& [k, v] : b.prov.notes) notes[k] = v;
    j["provenance"] = {{"representation", b.prov.representation}, {"params", params}, {"notes", notes}};
    return j;
}

Json to_json(const CheckReport& r) {
    Json items = Json::array();
    for (const auto& f : r.items) {
        Json res = Json::array();
        for (const auto& x : f.residuals)
            res.push_back({{"name", x.name}, {"value", finite_or_null(x.value)}, {"tol", finite_or_null(x.tol)},
                           {"pass", x.pass()}});
        items.push_back({{"site", {{"kind", site_kind(f.site.kind)}, {"n", f.site.n}, {"m", f.site.m}}},
                         {"residuals", res}});
    }
    return {{"check", r.check},
            {"pass", r.pass()},
            {"failures", r.failures()},
            {"max_residual", finite_or_null(r.max_residual())},
            {"items", items}};
}

Json to_json(const std::vector<CheckReport>& rs) {
    bool pass = true;
    Json arr = Json::array();
    for (const auto& r : rs) {
        pass = pass && r.pass();
        arr.push_back(to_json(r));
    }
    return {{"pass", pass}, {"reports", arr}};
}

GridDomain domain_from_json(const Json& j) {
    const Json& n = field(j, "N");
    const Json& m = field(j, "M");
    if (!n.is_number_integer() || !m.is_number_integer()) throw InputError("json: domain sizes must be integers");
    return GridDomain(n.get<int>(), m.get<int>());
}

EdgeLabelling labels_from_json(const Json& j, bool checked) {
    auto a = numbers(field(j, "a"), "labels.a");
    auto b = numbers(field(j, "b"), "labels.b");
    return checked ? EdgeLabelling(std::move(a), std::move(b)) : EdgeLabelling::unchecked(std::move(a), std::move(b));
}

HoloData holo_from_json(const Json& j) {
    const GridDomain d = domain_from_json(field(j, "domain"));
    HoloData h{complex_net_from_json(field(j, "values"), d), labels_from_json(field(j, "labels"))};
    if (!h.labels.matches(d)) throw InputError("json: labelling does not match domain");
    return h;
}

Net<Vec31> vec_net_from_json(const Json& values, const GridDomain& d) { return net_from<Vec31>(values, d, vec_from); }

Net<Complex> complex_net_from_json(const Json& values, const GridDomain& d) {
    return net_from<Complex>(values, d, cplx_from);
}

SurfaceBundle bundle_from_json(const Json& j) {
    SurfaceBundle b;
    const Json& space = field(j, "space");
    const Json& kind = field(space, "kind");
    if (!kind.is_string()) throw InputError("json: space.kind must be a string");
    b.space = {number(field(space, "mu"), "space.mu"), kind_from(kind.get<std::string>())};
    const GridDomain d = domain_from_json(field(j, "domain"));
    b.labels = labels_from_json(field(j, "labels"), false);
    if (!b.labels.matches(d)) throw InputError("json: labelling does not match domain");
    b.x = vec_net_from_json(field(j, "x"), d);
    b.gn = vec_net_from_json(field(j, "gn"), d);
    if (j.contains("normal")) b.normal = vec_net_from_json(j.at("normal"), d);
    b.phi = complex_net_from_json(field(j, "phi"), d);
    if (j.contains("frame"))
        b.frame = net_from<SL2>(j.at("frame"), d, [](const Json& v) {
            if (!v.is_array() || v.size() != 4) throw InputError("json: frame entries must be 4 complex values");
            return SL2(Mat2{cplx_from(v[0]), cplx_from(v[1]), cplx_from(v[2]), cplx_from(v[3])}, 1e-8);
        });
    const Json& prov = field(j, "provenance");
    const Json& rep = field(prov, "representation");
    if (!rep.is_string()) throw InputError("json: provenance.representation must be a string");
    b.prov.representation = rep.get<std::string>();
    for (const auto& [k, v] : field(prov, "params").items()) b.prov.params.emplace_back(k, number(v, "param"));
    for (const auto& [k, v] : field(prov, "notes").items()) {
        if (!v.is_string()) throw InputError("json: provenance notes must be strings");
        b.prov.notes.emplace_back(k, v.get<std::string>());
    }
    return b;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("'" + path + "': " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
    if (!out) throw InputError("write failed for '" + path + "'");
}

std::string format_double(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

Model parse_model(const std::string& s) {
    if (s == "slice") return Model::slice;
    if (s == "poincare") return Model::poincare;
    if (s == "hollow") return Model::hollow;
    if (s == "lightcone") return Model::lightcone;
    throw InputError("unknown model '" + s + "'");
}

const char* to_string(Model m) {
    switch (m) {
        case Model::slice: return "slice";
        case Model::poincare: return "poincare";
        case Model::hollow: return "hollow";
        case Model::lightcone: return "lightcone";
    }
    return "slice";
}

Point3 project(const Vec31& x, const Projection& p) {
    const double e2 = x.norm_euclid() * x.norm_euclid();
    const double q = inner(x, x);
    switch (p.model) {
        case Model::slice:
            if (std::abs(1.0 + p.mu) >= std::abs(1.0 - p.mu)) return {x.c[1], x.c[2], x.c[3]};
            return {x.c[0], x.c[1], x.c[2]};
        case Model::poincare:
            if (std::abs(q + 1.0) > p.tol * std::max(1.0, e2) || x.c[0] <= 0.0)
                throw InputError("poincare: point is not in H^3");
            return {x.c[1] / (1.0 + x.c[0]), x.c[2] / (1.0 + x.c[0]), x.c[3] / (1.0 + x.c[0])};
        case Model::hollow: {
            if (std::abs(q - 1.0) > p.tol * std::max(1.0, e2)) throw InputError("hollow: point is not in de Sitter space");
            const double s = std::hypot(x.c[1], x.c[2], x.c[3]);
            const double r = (kHollowMid + std::atan(x.c[0]) / std::numbers::pi) / s;
            return {r * x.c[1], r * x.c[2], r * x.c[3]};
        }
        case Model::lightcone:
            if (std::abs(q) > p.tol * std::max(1.0, e2) || x.c[0] < -p.tol * std::sqrt(e2))
                throw InputError("lightcone: point is not on the future light cone");
            return {x.c[1], x.c[2], x.c[3]};
    }
    return {};
}

Net<Point3> project(const Net<Vec31>& x, const Projection& p) {
    return x.map([&](const Vec31& v) { return project(v, p); });
}

Vec31 embed_slice(const Point3& y, double mu, double level) {
    // (x, p) = -x0 (1+mu)/2 + x3 (1-mu)/2.
    const double a = 0.5 * (1.0 + mu);
    const double b = 0.5 * (1.0 - mu);
    if (std::abs(a) >= std::abs(b)) return {(b * y[2] - level) / a, y[0], y[1], y[2]};
    return {y[0], y[1], y[2], (level + a * y[0]) / b};
}

MeshFile make_mesh(const Net<Point3>& net) {
    const GridDomain& d = net.domain();
    MeshFile mesh;
    mesh.vertices = net.values();
    for (int n = 0; n < d.N(); ++n)
        for (int m = 0; m < d.M(); ++m) {
            const Face f = d.face(n, m);
            mesh.faces.push_back({static_cast<int>(d.index(f.i)), static_cast<int>(d.index(f.j)),
                                  static_cast<int>(d.index(f.k)), static_cast<int>(d.index(f.l))});
        }
    return mesh;
}

void write_obj(const MeshFile& mesh, std::ostream& os) {
    const int nv = static_cast<int>(mesh.vertices.size());
    for (const auto& v : mesh.vertices)
        os << "v " << format_double(v[0]) << ' ' << format_double(v[1]) << ' ' << format_double(v[2]) << '\n';
    for (const auto& f : mesh.faces) {
        for (int i : f)
            if (i < 0 || i >= nv) throw InputError("write_obj: face index out of range");
        os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << ' ' << f[3] + 1 << '\n';
    }
}

void write_csv(const MeshFile& mesh, std::ostream& os) {
    if (!mesh.attributes.empty() && mesh.attributes.size() != mesh.faces.size())
        throw InputError("write_csv: attribute rows do not match face count");
    os << "face";
    for (const auto& n : mesh.attribute_names) os << ',' << n;
    os << '\n';
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
        os << f;
        if (!mesh.attributes.empty())
            for (double v : mesh.attributes[f]) os << ',' << format_double(v);
        os << '\n';
    }
}

}  // namespace lisurf::io
