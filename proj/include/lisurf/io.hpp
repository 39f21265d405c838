#pragma once

// JSON schemas for nets, bundles and reports; ball-model projections; OBJ
// meshes with CSV per-face sidecars.
//
// Net:    {"domain":{"N","M"}, "labels":{"a":[...],"b":[...]}, "values":[...]}
//         values row-major (n outer, m inner); complex as [re, im], Vec31 as [x0, x1, x2, x3].
// Bundle: {"space":{"mu","kind"}, "domain", "labels", "x", "gn", "normal"?, "phi",
//          "frame"? ([[a],[b],[c],[d]] per vertex), "provenance":{"representation","params","notes"}}
// Doubles are written as shortest round-trip decimals; key order is fixed.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "lisurf/grid.hpp"
#include "lisurf/representations.hpp"

namespace lisurf::io {

using Json = nlohmann::ordered_json;

Json to_json(const GridDomain& d);
Json to_json(const EdgeLabelling& l);
Json to_json(const HoloData& h);
Json to_json(const Net<Vec31>& x);
Json to_json(const Net<Complex>& z);
Json to_json(const SurfaceBundle& b);
Json to_json(const CheckReport& r);
Json to_json(const std::vector<CheckReport>& rs);

GridDomain domain_from_json(const Json& j);
/// Labels are read without the sign requirement if `checked` is false.
EdgeLabelling labels_from_json(const Json& j, bool checked = true);
HoloData holo_from_json(const Json& j);
Net<Vec31> vec_net_from_json(const Json& values, const GridDomain& d);
Net<Complex> complex_net_from_json(const Json& values, const GridDomain& d);
SurfaceBundle bundle_from_json(const Json& j);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);
Json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

using Point3 = std::array<double, 3>;

enum class Model { slice, poincare, hollow, lightcone };
Model parse_model(const std::string& s);
const char* to_string(Model m);

/// Hollow-ball profile: radius 1.5 + atan(x0) / pi, strictly inside (1, 2).
inline constexpr double kHollowMid = 1.5;

struct Projection {
    Model model = Model::slice;
    /// slice: hyperplane parameter of p (dropped coordinate: x0 if |1+mu| >= |1-mu|, else x3).
    double mu = 1.0;
    /// Relative membership tolerance.
    double tol = 1e-8;
};

/// Throws InputError when a point violates the model's membership test.
Point3 project(const Vec31& x, const Projection& p);
Net<Point3> project(const Net<Vec31>& x, const Projection& p);
/// Inverse of the slice projection on the level set (x, p) = level.
Vec31 embed_slice(const Point3& y, double mu, double level);

struct MeshFile {
    std::vector<Point3> vertices;
    /// 0-based, ordered (i, j, k, l).
    std::vector<std::array<int, 4>> faces;
    std::vector<std::string> attribute_names;
    /// One row per face.
    std::vector<std::vector<double>> attributes;
};

MeshFile make_mesh(const Net<Point3>& net);
/// `v x y z` and 1-based `f i j k l` lines.
void write_obj(const MeshFile& mesh, std::ostream& os);
/// Header `face,<names>`, one row per face.
void write_csv(const MeshFile& mesh, std::ostream& os);

}  // namespace lisurf::io
