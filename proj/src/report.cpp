#include "lisurf/report.hpp"

#include <algorithm>
#include <sstream>

namespace lisurf {

std::string to_string(const Site& s) {
    std::ostringstream os;
    switch (s.kind) {
        case Site::Kind::vertex: os << "vertex"; break;
        case Site::Kind::hedge: os << "hedge"; break;
        case Site::Kind::vedge: os << "vedge"; break;
        case Site::Kind::face: os << "face"; break;
    }
    os << "(" << s.n << "," << s.m << ")";
    return os.str();
}

bool FaceReport::pass() const {
    return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.pass(); });
}

double FaceReport::value(const std::string& name) const {
    for (const auto& r : residuals)
        if (r.name == name) return r.value;
    return -1.0;
}

bool CheckReport::pass() const {
    return std::all_of(items.begin(), items.end(), [](const FaceReport& f) { return f.pass(); });
}

std::size_t CheckReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(), [](const FaceReport& f) { return !f.pass(); }));
}

double CheckReport::max_residual(const std::string& name) const {
    double r = 0.0;
    for (const auto& f : items)
        for (const auto& x : f.residuals)
            if (x.name == name) r = std::max(r, x.value);
    return r;
}

double CheckReport::max_residual() const {
    double r = 0.0;
    for (const auto& f : items)
        for (const auto& x : f.residuals) r = std::max(r, x.value);
    return r;
}

void CheckReport::append(const CheckReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
}

}  // namespace lisurf
