#pragma once

// Residual reports returned by every checker. Checkers never return bare
// booleans: each site carries the named residuals it was judged on.

#include <string>
#include <vector>

namespace lisurf {

struct Site {
    enum class Kind { vertex, hedge, vedge, face };
    Kind kind = Kind::face;
    int n = 0;
    int m = 0;
};

std::string to_string(const Site& s);

struct Residual {
    std::string name;
    double value = 0.0;
    double tol = 0.0;
    bool pass() const { return value <= tol; }
};

struct FaceReport {
    Site site;
    std::vector<Residual> residuals;

    bool pass() const;
    /// Value of the named residual, or -1 if absent.
    double value(const std::string& name) const;
};

struct CheckReport {
    std::string check;
    std::vector<FaceReport> items;

    bool pass() const;
    std::size_t failures() const;
    /// Largest value of the named residual across all sites (0 if none).
    double max_residual(const std::string& name) const;
    /// Largest residual of any name.
    double max_residual() const;

    void append(const CheckReport& other);
};

}  // namespace lisurf
