#include "aawa/terrain.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "aawa/errors.hpp"

namespace aawa {

namespace {

std::string fmt_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

} // namespace

TerrainGrid::TerrainGrid(double origin_x, double origin_y, double cell_size,
                         std::size_t rows, std::size_t cols, std::vector<double> elevations)
    : origin_x_(origin_x), origin_y_(origin_y), cell_(cell_size), rows_(rows), cols_(cols),
      z_(std::move(elevations)) {
    if (rows_ < 2 || cols_ < 2) throw ValidationError("terrain grid must be at least 2x2");
    if (cell_ <= 0.0) throw ValidationError("terrain cell size must be positive");
    if (z_.size() != rows_ * cols_) throw ValidationError("terrain elevation array has wrong size");
    for (double v : z_) {
        if (!std::isfinite(v)) throw ValidationError("terrain elevations must be finite");
    }
    auto [mn, mx] = std::minmax_element(z_.begin(), z_.end());
    min_z_ = *mn;
    max_z_ = *mx;
}

double TerrainGrid::elevation_at(double x, double y) const {
    const double fx = (x - origin_x_) / cell_;
    const double fy = (y - origin_y_) / cell_;
    const double max_x = static_cast<double>(cols_ - 1);
    const double max_y = static_cast<double>(rows_ - 1);
    // small relative slack so points on the extent boundary survive rounding
    const double slack = 1e-9 * std::max({1.0, max_x, max_y});
    if (fx < -slack || fx > max_x + slack || fy < -slack || fy > max_y + slack)
        throw std::domain_error("elevation query outside terrain extent");

    const double cx = std::clamp(fx, 0.0, max_x);
    const double cy = std::clamp(fy, 0.0, max_y);
    std::size_t ix = std::min(static_cast<std::size_t>(cx), cols_ - 2);
    std::size_t iy = std::min(static_cast<std::size_t>(cy), rows_ - 2);
    const double tx = cx - static_cast<double>(ix);
    const double ty = cy - static_cast<double>(iy);

    const double z00 = at(iy, ix);
    const double z01 = at(iy, ix + 1);
    const double z10 = at(iy + 1, ix);
    const double z11 = at(iy + 1, ix + 1);
    return (1.0 - tx) * (1.0 - ty) * z00 + tx * (1.0 - ty) * z01 +
           (1.0 - tx) * ty * z10 + tx * ty * z11;
}

double mountain_base(const MountainSpec& s, double x, double y) {
    const double r = std::sqrt(x * x + y * y);
    return std::sin(y + s.a) + s.b * std::sin(x) + s.c * std::cos(y) +
           s.d * std::cos(s.e * r) + s.f * std::sin(s.f * r);
}

double mountain_bumps(const MountainSpec& s, double x, double y) {
    double z = 0.0;
    for (const auto& o : s.obstacles) {
        const double dx = (x - o.x0) / o.slope_x;
        const double dy = (y - o.y0) / o.slope_y;
        z += o.height * std::exp(-dx * dx - dy * dy);
    }
    return z;
}

namespace {

void validate_mountain(const MountainSpec& spec, double width, double height,
                       double origin_x, double origin_y) {
    for (const auto& o : spec.obstacles) {
        if (o.height <= 0.0) throw ValidationError("mountain obstacle height must be positive");
        if (o.slope_x <= 0.0 || o.slope_y <= 0.0)
            throw ValidationError("mountain obstacle slopes must be positive");
        if (o.x0 < origin_x || o.x0 > origin_x + width || o.y0 < origin_y ||
            o.y0 > origin_y + height)
            throw ValidationError("mountain obstacle center outside terrain extent");
    }
}

} // namespace

TerrainGrid synth_mountain(const MountainSpec& spec, std::size_t rows, std::size_t cols,
                           double cell_size, double origin_x, double origin_y) {
    if (rows < 2 || cols < 2) throw ValidationError("terrain grid must be at least 2x2");
    if (cell_size <= 0.0) throw ValidationError("terrain cell size must be positive");
    validate_mountain(spec, static_cast<double>(cols - 1) * cell_size,
                      static_cast<double>(rows - 1) * cell_size, origin_x, origin_y);

    std::vector<double> z(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const double y = origin_y + static_cast<double>(r) * cell_size;
        for (std::size_t c = 0; c < cols; ++c) {
            const double x = origin_x + static_cast<double>(c) * cell_size;
            const double base = mountain_base(spec, x, y);
            // without obstacles the surface is the base alone; otherwise the
            // merge takes the higher of base and bump layers
            z[r * cols + c] = spec.obstacles.empty()
                                  ? base
                                  : std::max(base, mountain_bumps(spec, x, y));
        }
    }
    return TerrainGrid(origin_x, origin_y, cell_size, rows, cols, std::move(z));
}

TerrainGrid synth_urban(const UrbanSpec& spec, std::size_t rows, std::size_t cols,
                        double cell_size, double origin_x, double origin_y) {
    if (rows < 2 || cols < 2) throw ValidationError("terrain grid must be at least 2x2");
    if (cell_size <= 0.0) throw ValidationError("terrain cell size must be positive");
    const double width = static_cast<double>(cols - 1) * cell_size;
    const double height = static_cast<double>(rows - 1) * cell_size;
    for (const auto& p : spec.prisms) {
        if (p.height <= 0.0) throw ValidationError("prism height must be positive");
        if (p.x_lo > p.x_hi || p.y_lo > p.y_hi) throw ValidationError("prism footprint is inverted");
        if (p.x_lo < origin_x || p.x_hi > origin_x + width || p.y_lo < origin_y ||
            p.y_hi > origin_y + height)
            throw ValidationError("prism footprint outside terrain extent");
    }

    std::vector<double> z(rows * cols, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
        const double y = origin_y + static_cast<double>(r) * cell_size;
        for (std::size_t c = 0; c < cols; ++c) {
            const double x = origin_x + static_cast<double>(c) * cell_size;
            double h = 0.0;
            for (const auto& p : spec.prisms) {
                if (p.contains(x, y)) h = std::max(h, p.height);
            }
            z[r * cols + c] = h;
        }
    }
    return TerrainGrid(origin_x, origin_y, cell_size, rows, cols, std::move(z));
}

namespace {

struct Cursor {
    std::istream& in;
    int line = 0;
    std::string buf;

    bool next_line() {
        while (std::getline(in, buf)) {
            ++line;
            if (buf.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    }
};

[[noreturn]] void parse_fail(int line, int column, const std::string& what) {
    std::ostringstream os;
    os << "DEM parse error at line " << line;
    if (column > 0) os << ", column " << column;
    os << ": " << what;
    throw ParseError(os.str());
}

double header_value(Cursor& cur, const std::string& expected_key) {
    if (!cur.next_line()) parse_fail(cur.line + 1, 0, "missing header line '" + expected_key + "'");
    std::istringstream is(cur.buf);
    std::string key;
    double value = 0.0;
    if (!(is >> key)) parse_fail(cur.line, 1, "empty header line");
    std::string lowered(key);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::string expected_lower(expected_key);
    std::transform(expected_lower.begin(), expected_lower.end(), expected_lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lowered != expected_lower)
        parse_fail(cur.line, 1, "expected header '" + expected_key + "', found '" + key + "'");
    if (!(is >> value)) parse_fail(cur.line, 2, "missing value for header '" + expected_key + "'");
    std::string extra;
    if (is >> extra) parse_fail(cur.line, 3, "unexpected token '" + extra + "' after header value");
    return value;
}

} // namespace

TerrainGrid read_dem(std::istream& in, double cell_size_override) {
    Cursor cur{in};

    const double ncols_v = header_value(cur, "ncols");
    const double nrows_v = header_value(cur, "nrows");
    const double xll = header_value(cur, "xllcorner");
    const double yll = header_value(cur, "yllcorner");
    double cellsize = header_value(cur, "cellsize");
    const double nodata = header_value(cur, "NODATA_value");

    if (ncols_v < 2.0 || ncols_v != std::floor(ncols_v))
        parse_fail(1, 2, "ncols must be an integer >= 2");
    if (nrows_v < 2.0 || nrows_v != std::floor(nrows_v))
        parse_fail(2, 2, "nrows must be an integer >= 2");
    const std::size_t cols = static_cast<std::size_t>(ncols_v);
    const std::size_t rows = static_cast<std::size_t>(nrows_v);
    if (cell_size_override > 0.0) cellsize = cell_size_override;
    if (cellsize <= 0.0) parse_fail(5, 2, "cellsize must be positive");

    std::vector<double> z(rows * cols, 0.0);
    for (std::size_t file_row = 0; file_row < rows; ++file_row) {
        if (!cur.next_line())
            parse_fail(cur.line + 1, 0, "expected " + std::to_string(rows) + " data rows, found " +
                                            std::to_string(file_row));
        std::istringstream is(cur.buf);
        const std::size_t grid_row = rows - 1 - file_row; // north row first in file
        for (std::size_t c = 0; c < cols; ++c) {
            double v = 0.0;
            if (!(is >> v))
                parse_fail(cur.line, static_cast<int>(c + 1),
                           "row has fewer than " + std::to_string(cols) + " values");
            if (v == nodata)
                parse_fail(cur.line, static_cast<int>(c + 1), "NODATA cell not supported");
            if (!std::isfinite(v))
                parse_fail(cur.line, static_cast<int>(c + 1), "non-finite elevation");
            z[grid_row * cols + c] = v;
        }
        std::string extra;
        if (is >> extra)
            parse_fail(cur.line, static_cast<int>(cols + 1),
                       "row has more than " + std::to_string(cols) + " values");
    }
    if (cur.next_line()) parse_fail(cur.line, 1, "unexpected data after last row");

    return TerrainGrid(xll, yll, cellsize, rows, cols, std::move(z));
}

TerrainGrid load_dem(const std::filesystem::path& path, double cell_size_override) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open DEM file: " + path.string());
    return read_dem(in, cell_size_override);
}

void write_dem(const TerrainGrid& grid, std::ostream& out) {
    out << "ncols " << grid.cols() << "\n";
    out << "nrows " << grid.rows() << "\n";
    out << "xllcorner " << fmt_double(grid.origin_x()) << "\n";
    out << "yllcorner " << fmt_double(grid.origin_y()) << "\n";
    out << "cellsize " << fmt_double(grid.cell_size()) << "\n";
    out << "NODATA_value -9999\n";
    for (std::size_t file_row = 0; file_row < grid.rows(); ++file_row) {
        const std::size_t r = grid.rows() - 1 - file_row;
        for (std::size_t c = 0; c < grid.cols(); ++c) {
            if (c) out << ' ';
            out << fmt_double(grid.at(r, c));
        }
        out << '\n';
    }
}

void save_dem(const TerrainGrid& grid, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write heightmap: " + path.string());
    write_dem(grid, out);
}

std::vector<Vec3> grid_points_within(const TerrainGrid& grid, const Vec3& center, double radius) {
    if (radius <= 0.0) throw ValidationError("proximity radius must be positive");
    std::vector<Vec3> out;

    const double fx_lo = (center.x - radius - grid.origin_x()) / grid.cell_size();
    const double fx_hi = (center.x + radius - grid.origin_x()) / grid.cell_size();
    const double fy_lo = (center.y - radius - grid.origin_y()) / grid.cell_size();
    const double fy_hi = (center.y + radius - grid.origin_y()) / grid.cell_size();
    if (fx_hi < 0.0 || fy_hi < 0.0) return out;

    const std::size_t c_lo = fx_lo <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(fx_lo));
    const std::size_t r_lo = fy_lo <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(fy_lo));
    if (c_lo >= grid.cols() || r_lo >= grid.rows()) return out;
    const std::size_t c_hi = std::min(grid.cols() - 1,
                                      static_cast<std::size_t>(std::max(0.0, std::floor(fx_hi))));
    const std::size_t r_hi = std::min(grid.rows() - 1,
                                      static_cast<std::size_t>(std::max(0.0, std::floor(fy_hi))));

    for (std::size_t r = r_lo; r <= r_hi; ++r) {
        const double y = grid.node_y(r);
        for (std::size_t c = c_lo; c <= c_hi; ++c) {
            const double x = grid.node_x(c);
            const double dx = x - center.x;
            const double dy = y - center.y;
            if (std::sqrt(dx * dx + dy * dy) <= radius) out.push_back({x, y, grid.at(r, c)});
        }
    }
    return out;
}

} // namespace aawa
