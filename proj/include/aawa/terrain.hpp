#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "aawa/geom.hpp"

namespace aawa {

/// Regular elevation grid. Row 0 sits at origin_y (south edge); elevations are
/// stored row-major. Immutable after construction, safe to share across
/// threads.
class TerrainGrid {
  public:
    TerrainGrid() = default;
    TerrainGrid(double origin_x, double origin_y, double cell_size,
                std::size_t rows, std::size_t cols, std::vector<double> elevations);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double cell_size() const { return cell_; }
    double origin_x() const { return origin_x_; }
    double origin_y() const { return origin_y_; }
    double width() const { return static_cast<double>(cols_ - 1) * cell_; }
    double height() const { return static_cast<double>(rows_ - 1) * cell_; }

    double at(std::size_t row, std::size_t col) const { return z_[row * cols_ + col]; }
    double node_x(std::size_t col) const { return origin_x_ + static_cast<double>(col) * cell_; }
    double node_y(std::size_t row) const { return origin_y_ + static_cast<double>(row) * cell_; }

    /// Bilinear interpolation of the four surrounding nodes. Queries outside
    /// the extent (beyond a relative 1e-9 slack) throw std::domain_error.
    double elevation_at(double x, double y) const;

    double min_elevation() const { return min_z_; }
    double max_elevation() const { return max_z_; }

    const std::vector<double>& elevations() const { return z_; }

  private:
    double origin_x_ = 0.0;
    double origin_y_ = 0.0;
    double cell_ = 1.0;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> z_;
    double min_z_ = 0.0;
    double max_z_ = 0.0;
};

/// One mountain bump: center, peak height and the two axis slope widths.
struct MountainObstacle {
    double x0 = 0.0;
    double y0 = 0.0;
    double height = 0.0;
    double slope_x = 1.0;
    double slope_y = 1.0;
};

/// Coefficients of the rolling base surface plus a list of bump obstacles.
struct MountainSpec {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0, f = 0.0;
    std::vector<MountainObstacle> obstacles;
};

struct UrbanPrism {
    double x_lo = 0.0, y_lo = 0.0;
    double x_hi = 0.0, y_hi = 0.0;
    double height = 0.0;

    bool contains(double x, double y) const {
        return x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi;
    }
};

struct UrbanSpec {
    std::vector<UrbanPrism> prisms;
    double protect_width = 0.0; // safe-distance margin recorded with the scenario
};

/// Rolling base surface under the mountain environments.
double mountain_base(const MountainSpec& spec, double x, double y);

/// Sum of bump contributions at (x, y).
double mountain_bumps(const MountainSpec& spec, double x, double y);

TerrainGrid synth_mountain(const MountainSpec& spec, std::size_t rows, std::size_t cols,
                           double cell_size, double origin_x = 0.0, double origin_y = 0.0);

TerrainGrid synth_urban(const UrbanSpec& spec, std::size_t rows, std::size_t cols,
                        double cell_size, double origin_x = 0.0, double origin_y = 0.0);

/// Reads an ASCII-grid heightmap (ncols/nrows/xllcorner/yllcorner/cellsize/
/// NODATA_value header, then north-first rows). A positive cell_size_override
/// replaces the header cellsize.
TerrainGrid load_dem(const std::filesystem::path& path, double cell_size_override = 0.0);
TerrainGrid read_dem(std::istream& in, double cell_size_override = 0.0);

void save_dem(const TerrainGrid& grid, const std::filesystem::path& path);
void write_dem(const TerrainGrid& grid, std::ostream& out);

/// All grid nodes whose horizontal distance to `center` is <= radius,
/// returned with their elevations, in row-major node order.
std::vector<Vec3> grid_points_within(const TerrainGrid& grid, const Vec3& center, double radius);

} // namespace aawa
