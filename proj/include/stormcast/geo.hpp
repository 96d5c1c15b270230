#pragma once

/*
 Planar grid geometry. All internal coordinates are meters in a projected
 frame with x growing east and y growing north; raster rows grow southward
 from the grid origin (top-left corner of pixel (0,0)).

 Degrees appear only at the edges: an affine anchor maps world meters to
 lat/lon with 1 deg latitude = 111.32 km and longitude scaled by cos(lat0).
*/

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace stormcast {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

inline constexpr double kMetersPerDegreeLat = 111320.0;
inline constexpr double kPi = 3.14159265358979323846;

// Ties a world point (meters) to a lat/lon pair; the whole grid shares one
// affine approximation around this point.
struct LatLonAnchor {
    double lat_deg = 0.0;
    double lon_deg = 0.0;
    double easting_m = 0.0;
    double northing_m = 0.0;

    double meters_per_degree_lon() const {
        return kMetersPerDegreeLat * std::cos(lat_deg * kPi / 180.0);
    }

    std::pair<double, double> to_lat_lon(Vec2 world) const {
        return {lat_deg + (world.y - northing_m) / kMetersPerDegreeLat,
                lon_deg + (world.x - easting_m) / meters_per_degree_lon()};
    }

    Vec2 from_lat_lon(double lat, double lon) const {
        return {easting_m + (lon - lon_deg) * meters_per_degree_lon(),
                northing_m + (lat - lat_deg) * kMetersPerDegreeLat};
    }
};

// Buffer distances the paper states in degrees become metric radii via the
// latitude degree length (isotropic dilation).
inline double degrees_to_meters(double degrees) { return degrees * kMetersPerDegreeLat; }

struct GeoTransform {
    double origin_easting = 0.0;   // world x of the top-left corner of pixel (0,0)
    double origin_northing = 0.0;  // world y of the same corner
    double pixel_size = 250.0;     // meters per pixel
    std::optional<LatLonAnchor> anchor;

    // Pixel-center convention: pixel (0,0) maps to (+pitch/2, -pitch/2).
    Vec2 pixel_to_world(int px, int py) const {
        return {origin_easting + (px + 0.5) * pixel_size,
                origin_northing - (py + 0.5) * pixel_size};
    }

    std::pair<int, int> world_to_pixel(double x, double y) const {
        return {static_cast<int>(std::floor((x - origin_easting) / pixel_size)),
                static_cast<int>(std::floor((origin_northing - y) / pixel_size))};
    }

    bool operator==(const GeoTransform& o) const {
        return origin_easting == o.origin_easting && origin_northing == o.origin_northing &&
               pixel_size == o.pixel_size;
    }
};

} // namespace stormcast
