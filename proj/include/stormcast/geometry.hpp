#pragma once

/*
 Polygon algebra for storm geometry, backed by Boost.Geometry. Everything
 works on multi-polygons in the planar meter frame; callers never touch
 boost types beyond the aliases below.
*/

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/box.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include <nlohmann/json.hpp>

#include "stormcast/geo.hpp"

namespace stormcast {

namespace bg = boost::geometry;

using GeoPoint = bg::model::d2::point_xy<double>;
using Ring = bg::model::ring<GeoPoint>;
using Polygon = bg::model::polygon<GeoPoint>;
using MultiPolygon = bg::model::multi_polygon<Polygon>;
using BoundingBox = bg::model::box<GeoPoint>;

inline double area_m2(const MultiPolygon& g) { return bg::area(g); }
inline double area_km2(const MultiPolygon& g) { return bg::area(g) / 1e6; }

inline Vec2 geometry_centroid(const MultiPolygon& g) {
    GeoPoint c;
    bg::centroid(g, c);
    return {bg::get<0>(c), bg::get<1>(c)};
}

inline BoundingBox envelope(const MultiPolygon& g) { return bg::return_envelope<BoundingBox>(g); }

inline MultiPolygon translate(const MultiPolygon& g, double dx, double dy) {
    bg::strategy::transform::translate_transformer<double, 2, 2> tr(dx, dy);
    MultiPolygon out;
    bg::transform(g, out, tr);
    return out;
}

// Minimum boundary-to-boundary distance in meters; 0 when the geometries
// intersect.
inline double min_distance_m(const MultiPolygon& a, const MultiPolygon& b) {
    return bg::distance(a, b);
}

inline double intersection_area_m2(const MultiPolygon& a, const MultiPolygon& b) {
    if (bg::disjoint(envelope(a), envelope(b))) return 0.0;
    MultiPolygon inter;
    bg::intersection(a, b, inter);
    return bg::area(inter);
}

inline MultiPolygon union_geometries(const MultiPolygon& a, const MultiPolygon& b) {
    MultiPolygon out;
    bg::union_(a, b, out);
    return out;
}

inline bool contains_point(const MultiPolygon& g, Vec2 p) {
    return bg::covered_by(GeoPoint{p.x, p.y}, g);
}

// Minkowski dilation with round joins, 16 segments per quadrant. distance 0
// is the identity; negative distances are rejected (erosion is not a storm
// search area).
inline MultiPolygon buffer_meters(const MultiPolygon& g, double distance_m,
                                  int points_per_circle = 64) {
    if (distance_m < 0) throw std::invalid_argument("buffer distance must be >= 0");
    if (distance_m == 0 || g.empty()) return g;
    bg::strategy::buffer::distance_symmetric<double> dist(distance_m);
    bg::strategy::buffer::join_round join(points_per_circle);
    bg::strategy::buffer::end_round end(points_per_circle);
    bg::strategy::buffer::point_circle circle(points_per_circle);
    bg::strategy::buffer::side_straight side;
    MultiPolygon out;
    bg::buffer(g, out, dist, side, join, end, circle);
    return out;
}

inline MultiPolygon buffer_degrees(const MultiPolygon& g, double distance_deg) {
    if (distance_deg < 0) throw std::invalid_argument("buffer distance must be >= 0");
    return buffer_meters(g, degrees_to_meters(distance_deg));
}

// Builds the outer boundary of a pixel region as a multi-polygon by
// dissolving one rectangle per horizontal run of pixels. `pixels` are
// row-major linear indices into a width-wide grid.
inline MultiPolygon pixel_region_to_polygon(const std::vector<int>& pixels, int width,
                                            const GeoTransform& geo) {
    MultiPolygon acc;
    if (pixels.empty()) return acc;

    std::vector<int> sorted = pixels;
    std::sort(sorted.begin(), sorted.end());

    const double pitch = geo.pixel_size;
    std::size_t i = 0;
    while (i < sorted.size()) {
        const int y = sorted[i] / width;
        const int x0 = sorted[i] % width;
        int x1 = x0;
        while (i + 1 < sorted.size() && sorted[i + 1] == sorted[i] + 1 &&
               sorted[i + 1] / width == y) {
            ++i;
            ++x1;
        }
        ++i;

        const double wx0 = geo.origin_easting + x0 * pitch;
        const double wx1 = geo.origin_easting + (x1 + 1) * pitch;
        const double wy0 = geo.origin_northing - (y + 1) * pitch;
        const double wy1 = geo.origin_northing - y * pitch;
        Polygon rect;
        bg::append(rect.outer(), GeoPoint{wx0, wy0});
        bg::append(rect.outer(), GeoPoint{wx0, wy1});
        bg::append(rect.outer(), GeoPoint{wx1, wy1});
        bg::append(rect.outer(), GeoPoint{wx1, wy0});
        bg::append(rect.outer(), GeoPoint{wx0, wy0});
        bg::correct(rect);

        if (acc.empty()) {
            acc.push_back(rect);
        } else {
            MultiPolygon merged;
            bg::union_(acc, rect, merged);
            acc = std::move(merged);
        }
    }
    return acc;
}

// GeoJSON coordinates; lon/lat when an anchor is present, planar meters
// otherwise (documented in the formats notes).
inline nlohmann::json geometry_to_geojson(const MultiPolygon& g,
                                          const std::optional<LatLonAnchor>& anchor) {
    auto coord = [&](const GeoPoint& p) {
        if (anchor) {
            auto [lat, lon] = anchor->to_lat_lon({bg::get<0>(p), bg::get<1>(p)});
            return nlohmann::json::array({lon, lat});
        }
        return nlohmann::json::array({bg::get<0>(p), bg::get<1>(p)});
    };
    nlohmann::json polys = nlohmann::json::array();
    for (const Polygon& poly : g) {
        nlohmann::json rings = nlohmann::json::array();
        nlohmann::json outer = nlohmann::json::array();
        for (const auto& p : poly.outer()) outer.push_back(coord(p));
        rings.push_back(outer);
        for (const auto& hole : poly.inners()) {
            nlohmann::json inner = nlohmann::json::array();
            for (const auto& p : hole) inner.push_back(coord(p));
            rings.push_back(inner);
        }
        polys.push_back(rings);
    }
    return nlohmann::json{{"type", "MultiPolygon"}, {"coordinates", polys}};
}

} // namespace stormcast
