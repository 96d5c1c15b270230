#pragma once

/*
 Reflectivity rasters and their on-disk form: ESRI-ASCII-grid-style text,
 one file per timestamp, filename carrying the ISO-8601 instant
 (frame_20170612T150500Z.asc). No-data is NaN in memory and a sentinel
 value on disk. Frames are immutable once built and safe to share across
 threads read-only.
*/

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "stormcast/errors.hpp"
#include "stormcast/geo.hpp"
#include "stormcast/util.hpp"

namespace stormcast {

inline constexpr double kFrameIntervalSeconds = 300.0; // 5 minute update interval
inline constexpr float kDbzMin = -32.0f;
inline constexpr float kDbzMax = 95.0f;
inline constexpr double kEsriNoData = -9999.0;

struct RadarFrame {
    std::int64_t timestamp = 0; // unix seconds, UTC
    int width = 0;
    int height = 0;
    std::vector<float> values;  // row-major dBZ, NaN = no data, row 0 = north edge
    GeoTransform geo;

    float at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
    float& at(int x, int y) { return values[static_cast<std::size_t>(y) * width + x]; }
    bool has_data(int x, int y) const { return !std::isnan(at(x, y)); }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
    std::size_t size() const { return values.size(); }

    Vec2 pixel_to_world(int px, int py) const {
        if (!in_bounds(px, py))
            throw std::out_of_range("pixel index (" + std::to_string(px) + "," +
                                    std::to_string(py) + ") outside frame");
        return geo.pixel_to_world(px, py);
    }

    std::pair<int, int> world_to_pixel(double x, double y) const {
        auto p = geo.world_to_pixel(x, y);
        if (!in_bounds(p.first, p.second))
            throw std::out_of_range("world point outside frame");
        return p;
    }
};

inline RadarFrame make_frame(std::int64_t timestamp, int width, int height, GeoTransform geo,
                             float fill = std::numeric_limits<float>::quiet_NaN()) {
    if (width <= 0 || height <= 0) throw ConfigError("frame dimensions must be positive");
    if (geo.pixel_size <= 0) throw ConfigError("pixel_size must be positive");
    RadarFrame f;
    f.timestamp = timestamp;
    f.width = width;
    f.height = height;
    f.geo = geo;
    f.values.assign(static_cast<std::size_t>(width) * height, fill);
    return f;
}

// Clamp to the physical dBZ range; out-of-range values are data bugs worth a
// note on stderr but not worth failing a run.
inline std::size_t clip_dbz(RadarFrame& frame) {
    std::size_t clipped = 0;
    for (float& v : frame.values) {
        if (std::isnan(v)) continue;
        if (v < kDbzMin) {
            v = kDbzMin;
            ++clipped;
        } else if (v > kDbzMax) {
            v = kDbzMax;
            ++clipped;
        }
    }
    if (clipped > 0)
        std::cerr << "warning: clipped " << clipped << " reflectivity values to ["
                  << kDbzMin << ", " << kDbzMax << "] dBZ in frame "
                  << iso_basic_utc(frame.timestamp) << "\n";
    return clipped;
}

inline std::string frame_filename(std::int64_t timestamp) {
    return "frame_" + iso_basic_utc(timestamp) + ".asc";
}

inline void write_esri_ascii(const RadarFrame& f, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write frame file " + path.string());
    out << "ncols " << f.width << "\n";
    out << "nrows " << f.height << "\n";
    out << "xllcorner " << format_double(f.geo.origin_easting) << "\n";
    out << "yllcorner " << format_double(f.geo.origin_northing - f.height * f.geo.pixel_size)
        << "\n";
    out << "cellsize " << format_double(f.geo.pixel_size) << "\n";
    out << "nodata_value " << format_double(kEsriNoData) << "\n";
    for (int y = 0; y < f.height; ++y) {
        for (int x = 0; x < f.width; ++x) {
            if (x) out << ' ';
            const float v = f.at(x, y);
            out << (std::isnan(v) ? format_double(kEsriNoData) : format_double(v));
        }
        out << '\n';
    }
}

inline RadarFrame read_esri_ascii(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open frame file " + path.string());

    int ncols = -1, nrows = -1;
    double xll = 0, yll = 0, cellsize = 0, nodata = kEsriNoData;
    std::string key;
    for (int i = 0; i < 6; ++i) {
        double value;
        if (!(in >> key >> value)) throw DataError("truncated header in " + path.string());
        std::transform(key.begin(), key.end(), key.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (key == "ncols") ncols = static_cast<int>(value);
        else if (key == "nrows") nrows = static_cast<int>(value);
        else if (key == "xllcorner") xll = value;
        else if (key == "yllcorner") yll = value;
        else if (key == "cellsize") cellsize = value;
        else if (key == "nodata_value") nodata = value;
        else throw DataError("unknown header key '" + key + "' in " + path.string());
    }
    if (ncols <= 0 || nrows <= 0 || cellsize <= 0)
        throw DataError("bad grid header in " + path.string());

    GeoTransform geo;
    geo.pixel_size = cellsize;
    geo.origin_easting = xll;
    geo.origin_northing = yll + nrows * cellsize;

    std::int64_t ts = 0;
    const std::string stem = path.stem().string();
    if (auto pos = stem.rfind('_'); pos != std::string::npos)
        ts = parse_iso_utc(stem.substr(pos + 1));

    RadarFrame f = make_frame(ts, ncols, nrows, geo);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double v;
        if (!(in >> v)) throw DataError("truncated data in " + path.string());
        f.values[i] = (v == nodata) ? std::numeric_limits<float>::quiet_NaN()
                                    : static_cast<float>(v);
    }
    return f;
}

// Loads every frame_*.asc in a directory, sorted by timestamp. Enforces the
// 5-minute cadence: a gap or duplicate is an ingestion error naming the file.
inline std::vector<RadarFrame> load_frame_sequence(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> paths;
    if (!std::filesystem::is_directory(dir))
        throw DataError("frame directory does not exist: " + dir.string());
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".asc") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());

    std::vector<RadarFrame> frames;
    frames.reserve(paths.size());
    for (const auto& p : paths) frames.push_back(read_esri_ascii(p));
    std::sort(frames.begin(), frames.end(),
              [](const RadarFrame& a, const RadarFrame& b) { return a.timestamp < b.timestamp; });
    for (std::size_t i = 1; i < frames.size(); ++i) {
        if (frames[i].timestamp - frames[i - 1].timestamp !=
            static_cast<std::int64_t>(kFrameIntervalSeconds))
            throw DataError("frame sequence broken at " + frame_filename(frames[i].timestamp) +
                            ": expected 300 s after " + frame_filename(frames[i - 1].timestamp));
        if (!(frames[i].geo == frames[0].geo) || frames[i].width != frames[0].width ||
            frames[i].height != frames[0].height)
            throw DataError("frame geometry changes at " + frame_filename(frames[i].timestamp));
    }
    return frames;
}

} // namespace stormcast
