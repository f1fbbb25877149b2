#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lanewatch {

/// Thrown for bad configuration (missing files, invalid parameters, broken
/// lane geometry). Maps to CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown for unusable input data (unreadable streams, undersized images,
/// mismatched evaluation inputs). Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ClassLabel { car, truck, bus, motorcycle, other };

std::string to_string(ClassLabel c);
ClassLabel class_label_from_string(const std::string& s);

/// Axis-aligned box in pixel coordinates, origin top-left, x right, y down.
/// Stored as (left, top, width, height); center/area/aspect are derived so
/// they can never disagree with the stored extent.
struct BBox {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    double cx() const { return x + 0.5 * w; }
    double cy() const { return y + 0.5 * h; }
    double right() const { return x + w; }
    double bottom() const { return y + h; }
    double area() const { return w * h; }
    double aspect() const { return w / h; }

    bool valid() const {
        return w > 0.0 && h > 0.0 && std::isfinite(x) && std::isfinite(y) &&
               std::isfinite(w) && std::isfinite(h);
    }
};

struct Detection {
    std::int64_t frame_id = 0;
    BBox bbox;
    ClassLabel class_label = ClassLabel::car;
    double confidence = 0.0;
};

/// Unique per-run vehicle identity. Allocated strictly increasing, never
/// reused, including across pipeline resets.
struct TrackId {
    std::int64_t value = 0;
    friend auto operator<=>(const TrackId&, const TrackId&) = default;
};

struct LaneId {
    int value = 0;
    friend auto operator<=>(const LaneId&, const LaneId&) = default;
};

struct CameraConfig {
    double fps = 30.0;
    int frame_width = 0;
    int frame_height = 0;

    void validate() const {
        if (!(fps > 0.0)) throw ConfigError("camera fps must be > 0");
        if (frame_width <= 0 || frame_height <= 0)
            throw ConfigError("camera frame dimensions must be > 0");
    }
};

}  // namespace lanewatch
