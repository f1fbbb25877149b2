#pragma once

#include <cstdint>
#include <optional>

#include "lanewatch/image.hpp"
#include "lanewatch/types.hpp"

namespace lanewatch {

enum class HashKind { average_hash, difference_hash };

struct HashRegion {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
};

/// 64-bit perceptual signature of the top fifth of a frame.
struct FrameHash {
    std::uint64_t bits = 0;
    std::int64_t frame_id = 0;
    HashRegion region;
};

struct ViewCheckParams {
    std::int64_t check_interval_frames = 50;
    int hash_distance_threshold = 12;
    HashKind hash_kind = HashKind::difference_hash;

    void validate() const {
        if (check_interval_frames < 1)
            throw ConfigError("check_interval_frames must be >= 1");
        if (hash_distance_threshold < 1 || hash_distance_threshold > 64)
            throw ConfigError("hash_distance_threshold must be in [1, 64]");
    }
};

/// Hashes the top fifth of the frame: block-average to an 8x8 (average) or
/// 9x8 (difference) grid, then threshold each cell against the grid mean or
/// its left neighbor. Cell comparisons are exact integer cross-products, so
/// the hash is invariant to uniform brightness shifts and fully
/// deterministic. Throws InputError when the crop is smaller than the grid.
FrameHash hash_frame(const GrayImage& frame, const ViewCheckParams& params,
                     std::int64_t frame_id = 0);

int hash_distance(const FrameHash& a, const FrameHash& b);

struct ViewCheckOutcome {
    bool checked = false;
    int distance = 0;
    bool changed = false;
};

/// Holds the reference hash and the 50-frame cadence. The caller supplies
/// frames; on `changed` the pipeline performs its own reset.
class ViewChecker {
public:
    explicit ViewChecker(ViewCheckParams params = {});

    bool has_reference() const { return reference_.has_value(); }
    const std::optional<FrameHash>& reference() const { return reference_; }

    void set_reference(const GrayImage& frame, std::int64_t frame_id);

    /// No-op until the cadence point is due; otherwise hashes and compares.
    ViewCheckOutcome maybe_check(const GrayImage& frame, std::int64_t frame_id);

    bool check_due(std::int64_t frame_id) const {
        return reference_.has_value() && frame_id >= next_check_;
    }

    void reset();

private:
    ViewCheckParams params_;
    std::optional<FrameHash> reference_;
    std::int64_t next_check_ = 0;
};

}  // namespace lanewatch
