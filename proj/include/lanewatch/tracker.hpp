#pragma once

#include <span>
#include <vector>

#include "lanewatch/association.hpp"
#include "lanewatch/kalman.hpp"
#include "lanewatch/types.hpp"

namespace lanewatch {

enum class TrackStatus { tentative, confirmed, deleted };

struct Track {
    TrackId id;
    KalmanState state;
    int hits = 0;
    int age = 0;
    int time_since_update = 0;
    TrackStatus status = TrackStatus::tentative;
    ClassLabel class_label = ClassLabel::car;

    BBox bbox() const { return state.to_bbox(); }
};

struct TrackerParams {
    int max_age = 30;
    int n_init = 3;
    CiouParams ciou;

    void validate() const {
        if (max_age < 1) throw ConfigError("max_age must be >= 1");
        if (n_init < 1) throw ConfigError("n_init must be >= 1");
        ciou.validate();
    }
};

/// Single-stream multi-object tracker: skip-aware prediction, CIOU cascade
/// matching with the (K+1)-scaled gate, tentative/confirmed/deleted
/// lifecycle. One instance per camera stream; not thread-safe.
class Tracker {
public:
    explicit Tracker(TrackerParams params = {});

    /// One processed frame: predict all tracks K+1 steps, associate, update,
    /// age out. Detections must already be filtered. Returns the confirmed
    /// tracks after this step.
    std::vector<Track> step(std::span<const Detection> detections,
                            int skipped_frames);

    /// Drops every track but keeps the id sequence so ids are never reused,
    /// including across pipeline resets.
    void reset();

    const std::vector<Track>& tracks() const { return tracks_; }
    const TrackerParams& params() const { return params_; }

private:
    void initiate(const Detection& det);

    TrackerParams params_;
    std::vector<Track> tracks_;
    std::int64_t next_id_ = 1;
};

}  // namespace lanewatch
