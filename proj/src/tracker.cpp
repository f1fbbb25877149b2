#include "lanewatch/tracker.hpp"

#include <algorithm>

namespace lanewatch {

Tracker::Tracker(TrackerParams params) : params_(params) {
    params_.validate();
}

void Tracker::initiate(const Detection& det) {
    Track track;
    track.id = TrackId{next_id_++};
    track.state = KalmanFilter::initiate(det.bbox);
    track.hits = 1;
    track.age = 0;
    track.time_since_update = 0;
    track.status = TrackStatus::tentative;
    track.class_label = det.class_label;
    tracks_.push_back(std::move(track));
}

std::vector<Track> Tracker::step(std::span<const Detection> detections,
                                 int skipped_frames) {
    const int steps = skipped_frames + 1;
    for (Track& t : tracks_) {
        KalmanFilter::predict(t.state, steps);
        t.age += steps;
        t.time_since_update += 1;
    }

    std::vector<CascadeTrack> candidates(tracks_.size());
    for (std::size_t i = 0; i < tracks_.size(); ++i)
        candidates[i] = CascadeTrack{tracks_[i].bbox(), tracks_[i].time_since_update};
    std::vector<BBox> det_boxes(detections.size());
    for (std::size_t i = 0; i < detections.size(); ++i)
        det_boxes[i] = detections[i].bbox;

    const MatchResult assoc =
        cascade_match(candidates, det_boxes, params_.ciou, skipped_frames);

    for (const auto& [ti, di] : assoc.matches) {
        Track& t = tracks_[ti];
        KalmanFilter::update(t.state, detections[di].bbox);
        t.hits += 1;
        t.time_since_update = 0;
        t.class_label = detections[di].class_label;
        if (t.status == TrackStatus::tentative && t.hits >= params_.n_init)
            t.status = TrackStatus::confirmed;
    }

    for (std::size_t ti : assoc.unmatched_tracks) {
        Track& t = tracks_[ti];
        if (t.status == TrackStatus::tentative) {
            t.status = TrackStatus::deleted;
        } else if (t.time_since_update > params_.max_age) {
            t.status = TrackStatus::deleted;
        }
    }

    for (std::size_t di : assoc.unmatched_detections) initiate(detections[di]);

    std::erase_if(tracks_, [](const Track& t) { return t.status == TrackStatus::deleted; });

    std::vector<Track> confirmed;
    for (const Track& t : tracks_)
        if (t.status == TrackStatus::confirmed) confirmed.push_back(t);
    return confirmed;
}

void Tracker::reset() { tracks_.clear(); }

}  // namespace lanewatch
