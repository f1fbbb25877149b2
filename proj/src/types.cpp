#include "lanewatch/types.hpp"

namespace lanewatch {

std::string to_string(ClassLabel c) {
    switch (c) {
        case ClassLabel::car: return "car";
        case ClassLabel::truck: return "truck";
        case ClassLabel::bus: return "bus";
        case ClassLabel::motorcycle: return "motorcycle";
        case ClassLabel::other: return "other";
    }
    return "other";
}

ClassLabel class_label_from_string(const std::string& s) {
    if (s == "car") return ClassLabel::car;
    if (s == "truck") return ClassLabel::truck;
    if (s == "bus") return ClassLabel::bus;
    if (s == "motorcycle") return ClassLabel::motorcycle;
    if (s == "other") return ClassLabel::other;
    throw InputError("unknown class label: " + s);
}

}  // namespace lanewatch
