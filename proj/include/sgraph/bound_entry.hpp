// bound_entry.hpp — one evaluated inequality, normalized to "left <= right".
#pragma once

#include <string>

namespace sgraph {

enum class BoundStatus { satisfied, violated, inapplicable };

inline const char* to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::satisfied: return "satisfied";
        case BoundStatus::violated: return "violated";
        case BoundStatus::inapplicable: return "inapplicable";
    }
    return "?";
}

struct BoundEntry {
    std::string id;
    double left = 0.0;
    double right = 0.0;
    BoundStatus status = BoundStatus::inapplicable;
    bool equality = false;  // |left - right| within the equality band
    std::string note;       // inapplicability reason or context

    bool violated() const { return status == BoundStatus::violated; }
};

}  // namespace sgraph
