#pragma once

// Worked examples showing each hypothesis of the rank inequality is needed.

#include <string>
#include <vector>

namespace hrank {

struct GalleryCheck {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct GalleryCase {
    std::string id;            // "a" .. "g"
    std::string construction;  // P, Q, n, d in parser syntax
    std::string basis;         // where the expected numbers come from
    std::vector<GalleryCheck> checks;
    bool pass = false;
};

std::vector<GalleryCase> run_gallery();

}  // namespace hrank
