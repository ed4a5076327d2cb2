#pragma once

#include <string>
#include <vector>

#include "ribbonlift/errors.hpp"

namespace ribbonlift {

// Double-occurrence word: the cyclic sequence of self-crossing labels met
// when traversing an immersed circle.  Every label appears exactly twice;
// the empty word is an embedded circle.
struct ImmersedCircleWord {
    std::vector<std::string> letters;

    bool operator==(const ImmersedCircleWord&) const = default;
};

void validate_word(const ImmersedCircleWord& w);

// Number of circles after smoothing every crossing respecting orientation.
// The arcs between consecutive letters form the initial cycle; at a label
// occurring at positions i and j, the arc ending at i continues with the arc
// starting after j and vice versa.  The count depends on the word alone.
int oriented_smoothing_count(const ImmersedCircleWord& w);

enum class Coorientation { positive, negative };

// Invariants of the surface built from the smoothing circles' disks joined
// by one band per crossing: one boundary component, one simple branch point
// per band.
struct SeifertData {
    int num_crossings = 0;        // d
    int num_seifert_circles = 0;  // m
    int euler_characteristic_sigma = 0; // m - d
    int genus_sigma = 0;          // (1 - m + d) / 2
    int branch_points = 0;        // d
    Coorientation coorientation = Coorientation::positive;

    bool operator==(const SeifertData&) const = default;
};

// The coorientation selects which side the disks lie on; it is recorded but
// does not affect any of the counts.
SeifertData fill_surface(const ImmersedCircleWord& w,
                         Coorientation side = Coorientation::positive);

} // namespace ribbonlift
