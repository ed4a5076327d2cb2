#include "ribbonlift/seifert.hpp"

#include <map>

namespace ribbonlift {

namespace {

// Position of the other occurrence of each letter, or an error.
std::vector<int> partner_positions(const ImmersedCircleWord& w) {
    std::map<std::string, std::vector<int>> where;
    for (int i = 0; i < static_cast<int>(w.letters.size()); ++i)
        where[w.letters[i]].push_back(i);
    std::vector<int> partner(w.letters.size());
    for (const auto& [label, positions] : where) {
        if (positions.size() != 2)
            fail(ErrorCode::NotDoubleOccurrence,
                 "label " + label + " occurs " + std::to_string(positions.size()) +
                     " times, expected 2");
        partner[positions[0]] = positions[1];
        partner[positions[1]] = positions[0];
    }
    return partner;
}

} // namespace

void validate_word(const ImmersedCircleWord& w) { partner_positions(w); }

int oriented_smoothing_count(const ImmersedCircleWord& w) {
    const int len = static_cast<int>(w.letters.size());
    if (len == 0) return 1;
    auto partner = partner_positions(w);
    // Arc i runs from letter position i to position i+1.  Smoothing the
    // crossing at a position splices the traversal over to the partner
    // occurrence, so arc i is followed by the arc starting at the partner
    // of position i+1.
    std::vector<char> seen(len, 0);
    int cycles = 0;
    for (int start = 0; start < len; ++start) {
        if (seen[start]) continue;
        ++cycles;
        int arc = start;
        while (!seen[arc]) {
            seen[arc] = 1;
            arc = partner[(arc + 1) % len];
        }
    }
    return cycles;
}

SeifertData fill_surface(const ImmersedCircleWord& w, Coorientation side) {
    SeifertData data;
    data.num_crossings = static_cast<int>(w.letters.size()) / 2;
    data.num_seifert_circles = oriented_smoothing_count(w);
    data.euler_characteristic_sigma = data.num_seifert_circles - data.num_crossings;
    data.genus_sigma = (1 - data.num_seifert_circles + data.num_crossings) / 2;
    data.branch_points = data.num_crossings;
    data.coorientation = side;
    return data;
}

} // namespace ribbonlift
