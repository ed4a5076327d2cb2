#include "ribbonlift/lift.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ribbonlift {

namespace {

// Spreadsheet-style labels: A..Z, AA, AB, ...
std::string nth_label(int i) {
    std::string s;
    ++i;
    while (i > 0) {
        --i;
        s.insert(s.begin(), static_cast<char>('A' + i % 26));
        i /= 26;
    }
    return s;
}

struct CornerEvent {
    Dart crossing;
    int corner; // sector between positions corner and corner+1 of the 4-cycle
    bool operator<(const CornerEvent& o) const {
        return crossing != o.crossing ? crossing < o.crossing : corner < o.corner;
    }
};

int position_at_crossing(const RibbonGraph& map, Dart d) {
    auto cycle = vertex_cycle_of(map, d);
    for (int i = 0; i < 4; ++i)
        if (cycle[i] == d) return i;
    return -1;
}

} // namespace

std::vector<BoundaryCircle> boundary_circles(const SphericalDiagram& d) {
    return build_covering(d).circles;
}

CoveringResult build_covering(const SphericalDiagram& d) {
    auto ig = extract_theta(d);
    auto faces = orbits(ig.theta, OrbitKind::face);

    // The boundary strand carried by a dart runs on its right and stays in
    // that dart's face orbit.  Where the strand rides a passage through a
    // crossing it sweeps the two corners on its side: with the strand
    // leaving along position k of the crossing's 4-cycle, those are corners
    // (k+2) and (k+3) mod 4, in travel order.  Each corner hosts exactly one
    // of the four boundary intersection points of the crossing.
    std::vector<std::vector<CornerEvent>> events(faces.size());
    for (size_t f = 0; f < faces.size(); ++f) {
        for (Dart t : faces[f]) {
            const Dart mate = ig.theta.alpha[t];
            const Dart lesser = std::min(t, mate);
            const auto& passages = ig.edge_paths.at(lesser);
            if (t == lesser) {
                for (const auto& p : passages) {
                    const Dart exit = through_dart(d.map, p.entry);
                    const int k = position_at_crossing(d.map, exit);
                    events[f].push_back({p.crossing, (k + 2) % 4});
                    events[f].push_back({p.crossing, (k + 3) % 4});
                }
            } else {
                for (auto it = passages.rbegin(); it != passages.rend(); ++it) {
                    const int k = position_at_crossing(d.map, it->entry);
                    events[f].push_back({it->crossing, (k + 2) % 4});
                    events[f].push_back({it->crossing, (k + 3) % 4});
                }
            }
        }
    }

    std::map<CornerEvent, std::vector<int>> hit_circles;
    for (size_t f = 0; f < faces.size(); ++f)
        for (const auto& ev : events[f])
            hit_circles[ev].push_back(static_cast<int>(f));
    for (const auto& [ev, owners] : hit_circles) {
        (void)ev;
        if (owners.size() != 2)
            throw std::logic_error("boundary corner not swept exactly twice");
    }

    CoveringResult result;
    for (size_t f = 0; f < faces.size(); ++f) {
        BoundaryCircle circle;
        circle.face_cycle = faces[f];
        std::map<CornerEvent, std::string> letter_of;
        int next_letter = 0;
        for (const auto& ev : events[f]) {
            const auto& owners = hit_circles.at(ev);
            if (owners[0] != static_cast<int>(f) || owners[1] != static_cast<int>(f))
                continue; // the point joins two different circles
            auto it = letter_of.find(ev);
            if (it == letter_of.end())
                it = letter_of.emplace(ev, nth_label(next_letter++)).first;
            circle.word.letters.push_back(it->second);
        }
        circle.filling = fill_surface(circle.word);
        result.circles.push_back(std::move(circle));
    }
    int self_points = 0;
    for (const auto& c : result.circles)
        self_points += static_cast<int>(c.word.letters.size()) / 2;
    result.points_between_circles = 4 * crossing_count(d) - self_points;

    const auto theta_inv = surface_invariants(ig.theta);
    result.chi_n = theta_inv.num_vertices - theta_inv.num_edges;
    result.chi_y = result.chi_n;
    result.branch_count = 0;
    for (const auto& c : result.circles) {
        result.chi_y += c.filling.euler_characteristic_sigma;
        result.branch_count += c.filling.branch_points;
    }
    result.genus_y = (2 - result.chi_y) / 2;
    result.degree = (result.chi_y + result.branch_count) / 2;

    if (result.chi_y % 2 != 0 || result.genus_y < 0 || result.degree < 1 ||
        !check_riemann_hurwitz(result))
        throw std::logic_error("covering invariants violated");
    return result;
}

bool check_riemann_hurwitz(const CoveringResult& r) {
    return r.branch_count == 2 * r.degree + 2 * r.genus_y - 2;
}

int total_ramification(int degree, int genus) {
    const int total = 2 * degree + 2 * genus - 2;
    if (degree < 1 || total < 0)
        fail(ErrorCode::NegativeRamification,
             "no covering of degree " + std::to_string(degree) + " and genus " +
                 std::to_string(genus));
    return total;
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_into(remaining - part, part, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> ramification_partitions(int degree, int genus) {
    const int total = total_ramification(degree, genus);
    std::vector<std::vector<int>> out;
    if (total == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> current;
    partitions_into(total, total, current, out);
    return out;
}

bool check_region_formula(int chi_s, int degree_s,
                          const std::vector<int>& ramification) {
    int weight = 0;
    for (int e : ramification) weight += e - 1;
    return chi_s == degree_s - weight;
}

bool region_forces_unbranched(int chi_s, int degree_s) {
    return chi_s == 1 && degree_s == 1;
}

} // namespace ribbonlift
