#pragma once

// Shared fixtures and generators for the test binaries.  Free of any test
// framework so both the unit tests and the acceptance runner can use it.

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbonlift/constructions.hpp"
#include "ribbonlift/diagram.hpp"
#include "ribbonlift/errors.hpp"
#include "ribbonlift/io.hpp"
#include "ribbonlift/ribbon_graph.hpp"

namespace testsupport {

using namespace ribbonlift;

inline std::string fixture_path(const std::string& name) {
    return std::string(RIBBONLIFT_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline RibbonGraph ribbon_fixture(const std::string& name) {
    return parse_ribbon(read_fixture(name));
}

inline SphericalDiagram diagram_fixture(const std::string& name) {
    return parse_diagram(read_fixture(name));
}

// Two vertices joined by three edges, embedded: three faces, genus 0.
inline RibbonGraph make_theta_planar() {
    RibbonGraph g;
    g.sigma = {1, 2, 0, 5, 3, 4};
    g.alpha = {3, 4, 5, 0, 1, 2};
    return g;
}

// The same graph with both vertices reading (a b c): one face, genus 1.
inline RibbonGraph make_theta_same_rotation() {
    RibbonGraph g;
    g.sigma = {1, 2, 0, 4, 5, 3};
    g.alpha = {3, 4, 5, 0, 1, 2};
    return g;
}

// Wraps an embedded graph as a crossing-free diagram.
inline SphericalDiagram zero_cross(const RibbonGraph& g) {
    SphericalDiagram d;
    d.map = g;
    return d;
}

// Theta graph drawn with two of its edges wound around each other k >= 1
// times.  Vertices are u = (0 2 1) and v = (3 4 5); the edge 0--3 runs
// clear, while the strands leaving at darts 1, 2 pass through crossings
// 6, 10, ..., swapping sides at each.  Crossing i has base b = 6 + 4i and
// rotation (b b+1 b+2 b+3); a strand enters at one dart and leaves two
// steps further along, so consecutive crossings are chained NE->NW and
// SE->SW.  The drawing is always a sphere; the extracted graph has genus
// 1 for odd k and genus 0 for even k.
inline SphericalDiagram braid_theta(int k) {
    if (k < 1) throw std::logic_error("braid_theta needs at least one crossing");
    const int n = 6 + 4 * k;
    SphericalDiagram d;
    d.map.sigma.assign(n, 0);
    d.map.alpha.assign(n, 0);

    d.map.sigma[0] = 2;
    d.map.sigma[2] = 1;
    d.map.sigma[1] = 0;
    d.map.sigma[3] = 4;
    d.map.sigma[4] = 5;
    d.map.sigma[5] = 3;
    for (int i = 0; i < k; ++i) {
        const int b = 6 + 4 * i;
        for (int j = 0; j < 4; ++j) d.map.sigma[b + j] = b + (j + 1) % 4;
        d.crossings.push_back(b);
    }

    auto pair = [&](Dart a, Dart b) {
        d.map.alpha[a] = b;
        d.map.alpha[b] = a;
    };
    pair(0, 3);
    pair(1, 6);
    pair(2, 7);
    for (int i = 0; i + 1 < k; ++i) {
        const int b = 6 + 4 * i;
        pair(b + 3, b + 4);
        pair(b + 2, b + 5);
    }
    const int last = 6 + 4 * (k - 1);
    pair(last + 3, 4);
    pair(last + 2, 5);

    validate_diagram(d);
    return d;
}

// Runs fn, which must raise a domain error, and reports its code.
template <typename F>
inline ErrorCode error_code_of(F&& fn) {
    try {
        fn();
    } catch (const RibbonError& e) {
        return e.code();
    }
    throw std::logic_error("expected a domain error");
}

// A theta graph where one edge kinks around itself at crossing 6 and a
// second edge threads through the resulting loop, crossing it at 10 and
// 14.  Still a sphere drawing, but the self-crossing's monogon is pierced,
// so no amount of kink deletion can remove it.
inline SphericalDiagram pierced_kink() {
    SphericalDiagram d;
    d.map.sigma = {1, 2, 0, 5, 3, 4, 7, 8, 9, 6,
                   11, 12, 13, 10, 15, 16, 17, 14};
    d.map.alpha = {6, 4, 11, 9, 1, 15, 0, 10, 16, 3,
                   7, 2, 14, 17, 12, 5, 8, 13};
    d.crossings = {6, 10, 14};
    validate_diagram(d);
    return d;
}

// At least twenty diagrams with one to four crossings each: the shipped
// fixtures, braided thetas, and kink ladders grown on both.
inline std::vector<SphericalDiagram> diagram_corpus() {
    std::vector<SphericalDiagram> out;
    out.push_back(diagram_fixture("one_crossing_theta.diagram"));
    out.push_back(diagram_fixture("one_crossing_bouquet.diagram"));
    out.push_back(diagram_fixture("nested_kinks.diagram"));
    for (int k = 1; k <= 4; ++k) out.push_back(braid_theta(k));

    const auto theta = zero_cross(make_theta_planar());
    out.push_back(insert_kink(theta, 0));
    out.push_back(insert_kink(theta, 0, true));
    out.push_back(insert_kink(theta, 4));
    const auto two = insert_kink(insert_kink(theta, 0), 0);
    out.push_back(two);
    out.push_back(insert_kink(insert_kink(theta, 0), 0, true));
    const auto three = insert_kink(two, 0);
    out.push_back(three);
    out.push_back(insert_kink(three, 0));

    out.push_back(insert_kink(braid_theta(1), 0));
    out.push_back(insert_kink(braid_theta(1), 3));
    out.push_back(insert_kink(braid_theta(2), 0));
    out.push_back(insert_kink(braid_theta(3), 0, true));
    out.push_back(insert_kink(out[0], 0));
    out.push_back(insert_kink(out[0], 0, true));
    out.push_back(insert_kink(out[1], 0));
    out.push_back(insert_kink(out[2], 0, true));
    out.push_back(pierced_kink());

    for (const auto& d : out) validate_diagram(d);
    return out;
}

// Orbit count by union-find, a second opinion independent of the cycle
// walker in the library.
inline int orbit_count_naive(const std::vector<int>& perm) {
    std::vector<int> parent(perm.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < perm.size(); ++i) {
        int a = find(static_cast<int>(i));
        int b = find(perm[i]);
        if (a != b) parent[a] = b;
    }
    int roots = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++roots;
    return roots;
}

// Random connected trivalent ribbon graph on 6 or 12 darts: shuffled
// triples become vertex cycles, a shuffled pairing becomes alpha.
inline RibbonGraph random_trivalent(std::mt19937& rng) {
    for (;;) {
        const int vertices = (rng() % 2 == 0) ? 2 : 4;
        const int n = 3 * vertices;
        std::vector<Dart> deal(n);
        for (int i = 0; i < n; ++i) deal[i] = i;
        std::shuffle(deal.begin(), deal.end(), rng);

        RibbonGraph g;
        g.sigma.assign(n, 0);
        g.alpha.assign(n, 0);
        for (int i = 0; i < n; i += 3) {
            g.sigma[deal[i]] = deal[i + 1];
            g.sigma[deal[i + 1]] = deal[i + 2];
            g.sigma[deal[i + 2]] = deal[i];
        }
        std::shuffle(deal.begin(), deal.end(), rng);
        for (int i = 0; i < n; i += 2) {
            g.alpha[deal[i]] = deal[i + 1];
            g.alpha[deal[i + 1]] = deal[i];
        }
        if (is_connected(g)) return g;
    }
}

// Random connected ribbon graph with up to 16 darts, every valence >= 3.
inline RibbonGraph random_ribbon(std::mt19937& rng) {
    for (;;) {
        const int vertices = 1 + static_cast<int>(rng() % 3);
        std::vector<int> valence(vertices);
        int n = 0;
        for (int& v : valence) {
            v = 3 + static_cast<int>(rng() % 4);
            n += v;
        }
        if (n % 2 != 0 || n > 16) continue;

        std::vector<Dart> deal(n);
        for (int i = 0; i < n; ++i) deal[i] = i;
        std::shuffle(deal.begin(), deal.end(), rng);

        RibbonGraph g;
        g.sigma.assign(n, 0);
        g.alpha.assign(n, 0);
        int at = 0;
        for (int v : valence) {
            for (int j = 0; j < v; ++j)
                g.sigma[deal[at + j]] = deal[at + (j + 1) % v];
            at += v;
        }
        std::shuffle(deal.begin(), deal.end(), rng);
        for (int i = 0; i < n; i += 2) {
            g.alpha[deal[i]] = deal[i + 1];
            g.alpha[deal[i + 1]] = deal[i];
        }
        if (is_connected(g)) return g;
    }
}

namespace detail {

inline void matchings_rec(std::vector<int>& partner, int n,
                          std::vector<std::vector<int>>& out) {
    int first = -1;
    for (int i = 0; i < n; ++i) {
        if (partner[i] < 0) {
            first = i;
            break;
        }
    }
    if (first < 0) {
        out.push_back(partner);
        return;
    }
    for (int j = first + 1; j < n; ++j) {
        if (partner[j] >= 0) continue;
        partner[first] = j;
        partner[j] = first;
        matchings_rec(partner, n, out);
        partner[first] = -1;
        partner[j] = -1;
    }
}

} // namespace detail

// Every double-occurrence word with d labels, one per perfect matching of
// the 2d positions, labels assigned A, B, ... by first occurrence.  There
// are (2d-1)!! of them: 1, 1, 3, 15, 105, 945 for d = 0..5.
inline std::vector<ImmersedCircleWord> all_double_occurrence_words(int d) {
    std::vector<std::vector<int>> matchings;
    std::vector<int> partner(2 * d, -1);
    detail::matchings_rec(partner, 2 * d, matchings);

    std::vector<ImmersedCircleWord> out;
    out.reserve(matchings.size());
    for (const auto& m : matchings) {
        ImmersedCircleWord w;
        w.letters.assign(2 * d, "");
        int next = 0;
        for (int i = 0; i < 2 * d; ++i) {
            if (!w.letters[i].empty()) continue;
            const std::string label(1, static_cast<char>('A' + next++));
            w.letters[i] = label;
            w.letters[m[i]] = label;
        }
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace testsupport
