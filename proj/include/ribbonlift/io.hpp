#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ribbonlift/diagram.hpp"
#include "ribbonlift/ribbon_graph.hpp"
#include "ribbonlift/seifert.hpp"

namespace ribbonlift {

// Text formats.  All three are line-based; lines starting with '#' and
// blank lines are ignored.  Emission is canonical: parsing the emitted text
// reproduces the object, and equal objects emit identical bytes.
//
//   ribbon v1            diagram v1           word v1
//   darts 6              darts 12             A B C A B C
//   sigma 1 2 0 5 3 4    sigma ...
//   alpha 3 4 5 0 1 2    alpha ...
//   colour 0 black       crossing 8
//   colour 3 white

RibbonGraph parse_ribbon(const std::string& text, bool allow_low_valence = false);
std::string emit_ribbon(const RibbonGraph& g);

SphericalDiagram parse_diagram(const std::string& text);
std::string emit_diagram(const SphericalDiagram& d);

ImmersedCircleWord parse_word(const std::string& text);
std::string emit_word(const ImmersedCircleWord& w);

// Analysis output: a `command` line, an `input` line with the FNV-1a digest
// of the parsed object's canonical emission, the payload sorted by key, and
// trailing `warning` lines.  Byte-identical across runs for equal inputs.
struct Report {
    std::string command;
    std::string input_digest;
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<std::string> warnings;

    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, long long value);
};

std::string render_report(const Report& r);

std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(const std::string& bytes);

// Key helper producing zero-padded list indices so lexicographic key order
// matches list order ("circle.003.word").
std::string indexed_key(const std::string& prefix, int index,
                        const std::string& suffix = "");

} // namespace ribbonlift
