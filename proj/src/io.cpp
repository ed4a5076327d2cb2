#include "ribbonlift/io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace ribbonlift {

const char* code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPermutation: return "NotPermutation";
        case ErrorCode::NotInvolution: return "NotInvolution";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::LowValence: return "LowValence";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::InvalidGenus: return "InvalidGenus";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::MissingColour: return "MissingColour";
        case ErrorCode::NotPlanar: return "NotPlanar";
        case ErrorCode::NotGenusZero: return "NotGenusZero";
        case ErrorCode::CrossingValence: return "CrossingValence";
        case ErrorCode::BadTrueVertex: return "BadTrueVertex";
        case ErrorCode::ClosedStrand: return "ClosedStrand";
        case ErrorCode::NotFourValent: return "NotFourValent";
        case ErrorCode::UnknownCrossing: return "UnknownCrossing";
        case ErrorCode::UnremovableSelfCrossing: return "UnremovableSelfCrossing";
        case ErrorCode::NotDoubleOccurrence: return "NotDoubleOccurrence";
        case ErrorCode::NegativeRamification: return "NegativeRamification";
        case ErrorCode::UnknownGraph: return "UnknownGraph";
        case ErrorCode::DartSetMismatch: return "DartSetMismatch";
        case ErrorCode::AlphaMismatch: return "AlphaMismatch";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownCommand: return "UnknownCommand";
        case ErrorCode::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

namespace {

struct Line {
    int number = 0;          // 1-based position in the original text
    std::vector<std::string> tokens;
};

[[noreturn]] void syntax(int line, const std::string& what) {
    fail(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

// Tokenized content lines with comments and blanks stripped.
std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        Line line;
        line.number = number;
        std::istringstream ls(raw);
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

void expect_header(const std::vector<Line>& lines, const std::string& kind) {
    if (lines.empty()) fail(ErrorCode::SyntaxError, "empty input, expected '" + kind + " v1'");
    const Line& first = lines.front();
    if (first.tokens.size() != 2 || first.tokens[0] != kind || first.tokens[1] != "v1")
        syntax(first.number, "expected header '" + kind + " v1'");
}

int parse_int(const Line& line, const std::string& tok) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        syntax(line.number, "'" + tok + "' is not an integer");
    }
    if (used != tok.size()) syntax(line.number, "'" + tok + "' is not an integer");
    return value;
}

// Shared body of the ribbon and diagram formats: darts, sigma, alpha, then
// any number of colour lines.  Extra line kinds are handed back unconsumed.
std::size_t parse_graph_body(const std::vector<Line>& lines, std::size_t at,
                             RibbonGraph& g) {
    if (at >= lines.size() || lines[at].tokens[0] != "darts")
        syntax(at < lines.size() ? lines[at].number : lines.back().number,
               "expected 'darts <count>'");
    if (lines[at].tokens.size() != 2) syntax(lines[at].number, "expected 'darts <count>'");
    int n = parse_int(lines[at], lines[at].tokens[1]);
    if (n < 0) syntax(lines[at].number, "dart count is negative");
    ++at;

    auto read_perm = [&](const std::string& name, std::vector<Dart>& target) {
        if (at >= lines.size() || lines[at].tokens[0] != name)
            syntax(at < lines.size() ? lines[at].number : lines.back().number,
                   "expected '" + name + "' line");
        const Line& line = lines[at];
        if (static_cast<int>(line.tokens.size()) - 1 != n)
            syntax(line.number, name + " lists " + std::to_string(line.tokens.size() - 1) +
                                    " darts, expected " + std::to_string(n));
        target.reserve(n);
        for (std::size_t i = 1; i < line.tokens.size(); ++i)
            target.push_back(parse_int(line, line.tokens[i]));
        ++at;
    };
    read_perm("sigma", g.sigma);
    read_perm("alpha", g.alpha);

    while (at < lines.size() && lines[at].tokens[0] == "colour") {
        const Line& line = lines[at];
        if (line.tokens.size() != 3) syntax(line.number, "expected 'colour <dart> <black|white>'");
        int d = parse_int(line, line.tokens[1]);
        if (d < 0 || d >= n) syntax(line.number, "colour names dart " + line.tokens[1] +
                                                     " outside 0.." + std::to_string(n - 1));
        VertexColour c;
        if (line.tokens[2] == "black") c = VertexColour::black;
        else if (line.tokens[2] == "white") c = VertexColour::white;
        else syntax(line.number, "colour must be 'black' or 'white'");
        // Normalisation to the orbit's least dart happens after sigma is
        // known to be a permutation; stash raw for now.
        if (g.colours.count(d)) syntax(line.number, "duplicate colour for dart " + line.tokens[1]);
        g.colours[d] = c;
        ++at;
    }
    return at;
}

void normalise_colours(RibbonGraph& g, int first_colour_line) {
    std::map<Dart, VertexColour> normalised;
    for (const auto& [d, c] : g.colours) {
        Dart rep = vertex_rep(g, d);
        auto [it, fresh] = normalised.emplace(rep, c);
        (void)it;
        if (!fresh)
            fail(ErrorCode::SyntaxError,
                 "line " + std::to_string(first_colour_line) + ": two colour lines name the vertex at dart " +
                     std::to_string(rep));
    }
    g.colours = std::move(normalised);
}

int first_line_of(const std::vector<Line>& lines, const std::string& kind) {
    for (const auto& line : lines)
        if (line.tokens[0] == kind) return line.number;
    return 0;
}

std::string join_ints(const std::vector<Dart>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

void emit_graph_body(std::ostringstream& out, const RibbonGraph& g) {
    out << "darts " << g.dart_count() << "\n";
    out << "sigma " << join_ints(g.sigma) << "\n";
    out << "alpha " << join_ints(g.alpha) << "\n";
    std::map<Dart, VertexColour> normalised;
    for (const auto& [d, c] : g.colours) normalised[vertex_rep(g, d)] = c;
    for (const auto& [d, c] : normalised)
        out << "colour " << d << ' ' << (c == VertexColour::black ? "black" : "white") << "\n";
}

} // namespace

RibbonGraph parse_ribbon(const std::string& text, bool allow_low_valence) {
    auto lines = content_lines(text);
    expect_header(lines, "ribbon");
    RibbonGraph g;
    std::size_t at = parse_graph_body(lines, 1, g);
    if (at != lines.size()) syntax(lines[at].number, "unexpected '" + lines[at].tokens[0] + "' line");
    validate_ribbon_graph(g, allow_low_valence);
    normalise_colours(g, first_line_of(lines, "colour"));
    return g;
}

std::string emit_ribbon(const RibbonGraph& g) {
    std::ostringstream out;
    out << "ribbon v1\n";
    emit_graph_body(out, g);
    return out.str();
}

SphericalDiagram parse_diagram(const std::string& text) {
    auto lines = content_lines(text);
    expect_header(lines, "diagram");
    std::size_t at = 1;
    // Tolerate an embedded 'ribbon v1' line before the graph body.
    if (at < lines.size() && lines[at].tokens[0] == "ribbon") ++at;

    SphericalDiagram d;
    at = parse_graph_body(lines, at, d.map);

    std::set<Dart> flags;
    while (at < lines.size() && lines[at].tokens[0] == "crossing") {
        const Line& line = lines[at];
        if (line.tokens.size() != 2) syntax(line.number, "expected 'crossing <dart>'");
        int c = parse_int(line, line.tokens[1]);
        if (c < 0 || c >= d.map.dart_count())
            syntax(line.number, "crossing names dart " + line.tokens[1] + " outside the dart range");
        ++at;
        flags.insert(c);
    }
    if (at != lines.size()) syntax(lines[at].number, "unexpected '" + lines[at].tokens[0] + "' line");

    validate_ribbon_graph(d.map, true);
    normalise_colours(d.map, first_line_of(lines, "colour"));

    // Normalise crossing flags to the least dart of their vertex.
    std::set<Dart> normalised;
    for (Dart c : flags) {
        Dart rep = vertex_rep(d.map, c);
        if (!normalised.insert(rep).second)
            fail(ErrorCode::SyntaxError,
                 "line " + std::to_string(first_line_of(lines, "crossing")) +
                     ": two crossing lines name the vertex at dart " + std::to_string(rep));
    }
    d.crossings.assign(normalised.begin(), normalised.end());
    validate_diagram(d);
    return d;
}

std::string emit_diagram(const SphericalDiagram& d) {
    std::ostringstream out;
    out << "diagram v1\n";
    emit_graph_body(out, d.map);
    std::vector<Dart> flags = d.crossings;
    std::sort(flags.begin(), flags.end());
    for (Dart c : flags) out << "crossing " << c << "\n";
    return out.str();
}

ImmersedCircleWord parse_word(const std::string& text) {
    auto lines = content_lines(text);
    expect_header(lines, "word");
    ImmersedCircleWord w;
    if (lines.size() > 2) syntax(lines[2].number, "expected a single line of labels");
    if (lines.size() == 2) w.letters = lines[1].tokens;
    validate_word(w);
    return w;
}

std::string emit_word(const ImmersedCircleWord& w) {
    std::string out = "word v1\n";
    if (!w.letters.empty()) {
        for (std::size_t i = 0; i < w.letters.size(); ++i) {
            if (i) out += ' ';
            out += w.letters[i];
        }
        out += '\n';
    }
    return out;
}

void Report::add(const std::string& key, const std::string& value) {
    fields.emplace_back(key, value);
}

void Report::add(const std::string& key, long long value) {
    fields.emplace_back(key, std::to_string(value));
}

std::string render_report(const Report& r) {
    std::ostringstream out;
    out << "command " << r.command << "\n";
    out << "input " << r.input_digest << "\n";
    auto sorted = r.fields;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, value] : sorted) out << key << ' ' << value << "\n";
    for (const auto& w : r.warnings) out << "warning " << w << "\n";
    return out.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string digest_hex(const std::string& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

std::string indexed_key(const std::string& prefix, int index, const std::string& suffix) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%03d", index);
    std::string out = prefix + "." + buf;
    if (!suffix.empty()) out += "." + suffix;
    return out;
}

} // namespace ribbonlift
