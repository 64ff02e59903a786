#pragma once

// Text formats: distribution files and entropy-vector files. Comment lines
// start with '#'; the first payload line is "n <count>". Numeric output is
// fixed at 12 significant digits so golden files stay bytewise stable.

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aef/dist.hpp"

namespace aef {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what),
          line(line_) {}
};

inline std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace detail {

// Yields (line_number, content) for payload lines, skipping blanks/comments.
inline bool next_payload_line(std::istream& in, int& line_no, std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out = line;
        return true;
    }
    return false;
}

inline int parse_header(std::istream& in, int& line_no) {
    std::string line;
    if (!next_payload_line(in, line_no, line))
        throw ParseError(line_no, "missing 'n <count>' header");
    std::istringstream is(line);
    std::string tag;
    int n = 0;
    if (!(is >> tag >> n) || tag != "n" || n < 1)
        throw ParseError(line_no, "expected 'n <count>' header");
    return n;
}

}  // namespace detail

inline JointDistribution read_distribution(std::istream& in) {
    int line_no = 0;
    JointDistribution d;
    d.n = detail::parse_header(in, line_no);
    d.alphabet_sizes.assign(d.n, 1);
    std::string line;
    while (detail::next_payload_line(in, line_no, line)) {
        std::istringstream is(line);
        Atom atom;
        atom.labels.resize(d.n);
        for (int i = 0; i < d.n; ++i)
            if (!(is >> atom.labels[i]) || atom.labels[i] < 0)
                throw ParseError(line_no, "expected " + std::to_string(d.n) +
                                              " non-negative symbol labels");
        if (!(is >> atom.prob))
            throw ParseError(line_no, "malformed probability column");
        std::string extra;
        if (is >> extra) throw ParseError(line_no, "trailing tokens");
        for (int i = 0; i < d.n; ++i)
            d.alphabet_sizes[i] = std::max(d.alphabet_sizes[i], atom.labels[i] + 1);
        d.support.push_back(std::move(atom));
    }
    dist_validate(d);
    return d;
}

inline EntropyVector read_entropy_vector(std::istream& in) {
    int line_no = 0;
    EntropyVector H;
    H.n = detail::parse_header(in, line_no);
    const unsigned full = (1u << H.n) - 1;
    H.values.assign(full, 0.0);
    std::vector<bool> seen(full, false);
    std::string line;
    while (detail::next_payload_line(in, line_no, line)) {
        std::istringstream is(line);
        unsigned mask = 0;
        double value = 0.0;
        if (!(is >> mask >> value))
            throw ParseError(line_no, "expected '<bitmask> <value>'");
        if (mask < 1 || mask > full)
            throw ParseError(line_no, "bitmask out of range");
        if (seen[mask - 1]) throw ParseError(line_no, "duplicate bitmask");
        seen[mask - 1] = true;
        H.values[mask - 1] = value;
    }
    for (unsigned mask = 1; mask <= full; ++mask)
        if (!seen[mask - 1])
            throw ParseError(line_no, "missing entry for bitmask " +
                                          std::to_string(mask));
    return H;
}

inline void write_entropy_vector(std::ostream& out, const EntropyVector& H) {
    out << "n " << H.n << '\n';
    for (unsigned mask = 1; mask < (1u << H.n); ++mask)
        out << mask << ' ' << format_value(H.at(mask)) << '\n';
}

}  // namespace aef
