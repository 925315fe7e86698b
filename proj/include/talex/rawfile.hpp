#pragma once

// First-pass scan of the sectioned input format: comment stripping,
// section splitting, key/value and continuation lines, all tagged with
// source line numbers for diagnostics.

#include <istream>
#include <string>
#include <vector>

namespace talex {

struct RawLine {
    int line_no = 0;
    std::string text; // trimmed, comments removed, nonempty
};

struct RawSection {
    std::string header; // e.g. "group", "epsilon", "ring", "rep NAME"
    int line_no = 0;
    std::vector<RawLine> lines;
};

struct RawFile {
    std::vector<RawSection> sections;

    const RawSection* find(const std::string& header) const;
};

RawFile scan_raw(std::istream& in);
RawFile scan_raw_text(const std::string& text);

/// Splits "key: value" (value may be empty). Returns false when the line
/// carries no key (a continuation line such as a relator word).
bool split_key_value(const std::string& line, std::string& key, std::string& value);

std::string trim(const std::string& s);

} // namespace talex
