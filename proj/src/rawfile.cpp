#include "talex/rawfile.hpp"

#include <cctype>
#include <sstream>

#include "talex/errors.hpp"

namespace talex {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

const RawSection* RawFile::find(const std::string& header) const {
    for (const auto& s : sections)
        if (s.header == header) return &s;
    return nullptr;
}

RawFile scan_raw(std::istream& in) {
    RawFile file;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::string text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '[') {
            if (text.back() != ']') throw ParseError(line_no, "unterminated section header");
            std::string header = trim(text.substr(1, text.size() - 2));
            if (header.empty()) throw ParseError(line_no, "empty section header");
            file.sections.push_back({header, line_no, {}});
            continue;
        }
        if (file.sections.empty())
            throw ParseError(line_no, "content before the first section header");
        file.sections.back().lines.push_back({line_no, text});
    }
    return file;
}

RawFile scan_raw_text(const std::string& text) {
    std::istringstream in(text);
    return scan_raw(in);
}

bool split_key_value(const std::string& line, std::string& key, std::string& value) {
    size_t colon = line.find(':');
    if (colon == std::string::npos) return false;
    std::string k = trim(line.substr(0, colon));
    if (k.empty() || k.find(' ') != std::string::npos) return false;
    for (char c : k)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    key = std::move(k);
    value = trim(line.substr(colon + 1));
    return true;
}

} // namespace talex
