#include "talex/parser.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "talex/zmod.hpp"

namespace talex {

std::string RingSpec::describe() const {
    switch (domain) {
    case Domain::integers: return "integers";
    case Domain::rationals: return "rationals";
    case Domain::cyclotomic: return "cyclotomic " + std::to_string(arg);
    case Domain::zmod: return "zmod " + std::to_string(arg);
    }
    return "?";
}

const RawSection* SystemFile::rep_named(const std::string& name) const {
    for (const auto& [n, sec] : rep_sections)
        if (n == name) return &sec;
    return nullptr;
}

Word parse_relator(const std::string& text, const Alphabet& alphabet, int line_no) {
    try {
        size_t eq = text.find('=');
        if (eq == std::string::npos) return parse_word(text, alphabet);
        Word lhs = parse_word(text.substr(0, eq), alphabet);
        Word rhs = parse_word(text.substr(eq + 1), alphabet);
        return lhs * rhs.inverse();
    } catch (const ParseError& e) {
        throw ParseError(line_no, e.what());
    }
}

namespace {

std::vector<std::string> split_names(const std::string& value) {
    std::vector<std::string> names;
    std::string cleaned = value;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    std::string name;
    while (in >> name) names.push_back(name);
    return names;
}

std::vector<long long> parse_int_list(const std::string& value, int line_no) {
    std::string cleaned = value;
    for (char& c : cleaned)
        if (c == ',' || c == '[' || c == ']') c = ' ';
    std::vector<long long> out;
    std::istringstream in(cleaned);
    std::string tok;
    while (in >> tok) {
        long long v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw ParseError(line_no, "expected an integer, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

long long parse_int(const std::string& value, int line_no) {
    auto list = parse_int_list(value, line_no);
    if (list.size() != 1) throw ParseError(line_no, "expected a single integer");
    return list[0];
}

struct GroupSection {
    AlphabetPtr alphabet;
    std::vector<Word> relators;
    int distinguished = 0;
};

GroupSection parse_group(const RawSection& sec) {
    GroupSection g;
    std::vector<std::string> relator_texts;
    std::vector<int> relator_lines;
    std::string distinguished_name;
    int distinguished_line = sec.line_no;
    bool in_relators = false;

    for (const auto& line : sec.lines) {
        std::string key, value;
        if (split_key_value(line.text, key, value)) {
            in_relators = false;
            if (key == "generators") {
                g.alphabet = std::make_shared<Alphabet>(split_names(value));
            } else if (key == "relators") {
                in_relators = true;
                if (!value.empty()) {
                    relator_texts.push_back(value);
                    relator_lines.push_back(line.line_no);
                }
            } else if (key == "distinguished") {
                distinguished_name = trim(value);
                distinguished_line = line.line_no;
            } else {
                throw ParseError(line.line_no, "unknown key '" + key + "' in [group]");
            }
        } else {
            if (!in_relators)
                throw ParseError(line.line_no, "unexpected line in [group]: " + line.text);
            relator_texts.push_back(line.text);
            relator_lines.push_back(line.line_no);
        }
    }
    if (!g.alphabet) throw ParseError(sec.line_no, "[group] needs 'generators:'");
    for (size_t i = 0; i < relator_texts.size(); ++i)
        g.relators.push_back(parse_relator(relator_texts[i], *g.alphabet, relator_lines[i]));
    if (distinguished_name.empty()) {
        g.distinguished = 0; // default: the first generator
    } else {
        g.distinguished = g.alphabet->index_of(distinguished_name);
        if (g.distinguished < 0)
            throw ParseError(distinguished_line,
                             "distinguished generator '" + distinguished_name + "' is not declared");
    }
    return g;
}

EpsilonMap parse_epsilon(const RawSection& sec, const Alphabet& alphabet) {
    EpsilonMap e;
    e.d = 1;
    std::vector<std::optional<std::vector<long long>>> images(
        static_cast<size_t>(alphabet.size()));
    for (const auto& line : sec.lines) {
        std::string key, value;
        if (!split_key_value(line.text, key, value))
            throw ParseError(line.line_no, "expected 'key: value' in [epsilon]");
        if (key == "d") {
            e.d = static_cast<int>(parse_int(value, line.line_no));
            if (e.d < 1) throw ParseError(line.line_no, "d must be positive");
            continue;
        }
        int g = alphabet.index_of(key);
        if (g < 0) throw ParseError(line.line_no, "unknown generator '" + key + "' in [epsilon]");
        images[static_cast<size_t>(g)] = parse_int_list(value, line.line_no);
    }
    for (int g = 0; g < alphabet.size(); ++g) {
        if (!images[static_cast<size_t>(g)])
            throw ParseError(sec.line_no, "[epsilon] missing the image of '" + alphabet.name(g) + "'");
        if (static_cast<int>(images[static_cast<size_t>(g)]->size()) != e.d)
            throw ParseError(sec.line_no, "epsilon image of '" + alphabet.name(g) + "' must have " +
                                              std::to_string(e.d) + " entries");
        e.images.push_back(std::move(*images[static_cast<size_t>(g)]));
    }
    return e;
}

RingSpec parse_ring(const RawSection* sec) {
    RingSpec r;
    if (!sec) return r; // default: integers, no parameters
    r.line_no = sec->line_no;
    for (const auto& line : sec->lines) {
        std::string key, value;
        if (!split_key_value(line.text, key, value))
            throw ParseError(line.line_no, "expected 'key: value' in [ring]");
        if (key == "domain") {
            std::istringstream in(value);
            std::string name;
            in >> name;
            if (name == "integers") {
                r.domain = RingSpec::Domain::integers;
            } else if (name == "rationals") {
                r.domain = RingSpec::Domain::rationals;
            } else if (name == "cyclotomic" || name == "zmod") {
                long long a = 0;
                if (!(in >> a) || a < 1)
                    throw ParseError(line.line_no, name + " needs a positive argument");
                r.domain = name == "cyclotomic" ? RingSpec::Domain::cyclotomic
                                                : RingSpec::Domain::zmod;
                r.arg = static_cast<unsigned>(a);
                if (r.domain == RingSpec::Domain::zmod && !is_prime(r.arg))
                    throw ParseError(line.line_no, "zmod modulus must be prime");
            } else {
                throw ParseError(line.line_no, "unknown domain '" + name + "'");
            }
        } else if (key == "parameters") {
            r.parameters = split_names(value);
        } else {
            throw ParseError(line.line_no, "unknown key '" + key + "' in [ring]");
        }
    }
    return r;
}

} // namespace

SystemFile parse_system_file(const RawFile& raw, const std::string& source) {
    const RawSection* group = raw.find("group");
    if (!group) throw ParseError(1, "missing [group] section");
    const RawSection* eps = raw.find("epsilon");
    if (!eps) throw ParseError(1, "missing [epsilon] section");

    GroupSection g = parse_group(*group);
    EpsilonMap e = parse_epsilon(*eps, *g.alphabet);

    for (const Word& r : g.relators)
        if (r.max_generator() >= g.alphabet->size())
            throw ParseError(group->line_no, "relator uses an undeclared generator");

    SystemFile f;
    f.source = source;
    f.ring = parse_ring(raw.find("ring"));
    f.system = make_system(Presentation{g.alphabet, std::move(g.relators)}, std::move(e),
                           g.distinguished);

    for (const auto& sec : raw.sections) {
        if (sec.header.rfind("rep", 0) == 0 && sec.header.size() > 3 &&
            std::isspace(static_cast<unsigned char>(sec.header[3]))) {
            std::string name = trim(sec.header.substr(4));
            if (name.empty()) throw ParseError(sec.line_no, "[rep] needs a name");
            if (f.rep_named(name))
                throw ParseError(sec.line_no, "duplicate representation name '" + name + "'");
            f.rep_sections.emplace_back(name, sec);
        } else if (sec.header != "group" && sec.header != "epsilon" && sec.header != "ring") {
            throw ParseError(sec.line_no, "unknown section [" + sec.header + "]");
        }
    }
    return f;
}

SystemFile parse_system_text(const std::string& text) {
    return parse_system_file(scan_raw_text(text), "<text>");
}

SystemFile load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    RawFile raw = scan_raw(in);
    return parse_system_file(raw, path);
}

VarsPtr file_variables(const SystemFile& f) {
    std::vector<std::string> t;
    if (f.system.epsilon.d == 1) {
        t = {"t"};
    } else {
        for (int i = 1; i <= f.system.epsilon.d; ++i) t.push_back("t" + std::to_string(i));
    }
    return VariableSet::make(std::move(t), f.ring.parameters);
}

namespace detail {

std::vector<EntryToken> tokenize_entry(const std::string& text, int line_no) {
    std::vector<EntryToken> out;
    size_t i = 0;
    auto prev_kind = [&]() -> const EntryToken* { return out.empty() ? nullptr : &out.back(); };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])) &&
             (prev_kind() == nullptr || (prev_kind()->kind == EntryToken::Kind::op &&
                                         prev_kind()->text != ")")))) {
            size_t j = i + (c == '-' ? 1 : 0);
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            long long v = 0;
            auto [p, ec] = std::from_chars(text.data() + i, text.data() + j, v);
            if (ec != std::errc() || p != text.data() + j)
                throw ParseError(line_no, "bad integer in entry '" + text + "'");
            out.push_back({EntryToken::Kind::integer, v, text.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_'))
                ++j;
            out.push_back({EntryToken::Kind::ident, 0, text.substr(i, j - i)});
            i = j;
            continue;
        }
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
            out.push_back({EntryToken::Kind::op, 0, std::string(1, c)});
            ++i;
            continue;
        }
        throw ParseError(line_no, std::string("unexpected character '") + c + "' in entry '" +
                                      text + "'");
    }
    return out;
}

int param_index(const VariableSet& vars, const std::string& name) {
    for (size_t i = 0; i < vars.param_names.size(); ++i)
        if (vars.param_names[i] == name) return static_cast<int>(i);
    return -1;
}

} // namespace detail

std::string serialize_system(const SystemFile& f) {
    std::ostringstream out;
    const auto& sys = f.system;
    const auto& a = *sys.presentation.alphabet;
    out << "[group]\n";
    out << "generators:";
    for (int g = 0; g < a.size(); ++g) out << (g ? ", " : " ") << a.name(g);
    out << "\nrelators:\n";
    for (const Word& r : sys.presentation.relators) out << "  " << to_string(r, a) << "\n";
    out << "distinguished: " << a.name(sys.distinguished) << "\n\n";
    out << "[epsilon]\n";
    out << "d: " << sys.epsilon.d << "\n";
    for (int g = 0; g < a.size(); ++g) {
        out << a.name(g) << ":";
        for (long long v : sys.epsilon.images[static_cast<size_t>(g)]) out << ' ' << v;
        out << "\n";
    }
    out << "\n[ring]\n";
    out << "domain: " << f.ring.describe() << "\n";
    if (!f.ring.parameters.empty()) {
        out << "parameters:";
        for (size_t i = 0; i < f.ring.parameters.size(); ++i)
            out << (i ? ", " : " ") << f.ring.parameters[i];
        out << "\n";
    }
    return out.str();
}

} // namespace talex
