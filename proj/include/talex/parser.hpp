#pragma once

// The sectioned text format for augmented group systems:
//
//   [group]                      [ring]
//   generators: x, a             domain: integers | rationals
//   relators:                            | cyclotomic M | zmod P
//     x^2 a x^-2 a^2 x a^-1 ...  parameters: alpha
//     u = v                      [rep NAME]
//   distinguished: x             dimension: N
//   [epsilon]                    x: [0, alpha; alpha, 0]
//   d: 1                         a: [w, 0; 0, w^2]
//   x: 1
//   a: 0
//
// Words are whitespace-separated factors `name` or `name^k`; relator
// equations u = v are converted to u * v^-1. Matrix entries are sums of
// products of integer/rational atoms, `w` (the cyclotomic generator), and
// declared parameter names, each with optional integer exponents.

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "talex/cyclotomic.hpp"
#include "talex/presentation.hpp"
#include "talex/rawfile.hpp"
#include "talex/rep.hpp"

namespace talex {

struct RingSpec {
    enum class Domain { integers, rationals, cyclotomic, zmod };
    Domain domain = Domain::integers;
    unsigned arg = 0; // cyclotomic order m or modulus p
    std::vector<std::string> parameters;
    int line_no = 0;

    std::string describe() const;
};

struct SystemFile {
    std::string source; // file name or "<text>"
    AugmentedSystem system;
    RingSpec ring;
    std::vector<std::pair<std::string, RawSection>> rep_sections; // declaration order

    const RawSection* rep_named(const std::string& name) const;
};

SystemFile parse_system_file(const RawFile& raw, const std::string& source);
SystemFile parse_system_text(const std::string& text);
SystemFile load_system_file(const std::string& path);

/// Variable universe implied by the file: t (d = 1) or t1..td, then the
/// declared parameters.
VarsPtr file_variables(const SystemFile& f);

/// Relator text: either a word or an equation `u = v` (becomes u * v^-1).
Word parse_relator(const std::string& text, const Alphabet& alphabet, int line_no);

/// Group + epsilon + ring as canonical text that reparses to an equal system.
std::string serialize_system(const SystemFile& f);

namespace detail {

struct EntryToken {
    enum class Kind { integer, ident, op } kind;
    long long number = 0;
    std::string text;
};

std::vector<EntryToken> tokenize_entry(const std::string& text, int line_no);

/// Index of `name` among the parameter variables of `vars`, or -1.
int param_index(const VariableSet& vars, const std::string& name);

} // namespace detail

/// Parses one matrix entry over the coefficient domain C extended by the
/// declared parameter variables.
template <CoefficientDomain C>
LaurentPoly<C> parse_entry(const std::string& text, int line_no, const VarsPtr& vars,
                           const typename C::Ring& ring) {
    using Poly = LaurentPoly<C>;
    auto tokens = detail::tokenize_entry(text, line_no);
    size_t pos = 0;

    auto peek_op = [&](char c) {
        return pos < tokens.size() && tokens[pos].kind == detail::EntryToken::Kind::op &&
               tokens[pos].text[0] == c;
    };
    auto expect_int = [&](const char* what) {
        if (pos >= tokens.size() || tokens[pos].kind != detail::EntryToken::Kind::integer)
            throw ParseError(line_no, std::string("expected ") + what + " in entry '" + text + "'");
        return tokens[pos++].number;
    };

    auto parse_atom = [&]() -> Poly {
        if (pos >= tokens.size())
            throw ParseError(line_no, "unexpected end of entry '" + text + "'");
        const auto& tok = tokens[pos];
        if (tok.kind == detail::EntryToken::Kind::integer) {
            ++pos;
            C value = ring.from_int(tok.number);
            if (peek_op('/')) {
                ++pos;
                long long den = expect_int("denominator");
                auto inv = ring.one().try_divide(ring.from_int(den));
                if (!inv)
                    throw ParseError(line_no, "division by zero in entry '" + text + "'");
                C q = value * *inv;
                auto back = ring.from_int(den) * q;
                if (!(back == value))
                    throw ParseError(line_no, "coefficient " + std::to_string(tok.number) + "/" +
                                                  std::to_string(den) +
                                                  " does not exist in this ring");
                value = q;
            }
            return Poly::constant(vars, ring, value);
        }
        if (tok.kind == detail::EntryToken::Kind::ident) {
            ++pos;
            int exp = 1;
            if (peek_op('^')) {
                ++pos;
                exp = static_cast<int>(expect_int("exponent"));
            }
            if (tok.text == "w") {
                if constexpr (std::same_as<C, Cyclo>) {
                    C z = ring.generator();
                    C base = exp >= 0 ? z : *ring.one().try_divide(z);
                    C acc = ring.one();
                    for (int i = 0, n = std::abs(exp); i < n; ++i) acc = acc * base;
                    return Poly::constant(vars, ring, acc);
                } else {
                    throw ParseError(line_no, "'w' is only available in cyclotomic rings");
                }
            }
            int pi = detail::param_index(*vars, tok.text);
            if (pi < 0)
                throw ParseError(line_no, "unknown symbol '" + tok.text + "' in entry '" + text +
                                              "' (not a declared parameter)");
            size_t var = vars->t_count() + static_cast<size_t>(pi);
            return Poly::variable(vars, ring, var, exp);
        }
        throw ParseError(line_no, "unexpected '" + tok.text + "' in entry '" + text + "'");
    };

    auto parse_term = [&]() -> Poly {
        Poly p = parse_atom();
        while (peek_op('*')) {
            ++pos;
            p = p * parse_atom();
        }
        return p;
    };

    bool negate = false;
    if (peek_op('-')) {
        ++pos;
        negate = true;
    } else if (peek_op('+')) {
        ++pos;
    }
    Poly acc = parse_term();
    if (negate) acc = -acc;
    while (pos < tokens.size()) {
        if (peek_op('+')) {
            ++pos;
            acc = acc + parse_term();
        } else if (peek_op('-')) {
            ++pos;
            acc = acc - parse_term();
        } else {
            throw ParseError(line_no, "unexpected '" + tokens[pos].text + "' in entry '" + text + "'");
        }
    }
    return acc;
}

/// Parses a matrix literal `[a, b; c, d]`.
template <CoefficientDomain C>
LambdaMatrix<C> parse_matrix(const std::string& text, int line_no, const VarsPtr& vars,
                             const typename C::Ring& ring) {
    std::string body = trim(text);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError(line_no, "matrix must be bracketed: " + text);
    body = body.substr(1, body.size() - 2);
    std::vector<std::vector<std::string>> rows;
    size_t start = 0;
    while (true) {
        size_t semi = body.find(';', start);
        std::string row = semi == std::string::npos ? body.substr(start)
                                                    : body.substr(start, semi - start);
        std::vector<std::string> entries;
        size_t es = 0;
        while (true) {
            size_t comma = row.find(',', es);
            entries.push_back(trim(comma == std::string::npos ? row.substr(es)
                                                              : row.substr(es, comma - es)));
            if (comma == std::string::npos) break;
            es = comma + 1;
        }
        rows.push_back(std::move(entries));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != rows.front().size())
            throw ParseError(line_no, "ragged matrix rows in " + text);
    LambdaMatrix<C> m(n, rows.front().size(), vars, ring);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = parse_entry<C>(rows[i][j], line_no, vars, ring);
    return m;
}

/// Parses one `[rep NAME]` section against the system's alphabet.
template <CoefficientDomain C>
Representation<C> parse_representation(const RawSection& section, const Alphabet& alphabet,
                                       const VarsPtr& vars, const typename C::Ring& ring) {
    int dimension = 0;
    std::vector<std::optional<LambdaMatrix<C>>> images(static_cast<size_t>(alphabet.size()));
    for (const auto& line : section.lines) {
        std::string key, value;
        if (!split_key_value(line.text, key, value))
            throw ParseError(line.line_no, "expected 'key: value' in representation section");
        if (key == "dimension") {
            dimension = std::stoi(value);
            continue;
        }
        int g = alphabet.index_of(key);
        if (g < 0)
            throw ParseError(line.line_no, "unknown generator '" + key + "' in representation");
        images[static_cast<size_t>(g)] = parse_matrix<C>(value, line.line_no, vars, ring);
    }
    if (dimension <= 0) throw ParseError(section.line_no, "representation needs 'dimension: N'");
    std::vector<LambdaMatrix<C>> mats;
    for (int g = 0; g < alphabet.size(); ++g) {
        if (!images[static_cast<size_t>(g)])
            throw ParseError(section.line_no,
                             "representation missing the image of '" + alphabet.name(g) + "'");
        mats.push_back(std::move(*images[static_cast<size_t>(g)]));
    }
    return make_representation<C>(alphabet, dimension, std::move(mats));
}

} // namespace talex
