#include "talex/words.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

namespace talex {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!valid_name(n)) throw ValidationError("bad generator name '" + n + "'");
        if (!seen.insert(n).second) throw ValidationError("duplicate generator name '" + n + "'");
    }
}

int Alphabet::index_of(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

bool Alphabet::valid_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

void Word::append_run(int gen, int exp) {
    if (exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == gen) {
        letters_.back().exp += exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back({gen, exp});
}

Word Word::reduce(const std::vector<Letter>& raw) {
    Word w;
    for (const Letter& l : raw) w.append_run(l.gen, l.exp);
    return w;
}

Word Word::generator(int gen, int exp) {
    Word w;
    w.append_run(gen, exp);
    return w;
}

size_t Word::length() const {
    size_t n = 0;
    for (const Letter& l : letters_) n += static_cast<size_t>(std::abs(l.exp));
    return n;
}

Word Word::operator*(const Word& o) const {
    Word w = *this;
    for (const Letter& l : o.letters_) w.append_run(l.gen, l.exp);
    return w;
}

Word Word::inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->gen, -it->exp});
    return w;
}

Word Word::pow(int k) const {
    Word r;
    Word base = k < 0 ? inverse() : *this;
    for (int i = 0, n = std::abs(k); i < n; ++i) r = r * base;
    return r;
}

long long Word::exponent_sum(int gen) const {
    long long s = 0;
    for (const Letter& l : letters_)
        if (l.gen == gen) s += l.exp;
    return s;
}

int Word::max_generator() const {
    int m = -1;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
}

std::string to_string(const Word& w, const Alphabet& a) {
    if (w.is_identity()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const Letter& l : w.letters()) {
        if (!first) out << ' ';
        first = false;
        out << a.name(l.gen);
        if (l.exp != 1) out << '^' << l.exp;
    }
    return out.str();
}

Word parse_word(std::string_view text, const Alphabet& a) {
    std::vector<Letter> raw;
    std::istringstream in{std::string(text)};
    std::string factor;
    while (in >> factor) {
        std::string name = factor;
        int exp = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
            name = factor.substr(0, caret);
            std::string e = factor.substr(caret + 1);
            const char* b = e.data();
            auto [p, ec] = std::from_chars(b, b + e.size(), exp);
            if (ec != std::errc() || p != b + e.size())
                throw ParseError("bad exponent in factor '" + factor + "'");
            if (exp == 0) throw ParseError("zero exponent in factor '" + factor + "'");
        }
        int gen = a.index_of(name);
        if (gen < 0) throw ParseError("unknown generator '" + name + "'");
        raw.push_back({gen, exp});
    }
    return Word::reduce(raw);
}

GroupRingElement GroupRingElement::from_word(AlphabetPtr alphabet, const Word& w, long long coeff) {
    GroupRingElement e(std::move(alphabet));
    e.add_term(w, coeff);
    return e;
}

long long GroupRingElement::coeff_of(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

GroupRingElement& GroupRingElement::add_term(const Word& w, long long coeff) {
    if (coeff == 0) return *this;
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

void GroupRingElement::require_same_alphabet(const GroupRingElement& o) const {
    if (!(*alphabet_ == *o.alphabet_)) throw MismatchError("group ring alphabet mismatch");
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    require_same_alphabet(o);
    GroupRingElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    require_same_alphabet(o);
    GroupRingElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    require_same_alphabet(o);
    GroupRingElement r(alphabet_);
    for (const auto& [u, cu] : terms_)
        for (const auto& [v, cv] : o.terms_) r.add_term(u * v, cu * cv);
    return r;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement r(alphabet_);
    for (const auto& [w, c] : terms_) r.add_term(w, -c);
    return r;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
    return *alphabet_ == *o.alphabet_ && terms_ == o.terms_;
}

std::string to_string(const GroupRingElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        long long mag = std::abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string ws = to_string(w, *e.alphabet());
        if (mag != 1 || w.is_identity()) {
            out << mag;
            if (!w.is_identity()) out << '*' << ws;
        } else {
            out << ws;
        }
    }
    return out.str();
}

} // namespace talex
