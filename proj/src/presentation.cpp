#include "talex/presentation.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace talex {

std::vector<long long> EpsilonMap::image_of(const Word& w) const {
    std::vector<long long> sum(static_cast<size_t>(d), 0);
    for (const Letter& l : w.letters()) {
        const auto& img = images.at(static_cast<size_t>(l.gen));
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += img[i] * l.exp;
    }
    return sum;
}

namespace {

using boost::multiprecision::cpp_int;

cpp_int int_det(const std::vector<std::vector<cpp_int>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    cpp_int det = 0;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<cpp_int>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<cpp_int> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        cpp_int term = m[0][j] * int_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

/// gcd of all d x d minors of the d x g image matrix; the image lattice has
/// full index 1 exactly when this is 1.
cpp_int minor_gcd(const EpsilonMap& e, int gens) {
    size_t d = static_cast<size_t>(e.d);
    if (static_cast<size_t>(gens) < d) return 0;
    std::vector<size_t> pick(d);
    std::iota(pick.begin(), pick.end(), 0);
    cpp_int g = 0;
    while (true) {
        std::vector<std::vector<cpp_int>> sub(d, std::vector<cpp_int>(d));
        for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < d; ++c) sub[r][c] = e.images[pick[c]][r];
        g = boost::multiprecision::gcd(g, int_det(sub));
        if (g == 1) return g;
        // next combination of column indices
        size_t i = d;
        while (i > 0) {
            --i;
            if (pick[i] + (d - i) < static_cast<size_t>(gens)) {
                ++pick[i];
                for (size_t j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return g;
        }
    }
}

std::string vec_str(const std::vector<long long>& v) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << ')';
    return out.str();
}

} // namespace

EpsilonReport validate_epsilon(const Presentation& p, const EpsilonMap& e) {
    if (e.d < 1) throw ValidationError("epsilon target rank must be positive");
    if (static_cast<int>(e.images.size()) != p.generator_count())
        throw ValidationError("epsilon must be defined on every generator");
    for (const auto& img : e.images)
        if (static_cast<int>(img.size()) != e.d)
            throw ValidationError("epsilon image has wrong length");

    EpsilonReport rep;
    rep.homomorphism = true;
    for (size_t i = 0; i < p.relators.size(); ++i) {
        auto img = e.image_of(p.relators[i]);
        bool zero = std::all_of(img.begin(), img.end(), [](long long x) { return x == 0; });
        if (!zero) {
            rep.homomorphism = false;
            rep.notes.push_back("relator " + std::to_string(i + 1) +
                                " has nonzero epsilon image " + vec_str(img));
        }
        rep.relator_images.push_back(std::move(img));
    }
    rep.surjective = minor_gcd(e, p.generator_count()) == 1;
    if (!rep.surjective)
        rep.notes.push_back("warning: generator images span a proper sublattice of Z^d");
    return rep;
}

std::vector<int> AugmentedSystem::working_generators() const {
    std::vector<int> gens;
    for (int g = 0; g < presentation.generator_count(); ++g)
        if (g != distinguished) gens.push_back(g);
    return gens;
}

AugmentedSystem make_system(Presentation p, EpsilonMap e, int distinguished) {
    if (distinguished < 0 || distinguished >= p.generator_count())
        throw ValidationError("distinguished element must be a declared generator");
    for (Word& r : p.relators) r = Word::reduce(r.letters());
    for (const Word& r : p.relators)
        if (r.max_generator() >= p.generator_count())
            throw ValidationError("relator uses an undeclared generator");

    EpsilonReport rep = validate_epsilon(p, e);
    if (!rep.homomorphism) {
        std::string msg = "epsilon is not a homomorphism";
        for (const auto& n : rep.notes) msg += "; " + n;
        throw ValidationError(msg);
    }
    const auto& ex = e.images[static_cast<size_t>(distinguished)];
    if (std::all_of(ex.begin(), ex.end(), [](long long v) { return v == 0; }))
        throw ValidationError("epsilon(x) must be nonzero for the distinguished generator");

    int n = p.generator_count() - 1;
    int m = p.relator_count();
    if (m < n)
        throw ValidationError("presentation has fewer relators (" + std::to_string(m) +
                              ") than working generators (" + std::to_string(n) +
                              "); add trivial relators explicitly if intended");

    return AugmentedSystem{std::move(p), std::move(e), distinguished};
}

} // namespace talex
