#include "talex/fox.hpp"

namespace talex {

GroupRingElement fox_derivative(const Word& w, int gen, const AlphabetPtr& alphabet) {
    if (gen < 0 || gen >= alphabet->size())
        throw MismatchError("fox_derivative: generator index out of range");
    GroupRingElement d(alphabet);
    Word prefix;
    w.for_each_letter([&](int g, int sign) {
        if (g == gen) {
            if (sign > 0)
                d.add_term(prefix, 1);
            else
                d.add_term(prefix * Word::generator(g, -1), -1);
        }
        prefix = prefix * Word::generator(g, sign);
    });
    return d;
}

} // namespace talex
