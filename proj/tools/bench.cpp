// Benchmark comparing the OpenMP kernels against their serial references:
// the minor-GCD enumeration and the finite-field representation scan.

#include <chrono>
#include <iostream>
#include <random>

#include "talex/matrices.hpp"
#include "talex/parser.hpp"
#include "talex/repsearch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace talex;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

LambdaMatrix<ZZ> random_matrix(size_t rows, size_t cols, std::mt19937& rng) {
    auto vars = VariableSet::make({"t"});
    ZZ::Ring ring;
    LambdaMatrix<ZZ> m(rows, cols, vars, ring);
    std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 3), count(1, 3);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            LaurentPoly<ZZ> p(vars, ring);
            for (int k = 0, n = count(rng); k < n; ++k)
                p.accumulate({expo(rng)}, ring.from_int(coeff(rng)));
            m.at(i, j) = p;
        }
    return m;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both columns run the serial path\n";
#endif

    std::mt19937 rng(7);
    {
        auto m = random_matrix(12, 5, rng);
        LaurentPoly<ZZ> gs(m.vars(), m.ring()), gp(m.vars(), m.ring());
        double serial = time_ms([&] { gs = minors_gcd_serial(m, 5); });
        double par = time_ms([&] { gp = minors_gcd(m, 5); });
        std::cout << "minors_gcd 12x5, k=5 (" << 792 << " minors): serial " << serial
                  << " ms, parallel " << par << " ms, equal " << (gs == gp ? "yes" : "NO")
                  << "\n";
    }
    {
        std::string text = "[group]\n"
                           "generators: x, a\n"
                           "relators:\n"
                           "  x^2 a x^-2 x a^-1 x^-1 a\n"
                           "distinguished: x\n"
                           "[epsilon]\n"
                           "d: 1\n"
                           "x: 1\n"
                           "a: 0\n";
        SystemFile f = parse_system_text(text);
        SearchSpec spec;
        spec.system = &f.system;
        spec.dimension = 2;
        spec.modulus = 5;
        spec.max_solutions = 50;
        spec.max_candidates = 500000;
        SearchOutcome so, po;
        double serial = time_ms([&] { so = search_serial(spec); });
        double par = time_ms([&] { po = search(spec); });
        bool same = so.hits.size() == po.hits.size() &&
                    so.candidates_examined == po.candidates_examined;
        for (size_t i = 0; same && i < so.hits.size(); ++i)
            same = so.hits[i].index == po.hits[i].index;
        std::cout << "search dim 2 mod 5 (" << so.candidates_examined
                  << " candidates): serial " << serial << " ms, parallel " << par
                  << " ms, equal " << (same ? "yes" : "NO") << "\n";
    }
    return 0;
}
