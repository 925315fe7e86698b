#include "talex/repsearch.hpp"

#include <algorithm>
#include <cstdlib>

namespace talex {

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b, std::uint32_t p) {
    ModMatrix r{a.n, std::vector<std::uint32_t>(static_cast<size_t>(a.n) * a.n, 0)};
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            std::uint64_t aik = a.at(i, k);
            if (!aik) continue;
            for (int j = 0; j < a.n; ++j)
                r.at(i, j) = static_cast<std::uint32_t>((r.at(i, j) + aik * b.at(k, j)) % p);
        }
    return r;
}

std::uint32_t mod_det(ModMatrix m, std::uint32_t p) {
    std::uint64_t det = 1;
    for (int c = 0; c < m.n; ++c) {
        int pivot = -1;
        for (int r = c; r < m.n; ++r)
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != c) {
            for (int j = 0; j < m.n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            det = det * (p - 1) % p;
        }
        std::uint64_t pv = m.at(c, c);
        det = det * pv % p;
        Zp inv = Zp{m.at(c, c), p}.inverse();
        for (int r = c + 1; r < m.n; ++r) {
            std::uint64_t f = std::uint64_t(m.at(r, c)) * inv.v % p;
            if (!f) continue;
            for (int j = c; j < m.n; ++j) {
                std::uint64_t sub = f * m.at(c, j) % p;
                m.at(r, j) = static_cast<std::uint32_t>((m.at(r, j) + p - sub) % p);
            }
        }
    }
    return static_cast<std::uint32_t>(det);
}

std::optional<ModMatrix> mod_inverse(ModMatrix m, std::uint32_t p) {
    int n = m.n;
    ModMatrix inv = ModMatrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(c, j));
                std::swap(inv.at(pivot, j), inv.at(c, j));
            }
        std::uint64_t f = Zp{m.at(c, c), p}.inverse().v;
        for (int j = 0; j < n; ++j) {
            m.at(c, j) = static_cast<std::uint32_t>(m.at(c, j) * f % p);
            inv.at(c, j) = static_cast<std::uint32_t>(inv.at(c, j) * f % p);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m.at(r, c) == 0) continue;
            std::uint64_t g = m.at(r, c);
            for (int j = 0; j < n; ++j) {
                m.at(r, j) = static_cast<std::uint32_t>((m.at(r, j) + p * g - g * m.at(c, j) % p) % p);
                inv.at(r, j) =
                    static_cast<std::uint32_t>((inv.at(r, j) + p * g - g * inv.at(c, j) % p) % p);
            }
        }
    }
    return inv;
}

namespace {

struct ScanContext {
    const AugmentedSystem* sys;
    int N;
    std::uint32_t p;
    int gens;
    int digits; // gens * N * N
};

std::vector<ModMatrix> decode(const ScanContext& ctx, std::uint64_t index) {
    std::vector<ModMatrix> mats(static_cast<size_t>(ctx.gens),
                                ModMatrix{ctx.N, std::vector<std::uint32_t>(
                                                     static_cast<size_t>(ctx.N) * ctx.N, 0)});
    for (int pos = ctx.digits - 1; pos >= 0; --pos) {
        std::uint32_t digit = static_cast<std::uint32_t>(index % ctx.p);
        index /= ctx.p;
        mats[static_cast<size_t>(pos) / (ctx.N * ctx.N)]
            .e[static_cast<size_t>(pos) % (ctx.N * ctx.N)] = digit;
    }
    return mats;
}

/// Relator check with lazily computed inverses; nullopt when some image is
/// singular or a relator survives.
std::optional<SearchHit> check_candidate(const ScanContext& ctx, std::uint64_t index) {
    std::vector<ModMatrix> mats = decode(ctx, index);
    std::vector<std::optional<ModMatrix>> invs(mats.size());
    for (const ModMatrix& m : mats)
        if (mod_det(m, ctx.p) == 0) return std::nullopt;
    for (const Word& r : ctx.sys->presentation.relators) {
        ModMatrix acc = ModMatrix::identity(ctx.N);
        for (const Letter& l : r.letters()) {
            const ModMatrix* base;
            if (l.exp > 0) {
                base = &mats[static_cast<size_t>(l.gen)];
            } else {
                auto& slot = invs[static_cast<size_t>(l.gen)];
                if (!slot) slot = mod_inverse(mats[static_cast<size_t>(l.gen)], ctx.p);
                base = &*slot;
            }
            for (int i = 0, c = std::abs(l.exp); i < c; ++i) acc = mod_mul(acc, *base, ctx.p);
        }
        if (!acc.is_identity()) return std::nullopt;
    }
    bool abelian = true;
    for (size_t i = 0; i + 1 < mats.size() && abelian; ++i)
        for (size_t j = i + 1; j < mats.size() && abelian; ++j)
            if (mod_mul(mats[i], mats[j], ctx.p) != mod_mul(mats[j], mats[i], ctx.p))
                abelian = false;
    SearchHit hit;
    hit.index = index;
    hit.images = std::move(mats);
    hit.abelian_image = abelian;
    return hit;
}

constexpr std::uint64_t kBlock = 8192;

SearchOutcome scan(const SearchSpec& spec, bool parallel) {
    if (!spec.system) throw ValidationError("search needs a system");
    if (spec.dimension < 1) throw ValidationError("search dimension must be positive");
    if (!is_prime(spec.modulus)) throw ValidationError("search modulus must be prime");

    ScanContext ctx;
    ctx.sys = spec.system;
    ctx.N = spec.dimension;
    ctx.p = spec.modulus;
    ctx.gens = spec.system->presentation.generator_count();
    ctx.digits = ctx.gens * ctx.N * ctx.N;

    bool space_exact = true;
    std::uint64_t space = 1;
    for (int i = 0; i < ctx.digits; ++i) {
        if (space > UINT64_MAX / ctx.p) {
            space = UINT64_MAX;
            space_exact = false;
            break;
        }
        space *= ctx.p;
    }

    SearchOutcome out;
    std::uint64_t idx = 0;
    while (idx < space && out.candidates_examined < spec.max_candidates &&
           out.hits.size() < spec.max_solutions) {
        std::uint64_t hi = std::min({space, idx + kBlock,
                                     idx + (spec.max_candidates - out.candidates_examined)});
        std::vector<SearchHit> block_hits;
        if (parallel) {
#ifdef _OPENMP
            std::vector<std::vector<SearchHit>> per_thread;
#pragma omp parallel
            {
#pragma omp single
                per_thread.resize(static_cast<size_t>(omp_get_num_threads()));
                auto& mine = per_thread[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
                for (long long i = static_cast<long long>(idx); i < static_cast<long long>(hi);
                     ++i) {
                    auto hit = check_candidate(ctx, static_cast<std::uint64_t>(i));
                    if (hit && !(spec.require_nonabelian && hit->abelian_image))
                        mine.push_back(std::move(*hit));
                }
            }
            for (auto& v : per_thread)
                for (auto& h : v) block_hits.push_back(std::move(h));
            std::sort(block_hits.begin(), block_hits.end(),
                      [](const SearchHit& a, const SearchHit& b) { return a.index < b.index; });
#else
            parallel = false;
#endif
        }
        if (!parallel) {
            for (std::uint64_t i = idx; i < hi; ++i) {
                auto hit = check_candidate(ctx, i);
                if (hit && !(spec.require_nonabelian && hit->abelian_image))
                    block_hits.push_back(std::move(*hit));
            }
        }
        for (auto& h : block_hits) {
            if (out.hits.size() >= spec.max_solutions) break;
            out.hits.push_back(std::move(h));
        }
        out.candidates_examined += hi - idx;
        idx = hi;
    }

    out.exhausted = space_exact && idx == space;
    if (out.exhausted)
        out.stop = SearchStop::exhausted;
    else if (out.hits.size() >= spec.max_solutions)
        out.stop = SearchStop::solution_limit;
    else
        out.stop = SearchStop::candidate_cap;

    if (spec.system->n() >= 1) {
        for (SearchHit& h : out.hits) {
            Representation<Zp> rep = hit_representation(*spec.system, spec.modulus, h);
            h.D = alexander_lin(*spec.system, rep);
        }
    }
    return out;
}

} // namespace

SearchOutcome search(const SearchSpec& spec) { return scan(spec, true); }
SearchOutcome search_serial(const SearchSpec& spec) { return scan(spec, false); }

Representation<Zp> hit_representation(const AugmentedSystem& sys, std::uint32_t p,
                                      const SearchHit& hit) {
    std::vector<std::string> t_names;
    if (sys.epsilon.d == 1) {
        t_names = {"t"};
    } else {
        for (int i = 1; i <= sys.epsilon.d; ++i) t_names.push_back("t" + std::to_string(i));
    }
    VarsPtr vars = VariableSet::make(std::move(t_names));
    Zp::Ring ring{p};
    int N = hit.images.front().n;
    std::vector<LambdaMatrix<Zp>> images;
    for (const ModMatrix& m : hit.images) {
        LambdaMatrix<Zp> lm(static_cast<size_t>(N), static_cast<size_t>(N), vars, ring);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                lm.at(static_cast<size_t>(i), static_cast<size_t>(j)) =
                    LaurentPoly<Zp>::constant(vars, ring, Zp{m.at(i, j), p});
        images.push_back(std::move(lm));
    }
    return make_representation<Zp>(*sys.presentation.alphabet, N, std::move(images));
}

namespace {

std::uint32_t cofactor_det(const ModMatrix& m, std::uint32_t p) {
    if (m.n == 1) return m.at(0, 0);
    std::uint64_t det = 0;
    for (int j = 0; j < m.n; ++j) {
        if (m.at(0, j) == 0) continue;
        ModMatrix minor{m.n - 1,
                        std::vector<std::uint32_t>(static_cast<size_t>(m.n - 1) * (m.n - 1), 0)};
        for (int r = 1; r < m.n; ++r) {
            int cc = 0;
            for (int c = 0; c < m.n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        std::uint64_t term = std::uint64_t(m.at(0, j)) * cofactor_det(minor, p) % p;
        det = j % 2 == 0 ? (det + term) % p : (det + p - term) % p;
    }
    return static_cast<std::uint32_t>(det);
}

} // namespace

bool revalidate(const AugmentedSystem& sys, std::uint32_t p, const SearchHit& hit) {
    if (hit.images.size() != static_cast<size_t>(sys.presentation.generator_count())) return false;
    std::vector<ModMatrix> invs;
    for (const ModMatrix& m : hit.images) {
        if (cofactor_det(m, p) == 0) return false;
        auto inv = mod_inverse(m, p);
        if (!inv || !mod_mul(m, *inv, p).is_identity()) return false;
        invs.push_back(std::move(*inv));
    }
    for (const Word& r : sys.presentation.relators) {
        ModMatrix acc = ModMatrix::identity(hit.images.front().n);
        r.for_each_letter([&](int g, int sign) {
            acc = mod_mul(acc, sign > 0 ? hit.images[static_cast<size_t>(g)]
                                        : invs[static_cast<size_t>(g)],
                          p);
        });
        if (!acc.is_identity()) return false;
    }
    return true;
}

} // namespace talex
