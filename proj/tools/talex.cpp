// Command-line front end: validate input files, compute the twisted
// invariants, and hunt for representations over prime fields.

#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "talex/parser.hpp"
#include "talex/repsearch.hpp"
#include "talex/twisted.hpp"

namespace {

using namespace talex;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitSearchCap = 3;

typename Cyclo::Ring cyclo_ring(unsigned m) {
    return Cyclo::Ring{std::make_shared<CycloRing>(m)};
}

template <typename Fn>
int with_domain(const SystemFile& f, Fn&& fn) {
    switch (f.ring.domain) {
    case RingSpec::Domain::integers: return fn(ZZ::Ring{});
    case RingSpec::Domain::rationals: return fn(QQ::Ring{});
    case RingSpec::Domain::cyclotomic: return fn(cyclo_ring(f.ring.arg));
    case RingSpec::Domain::zmod: return fn(Zp::Ring{f.ring.arg});
    }
    return kExitParse;
}

std::string pick_rep_name(const SystemFile& f, const std::string& requested) {
    if (!requested.empty()) {
        if (!f.rep_named(requested))
            throw ValidationError("no representation named '" + requested + "' in " + f.source);
        return requested;
    }
    if (f.rep_sections.empty())
        throw ValidationError("no representation block in " + f.source);
    if (f.rep_sections.size() > 1)
        throw ValidationError("several representations in " + f.source + "; pick one with --rep");
    return f.rep_sections.front().first;
}

struct FiberRequest {
    bool wanted = false;
    int rank = 0; // 0: default to the presentation's n
};

FiberRequest parse_fiber_arg(const std::string& arg) {
    FiberRequest r;
    if (arg.empty()) return r;
    r.wanted = true;
    if (arg == "auto" || arg == "default") return r;
    if (arg.rfind("n=", 0) == 0) {
        r.rank = std::stoi(arg.substr(2));
        if (r.rank < 1) throw ValidationError("--fiber rank must be positive");
        return r;
    }
    throw ValidationError("--fiber expects n=<rank> (or 'auto'), got '" + arg + "'");
}

std::string describe_system(const SystemFile& f) {
    const auto& sys = f.system;
    const auto& a = *sys.presentation.alphabet;
    std::ostringstream out;
    out << "generators";
    for (int g = 0; g < a.size(); ++g) out << (g ? ", " : " ") << a.name(g);
    out << " | " << sys.m() << (sys.m() == 1 ? " relator" : " relators");
    out << " | distinguished " << a.name(sys.distinguished);
    out << " | d = " << sys.epsilon.d << " | n = " << sys.n() << ", m = " << sys.m();
    return out.str();
}

int cmd_validate(const std::string& path) {
    SystemFile f = load_system_file(path);
    bool ok = true;

    std::cout << "file: " << f.source << "\n";
    std::cout << "system: " << describe_system(f) << "\n";
    std::cout << "ring: " << f.ring.describe();
    if (!f.ring.parameters.empty()) {
        std::cout << " with parameters";
        for (const auto& p : f.ring.parameters) std::cout << ' ' << p;
    }
    std::cout << "\n";

    EpsilonReport eps = validate_epsilon(f.system.presentation, f.system.epsilon);
    std::cout << "epsilon: " << (eps.homomorphism ? "homomorphism ok" : "NOT a homomorphism")
              << (eps.surjective ? ", surjective" : ", not surjective (warning)") << "\n";
    for (const auto& note : eps.notes) std::cout << "  " << note << "\n";
    ok = ok && eps.homomorphism;

    VarsPtr vars = file_variables(f);
    for (const auto& [name, section] : f.rep_sections) {
        int rc = with_domain(f, [&](auto ring) {
            using C = typename decltype(ring)::Element;
            try {
                Representation<C> rep = parse_representation<C>(section, *f.system.presentation.alphabet,
                                                                vars, ring);
                RepReport rr = validate_representation(f.system, rep);
                if (rr.ok) {
                    std::cout << "rep " << name << ": ok (dimension " << rep.dimension << ")\n";
                    return kExitOk;
                }
                std::cout << "rep " << name << ": FAILED\n";
                for (const auto& msg : rr.failures) std::cout << "  " << msg << "\n";
                return kExitValidation;
            } catch (const ValidationError& e) {
                std::cout << "rep " << name << ": FAILED\n  " << e.what() << "\n";
                return kExitValidation;
            }
        });
        ok = ok && rc == kExitOk;
    }

    std::cout << (ok ? "validation passed" : "validation FAILED") << "\n";
    return ok ? kExitOk : kExitValidation;
}

int cmd_compute(const std::string& path, const std::string& rep_request,
                const std::string& fiber_arg, bool as_json) {
    SystemFile f = load_system_file(path);
    FiberRequest fiber = parse_fiber_arg(fiber_arg);
    std::string rep_name = pick_rep_name(f, rep_request);
    VarsPtr vars = file_variables(f);

    return with_domain(f, [&](auto ring) {
        using C = typename decltype(ring)::Element;
        auto t0 = std::chrono::steady_clock::now();
        Representation<C> rep = parse_representation<C>(*f.rep_named(rep_name),
                                                        *f.system.presentation.alphabet, vars, ring);
        RepReport rr = validate_representation(f.system, rep);
        if (!rr.ok) {
            std::cerr << "representation '" << rep_name << "' is not well-defined:\n";
            for (const auto& msg : rr.failures) std::cerr << "  " << msg << "\n";
            return kExitValidation;
        }

        TwistedResult<C> res = alexander_lin(f.system, rep);
        WadaResult<C> w = wada(f.system, rep, res);
        std::optional<ObstructionReport> obs;
        if (fiber.wanted) {
            int rank = fiber.rank > 0 ? fiber.rank : f.system.n();
            obs = fiber_check(res, rank);
        }
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        if (as_json) {
            json rec;
            rec["file"] = f.source;
            rec["rep"] = rep_name;
            rec["domain"] = f.ring.describe();
            rec["d"] = f.system.epsilon.d;
            rec["n"] = res.n;
            rec["m"] = res.m;
            rec["N"] = res.N;
            rec["D"] = render(res.D);
            rec["unit_note"] = res.unit_note;
            json jw;
            jw["numerator"] = render(w.numerator);
            jw["denominator"] = render(w.denominator);
            jw["denominator_zero"] = w.denominator_zero;
            jw["is_polynomial"] = w.is_polynomial;
            if (w.value_if_unit)
                jw["value_if_unit"] = *w.value_if_unit;
            else
                jw["value_if_unit"] = nullptr;
            rec["wada"] = jw;
            if (obs) {
                json jo;
                jo["expected_degree"] = obs->expected_degree;
                jo["actual_span"] = obs->actual_span;
                jo["leading_coeff"] = obs->leading_coeff;
                jo["trailing_coeff"] = obs->trailing_coeff;
                jo["degree_ok"] = obs->degree_ok;
                jo["leading_unit"] = obs->leading_unit;
                jo["trailing_unit"] = obs->trailing_unit;
                jo["verdict"] = obs->pass ? "pass" : "fail";
                jo["reasons"] = obs->reasons;
                rec["fiber"] = jo;
            } else {
                rec["fiber"] = nullptr;
            }
            rec["timings"] = {{"compute_ms", ms}};
            std::cout << rec.dump(2) << "\n";
            return kExitOk;
        }

        std::cout << "file: " << f.source << "\n";
        std::cout << "rep: " << rep_name << " (dimension " << res.N << " over "
                  << f.ring.describe() << ")\n";
        std::cout << "system: " << describe_system(f) << "\n";
        std::cout << "D = " << render(res.D) << "\n";
        std::cout << "  note: " << res.unit_note << "\n";
        if (w.denominator_zero) {
            std::cout << "W: undefined, det(I - Phi(x)) = 0\n";
        } else if (w.value_if_unit) {
            std::cout << "W = " << *w.value_if_unit << "\n";
        } else {
            std::cout << "W = (" << render(w.numerator) << ") / (" << render(w.denominator)
                      << ")" << (w.is_polynomial ? "  [polynomial]" : "") << "\n";
        }
        if (obs) {
            int rank = fiber.rank > 0 ? fiber.rank : f.system.n();
            std::cout << "fiber check (n = " << rank << "): " << (obs->pass ? "PASS" : "FAIL")
                      << "\n";
            std::cout << "  degree span " << obs->actual_span << " (expected "
                      << obs->expected_degree << "), leading " << obs->leading_coeff
                      << ", trailing " << obs->trailing_coeff << "\n";
            for (const auto& r : obs->reasons) std::cout << "  - " << r << "\n";
        }
        return kExitOk;
    });
}

std::string format_mod_matrix(const ModMatrix& m) {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < m.n; ++i) {
        if (i) out << "; ";
        for (int j = 0; j < m.n; ++j) {
            if (j) out << ", ";
            out << m.at(i, j);
        }
    }
    out << ']';
    return out.str();
}

int cmd_search(const std::string& path, int dim, std::uint32_t mod, std::uint64_t limit,
               std::uint64_t candidates, bool nonabelian, bool serial) {
    SystemFile f = load_system_file(path);
    SearchSpec spec;
    spec.system = &f.system;
    spec.dimension = dim;
    spec.modulus = mod;
    spec.max_solutions = limit;
    spec.max_candidates = candidates;
    spec.require_nonabelian = nonabelian;

    SearchOutcome out = serial ? search_serial(spec) : search(spec);

    const auto& a = *f.system.presentation.alphabet;
    std::cout << "# search: dimension " << dim << " modulo " << mod
              << (nonabelian ? ", nonabelian images only" : "") << "\n";
    std::cout << "# blocks below feed back into compute with '[ring] domain: zmod " << mod
              << "'\n";
    for (size_t i = 0; i < out.hits.size(); ++i) {
        const SearchHit& h = out.hits[i];
        std::cout << "\n[rep found_" << i << "]\n";
        std::cout << "dimension: " << dim << "\n";
        for (int g = 0; g < a.size(); ++g)
            std::cout << a.name(g) << ": " << format_mod_matrix(h.images[static_cast<size_t>(g)])
                      << "\n";
        std::cout << "# abelian image: " << (h.abelian_image ? "yes" : "no") << "\n";
        if (h.D) std::cout << "# D = " << render(h.D->D) << "\n";
    }
    std::cout << "\nsummary: " << out.hits.size() << (out.hits.size() == 1 ? " hit, " : " hits, ")
              << out.candidates_examined << " candidates examined, "
              << (out.exhausted
                      ? "exhaustive"
                      : (out.stop == SearchStop::solution_limit ? "stopped at solution limit"
                                                                : "stopped at candidate cap"))
              << "\n";
    if (out.stop == SearchStop::candidate_cap && out.hits.empty()) return kExitSearchCap;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted Alexander invariants of finitely presented groups"};
    app.require_subcommand(1);

    std::string path, rep_name, fiber_arg;
    bool as_json = false;

    auto* validate = app.add_subcommand("validate", "check a system file and its representations");
    validate->add_option("file", path, "system file")->required();

    auto* compute = app.add_subcommand("compute", "Alexander-Lin polynomial and Wada invariant");
    compute->add_option("file", path, "system file")->required();
    compute->add_option("--rep", rep_name, "representation name (default: the only one)");
    compute->add_option("--fiber", fiber_arg,
                        "fibering obstruction; n=<rank> or 'auto' for the presentation's n")
        ->expected(0, 1)
        ->default_str("")
        ->type_name("[n=K]");
    compute->add_flag("--json", as_json, "machine-readable output");

    int dim = 1;
    std::uint32_t mod = 2;
    std::uint64_t limit = 16, candidates = 1'000'000;
    bool nonabelian = false, serial = false;
    auto* search_cmd = app.add_subcommand("search", "brute-force representations over Z/p");
    search_cmd->add_option("file", path, "system file")->required();
    search_cmd->add_option("--dim", dim, "matrix dimension N")->required();
    search_cmd->add_option("--mod", mod, "prime modulus p")->required();
    search_cmd->add_option("--limit", limit, "stop after this many hits");
    search_cmd->add_option("--candidates", candidates, "candidate cap");
    search_cmd->add_flag("--nonabelian", nonabelian, "keep only non-commuting images");
    search_cmd->add_flag("--serial", serial, "use the serial reference scan");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(path);
        if (compute->parsed()) {
            // CLI11 stores "" for a bare --fiber; map it to the default rank
            if (compute->count("--fiber") && fiber_arg.empty()) fiber_arg = "auto";
            return cmd_compute(path, rep_name, fiber_arg, as_json);
        }
        if (search_cmd->parsed())
            return cmd_search(path, dim, mod, limit, candidates, nonabelian, serial);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const MismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
