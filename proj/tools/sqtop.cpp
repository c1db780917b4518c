// Command-line front end: cohomology, cup products, Steenrod squares,
// face rings, moment-angle invariants, polyhedral joins and the
// enumeration scan, with stable line-oriented output and --json.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqtop/cochain.hpp"
#include "sqtop/complex.hpp"
#include "sqtop/enumeration.hpp"
#include "sqtop/io.hpp"
#include "sqtop/moment_angle.hpp"
#include "sqtop/polyhedral_join.hpp"
#include "sqtop/stanley_reisner.hpp"
#include "sqtop/steenrod.hpp"

using namespace sqtop;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

std::string cochain_line(const Cochain& c) {
    const auto supp = c.support();
    if (supp.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < supp.size(); ++i) {
        if (i)
            out += '+';
        out += simplex_to_string(supp[i]);
    }
    return out;
}

json cochain_json(const Cochain& c) {
    json j;
    j["degree"] = c.degree();
    auto& terms = j["simplices"] = json::array();
    for (VertexMask f : c.support())
        terms.push_back(mask_vertices(f));
    return j;
}

json profile_json(const SteenrodProfile& p) {
    json out = json::array();
    for (const auto& e : p)
        out.push_back({e.n, e.degree, e.rank});
    return out;
}

void print_profile(const SteenrodProfile& p) {
    for (const auto& e : p)
        std::cout << "sq " << e.n << " " << e.degree << " -> " << e.degree + e.n
                  << " rank " << e.rank << "\n";
}

void print_matrix(const BitMatrix& m) {
    std::cout << "matrix " << m.rows() << " x " << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r)
        std::cout << m.row(r).to_string() << "\n";
}

json matrix_json(const BitMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m.get(r, c) ? 1 : 0);
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

int default_vertex_cap() {
    if (const char* env = std::getenv("SQTOP_VERTEX_CAP"))
        return std::max(1, std::atoi(env));
    return 16;
}

// A complex argument inside a join spec file: a name/path string or an
// inline {"vertices", "facets"} object.
SimplicialComplex complex_from_json_value(const json& v) {
    if (v.is_string())
        return resolve_complex(v.get<std::string>());
    if (v.is_object())
        return parse_complex_json(v.dump());
    throw ParseError("complex value must be a string or an object");
}

LabelingMode labeling_from_flag(const std::string& name) {
    if (name == "paper")
        return LabelingMode::PaperSubstitution;
    return LabelingMode::Block;
}

struct CommonState {
    bool json_output = false;
};

int cmd_info(const std::string& arg, const CommonState& st) {
    const auto k = resolve_complex(arg);
    if (st.json_output) {
        json j = json::parse(complex_to_json(k));
        j["dimension"] = k.dimension();
        j["f_vector"] = k.f_vector();
        j["euler"] = k.euler_characteristic();
        j["connected"] = k.is_connected();
        j["ghosts"] = k.ghost_vertices();
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    std::cout << "vertices " << k.vertex_count() << "\n";
    std::cout << "dimension " << k.dimension() << "\n";
    std::cout << "f-vector";
    for (long f : k.f_vector())
        std::cout << ' ' << f;
    std::cout << "\n";
    std::cout << "euler " << k.euler_characteristic() << "\n";
    std::cout << "connected " << (k.is_connected() ? "yes" : "no") << "\n";
    for (VertexMask f : k.facets()) {
        std::cout << "facet";
        for (int v : mask_vertices(f))
            std::cout << ' ' << v;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_cohomology(const std::string& arg, bool unreduced, bool with_basis,
                   const CommonState& st) {
    const auto k = resolve_complex(arg);
    const CohomologyBasis basis(k, !unreduced);
    const auto b = basis.betti_map();
    if (st.json_output) {
        json j;
        j["reduced"] = !unreduced;
        auto& bj = j["betti"] = json::object();
        for (const auto& [deg, dim] : b)
            bj[std::to_string(deg)] = dim;
        if (with_basis) {
            auto& reps = j["representatives"] = json::array();
            for (int deg = basis.min_degree(); deg <= basis.max_degree(); ++deg)
                for (const auto& r : basis.representatives(deg))
                    reps.push_back(cochain_json(r));
        }
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    for (const auto& [deg, dim] : b)
        std::cout << "betti " << deg << " " << dim << "\n";
    if (with_basis)
        for (int deg = basis.min_degree(); deg <= basis.max_degree(); ++deg) {
            const auto reps = basis.representatives(deg);
            for (std::size_t i = 0; i < reps.size(); ++i)
                std::cout << "rep " << deg << " " << i << " " << cochain_line(reps[i])
                          << "\n";
        }
    return kExitOk;
}

int cmd_cup(const std::string& arg, const std::string& afile, const std::string& bfile,
            const CommonState& st) {
    const auto k = resolve_complex(arg);
    const auto a = parse_cochain_text(k, read_file(afile));
    const auto b = parse_cochain_text(k, read_file(bfile));
    const auto prod = cup(a, b);
    if (st.json_output)
        std::cout << cochain_json(prod).dump() << "\n";
    else
        std::cout << cochain_line(prod) << "\n";
    return kExitOk;
}

int cmd_sq(const std::string& arg, int n, const std::string& cochain_file, bool special,
           bool matrix_mode, int degree, bool profile_mode, const CommonState& st) {
    const auto k = resolve_complex(arg);
    if (profile_mode) {
        const auto p = sq_profile(k);
        if (st.json_output)
            std::cout << profile_json(p).dump() << "\n";
        else
            print_profile(p);
        return kExitOk;
    }
    if (matrix_mode) {
        const CohomologyBasis basis(k, true);
        const auto sm = sq_matrix(basis, n, degree);
        if (st.json_output)
            std::cout << matrix_json(sm.matrix).dump() << "\n";
        else
            print_matrix(sm.matrix);
        return kExitOk;
    }
    if (cochain_file.empty())
        throw ParseError("sq needs --cochain, --matrix or --profile");
    const auto c = parse_cochain_text(k, read_file(cochain_file));
    if (special && n != 1)
        throw ParseError("--special applies to n = 1 only");
    const auto image = special ? sq1_cochain_special(c) : sq_cochain(n, c);
    if (st.json_output)
        std::cout << cochain_json(image).dump() << "\n";
    else
        std::cout << cochain_line(image) << "\n";
    return kExitOk;
}

int cmd_sr(const std::string& arg, int d, int max_degree, int sq_n, int sq_degree,
           bool verify, const CommonState& st) {
    const auto k = resolve_complex(arg);
    if (verify) {
        const bool ok = verify_a_ideal(k, d, max_degree);
        if (st.json_output)
            std::cout << json{{"a_ideal_closed", ok}}.dump() << "\n";
        else
            std::cout << "a-ideal closed up to degree " << max_degree << ": "
                      << (ok ? "yes" : "NO") << "\n";
        return ok ? kExitOk : kExitInvalid;
    }
    if (sq_n >= 0) {
        const auto m = sq_graded_matrix(k, sq_n, sq_degree, d);
        if (st.json_output) {
            json j = matrix_json(m);
            j["source"] = json::array();
            j["target"] = json::array();
            for (const auto& mono : monomial_basis(k, sq_degree / d))
                j["source"].push_back(monomial_to_string(mono));
            if ((sq_degree + sq_n) % d == 0)
                for (const auto& mono : monomial_basis(k, (sq_degree + sq_n) / d))
                    j["target"].push_back(monomial_to_string(mono));
            std::cout << j.dump() << "\n";
        } else {
            print_matrix(m);
        }
        return kExitOk;
    }
    if (st.json_output) {
        json dims = json::object();
        for (int topo = 0; topo <= max_degree; ++topo)
            if (topo % d == 0)
                dims[std::to_string(topo)] = monomial_basis(k, topo / d).size();
        std::cout << json{{"gen_degree", d}, {"dims", dims}}.dump() << "\n";
        return kExitOk;
    }
    for (int topo = 0; topo <= max_degree; ++topo)
        if (topo % d == 0)
            std::cout << "dim " << topo << " " << monomial_basis(k, topo / d).size()
                      << "\n";
    return kExitOk;
}

int cmd_hochster(const std::string& arg, int cap, int jobs, const CommonState& st) {
    const auto k = resolve_complex(arg);
    MomentAngleOptions opts;
    opts.vertex_cap = cap;
    opts.jobs = jobs;
    const auto table = hochster_table(k, opts);
    if (st.json_output) {
        json entries = json::array();
        for (const auto& e : table.entries) {
            json b = json::object();
            for (const auto& [deg, dim] : e.reduced_betti)
                b[std::to_string(deg)] = dim;
            entries.push_back({{"subset", mask_vertices(e.subset)}, {"betti", b}});
        }
        std::cout << json{{"entries", entries}}.dump() << "\n";
        return kExitOk;
    }
    for (const auto& e : table.entries) {
        std::cout << "subset " << simplex_to_string(e.subset) << " betti";
        if (e.reduced_betti.empty())
            std::cout << " -";
        for (const auto& [deg, dim] : e.reduced_betti)
            std::cout << ' ' << deg << ':' << dim;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_za(const std::string& arg, bool with_profile, int cap, int jobs,
           const CommonState& st) {
    const auto k = resolve_complex(arg);
    MomentAngleOptions opts;
    opts.vertex_cap = cap;
    opts.jobs = jobs;
    const auto b = za_betti(k, opts);
    if (st.json_output) {
        json j;
        auto& bj = j["betti"] = json::object();
        for (const auto& [deg, dim] : b)
            bj[std::to_string(deg)] = dim;
        if (with_profile)
            j["profile"] = profile_json(za_sq_profile(k, opts).aggregate);
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    for (const auto& [deg, dim] : b)
        std::cout << "betti " << deg << " " << dim << "\n";
    if (with_profile)
        print_profile(za_sq_profile(k, opts).aggregate);
    return kExitOk;
}

int cmd_join(const std::string& spec_file, const std::string& labeling,
             const CommonState& st) {
    json spec;
    try {
        spec = json::parse(read_file(spec_file));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad join spec: ") + e.what());
    }
    if (!spec.contains("K") || !spec.contains("pairs"))
        throw ParseError("join spec needs fields 'K' and 'pairs'");
    const auto k = complex_from_json_value(spec.at("K"));
    std::vector<ComplexPair> pairs;
    for (const auto& p : spec.at("pairs")) {
        if (!p.contains("big") || !p.contains("sub"))
            throw ParseError("each pair needs 'big' and 'sub'");
        pairs.push_back({complex_from_json_value(p.at("big")),
                         complex_from_json_value(p.at("sub"))});
    }
    const auto result = polyhedral_join(k, pairs, labeling_from_flag(labeling));
    std::cout << (st.json_output ? complex_to_json(result) + "\n"
                                 : complex_to_text(result));
    return kExitOk;
}

int cmd_substitute(const std::string& arg, const std::string& list,
                   const std::string& labeling, const CommonState& st) {
    const auto k = resolve_complex(arg);
    const auto subs = resolve_complex_list(list);
    const auto result = substitution(k, subs, labeling_from_flag(labeling));
    std::cout << (st.json_output ? complex_to_json(result) + "\n"
                                 : complex_to_text(result));
    return kExitOk;
}

int cmd_extend(const std::string& arg, const std::string& list,
               const std::string& cochain_file, int sq_n, const CommonState& st) {
    const auto k = resolve_complex(arg);
    const auto subs = resolve_complex_list(list);
    const auto x = parse_cochain_text(k, read_file(cochain_file));
    const auto y = extend_cocycle_substitution(k, subs, x);
    if (st.json_output) {
        json j;
        j["cochain"] = cochain_json(y);
        if (sq_n >= 0)
            j["sq"] = cochain_json(sq_cochain(sq_n, y));
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    std::cout << cochain_line(y) << "\n";
    if (sq_n >= 0)
        std::cout << "sq" << sq_n << " " << cochain_line(sq_cochain(sq_n, y)) << "\n";
    return kExitOk;
}

int cmd_scan(int max_vertices, bool full_sq, int jobs, bool allow_six,
             const CommonState& st) {
    EnumerationOptions opts;
    opts.allow_six = allow_six;
    opts.jobs = jobs;
    const auto start = std::chrono::steady_clock::now();
    const auto result =
        full_sq ? scan_sq_full(max_vertices, opts) : scan_sq1(max_vertices, opts);
    const auto elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "elapsed " << elapsed << "s\n";
    const char* what = full_sq ? "Sq^n" : "Sq^1";
    if (st.json_output) {
        json hits = json::array();
        for (const auto& h : result.hits) {
            json facets = json::array();
            for (VertexMask f : h.complex.facets())
                facets.push_back(mask_vertices(f));
            hits.push_back({{"facets", facets}, {"profile", profile_json(h.entries)}});
        }
        std::cout << json{{"scanned", result.scanned}, {"hits", hits}}.dump() << "\n";
        return kExitOk;
    }
    std::cout << "scanned " << result.scanned << " complexes on " << max_vertices
              << " vertices\n";
    std::cout << result.hits.size() << " complexes with nontrivial " << what << "\n";
    for (const auto& h : result.hits) {
        std::cout << "hit";
        for (VertexMask f : h.complex.facets())
            std::cout << ' ' << simplex_to_string(f);
        std::cout << " profile";
        for (const auto& e : h.entries)
            std::cout << " (" << e.n << "," << e.degree << "," << e.rank << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-2 cohomology, Steenrod squares and polyhedral products "
                 "of finite simplicial complexes"};
    app.require_subcommand(1);
    CommonState st;
    app.add_flag("--json", st.json_output, "machine-readable output");

    std::string complex_arg, afile, bfile, cochain_file, subs_list, spec_file;
    std::string labeling = "paper";
    int n = 1, degree = 1, d = 2, max_degree = 8, sq_n = -1, sq_degree = 2;
    int cap = default_vertex_cap();
    int jobs = 1, max_vertices = 5;
    bool unreduced = false, with_basis = false, special = false, matrix_mode = false,
         profile_mode = false, verify = false, full_sq = false, allow_six = false;

    auto* info = app.add_subcommand("info", "combinatorial facts about a complex");
    info->add_option("complex", complex_arg)->required();

    auto* coh = app.add_subcommand("cohomology", "Betti numbers and bases");
    coh->add_option("complex", complex_arg)->required();
    coh->add_flag("--unreduced", unreduced);
    coh->add_flag("--basis", with_basis);

    auto* cupc = app.add_subcommand("cup", "Alexander-Whitney cup product");
    cupc->add_option("complex", complex_arg)->required();
    cupc->add_option("--a", afile)->required();
    cupc->add_option("--b", bfile)->required();

    auto* sq = app.add_subcommand("sq", "Steenrod squares on cochains and cohomology");
    sq->add_option("complex", complex_arg)->required();
    sq->add_option("--n", n);
    sq->add_option("--cochain", cochain_file);
    sq->add_flag("--special", special, "use the specialized Sq^1 formula");
    sq->add_flag("--matrix", matrix_mode);
    sq->add_option("--degree", degree, "source degree for --matrix");
    sq->add_flag("--profile", profile_mode);

    auto* sr = app.add_subcommand("sr", "Stanley-Reisner ring data");
    sr->add_option("complex", complex_arg)->required();
    sr->add_option("--d", d, "generator degree (1 or 2)");
    sr->add_option("--max-degree", max_degree);
    sr->add_option("--sq", sq_n, "print the Sq^n graded matrix");
    sr->add_option("--degree", sq_degree, "topological source degree for --sq");
    sr->add_flag("--verify-ideal", verify);

    auto* za = app.add_subcommand("za", "moment-angle complex invariants");
    za->add_option("complex", complex_arg)->required();
    za->add_flag("--profile", profile_mode);
    za->add_option("--max-vertices", cap);
    za->add_option("--jobs", jobs);

    auto* hoch = app.add_subcommand("hochster", "the Hochster table");
    hoch->add_option("complex", complex_arg)->required();
    hoch->add_option("--max-vertices", cap);
    hoch->add_option("--jobs", jobs);

    auto* joinc = app.add_subcommand("join", "polyhedral join from a spec file");
    joinc->add_option("spec", spec_file)->required();
    joinc->add_option("--labeling", labeling)->check(CLI::IsMember({"paper", "block"}));

    auto* subst = app.add_subcommand("substitute", "substitution complex");
    subst->add_option("complex", complex_arg)->required();
    subst->add_option("substituents", subs_list)->required();
    subst->add_option("--labeling", labeling)->check(CLI::IsMember({"paper", "block"}));

    auto* ext = app.add_subcommand("extend-cocycle",
                                   "propagate a cocycle to a substitution complex");
    ext->add_option("complex", complex_arg)->required();
    ext->add_option("substituents", subs_list)->required();
    ext->add_option("--cochain", cochain_file)->required();
    ext->add_option("--sq", sq_n, "also print Sq^n of the extension");

    auto* scan = app.add_subcommand("scan", "enumerate small complexes and scan for Sq");
    scan->add_option("--max-vertices", max_vertices)->required();
    scan->add_flag("--full-sq", full_sq);
    scan->add_option("--jobs", jobs);
    scan->add_flag("--allow-six", allow_six, "permit the long n=6 run");

    // --json may appear after the subcommand arguments.
    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (info->parsed())
            return cmd_info(complex_arg, st);
        if (coh->parsed())
            return cmd_cohomology(complex_arg, unreduced, with_basis, st);
        if (cupc->parsed())
            return cmd_cup(complex_arg, afile, bfile, st);
        if (sq->parsed())
            return cmd_sq(complex_arg, n, cochain_file, special, matrix_mode, degree,
                          profile_mode, st);
        if (sr->parsed())
            return cmd_sr(complex_arg, d, max_degree, sq_n, sq_degree, verify, st);
        if (za->parsed())
            return cmd_za(complex_arg, profile_mode, cap, jobs, st);
        if (hoch->parsed())
            return cmd_hochster(complex_arg, cap, jobs, st);
        if (joinc->parsed())
            return cmd_join(spec_file, labeling, st);
        if (subst->parsed())
            return cmd_substitute(complex_arg, subs_list, labeling, st);
        if (ext->parsed())
            return cmd_extend(complex_arg, subs_list, cochain_file, sq_n, st);
        if (scan->parsed())
            return cmd_scan(max_vertices, full_sq, jobs, allow_six, st);
    } catch (const VertexCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitUsage;
}
