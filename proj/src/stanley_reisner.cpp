#include "sqtop/stanley_reisner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace sqtop {

VertexMask monomial_support(const Monomial& mono) {
    VertexMask s = 0;
    for (std::size_t i = 0; i < mono.size(); ++i)
        if (mono[i] > 0)
            s |= vertex_bit(static_cast<int>(i) + 1);
    return s;
}

int monomial_degree(const Monomial& mono) {
    return std::accumulate(mono.begin(), mono.end(), 0);
}

std::string monomial_to_string(const Monomial& mono) {
    std::string s;
    for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += "x" + std::to_string(i + 1);
        if (mono[i] > 1)
            s += "^" + std::to_string(mono[i]);
    }
    return s.empty() ? "1" : s;
}

namespace {

bool monomial_before(const Monomial& a, const Monomial& b) { return a > b; }

}  // namespace

SRElement sr_canonical(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end(), monomial_before);
    std::vector<Monomial> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back() == t)
            out.pop_back();  // F2 cancellation
        else
            out.push_back(std::move(t));
    }
    return SRElement{std::move(out)};
}

SRElement sr_add(const SRElement& a, const SRElement& b) {
    std::vector<Monomial> all = a.terms;
    all.insert(all.end(), b.terms.begin(), b.terms.end());
    return sr_canonical(std::move(all));
}

std::vector<Monomial> monomial_basis(const SimplicialComplex& k, int degree) {
    if (degree < 0)
        throw std::invalid_argument("monomial_basis: degree must be >= 0");
    const int m = k.vertex_count();
    std::vector<Monomial> out;
    if (degree == 0) {
        out.push_back(Monomial(static_cast<std::size_t>(m), 0));
        return out;
    }
    // For each nonempty face, distribute the degree with every exponent >= 1.
    for (int j = 0; j <= k.dimension(); ++j) {
        for (VertexMask f : k.faces(j)) {
            const auto vs = mask_vertices(f);
            const int t = static_cast<int>(vs.size());
            if (t > degree)
                continue;
            Monomial mono(static_cast<std::size_t>(m), 0);
            std::function<void(int, int)> go = [&](int pos, int remaining) {
                if (pos == t - 1) {
                    mono[static_cast<std::size_t>(vs[static_cast<std::size_t>(pos)] - 1)] =
                        remaining;
                    out.push_back(mono);
                    return;
                }
                for (int e = 1; e <= remaining - (t - 1 - pos); ++e) {
                    mono[static_cast<std::size_t>(vs[static_cast<std::size_t>(pos)] - 1)] = e;
                    go(pos + 1, remaining - e);
                }
            };
            go(0, degree);
        }
    }
    std::sort(out.begin(), out.end(), monomial_before);
    return out;
}

SRElement sr_reduce(const SimplicialComplex& k, const SRElement& e) {
    std::vector<Monomial> kept;
    for (const auto& t : e.terms)
        if (k.has_face(monomial_support(t)))
            kept.push_back(t);
    return sr_canonical(std::move(kept));
}

namespace {

// Lucas: C(a,b) is odd iff the bits of b lie inside those of a.
bool binom_odd(int a, int b) { return (a & b) == b; }

}  // namespace

std::map<int, std::vector<Monomial>> sq_total_monomial(const Monomial& mono,
                                                       int gen_degree) {
    if (gen_degree != 1 && gen_degree != 2)
        throw std::invalid_argument("generator degree must be 1 or 2");
    std::map<int, std::vector<Monomial>> out;
    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < mono.size(); ++i)
        if (mono[i] > 0)
            supp.push_back(i);

    Monomial term = mono;
    std::function<void(std::size_t, int)> go = [&](std::size_t idx, int total_t) {
        if (idx == supp.size()) {
            out[gen_degree * total_t].push_back(term);
            return;
        }
        const std::size_t i = supp[idx];
        const int e = mono[i];
        for (int t = 0; t <= e; ++t) {
            if (!binom_odd(e, t))
                continue;
            term[i] = e + t;
            go(idx + 1, total_t + t);
        }
        term[i] = e;
    };
    go(0, 0);
    for (auto& [n, terms] : out)
        std::sort(terms.begin(), terms.end(), monomial_before);
    return out;
}

BitMatrix sq_graded_matrix(const SimplicialComplex& k, int n, int topo_degree,
                           int gen_degree) {
    if (gen_degree != 1 && gen_degree != 2)
        throw std::invalid_argument("generator degree must be 1 or 2");
    if (n < 0 || topo_degree < 0 || topo_degree % gen_degree != 0)
        throw std::invalid_argument("topological degree not divisible by d");
    const auto source = monomial_basis(k, topo_degree / gen_degree);
    std::vector<Monomial> target;
    if ((topo_degree + n) % gen_degree == 0)
        target = monomial_basis(k, (topo_degree + n) / gen_degree);
    BitMatrix mat(target.size(), source.size());

    for (std::size_t col = 0; col < source.size(); ++col) {
        auto groups = sq_total_monomial(source[col], gen_degree);
        auto it = groups.find(n);
        if (it == groups.end())
            continue;
        for (const auto& t : it->second) {
            if (!k.has_face(monomial_support(t)))
                continue;
            auto pos = std::lower_bound(target.begin(), target.end(), t, monomial_before);
            if (pos == target.end() || *pos != t)
                throw std::logic_error("sq_graded_matrix: image monomial missing from basis");
            mat.set(static_cast<std::size_t>(pos - target.begin()), col);
        }
    }
    return mat;
}

std::vector<VertexMask> minimal_non_faces(const SimplicialComplex& k) {
    const int m = k.vertex_count();
    if (m > 24)
        throw std::invalid_argument("minimal_non_faces: vertex count too large");
    std::vector<VertexMask> out;
    for (VertexMask s = 1; m > 0 && s <= full_mask(m); ++s) {
        if (k.has_face(s))
            continue;
        bool minimal = true;
        VertexMask rest = s;
        while (rest && minimal) {
            const VertexMask low = rest & (~rest + 1);
            if (!k.has_face(s ^ low))
                minimal = false;
            rest ^= low;
        }
        if (minimal)
            out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](VertexMask a, VertexMask b) {
        const int da = std::popcount(a), db = std::popcount(b);
        if (da != db)
            return da < db;
        return simplex_lex_less(a, b);
    });
    return out;
}

std::optional<AIdealViolation> a_ideal_violation(const SimplicialComplex& k,
                                                 int gen_degree, int max_degree) {
    const int m = k.vertex_count();
    const auto gens = minimal_non_faces(k);
    for (VertexMask g : gens) {
        Monomial base(static_cast<std::size_t>(m), 0);
        for (int v : mask_vertices(g))
            base[static_cast<std::size_t>(v - 1)] = 1;
        const int gdeg = monomial_degree(base);
        if (gdeg > max_degree)
            continue;

        // Every monomial multiple g*u with deg(g*u) <= max_degree.
        std::vector<Monomial> multiples;
        Monomial cur = base;
        std::function<void(std::size_t, int)> extend = [&](std::size_t var, int budget) {
            if (var == static_cast<std::size_t>(m)) {
                multiples.push_back(cur);
                return;
            }
            for (int e = 0; e <= budget; ++e) {
                cur[var] += e;
                extend(var + 1, budget - e);
                cur[var] -= e;
            }
        };
        extend(0, max_degree - gdeg);

        for (const auto& h : multiples) {
            for (const auto& [n, terms] : sq_total_monomial(h, gen_degree)) {
                for (const auto& t : terms)
                    if (k.has_face(monomial_support(t)))
                        return AIdealViolation{h, n};
            }
        }
    }
    return std::nullopt;
}

bool verify_a_ideal(const SimplicialComplex& k, int gen_degree, int max_degree) {
    return !a_ideal_violation(k, gen_degree, max_degree).has_value();
}

}  // namespace sqtop
