#include "sqtop/polyhedral_join.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace sqtop {

JoinLabeling::JoinLabeling(LabelingMode mode, std::vector<int> block_sizes)
    : mode_(mode), sizes_(std::move(block_sizes)) {
    const int m = static_cast<int>(sizes_.size());
    total_ = std::accumulate(sizes_.begin(), sizes_.end(), 0);
    if (total_ > kMaxVertices)
        throw std::invalid_argument("labeling: too many vertices");
    flat_.resize(sizes_.size());
    if (mode_ == LabelingMode::Block) {
        int next = 1;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < sizes_[static_cast<std::size_t>(i)]; ++j)
                flat_[static_cast<std::size_t>(i)].push_back(next++);
    } else {
        int next = m + 1;
        for (int i = 0; i < m; ++i) {
            flat_[static_cast<std::size_t>(i)].push_back(i + 1);
            for (int j = 1; j < sizes_[static_cast<std::size_t>(i)]; ++j)
                flat_[static_cast<std::size_t>(i)].push_back(next++);
        }
    }
}

int JoinLabeling::flatten(int block, int copy) const {
    return flat_[static_cast<std::size_t>(block - 1)][static_cast<std::size_t>(copy - 1)];
}

namespace {

// Remap a face of block i into the flattened vertex set.
VertexMask remap_block_face(VertexMask f, const JoinLabeling& lab, int block) {
    VertexMask out = 0;
    for (int v : mask_vertices(f))
        out |= vertex_bit(lab.flatten(block, v));
    return out;
}

const std::vector<VertexMask>& facets_or_empty(const SimplicialComplex& c) {
    static const std::vector<VertexMask> just_empty = {0};
    return c.facets().empty() ? just_empty : c.facets();
}

}  // namespace

SimplicialComplex polyhedral_join(const SimplicialComplex& k,
                                  const std::vector<ComplexPair>& pairs,
                                  LabelingMode mode) {
    const int m = k.vertex_count();
    if (static_cast<int>(pairs.size()) != m)
        throw std::invalid_argument("polyhedral_join: need one pair per vertex of K");
    for (const auto& p : pairs) {
        if (p.sub.vertex_count() > p.big.vertex_count())
            throw std::invalid_argument("polyhedral_join: L_i has more vertices than K_i");
        for (int j = 0; j <= p.sub.dimension(); ++j)
            for (VertexMask f : p.sub.faces(j))
                if (!p.big.has_face(f))
                    throw std::invalid_argument(
                        "polyhedral_join: L_i is not a subcomplex of K_i");
    }

    std::vector<int> sizes;
    for (const auto& p : pairs)
        sizes.push_back(p.big.vertex_count());
    const JoinLabeling lab(mode, sizes);

    // Candidate facets: for each facet σ of K, products of facets of K_i
    // (i in σ) and of L_i (i outside σ).
    std::unordered_set<VertexMask> candidates;
    std::vector<VertexMask> sigmas = facets_or_empty(k);
    for (VertexMask sigma : sigmas) {
        std::vector<const std::vector<VertexMask>*> choices;
        for (int i = 1; i <= m; ++i) {
            const auto& p = pairs[static_cast<std::size_t>(i - 1)];
            choices.push_back(&facets_or_empty(sigma & vertex_bit(i) ? p.big : p.sub));
        }
        std::function<void(int, VertexMask)> go = [&](int i, VertexMask acc) {
            if (i == m) {
                candidates.insert(acc);
                return;
            }
            for (VertexMask f : *choices[static_cast<std::size_t>(i)])
                go(i + 1, acc | remap_block_face(f, lab, i + 1));
        };
        go(0, 0);
    }

    std::vector<VertexMask> cand(candidates.begin(), candidates.end());
    std::vector<VertexMask> facets;
    for (VertexMask f : cand) {
        bool maximal = true;
        for (VertexMask g : cand)
            if (f != g && (f & ~g) == 0) {
                maximal = false;
                break;
            }
        if (maximal)
            facets.push_back(f);
    }
    return SimplicialComplex::from_facet_masks(lab.total(), facets);
}

SimplicialComplex substitution(const SimplicialComplex& k,
                               const std::vector<SimplicialComplex>& subs,
                               LabelingMode mode) {
    std::vector<ComplexPair> pairs;
    pairs.reserve(subs.size());
    for (const auto& s : subs)
        pairs.push_back({s, empty_complex(0)});
    return polyhedral_join(k, pairs, mode);
}

std::vector<SimplicialComplex> substitution_sequence(
    const SimplicialComplex& k, const std::vector<SimplicialComplex>& subs) {
    const int m = k.vertex_count();
    if (static_cast<int>(subs.size()) != m)
        throw std::invalid_argument("substitution_sequence: need one complex per vertex");
    std::vector<SimplicialComplex> seq;
    seq.push_back(k);
    SimplicialComplex cur = k;
    for (int i = 1; i <= m; ++i) {
        std::vector<SimplicialComplex> step(
            static_cast<std::size_t>(cur.vertex_count()), points_complex(1));
        step[static_cast<std::size_t>(i - 1)] = subs[static_cast<std::size_t>(i - 1)];
        cur = substitution(cur, step, LabelingMode::PaperSubstitution);
        seq.push_back(cur);
    }
    return seq;
}

SimplicialComplex composition(const SimplicialComplex& k,
                              const std::vector<SimplicialComplex>& links) {
    std::vector<ComplexPair> pairs;
    pairs.reserve(links.size());
    for (const auto& l : links) {
        if (l.vertex_count() < 1)
            throw std::invalid_argument("composition: each L_i needs at least one vertex");
        pairs.push_back({simplex_complex(l.vertex_count() - 1), l});
    }
    return polyhedral_join(k, pairs, LabelingMode::Block);
}

std::map<int, long> join_betti_convolution(const std::map<int, long>& a,
                                           const std::map<int, long>& b) {
    std::map<int, long> out;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b)
            out[da + db + 1] += ca * cb;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::map<int, long> predicted_betti_substitution(
    const SimplicialComplex& k, const std::vector<SimplicialComplex>& subs) {
    if (!k.is_connected())
        throw std::invalid_argument("predicted_betti_substitution: K must be connected");
    if (static_cast<int>(subs.size()) != k.vertex_count())
        throw std::invalid_argument("predicted_betti_substitution: wrong substituent count");

    std::map<int, long> acc = betti(k, true);
    SimplicialComplex cur = k;
    for (int i = 1; i <= k.vertex_count(); ++i) {
        std::vector<SimplicialComplex> step(
            static_cast<std::size_t>(cur.vertex_count()), points_complex(1));
        step[static_cast<std::size_t>(i - 1)] = subs[static_cast<std::size_t>(i - 1)];
        if (!cur.is_ghost(i)) {
            const auto wedge = join_betti_convolution(
                betti(cur.link(i), true), betti(subs[static_cast<std::size_t>(i - 1)], true));
            for (const auto& [d, c] : wedge)
                acc[d] += c;
        }
        cur = substitution(cur, step, LabelingMode::PaperSubstitution);
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    return acc;
}

std::map<int, long> predicted_betti_composition(
    const SimplicialComplex& k, const std::vector<SimplicialComplex>& links) {
    std::map<int, long> acc = betti(k, true);
    for (const auto& l : links)
        acc = join_betti_convolution(acc, betti(l, true));
    return acc;
}

namespace {

// Sq matrices of one factor, memoized per (n, source degree).
class FactorSquares {
public:
    explicit FactorSquares(const SimplicialComplex& c) : basis_(c, true) {}

    std::size_t dim(int degree) const { return basis_.dim(degree); }
    int min_degree() const { return basis_.min_degree(); }
    int max_degree() const { return basis_.max_degree(); }

    const BitMatrix& matrix(int n, int j) {
        const auto key = std::make_pair(n, j);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, sq_matrix(basis_, n, j).matrix).first;
        return it->second;
    }

private:
    CohomologyBasis basis_;
    std::map<std::pair<int, int>, BitMatrix> cache_;
};

SteenrodProfile join_sq_profile_impl(FactorSquares& fa, FactorSquares& fb) {
    SteenrodProfile out;
    // Degrees with nonzero cohomology in each factor.
    std::vector<int> degs_a, degs_b;
    for (int d = fa.min_degree(); d <= fa.max_degree(); ++d)
        if (fa.dim(d))
            degs_a.push_back(d);
    for (int d = fb.min_degree(); d <= fb.max_degree(); ++d)
        if (fb.dim(d))
            degs_b.push_back(d);
    if (degs_a.empty() || degs_b.empty())
        return out;

    const int join_max = degs_a.back() + degs_b.back() + 1;
    for (int n = 1; n <= join_max; ++n) {
        for (int q = 1; q + n <= join_max; ++q) {
            // Source blocks (a,b) with a+b = q-1, target blocks with sum q+n-1.
            std::vector<std::pair<int, int>> src, dst;
            for (int a : degs_a)
                for (int b : degs_b) {
                    if (a + b == q - 1)
                        src.emplace_back(a, b);
                    if (a + b == q + n - 1)
                        dst.emplace_back(a, b);
                }
            if (src.empty() || dst.empty())
                continue;
            std::size_t cols = 0, rows = 0;
            std::map<std::pair<int, int>, std::size_t> col_base, row_base;
            for (auto& [a, b] : src) {
                col_base[{a, b}] = cols;
                cols += fa.dim(a) * fb.dim(b);
            }
            for (auto& [a, b] : dst) {
                row_base[{a, b}] = rows;
                rows += fa.dim(a) * fb.dim(b);
            }
            BitMatrix big(rows, cols);
            for (auto& [a, b] : src) {
                for (int p = 0; p <= n; ++p) {
                    const int a2 = a + p, b2 = b + n - p;
                    if (!row_base.count({a2, b2}))
                        continue;
                    const BitMatrix& ma = fa.matrix(p, a);
                    const BitMatrix& mb = fb.matrix(n - p, b);
                    const std::size_t rb = row_base[{a2, b2}], cb = col_base[{a, b}];
                    for (std::size_t ra = 0; ra < ma.rows(); ++ra)
                        for (std::size_t ca = 0; ca < ma.cols(); ++ca) {
                            if (!ma.get(ra, ca))
                                continue;
                            for (std::size_t rbb = 0; rbb < mb.rows(); ++rbb)
                                for (std::size_t cbb = 0; cbb < mb.cols(); ++cbb)
                                    if (mb.get(rbb, cbb))
                                        big.flip(rb + ra * mb.rows() + rbb,
                                                 cb + ca * mb.cols() + cbb);
                        }
                }
            }
            const auto r = static_cast<long>(rank(big));
            if (r > 0)
                out.push_back({n, q, r});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void merge_profile(std::map<std::pair<int, int>, long>& acc, const SteenrodProfile& p,
                   int degree_shift = 0) {
    for (const auto& e : p)
        acc[{e.n, e.degree + degree_shift}] += e.rank;
}

SteenrodProfile profile_from_map(const std::map<std::pair<int, int>, long>& acc) {
    SteenrodProfile out;
    for (const auto& [key, r] : acc)
        if (r > 0)
            out.push_back({key.first, key.second, r});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SteenrodProfile join_sq_profile(const SimplicialComplex& a,
                                const SimplicialComplex& b) {
    FactorSquares fa(a), fb(b);
    return join_sq_profile_impl(fa, fb);
}

SteenrodProfile predicted_sq_profile_substitution(
    const SimplicialComplex& k, const std::vector<SimplicialComplex>& subs) {
    if (!k.is_connected())
        throw std::invalid_argument("predicted_sq_profile: K must be connected");
    if (static_cast<int>(subs.size()) != k.vertex_count())
        throw std::invalid_argument("predicted_sq_profile: wrong substituent count");

    std::map<std::pair<int, int>, long> acc;
    merge_profile(acc, sq_profile(k));
    SimplicialComplex cur = k;
    for (int i = 1; i <= k.vertex_count(); ++i) {
        std::vector<SimplicialComplex> step(
            static_cast<std::size_t>(cur.vertex_count()), points_complex(1));
        step[static_cast<std::size_t>(i - 1)] = subs[static_cast<std::size_t>(i - 1)];
        if (!cur.is_ghost(i))
            merge_profile(acc, join_sq_profile(cur.link(i),
                                               subs[static_cast<std::size_t>(i - 1)]));
        cur = substitution(cur, step, LabelingMode::PaperSubstitution);
    }
    return profile_from_map(acc);
}

Cochain extend_cocycle_substitution(const SimplicialComplex& k,
                                    const std::vector<SimplicialComplex>& subs,
                                    const Cochain& x) {
    if (!x.complex().same_faces(k))
        throw std::invalid_argument("extend_cocycle: cochain does not live on K");
    if (!is_cocycle(x))
        throw std::invalid_argument("extend_cocycle: input is not a cocycle");
    if (static_cast<int>(subs.size()) != k.vertex_count())
        throw std::invalid_argument("extend_cocycle: wrong substituent count");

    const SimplicialComplex target = substitution(k, subs, LabelingMode::PaperSubstitution);
    std::vector<int> sizes;
    for (const auto& s : subs)
        sizes.push_back(s.vertex_count());
    const JoinLabeling lab(LabelingMode::PaperSubstitution, sizes);

    const int j = x.degree();
    BitVector out(target.face_count(j));
    for (VertexMask sigma : x.support()) {
        const auto vs = mask_vertices(sigma);
        // All copy choices, independently per vertex of the simplex.
        std::function<void(std::size_t, VertexMask)> go = [&](std::size_t i,
                                                              VertexMask acc) {
            if (i == vs.size()) {
                const int idx = target.face_index(j, acc);
                if (idx < 0)
                    throw std::logic_error("extend_cocycle: replacement is not a face");
                out.flip(static_cast<std::size_t>(idx));
                return;
            }
            const int block = vs[i];
            for (int copy = 1; copy <= lab.block_size(block); ++copy)
                go(i + 1, acc | vertex_bit(lab.flatten(block, copy)));
        };
        go(0, 0);
    }

    Cochain y(target, j, std::move(out));
    if (!is_cocycle(y))
        throw ExtendCocycleError(ExtendCocycleError::Reason::NotACocycle,
                                 "extend_cocycle: the extension is not a cocycle");
    const CohomologyBasis basis_k(k, true);
    if (basis_k.reduce(x).any()) {
        const CohomologyBasis basis_t(target, true);
        if (!basis_t.reduce(y).any())
            throw ExtendCocycleError(ExtendCocycleError::Reason::ClassIsZero,
                                     "extend_cocycle: the extension bounds");
    }
    return y;
}

namespace {

// Face sets of a and b agree after renaming vertex v of a to perm[v-1].
bool faces_equal_under(const SimplicialComplex& a, const SimplicialComplex& b,
                       const std::vector<int>& perm) {
    if (a.vertex_count() != b.vertex_count() || a.dimension() != b.dimension())
        return false;
    for (int j = 0; j <= a.dimension(); ++j) {
        if (a.face_count(j) != b.face_count(j))
            return false;
        for (VertexMask f : a.faces(j)) {
            VertexMask g = 0;
            for (int v : mask_vertices(f))
                g |= vertex_bit(perm[static_cast<std::size_t>(v - 1)]);
            if (!b.has_face(g))
                return false;
        }
    }
    return true;
}

}  // namespace

std::vector<FullSubcomplexCopy> locate_full_subcomplexes(
    const SimplicialComplex& k, const std::vector<SimplicialComplex>& subs,
    const std::vector<int>& copy_choice) {
    const int m = k.vertex_count();
    if (static_cast<int>(subs.size()) != m)
        throw std::invalid_argument("locate_full_subcomplexes: wrong substituent count");
    std::vector<int> ks = copy_choice;
    if (ks.empty())
        ks.assign(static_cast<std::size_t>(m), 1);
    if (static_cast<int>(ks.size()) != m)
        throw std::invalid_argument("locate_full_subcomplexes: wrong copy choice size");

    const SimplicialComplex target = substitution(k, subs, LabelingMode::PaperSubstitution);
    std::vector<int> sizes;
    for (const auto& s : subs)
        sizes.push_back(s.vertex_count());
    const JoinLabeling lab(LabelingMode::PaperSubstitution, sizes);

    std::vector<FullSubcomplexCopy> found;

    // The diagonal copy of K.
    {
        VertexMask jmask = 0;
        for (int i = 1; i <= m; ++i) {
            const int c = ks[static_cast<std::size_t>(i - 1)];
            if (c < 1 || c > lab.block_size(i))
                throw std::invalid_argument("locate_full_subcomplexes: copy out of range");
            jmask |= vertex_bit(lab.flatten(i, c));
        }
        const SimplicialComplex sub = target.full_subcomplex(jmask);
        // Vertex of the subcomplex at sorted position p corresponds to the
        // K-vertex whose chosen copy sits at that position.
        const auto members = mask_vertices(jmask);
        std::vector<int> perm(members.size());
        for (int i = 1; i <= m; ++i) {
            const int flat = lab.flatten(i, ks[static_cast<std::size_t>(i - 1)]);
            const auto pos = std::lower_bound(members.begin(), members.end(), flat) -
                             members.begin();
            perm[static_cast<std::size_t>(pos)] = i;
        }
        if (!faces_equal_under(sub, k, perm))
            throw std::logic_error("locate_full_subcomplexes: K-copy mismatch");
        found.push_back({jmask, 0});
    }

    for (int i = 1; i <= m; ++i) {
        VertexMask jmask = 0;
        for (int c = 1; c <= lab.block_size(i); ++c)
            jmask |= vertex_bit(lab.flatten(i, c));
        const SimplicialComplex sub = target.full_subcomplex(jmask);
        const auto members = mask_vertices(jmask);
        std::vector<int> perm(members.size());
        for (int c = 1; c <= lab.block_size(i); ++c) {
            const int flat = lab.flatten(i, c);
            const auto pos = std::lower_bound(members.begin(), members.end(), flat) -
                             members.begin();
            perm[static_cast<std::size_t>(pos)] = c;
        }
        const bool block_is_face = jmask != 0 && target.has_face(jmask);
        // A block whose model K_i is a face of itself... the block is a full
        // subcomplex regardless; verify face equality either way.
        (void)block_is_face;
        if (!faces_equal_under(sub, subs[static_cast<std::size_t>(i - 1)], perm))
            throw std::logic_error("locate_full_subcomplexes: block copy mismatch");
        found.push_back({jmask, i});
    }
    return found;
}

}  // namespace sqtop
