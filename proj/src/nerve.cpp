#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "holes3d/errors.hpp"
#include "holes3d/linear_system.hpp"
#include "holes3d/nerve.hpp"
#include "holes3d/parallel.hpp"

namespace holes3d {

namespace {

/// Joint feasibility of a translate subset, returning the witness point.
std::optional<Vec3> intersection_witness(const TranslateFamily& family,
                                         const std::vector<int>& subset) {
    const FeasibilityResult res = bodies_intersect(family, subset);
    if (!res.feasible) {
        return std::nullopt;
    }
    const std::vector<Rat>& w = *res.witness;
    return Vec3(w[0], w[1], w[2]);
}

} // namespace

NerveResult nerve_skeleton(const TranslateFamily& family, int max_dim, int threads) {
    const int n = static_cast<int>(family.translates.size());
    if (n == 0) {
        throw InputError("nerve_skeleton: empty family");
    }
    if (max_dim < 0) {
        throw InputError("nerve_skeleton: negative dimension limit");
    }
    for (const Translate& t : family.translates) {
        if (!t.body) {
            throw InputError("nerve_skeleton: translate without a body");
        }
    }
    NerveResult result{SimplicialComplex(n, max_dim), {}};

    // Level-wise growth: a (k+1)-subset is tested only when every k-subset
    // facet is already a simplex, so each level prunes the next.
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        frontier.push_back({i});
    }
    for (int dim = 1; dim <= max_dim && !frontier.empty(); ++dim) {
        std::set<std::vector<int>> previous(frontier.begin(), frontier.end());
        // Extend each frontier simplex by a vertex beyond its maximum; the
        // candidate survives when all of its facets were feasible.
        std::vector<std::vector<int>> candidates;
        for (const auto& s : frontier) {
            for (int v = s.back() + 1; v < n; ++v) {
                std::vector<int> cand = s;
                cand.push_back(v);
                bool closed = true;
                for (std::size_t drop = 0; drop + 1 < cand.size() && closed; ++drop) {
                    std::vector<int> face;
                    for (std::size_t t = 0; t < cand.size(); ++t) {
                        if (t != drop) {
                            face.push_back(cand[t]);
                        }
                    }
                    closed = previous.count(face) > 0;
                }
                if (closed) {
                    candidates.push_back(std::move(cand));
                }
            }
        }
        std::vector<std::optional<Vec3>> hits(candidates.size());
        parallel_for(candidates.size(), threads, [&](std::size_t idx) {
            hits[idx] = intersection_witness(family, candidates[idx]);
        });
        frontier.clear();
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            if (hits[idx]) {
                result.complex.add_simplex(candidates[idx]);
                result.witnesses.emplace(candidates[idx], *hits[idx]);
                frontier.push_back(candidates[idx]);
            }
        }
    }
    return result;
}

NerveDiff verify_nerve_matches(const SimplicialComplex& nerve,
                               const NervePrediction& prediction) {
    if (nerve.skeleton_limit() < 3) {
        throw InputError("verify_nerve_matches: the complex must store the 3-skeleton");
    }
    if (nerve.num_vertices() != prediction.n) {
        throw InputError("verify_nerve_matches: vertex count " +
                         std::to_string(nerve.num_vertices()) + " differs from predicted " +
                         std::to_string(prediction.n));
    }
    NerveDiff diff;
    // Bitmask per predicted maximal family; subsets resolve by mask inclusion.
    std::vector<unsigned long long> masks;
    for (const auto& fam : prediction.maximal_families) {
        unsigned long long m = 0;
        for (int v : fam) {
            if (v < 0 || v >= prediction.n || v >= 64) {
                throw InputError("verify_nerve_matches: predicted vertex id out of range");
            }
            m |= 1ull << v;
        }
        masks.push_back(m);
    }
    const auto covered = [&](const std::vector<int>& s) {
        unsigned long long m = 0;
        for (int v : s) {
            if (v >= 64) {
                return false;
            }
            m |= 1ull << v;
        }
        for (unsigned long long fam : masks) {
            if ((m & fam) == m) {
                return true;
            }
        }
        return false;
    };
    for (int dim = 1; dim <= 3; ++dim) {
        for (const auto& s : nerve.simplices(dim)) {
            if (!covered(s)) {
                diff.extra.push_back(s);
            }
        }
    }
    // Every small subset of a predicted family must be present.
    for (const auto& fam : prediction.maximal_families) {
        const int k = static_cast<int>(fam.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < k; ++i) {
                if (mask & (1u << i)) {
                    s.push_back(fam[i]);
                }
            }
            if (s.size() < 2 || s.size() > 4) {
                continue;
            }
            std::sort(s.begin(), s.end());
            if (!nerve.contains(s)) {
                diff.missing.push_back(std::move(s));
            }
        }
    }
    std::sort(diff.missing.begin(), diff.missing.end());
    diff.missing.erase(std::unique(diff.missing.begin(), diff.missing.end()),
                       diff.missing.end());
    diff.matches = diff.extra.empty() && diff.missing.empty();
    return diff;
}

HoleReport hole_count(const TranslateFamily& family, int threads) {
    const NerveResult nerve = nerve_skeleton(family, 3, threads);
    HoleReport rep;
    rep.n = static_cast<int>(family.translates.size());
    for (int dim = 0; dim <= 3; ++dim) {
        rep.simplex_counts.push_back(nerve.complex.simplex_count(dim));
    }
    rep.betti2 = nerve.complex.betti(2);
    rep.holes = rep.betti2.betti + 1;
    const Int bound = binomial(rep.n, 3) + 1;
    if (bound > Int(std::numeric_limits<long long>::max())) {
        throw InputError("hole_count: family too large for the bound to fit");
    }
    rep.bound = static_cast<long long>(bound);
    rep.bound_holds = rep.holes <= rep.bound;
    return rep;
}

bool upper_bound_holds(const HoleReport& report) {
    return report.holes <= report.bound;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) {
        return Int(0);
    }
    k = std::min(k, n - k);
    Int result(1);
    for (int i = 1; i <= k; ++i) {
        result = result * Int(n - k + i) / Int(i);
    }
    return result;
}

FamilyFormulas predicted_counts(int m) {
    if (m < 1) {
        throw InputError("predicted_counts: m must be at least 1");
    }
    const auto ll = [](const Int& v) { return static_cast<long long>(v); };
    FamilyFormulas f;
    f.c2_count = ll(Int(m) * Int(m) * Int(m) + Int(m) * Int(m - 1) +
                    Int(2) * binomial(2 * m, 3) - binomial(m, 3));
    f.c3_count = ll(Int(2) * binomial(2 * m, 4) - binomial(m, 4));
    f.rank_d2 = ll(binomial(3 * m - 1, 2));
    f.rank_d3 = ll(Int(2) * binomial(2 * m - 1, 3) - binomial(m - 1, 3));
    f.betti2 = ll(Int(m) * Int(m) * Int(m) - Int(m));
    f.holes = f.betti2 + 1;
    return f;
}

} // namespace holes3d
