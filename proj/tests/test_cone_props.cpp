// Randomized properties of the cone engine, all checked exactly: oracle
// equivalence, soundness of the output rays, round trips between the two
// representations, double dualization, and determinism.
#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "cicone/cone.hpp"

using namespace cicone;

namespace {

std::set<IntVec> ray_set(const std::vector<Ray>& rs)
{
    std::set<IntVec> s;
    for (const Ray& r : rs) s.insert(r.v);
    return s;
}

// Random integer halfspace systems, resampled until pointed.
struct SystemGen {
    std::mt19937_64 rng{20240811u};

    // When interior != nullptr every normal pairs > 0 with it, so the cone is
    // guaranteed nonempty; otherwise the rows are raw random and the cone is
    // frequently just the origin, which the engine must handle as well.
    std::vector<Halfspace> pointed_system(std::size_t dim, std::size_t count,
                                          const IntVec* interior = nullptr)
    {
        std::uniform_int_distribution<int> entry(-3, 3);
        for (;;) {
            std::vector<Halfspace> hs;
            IntRankAccumulator acc(dim);
            std::size_t rank = 0;
            for (std::size_t i = 0; i < count; ++i) {
                IntVec v(dim);
                for (;;) {
                    bool zero = true;
                    for (Int& x : v) {
                        x = entry(rng);
                        if (x != 0) zero = false;
                    }
                    if (zero) continue;
                    if (!interior || dot(v, *interior) > 0) break;
                }
                if (acc.add(v)) ++rank;
                hs.push_back(Halfspace(std::move(v)));
            }
            if (rank == dim) return hs;
        }
    }
};

}  // namespace

TEST_CASE("double description agrees with the brute-force oracle")
{
    SystemGen gen;
    std::size_t nonempty = 0;
    for (int trial = 0; trial < 240; ++trial) {
        const std::size_t dim = 2 + trial % 4;   // 2..5
        const std::size_t count = dim + 1 + trial % 7;
        REQUIRE(count <= 20);
        IntVec center(dim, Int(0));
        center[0] = 1;
        center[dim - 1] = 2;
        const auto sys = gen.pointed_system(dim, count, trial % 2 ? &center : nullptr);
        const auto fast = rays_from_halfspaces(dim, sys);
        const auto slow = brute_force_rays(dim, sys);
        REQUIRE(ray_set(fast) == ray_set(slow));
        if (!fast.empty()) ++nonempty;

        // Soundness: every output ray is feasible with tight rank dim-1.
        for (const Ray& r : fast) {
            IntRankAccumulator acc(dim);
            for (const Halfspace& h : sys) {
                const Int s = dot(h.normal, r.v);
                REQUIRE(s >= 0);
                if (s == 0) acc.add(h.normal);
            }
            REQUIRE(acc.rank() + 1 == dim);
        }

        // Round trip and double dual on the full-dimensional cases.
        if (fast.size() >= dim) {
            std::vector<IntVec> vecs;
            for (const Ray& r : fast) vecs.push_back(r.v);
            IntRankAccumulator acc(dim);
            std::size_t span = 0;
            for (const IntVec& v : vecs)
                if (acc.add(v)) ++span;
            if (span == dim) {
                const auto round =
                    rays_from_halfspaces(dim, halfspaces_from_rays(dim, fast));
                REQUIRE(ray_set(round) == ray_set(minimal_generators(dim, vecs)));
                const auto dd = dual_rays(dim, dual_rays(dim, fast));
                REQUIRE(ray_set(dd) == ray_set(minimal_generators(dim, vecs)));
            }
        }
    }
    // The generator must actually produce interesting cones.
    REQUIRE(nonempty > 100);
}

TEST_CASE("identical inputs give identical outputs across runs")
{
    SystemGen gen;
    const auto sys = gen.pointed_system(4, 9);
    const auto a = rays_from_halfspaces(4, sys);
    auto shuffled = sys;
    std::reverse(shuffled.begin(), shuffled.end());
    const auto b = rays_from_halfspaces(4, shuffled);
    CHECK(a == b);  // canonical insertion order makes the order identical too
}

TEST_CASE("incremental hull matches the direct dualization")
{
    SystemGen gen;
    std::mt19937_64 mix(7u);
    std::uniform_int_distribution<int> coeff(0, 4);
    int covered = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t dim = 3 + trial % 2;
        IntVec center(dim, Int(1));
        const auto sys = gen.pointed_system(dim, dim + 3, &center);
        const auto rays = rays_from_halfspaces(dim, sys);
        std::vector<IntVec> vecs;
        for (const Ray& r : rays) vecs.push_back(r.v);
        {
            IntRankAccumulator acc(dim);
            std::size_t rk = 0;
            for (const IntVec& v : vecs)
                if (acc.add(v)) ++rk;
            if (rk != dim) continue;
        }
        ++covered;
        // pad with random nonneg combinations (interior points)
        std::vector<Ray> padded = rays;
        for (int extra = 0; extra < 40; ++extra) {
            IntVec sum(dim, Int(0));
            for (const IntVec& v : vecs) {
                const int c = coeff(mix);
                for (std::size_t j = 0; j < dim; ++j) sum[j] += c * v[j];
            }
            if (!is_zero(sum)) padded.push_back(Ray(std::move(sum)));
        }
        const HullReduction hull = incremental_hull(dim, padded);
        const auto direct_h = halfspaces_from_rays(dim, padded);
        std::vector<IntVec> padded_vecs;
        for (const Ray& r : padded) padded_vecs.push_back(r.v);
        const auto direct_r = minimal_generators(dim, padded_vecs);
        CHECK(hull.facets == direct_h);
        CHECK(ray_set(hull.extremal) == ray_set(direct_r));
    }
    REQUIRE(covered >= 30);
}

TEST_CASE("minimal_generators rejects generating sets containing a line")
{
    const std::vector<IntVec> gens{IntVec{Int(1), Int(0)}, IntVec{Int(-1), Int(0)},
                                   IntVec{Int(0), Int(1)}};
    CHECK_THROWS_AS(minimal_generators(2, gens), NotPointedError);
}
