#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cicone/kapranov.hpp"

using namespace cicone;
using namespace cicone::kapranov;

namespace {

IntVec iv(std::initializer_list<int> xs)
{
    IntVec v;
    for (int x : xs) v.push_back(Int(x));
    return v;
}

std::set<IntVec> normals(const std::vector<Halfspace>& hs)
{
    std::set<IntVec> s;
    for (const Halfspace& h : hs) s.insert(h.normal);
    return s;
}

DivisorClass div_class(int r, std::initializer_list<int> xs)
{
    KapranovSpace sp(r);
    RatVec v;
    for (int x : xs) v.push_back(Rat(x));
    return {sp, std::move(v)};
}

}  // namespace

TEST_CASE("space dimensions and index layout")
{
    CHECK(KapranovSpace(1).dim() == 2);
    CHECK(KapranovSpace(2).dim() == 4);
    CHECK(KapranovSpace(3).dim() == 7);
    CHECK(KapranovSpace(4).dim() == 11);
    CHECK(KapranovSpace(5).dim() == 16);
    CHECK_THROWS_AS(KapranovSpace(0), BadRError);
    CHECK_THROWS_AS(KapranovSpace(6), BadRError);

    KapranovSpace sp(5);
    CHECK(sp.e_index(1, 2) == 6);
    CHECK(sp.e_index(2, 1) == 6);
    CHECK(sp.e_index(4, 5) == 15);
    CHECK(sp.labels()[15] == "E45");
}

TEST_CASE("nef inequality systems")
{
    const auto n5 = nef_hrep(5);
    CHECK(n5.size() == 65);
    const KapranovSpace sp(5);
    IntVec f1(16, Int(0));
    f1[sp.e_index(1, 2)] = -1;
    IntVec f2(16, Int(0));
    f2[sp.h_index()] = 1;
    f2[sp.e_index(1)] = 1;
    f2[sp.e_index(2)] = 1;
    f2[sp.e_index(1, 2)] = -1;
    const auto set5 = normals(n5);
    CHECK(set5.count(f1) == 1);
    CHECK(set5.count(f2) == 1);

    CHECK(nef_hrep(4).size() == 24);
    CHECK(normals(nef_hrep(1)) == std::set<IntVec>{iv({0, -1}), iv({1, 1})});
    CHECK_THROWS_AS(nef_hrep(0), BadRError);
}

TEST_CASE("movable inequality systems")
{
    const auto m5 = mov_hrep(5);
    CHECK(m5.size() == 40);
    const KapranovSpace sp(5);
    IntVec kv(16, Int(0));
    kv[sp.h_index()] = 2;
    for (int i = 1; i <= 5; ++i) kv[sp.e_index(i)] = -1;
    kv[sp.e_index(1, 3)] = -1;
    kv[sp.e_index(1, 4)] = -1;
    kv[sp.e_index(2, 3)] = -1;
    kv[sp.e_index(2, 4)] = -1;
    CHECK(normals(m5).count(kv) == 1);

    CHECK(normals(mov_hrep(1)) == std::set<IntVec>{iv({0, 1}), iv({1, -1})});
    CHECK(mov_hrep(4).size() == 14);
}

TEST_CASE("small blow-ups: nef and movable rays against the brute-force oracle")
{
    // r = 1: Nef generated by H and H - E1, Mov by H* and H* + E1*.
    auto nef1 = rays_from_halfspaces(2, nef_hrep(1));
    CHECK(normals(halfspaces_from_rays(2, nef1)) == normals(nef_hrep(1)));
    std::set<IntVec> nef1_set;
    for (const Ray& r : nef1) nef1_set.insert(r.v);
    CHECK(nef1_set == std::set<IntVec>{iv({1, 0}), iv({1, -1})});
    std::set<IntVec> mov1_set;
    for (const Ray& r : rays_from_halfspaces(2, mov_hrep(1))) mov1_set.insert(r.v);
    CHECK(mov1_set == std::set<IntVec>{iv({1, 0}), iv({1, 1})});

    // r = 2 in coordinates (d_h; d_1, d_2; d_12).
    std::set<IntVec> nef2;
    for (const Ray& r : rays_from_halfspaces(4, nef_hrep(2))) nef2.insert(r.v);
    CHECK(nef2 == std::set<IntVec>{iv({1, 0, 0, 0}), iv({1, -1, 0, 0}), iv({1, 0, -1, 0}),
                                   iv({1, -1, -1, -1})});
    std::set<IntVec> bf;
    for (const Ray& r : brute_force_rays(4, nef_hrep(2))) bf.insert(r.v);
    CHECK(nef2 == bf);

    std::set<IntVec> mov2;
    for (const Ray& r : rays_from_halfspaces(4, mov_hrep(2))) mov2.insert(r.v);
    CHECK(mov2 == std::set<IntVec>{iv({1, 0, 0, 0}), iv({1, 1, 0, 0}), iv({1, 0, 1, 0}),
                                   iv({1, 0, 0, 1})});
}

TEST_CASE("intersection table reproduces every stated identity")
{
    for (int r = 1; r <= 5; ++r) {
        const KapranovSpace sp(r);
        const std::size_t dim = sp.dim();
        const auto basis_divisor = [&](std::size_t idx) {
            RatVec v(dim, Rat(0));
            v[idx] = 1;
            return DivisorClass{sp, std::move(v)};
        };
        const auto expect = [&](std::size_t a, std::size_t b, const RatVec& want) {
            const CurveClass got = pair_product(basis_divisor(a), basis_divisor(b));
            CHECK(got.coords == want);
            const CurveClass sym = pair_product(basis_divisor(b), basis_divisor(a));
            CHECK(sym.coords == want);
        };
        const auto unit = [&](std::size_t idx, int c) {
            RatVec v(dim, Rat(0));
            v[idx] = c;
            return v;
        };

        expect(sp.h_index(), sp.h_index(), unit(sp.h_index(), 1));
        for (int i = 1; i <= r; ++i) {
            expect(sp.h_index(), sp.e_index(i), RatVec(dim, Rat(0)));
            expect(sp.e_index(i), sp.e_index(i), unit(sp.e_index(i), 1));
            for (int j = i + 1; j <= r; ++j)
                expect(sp.e_index(i), sp.e_index(j), RatVec(dim, Rat(0)));
        }
        for (int j = 1; j <= r; ++j)
            for (int k = j + 1; k <= r; ++k) {
                const std::size_t jk = sp.e_index(j, k);
                expect(sp.h_index(), jk, unit(jk, -1));
                expect(sp.e_index(j), jk, unit(jk, -1));
                expect(sp.e_index(k), jk, unit(jk, -1));
                for (int i = 1; i <= r; ++i)
                    if (i != j && i != k) expect(sp.e_index(i), jk, RatVec(dim, Rat(0)));
                RatVec sq(dim, Rat(0));
                sq[jk] = 2;
                sq[sp.h_index()] = -1;
                sq[sp.e_index(j)] = -1;
                sq[sp.e_index(k)] = -1;
                expect(jk, jk, sq);
                for (int l = 1; l <= r; ++l)
                    for (int m = l + 1; m <= r; ++m) {
                        if (std::make_pair(l, m) == std::make_pair(j, k)) continue;
                        expect(sp.e_index(l, m), jk, RatVec(dim, Rat(0)));
                    }
            }
    }
}

TEST_CASE("products of non-basis classes")
{
    // (H - E1)^2 on X_1 expands to H* + E1*.
    const CurveClass sq = pair_product(div_class(1, {1, -1}), div_class(1, {1, -1}));
    CHECK(sq.coords == RatVec{Rat(1), Rat(1)});

    CHECK_THROWS_AS(pair_product(div_class(1, {1, 0}), div_class(2, {1, 0, 0, 0})),
                    SpaceMismatchError);
}

TEST_CASE("pair_product is symmetric and bilinear")
{
    const KapranovSpace sp(3);
    const std::size_t dim = sp.dim();
    RatVec a(dim), b(dim), c(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        a[i] = Rat(static_cast<int>(3 * i) - 4, 3);
        b[i] = Rat(static_cast<int>(i * i) - 5, 2);
        c[i] = Rat(static_cast<int>(2 * i) - 1);
    }
    const DivisorClass da{sp, a}, db{sp, b}, dc{sp, c};
    const Rat s(5, 7), t(-2, 3);
    RatVec combo(dim);
    for (std::size_t i = 0; i < dim; ++i) combo[i] = s * a[i] + t * b[i];
    const CurveClass lhs = pair_product(DivisorClass{sp, combo}, dc);
    const CurveClass pa = pair_product(da, dc);
    const CurveClass pb = pair_product(db, dc);
    const CurveClass ab = pair_product(da, db);
    const CurveClass ba = pair_product(db, da);
    CHECK(ab.coords == ba.coords);
    for (std::size_t i = 0; i < dim; ++i)
        CHECK(lhs.coords[i] == s * pa.coords[i] + t * pb.coords[i]);

    // Raw integer kernel agrees with the rational surface.
    const IntVec ua = iv({2, -1, 0, 3, 1, 0, -2}), ub = iv({1, 1, -1, 0, 2, -3, 1});
    const IntVec raw = pair_product_raw(3, ua, ub);
    const CurveClass typed = pair_product(DivisorClass{sp, to_rat(ua)}, DivisorClass{sp, to_rat(ub)});
    for (std::size_t i = 0; i < dim; ++i) CHECK(Rat(raw[i]) == typed.coords[i]);
}

TEST_CASE("boundary divisor classes via the blow-up dictionary")
{
    const KapranovSpace sp(5);
    const auto coords_of = [&](std::vector<int> label) {
        return boundary_class(BoundaryLabel(std::move(label))).coords;
    };
    RatVec e1(16, Rat(0));
    e1[sp.e_index(1)] = 1;
    CHECK(coords_of({1, 6}) == e1);

    RatVec e45(16, Rat(0));
    e45[sp.e_index(4, 5)] = 1;
    CHECK(coords_of({4, 5, 6}) == e45);

    RatVec plane(16, Rat(0));
    plane[sp.h_index()] = 1;
    for (int i : {1, 2, 3}) plane[sp.e_index(i)] = -1;
    plane[sp.e_index(1, 2)] = -1;
    plane[sp.e_index(1, 3)] = -1;
    plane[sp.e_index(2, 3)] = -1;
    CHECK(coords_of({1, 2, 3, 6}) == plane);

    // A label without the last marking canonicalizes to its complement.
    CHECK(coords_of({2, 3, 4, 5}) == e1);
    CHECK(all_boundary_labels().size() == 25);
    CHECK_THROWS_AS(BoundaryLabel({1}), BadLabelError);
    CHECK_THROWS_AS(BoundaryLabel({1, 1, 6}), BadLabelError);
    CHECK_THROWS_AS(BoundaryLabel({1, 7}), BadLabelError);
}

TEST_CASE("Keel-Vermeire classes")
{
    const KapranovSpace sp(5);
    const auto expect_kv = [&](KvLabel label, std::initializer_list<std::pair<int, int>> pairs) {
        RatVec want(16, Rat(0));
        want[sp.h_index()] = 2;
        for (int i = 1; i <= 5; ++i) want[sp.e_index(i)] = -1;
        for (auto [a, b] : pairs) want[sp.e_index(a, b)] = -1;
        CHECK(kv_class(label).coords == want);
    };
    expect_kv(KvLabel({1, 2}, {3, 4}), {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    expect_kv(KvLabel({1, 3}, {2, 4}), {{1, 2}, {1, 4}, {2, 3}, {3, 4}});

    std::set<RatVec> distinct;
    for (const KvLabel& l : all_kv_labels()) distinct.insert(kv_class(l).coords);
    CHECK(distinct.size() == 15);
    CHECK_THROWS_AS(KvLabel({1, 2}, {2, 3}), BadLabelError);
}

TEST_CASE("effective generators of the five-point blow-up")
{
    const auto gens = eff_generators_m06();
    CHECK(gens.size() == 40);
    const KapranovSpace sp(5);
    std::set<RatVec> coords;
    for (const DivisorClass& d : gens) coords.insert(d.coords);
    RatVec e1(16, Rat(0)), e45(16, Rat(0));
    e1[sp.e_index(1)] = 1;
    e45[sp.e_index(4, 5)] = 1;
    CHECK(coords.count(e1) == 1);
    CHECK(coords.count(e45) == 1);

    // The movable inequalities are exactly the effective generators as rows.
    std::set<IntVec> rows;
    for (const DivisorClass& d : gens) rows.insert(primitive(d.coords));
    CHECK(rows == normals(mov_hrep(5)));
}

TEST_CASE("one-dimensional boundary strata classes")
{
    const auto fs = fcurve_classes();
    CHECK(fs.size() == 65);
    CHECK(all_fcurve_partitions().size() == 65);

    const KapranovSpace sp(5);
    std::set<RatVec> coords;
    for (const CurveClass& c : fs) coords.insert(c.coords);

    RatVec minus_e45(16, Rat(0));
    minus_e45[sp.e_index(4, 5)] = -1;
    CHECK(coords.count(minus_e45) == 1);  // partition {1},{2},{3},{4,5,6}

    RatVec mixed(16, Rat(0));
    mixed[sp.h_index()] = 1;
    mixed[sp.e_index(1)] = 1;
    mixed[sp.e_index(2)] = 1;
    mixed[sp.e_index(1, 2)] = -1;
    CHECK(coords.count(mixed) == 1);  // partition {6},{1},{2},{3,4,5}

    // The strata classes are exactly the nef inequality rows.
    std::set<IntVec> rows;
    for (const CurveClass& c : fs) rows.insert(primitive(c.coords));
    CHECK(rows == normals(nef_hrep(5)));
}

TEST_CASE("canonical class")
{
    const DivisorClass k = canonical_class_m06();
    const KapranovSpace sp(5);
    CHECK(k.coords[sp.h_index()] == -4);
    for (int i = 1; i <= 5; ++i) CHECK(k.coords[sp.e_index(i)] == 2);
    for (int j = 1; j <= 5; ++j)
        for (int l = j + 1; l <= 5; ++l) CHECK(k.coords[sp.e_index(j, l)] == 1);

    RatVec hdual(16, Rat(0));
    hdual[sp.h_index()] = 1;
    CHECK(pairing(k, CurveClass{sp, hdual}) == -4);
}

TEST_CASE("pullback of curve classes")
{
    const KapranovSpace sp4(4), sp5(5);
    const CurveClass zero{sp4, RatVec(11, Rat(0))};
    CHECK(is_zero(pullback_l4_to_m06(zero).coords));

    RatVec hdual4(11, Rat(0));
    hdual4[sp4.h_index()] = 1;
    const CurveClass up = pullback_l4_to_m06(CurveClass{sp4, hdual4});
    RatVec hdual5(16, Rat(0));
    hdual5[sp5.h_index()] = 1;
    CHECK(up.coords == hdual5);

    // Linearity and coordinate injectivity (zero-extension of an injection).
    RatVec a(11), b(11);
    for (std::size_t i = 0; i < 11; ++i) {
        a[i] = Rat(static_cast<int>(i) - 3, 2);
        b[i] = Rat(7 - static_cast<int>(2 * i), 5);
    }
    RatVec combo(11);
    for (std::size_t i = 0; i < 11; ++i) combo[i] = 3 * a[i] - 2 * b[i];
    const RatVec ua = pullback_l4_to_m06(CurveClass{sp4, a}).coords;
    const RatVec ub = pullback_l4_to_m06(CurveClass{sp4, b}).coords;
    const RatVec uc = pullback_l4_to_m06(CurveClass{sp4, combo}).coords;
    for (std::size_t i = 0; i < 16; ++i) CHECK(uc[i] == 3 * ua[i] - 2 * ub[i]);
    CHECK_FALSE(is_zero(ua));
    CHECK(up.coords[sp5.e_index(5)] == 0);
    CHECK(up.coords[sp5.e_index(1, 5)] == 0);

    CHECK_THROWS_AS(pullback_l4_to_m06(CurveClass{sp5, RatVec(16, Rat(0))}),
                    SpaceMismatchError);
}
