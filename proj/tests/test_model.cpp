#include <doctest.h>

#include <sstream>

#include "lgt/model.hpp"

using namespace lgt;

TEST_CASE("couplings from lattice parameters") {
    PhysicalParams p;
    p.a = 0.1;
    p.g = 10;
    p.m = 10;
    p.d = 2;
    auto c = derive_couplings(p);
    CHECK(c.g_M == doctest::Approx(10));
    CHECK(c.g_GM == doctest::Approx(5));
    CHECK(c.g_E == doctest::Approx(50));
    CHECK(c.g_B == doctest::Approx(-0.5));

    p.a = 1;
    p.g = 1;
    p.m = 0;
    c = derive_couplings(p);
    CHECK(c.g_M == 0);
    CHECK(c.g_GM == 0.5);
    CHECK(c.g_E == 0.5);
    CHECK(c.g_B == -0.5);

    p.m = 1;
    p.d = 3;
    c = derive_couplings(p);
    CHECK(c.g_M == 1);
    CHECK(c.g_GM == 0.5);
    CHECK(c.g_E == 0.5);
    CHECK(c.g_B == -0.5);
}

TEST_CASE("couplings recompute identically") {
    PhysicalParams p;
    p.a = 0.37;
    p.g = 2.5;
    p.d = 3;
    const auto c1 = derive_couplings(p), c2 = derive_couplings(p);
    CHECK(c1.g_E == c2.g_E);
    CHECK(c1.g_B == doctest::Approx(-1.0 / (2 * 0.37 * 2.5 * 2.5)));
    CHECK(c1.g_E == doctest::Approx(2.5 * 2.5 / (2 * 0.37)));
}

TEST_CASE("parameter validation names the field") {
    PhysicalParams p;
    p.a = 0;
    CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("a"), std::invalid_argument);
    p = {};
    p.epsilon = 1.0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = {};
    p.N = 1;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = {};
    p.lambda = 0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
}

TEST_CASE("gauge group colours") {
    CHECK(parse_group("u1").n_colors() == 1);
    CHECK(parse_group("su2").n_colors() == 2);
    CHECK(parse_group("su3").n_colors() == 3);
    CHECK(parse_group("su3").color_ops() == 9);
    CHECK_THROWS(parse_group("su4"));
}

TEST_CASE("truncation growth") {
    PhysicalParams p;
    p.time = 0;
    p.lambda0 = 7;
    CHECK(truncation_growth(p, 1) == 7);

    // a = 2, g = 1, d = 2 gives chi = 4/8 + 2/4 = 1
    p.a = 2;
    p.g = 1;
    p.d = 2;
    p.lambda0 = 1;
    p.time = 1;
    p.N = 2;
    p.epsilon = 0.5;
    CHECK(truncation_growth(p, 1) == 3);

    PhysicalParams q;
    q.lambda0 = 2;
    q.a = 0.5;
    std::int64_t prev = truncation_growth(q, 4);
    CHECK(prev > q.lambda0);
    for (int i = 0; i < 6; ++i) {
        q.time *= 2;
        const auto next = truncation_growth(q, 4);
        CHECK(next >= prev);
        prev = next;
    }
    PhysicalParams r;
    r.time = 1;
    CHECK(truncation_growth(r, 1, TruncationBound::Loose) >= truncation_growth(r, 1));
}

TEST_CASE("truncation growth is monotone in N and 1/eps") {
    PhysicalParams p;
    p.time = 1;
    p.lambda0 = 3;
    for (auto c : {1, 4, 9}) {
        auto prev = truncation_growth(p, c);
        for (std::int64_t N : {200, 400, 800}) {
            PhysicalParams q = p;
            q.N = N;
            CHECK(truncation_growth(q, c) >= prev);
            prev = truncation_growth(q, c);
        }
        prev = truncation_growth(p, c);
        for (double e : {1e-4, 1e-6, 1e-9}) {
            PhysicalParams q = p;
            q.epsilon = e;
            CHECK(truncation_growth(q, c) >= prev);
            prev = truncation_growth(q, c);
        }
    }
}

TEST_CASE("plaquette count") {
    CHECK(plaquette_count(2, 1) == 1);
    CHECK(plaquette_count(2, 4) == 16);
    CHECK(plaquette_count(3, 2) == 36);
    CHECK_THROWS_WITH(plaquette_count(1, 4), "no plaquettes below two dimensions");
}

TEST_CASE("plaquette count against enumeration") {
    for (int d : {2, 3})
        for (std::int64_t N = 1; N <= 5; ++N) {
            CAPTURE(d);
            CAPTURE(N);
            CHECK(enumerate_plaquettes(d, N, false) == plaquette_count(d, N));
            // at N = 4 the wrap-around lines are 4-cycles too
            if (N >= 5) {
                const std::int64_t torus = (d * (d - 1) / 2) * (d == 2 ? N * N : N * N * N);
                CHECK(enumerate_plaquettes(d, N, true) == torus);
            }
        }
}

TEST_CASE("config file") {
    std::istringstream in("# heavy ion\na = 0.1\nN=1000\nlambda = 12\ngroup = su3\nepsilon=1e-1\n");
    const auto p = parse_config(in);
    CHECK(p.a == doctest::Approx(0.1));
    CHECK(p.N == 1000);
    CHECK(p.lambda == 12);
    CHECK(p.group.n_colors() == 3);
    CHECK(p.epsilon == doctest::Approx(0.1));
    CHECK(p.m == 10);

    std::istringstream bad("speed = 3\n");
    CHECK_THROWS(parse_config(bad));
    std::istringstream bad2("N = many\n");
    CHECK_THROWS(parse_config(bad2));
}
