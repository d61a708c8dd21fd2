#include <doctest.h>

#include "filtcoh/catalog.hpp"
#include "filtcoh/invariants.hpp"
#include "filtcoh/spectral.hpp"

using namespace filtcoh;

TEST_CASE("bundle preconditions")
{
    CHECK_THROWS_AS(build_bundle(build_cone(catalog::torus(2), 0)), ModelError);
    CHECK_THROWS_AS(build_bundle(build_cone(catalog::torus(2), 2)), ModelError);
}

TEST_CASE("adjoints are transposes degreewise")
{
    OperatorBundle b = build_bundle(build_cone(catalog::kodaira_thurston(), 1));
    REQUIRE(b.adjoints.size() == b.cone.boundary.size());
    for (std::size_t k = 0; k < b.adjoints.size(); ++k)
        CHECK(b.adjoints[k] == b.cone.boundary[k].transpose());
}

TEST_CASE("surface bundle degenerates to zero")
{
    // psi = 0 and d = 0 on the ring model, so D = 0 entirely
    OperatorBundle b = build_bundle(build_cone(catalog::surface(2), 1));
    CHECK(b.d_op.is_zero());
    CHECK(D_kernel_dim(b) == b.d_op.cols());
    CHECK(D_kernel_parity(b) == 0);  // dim C^even is even here
}

TEST_CASE("D is skew and has even rank on every even-dimensional catalog model")
{
    for (const auto& name : catalog::names()) {
        auto m = catalog::build(name);
        if (m->top_degree() % 2 != 0) continue;
        CAPTURE(name);
        OperatorBundle b = build_bundle(build_cone(m, 1));
        CHECK((b.d_op + b.d_op.transpose()).is_zero());
        CHECK(D_rank(b) % 2 == 0);
    }
}

TEST_CASE("D dimensions")
{
    OperatorBundle t = build_bundle(build_cone(catalog::torus(3), 1));
    CHECK(t.d_op.rows() == 64);
    CHECK(t.d_op.cols() == 64);
    OperatorBundle s = build_bundle(build_cone(catalog::build("s2xs2xs2"), 1));
    CHECK(s.d_op.rows() == 8);
}

TEST_CASE("hodge kernel equals the even filtered Betti sum")
{
    auto expect = [](const char* name, int value) {
        OperatorBundle b = build_bundle(build_cone(catalog::build(name), 1));
        HodgeEvenResult r = hodge_even_kernel_dim(b);
        CAPTURE(name);
        CHECK(r.kernel_dim == value);
        CHECK(r.even_betti_sum == value);
    };
    expect("s2xs2xs2", 6);
    expect("kt_x_s2", 20);
    expect("surface_g0", 2 + 2 * 0);
    expect("surface_g1", 2 + 2 * 1);
    expect("surface_g3", 2 + 2 * 3);
}

TEST_CASE("D kernel parity matches ell where the statement applies")
{
    for (const auto& name : catalog::names()) {
        auto m = catalog::build(name);
        if (m->top_degree() % 2 != 0) continue;
        CAPTURE(name);
        OperatorBundle b = build_bundle(build_cone(m, 1));
        Semicharacteristics s = semicharacteristics(m);
        if (s.ell) CHECK(D_kernel_parity(b) == *s.ell);
    }
}

TEST_CASE("full Hodge decomposition: Laplacian kernels equal cone Betti numbers")
{
    for (const auto& name : {"kodaira_thurston", "s2xs2xs2", "surface_g2", "torus2"}) {
        CAPTURE(name);
        ConeComplex c = build_cone(catalog::build(name), 1);
        CHECK(laplacian_kernel_dims(c) == cone_betti(c));
    }
}
