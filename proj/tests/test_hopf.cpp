#include "helpers.hpp"

using namespace bft;
using namespace braidforge::examples;

TEST_CASE("Hopf axioms hold for the built-in algebras")
{
    std::vector<std::pair<std::string, HopfData>> algebras = {
        {"Fun(Z2)", function_algebra(1)},   {"Fun(Z2^2)", function_algebra(2)},
        {"Lambda0", exterior_algebra(0)},   {"Lambda2", exterior_algebra(1)},
        {"Lambda4", exterior_algebra(2)},   {"Lambda6", exterior_algebra(3)},
        {"Sweedler", sweedler_algebra()}};
    for (const auto& [name, h] : algebras) {
        CAPTURE(name);
        const Report r = check_hopf_axioms(h);
        for (const auto* e : r.failures())
            FAIL_CHECK(e->axiom << " " << e->residual);
        CHECK(r.passed());
    }
}

TEST_CASE("corrupting one structure constant breaks associativity")
{
    HopfData h = sweedler_algebra();
    Matrix mu = h.mu.matrix();
    mu(2, 1 * 4 + 2) += 1e-3;  // G x -> x component
    h.mu = Mor(h.mu.source(), h.mu.target(), mu);
    const Report r = check_hopf_axioms(h);
    CHECK_FALSE(r.passed());
    REQUIRE(r.find("assoc") != nullptr);
    CHECK_FALSE(r.find("assoc")->pass);
}

TEST_CASE("element arithmetic")
{
    const HopfData h = exterior_algebra(2);
    std::mt19937_64 rng(31);
    auto rand_even_elem = [&](std::size_t k) {
        const SuperSpace s = k == 1 ? h.space : tensor_obj(h.space, h.space);
        Vector v = Vector::Zero(s.dim());
        for (std::size_t i = 0; i < s.dim(); ++i)
            if (s.parity(i) == 0)
                v(i) = rand_scalar(rng);
        return v;
    };
    for (std::size_t k : {1u, 2u}) {
        const Vector x = rand_even_elem(k), y = rand_even_elem(k), z = rand_even_elem(k);
        const Vector l = multiply(h, k, multiply(h, k, x, y), z);
        const Vector r = multiply(h, k, x, multiply(h, k, y, z));
        CHECK((l - r).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((multiply(h, k, unit_power(h, k), x) - x).cwiseAbs().maxCoeff() < 1e-14);
    }
    // exp(x) exp(-x) = 1 for a nilpotent even x
    Vector x = Vector::Zero(h.dim());
    x(5) = Scalar(0.3, 1.1);  // e1e2
    x(10) = Scalar(-2.0, 0.5);  // e3e4
    const Vector e = element_exp(h, 1, x), em = element_exp(h, 1, -x);
    CHECK((multiply(h, 1, e, em) - h.eta.as_vector()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("legs of a two-tensor")
{
    const HopfData h = function_algebra(1);
    Vector x = Vector::Zero(4);
    x(1) = 2.0;  // d0 (x) d1
    const Vector v = embed_legs(h, x, 0, 2);
    // d0 (x) 1 (x) d1 = d0 (x) (d0 + d1) (x) d1
    CHECK(v(0 * 4 + 0 * 2 + 1) == Scalar(2.0));
    CHECK(v(0 * 4 + 1 * 2 + 1) == Scalar(2.0));
    CHECK(v.cwiseAbs().sum() == doctest::Approx(4.0));
}

TEST_CASE("grouplike solved from a cointegral")
{
    const HopfData h = sweedler_algebra();
    Eigen::RowVectorXcd l(4);
    l << 0, 0, 1, 0;  // x*
    const GrouplikeSolution g = solve_grouplike(h, Mor::functional(h.space, l));
    REQUIRE(g.ok());
    Vector expect = Vector::Zero(4);
    expect(1) = 1.0;
    CHECK((g.g->as_vector() - expect).cwiseAbs().maxCoeff() < 1e-12);

    // the counit is not a right cointegral of Sweedler's algebra
    const GrouplikeSolution bad = solve_grouplike(h, h.eps);
    CHECK_FALSE(bad.ok());
}

TEST_CASE("theorem conditions on valid and broken data")
{
    const GCategory c = ising();
    CHECK(check_assoc_data(c.hopf(), c.assoc()).passed());
    CHECK(check_braid_data(c.hopf(), c.assoc(), *c.braid()).passed());

    AssocData a = c.assoc();
    a.lambda = 1.01 * a.lambda;
    const Report r = check_assoc_data(c.hopf(), a);
    CHECK_FALSE(r.find("normalization")->pass);

    BraidData b = *c.braid();
    b.beta = -b.beta;
    // both square roots satisfy every condition of the braiding theorem
    CHECK(check_braid_data(c.hopf(), c.assoc(), b).passed());
    b.beta = b.beta * Scalar(0, 1);
    CHECK_FALSE(check_braid_data(c.hopf(), c.assoc(), b).find("cond2.lambda_sigma")->pass);
}
