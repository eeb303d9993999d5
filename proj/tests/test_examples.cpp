#include "helpers.hpp"

#include <numbers>

using namespace bft;
using namespace braidforge::examples;

TEST_CASE("Ising preset")
{
    const TYParams p = ising_params();
    CHECK(p.k == 1);
    CHECK(p.chi[1][1] == -1);
    CHECK(std::abs(p.tau - 1.0 / std::numbers::sqrt2) < 1e-15);
    CHECK(std::abs(p.sigma[1] - Scalar(0, 1)) < 1e-15);
    CHECK(std::abs(p.beta - expi(std::numbers::pi / 8)) < 1e-15);
    CHECK_NOTHROW(p.validate());
    // the default square root from the Gram matrix is the same
    const TYParams q = TYParams::from_gram(1, {{1}});
    CHECK(std::abs(q.beta - p.beta) < 1e-15);
}

TEST_CASE("TY parameters from Gram matrices")
{
    const TYParams p = TYParams::from_gram(2, {{1, 0}, {0, 1}});
    CHECK(p.order() == 4);
    CHECK_NOTHROW(p.validate());
    CHECK(p.chi[3][3] == 1);
    CHECK(p.chi[1][3] == -1);
    // sigma(e1 + e2) = chi(e1, e2) sigma(e1) sigma(e2) = i * i
    CHECK(std::abs(p.sigma[3] + 1.0) < 1e-15);

    CHECK_THROWS_AS(TYParams::from_gram(2, {{1, 1}, {1, 1}}).validate(), ShapeError);
    CHECK_THROWS_AS(TYParams::from_gram(1, {{2}}), ShapeError);
    CHECK_THROWS_AS(TYParams::from_gram(1, {{1}}, Scalar(0.5)).validate(), ShapeError);
    CHECK_THROWS_AS(TYParams::from_gram(1, {{1}}, std::nullopt, std::nullopt, Scalar(1.0)).validate(),
                    ShapeError);
    // sigma(e1)^2 must equal chi(e1, e1)
    CHECK_THROWS_AS(
        TYParams::from_gram(1, {{1}}, std::nullopt, std::vector<Scalar>{Scalar(1)}).validate(),
        ShapeError);

    const GCategory c = tambara_yamagami(p);
    CHECK(c.valid());
}

TEST_CASE("exterior algebra basis order")
{
    const HopfData h = exterior_algebra(2);
    const std::vector<std::string> expect = {"1",    "e1",   "e2",   "e3",   "e4",    "e1e2",
                                             "e1e3", "e1e4", "e2e3", "e2e4", "e3e4",  "e1e2e3",
                                             "e1e2e4", "e1e3e4", "e2e3e4", "e1e2e3e4"};
    CHECK(h.space.labels() == expect);
    CHECK(h.space.parity(5) == 0);
    CHECK(h.space.parity(11) == 1);
    // e2 e1 = -e1e2
    CHECK(h.mu.matrix()(5, 2 * 16 + 1) == Scalar(-1));
}

TEST_CASE("SF data")
{
    const GCategory c = symplectic_fermions(1);
    const HopfData& h = c.hopf();
    const Vector chat = sf_chat(h, 1);
    // C-hat_H = 2 e1e2
    CHECK(std::abs(chat(3) - 2.0) < 1e-15);
    CHECK(std::abs(c.braid()->beta - expi(-std::numbers::pi / 4)) < 1e-15);
    CHECK(c.braid()->omega == OmegaFlag::Parity);
    CHECK_THROWS_AS(symplectic_fermions(4), ShapeError);
}

TEST_CASE("Sweedler associativity data is solved for")
{
    const HopfData h = sweedler_algebra();
    const SweedlerSolution s = solve_sweedler_assoc(h);
    CHECK(s.cointegral_nullity == 1);
    CHECK(s.residual < 1e-12);
    const Matrix g = reshape_pair(h, s.data.gamma.as_vector());
    CHECK(std::abs(g.determinant() - 1.0) < 1e-10);
    // grouplike block on span{1, G}
    CHECK(max_abs(g.topLeftCorner(2, 2) - 0.5 * (Matrix(2, 2) << 1, 1, 1, -1).finished()) < 1e-10);
    CHECK(max_abs(g.topRightCorner(2, 2)) < 1e-10);
    CHECK(check_assoc_data(h, s.data).passed());
    // g is the grouplike G
    CHECK(std::abs(s.data.g.as_vector()(1) - 1.0) < 1e-12);
}

TEST_CASE("family checks pass")
{
    CHECK(ising_example().checks.passed());
    CHECK(sf_example(1).checks.passed());
    CHECK(sf_example(2).checks.passed());
    CHECK(ty_example(TYParams::from_gram(2, {{1, 0}, {0, 1}})).checks.passed());
    CHECK(sweedler_example().checks.passed());
}
