#include "helpers.hpp"

using namespace bft;

TEST_CASE("super spaces")
{
    SuperSpace v({"a", "b"}, {0, 1});
    CHECK(v.dim() == 2);
    CHECK(v.parity(1) == 1);
    CHECK_FALSE(v.is_purely_even());
    CHECK_THROWS_AS(SuperSpace({"a", "a"}, {0, 0}), ShapeError);
    CHECK_THROWS_AS(SuperSpace({"a"}, {0, 1}), ShapeError);

    const SuperSpace vw = tensor_obj(v, SuperSpace({"x", "y", "z"}, {1, 0, 0}));
    CHECK(vw.dim() == 6);
    // parity of basis (i, j) at i*3 + j is the sum mod 2
    CHECK(vw.parity(0) == 1);
    CHECK(vw.parity(3) == 0);
    CHECK(vw.label(4) == "b|y");
    CHECK(tensor_obj(SuperSpace::unit(), v).labels() == v.labels());
}

TEST_CASE("morphisms reject malformed data")
{
    SuperSpace v({"a", "b"}, {0, 1});
    Matrix odd = Matrix::Zero(2, 2);
    odd(0, 1) = 1.0;
    CHECK_THROWS_AS(Mor(v, v, odd), ShapeError);
    CHECK_THROWS_AS(Mor(v, v, Matrix::Identity(3, 3)), ShapeError);
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(Mor(v, v, bad), ShapeError);
    CHECK_NOTHROW(Mor(v, v, Matrix::Identity(2, 2)));
}

TEST_CASE("koszul signs")
{
    const std::vector<int> odd2 = {1, 1};
    const std::vector<std::size_t> swap = {1, 0};
    CHECK(koszul_sign(odd2, swap) == -1);
    const std::vector<int> mixed = {1, 0};
    CHECK(koszul_sign(mixed, swap) == 1);
    // cyclic shift of three odd factors is even
    const std::vector<int> odd3 = {1, 1, 1};
    const std::vector<std::size_t> cyc = {1, 2, 0};
    CHECK(koszul_sign(odd3, cyc) == 1);
}

TEST_CASE("symmetry is involutive and satisfies the hexagon")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        const SuperSpace u = rand_space(rng, 3, "u"), v = rand_space(rng, 3, "v"),
                         w = rand_space(rng, 3, "w");
        const Mor svw = symmetry(v, w), swv = symmetry(w, v);
        CHECK(approx_eq(swv * svw, Mor::identity(tensor_obj(v, w))).equal);
        // s_{U, V(x)W} = (id_V (x) s_{U,W}) (s_{U,V} (x) id_W)
        const Mor lhs = symmetry(u, tensor_obj(v, w));
        const Mor rhs = tensor_mor(Mor::identity(v), symmetry(u, w)) *
                        tensor_mor(symmetry(u, v), Mor::identity(w));
        CHECK(approx_eq(lhs, rhs).equal);
    }
}

TEST_CASE("symmetry is natural for even maps")
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 10; ++t) {
        const SuperSpace v = rand_space(rng, 3, "v"), v2 = rand_space(rng, 3, "p"),
                         w = rand_space(rng, 3, "w"), w2 = rand_space(rng, 3, "q");
        const Mor f = rand_even(rng, v, v2), g = rand_even(rng, w, w2);
        const Mor lhs = symmetry(v2, w2) * tensor_mor(f, g);
        const Mor rhs = tensor_mor(g, f) * symmetry(v, w);
        CHECK(approx_eq(lhs, rhs, 1e-12).equal);
    }
}

TEST_CASE("permutations compose")
{
    std::mt19937_64 rng(13);
    std::vector<SuperSpace> f = {rand_space(rng, 2, "a"), rand_space(rng, 2, "b"),
                                 rand_space(rng, 2, "c"), rand_space(rng, 2, "d")};
    std::vector<std::size_t> p1 = {2, 0, 3, 1}, p2 = {1, 3, 0, 2};
    const Mor a = permutation(f, p1);
    std::vector<SuperSpace> mid;
    for (auto k : p1)
        mid.push_back(f[k]);
    const Mor b = permutation(mid, p2);
    std::vector<std::size_t> both;
    for (auto k : p2)
        both.push_back(p1[k]);
    CHECK(approx_eq(b * a, permutation(f, both)).equal);
}

TEST_CASE("omega and tensor functoriality")
{
    SuperSpace v({"a", "b", "c"}, {0, 1, 1});
    const Mor w = omega_map(v, OmegaFlag::Parity);
    CHECK(w.matrix()(1, 1) == Scalar(-1));
    CHECK(approx_eq(w * w, Mor::identity(v)).equal);
    CHECK(approx_eq(omega_map(v, OmegaFlag::Identity), Mor::identity(v)).equal);

    std::mt19937_64 rng(14);
    const SuperSpace x = rand_space(rng, 3, "x"), y = rand_space(rng, 3, "y");
    const Mor f1 = rand_even(rng, x, x), f2 = rand_even(rng, x, x);
    const Mor g1 = rand_even(rng, y, y), g2 = rand_even(rng, y, y);
    CHECK(approx_eq(tensor_mor(f2, g2) * tensor_mor(f1, g1), tensor_mor(f2 * f1, g2 * g1), 1e-12)
              .equal);
}
