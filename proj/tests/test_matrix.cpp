#include "nilmult/matrix.hpp"

#include "nilmult/fgab.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

using namespace nilmult;

namespace {

void check_snf_contract(const IntMatrix& m) {
    const SmithDecomposition snf = smith_normal_form(m);
    CHECK(snf.U * m * snf.V == snf.S);
    CHECK(abs(snf.U.determinant()) == 1);
    CHECK(abs(snf.V.determinant()) == 1);
    const std::size_t dim = std::min(m.rows(), m.cols());
    bool seen_zero = false;
    for (std::size_t i = 0; i < dim; ++i) {
        const Integer& d = snf.S(i, i);
        CHECK(d >= 0);
        if (d == 0) seen_zero = true;
        CHECK_FALSE((seen_zero && d != 0));  // zeros trail the nonzero chain
        if (i + 1 < dim && snf.S(i + 1, i + 1) != 0) CHECK(snf.S(i + 1, i + 1) % d == 0);
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) CHECK(snf.S(i, j) == 0);
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, int bound) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    return m;
}

}  // namespace

TEST_CASE("smith normal form on the worked examples", "[matrix]")
{
    const SmithDecomposition one = smith_normal_form(IntMatrix::from_rows({{6}}));
    CHECK(one.S == IntMatrix::from_rows({{6}}));
    CHECK(one.U == IntMatrix::identity(1));
    CHECK(one.V == IntMatrix::identity(1));

    const IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
    const SmithDecomposition snf = smith_normal_form(m);
    CHECK(snf.S == IntMatrix::from_rows({{1, 0}, {0, 6}}));
    check_snf_contract(m);

    const IntMatrix zero(2, 2);
    const SmithDecomposition z = smith_normal_form(zero);
    CHECK(z.S == zero);
    CHECK(z.U == IntMatrix::identity(2));
    CHECK(z.V == IntMatrix::identity(2));
}

TEST_CASE("diag(1,6) is reachable by small unimodular transforms", "[matrix]")
{
    // independent confirmation that diag(2,3) ~ diag(1,6): search tiny U, V
    const IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
    const IntMatrix target = IntMatrix::from_rows({{1, 0}, {0, 6}});
    bool found = false;
    std::int64_t e[8];
    for (e[0] = -3; e[0] <= 3 && !found; ++e[0])
        for (e[1] = -3; e[1] <= 3 && !found; ++e[1])
            for (e[2] = -3; e[2] <= 3 && !found; ++e[2])
                for (e[3] = -3; e[3] <= 3 && !found; ++e[3]) {
                    const IntMatrix u = IntMatrix::from_rows({{e[0], e[1]}, {e[2], e[3]}});
                    if (abs(u.determinant()) != 1) continue;
                    for (e[4] = -3; e[4] <= 3 && !found; ++e[4])
                        for (e[5] = -3; e[5] <= 3 && !found; ++e[5])
                            for (e[6] = -3; e[6] <= 3 && !found; ++e[6])
                                for (e[7] = -3; e[7] <= 3 && !found; ++e[7]) {
                                    const IntMatrix v =
                                        IntMatrix::from_rows({{e[4], e[5]}, {e[6], e[7]}});
                                    if (abs(v.determinant()) != 1) continue;
                                    if (u * m * v == target) found = true;
                                }
                }
    CHECK(found);
}

TEST_CASE("smith normal form contract holds on random matrices", "[matrix]")
{
    std::mt19937 rng(7);
    for (int round = 0; round < 60; ++round) check_snf_contract(random_matrix(rng, 4, 20));
    check_snf_contract(IntMatrix(0, 3));
    check_snf_contract(IntMatrix(3, 0));
}

TEST_CASE("smith normal form is deterministic", "[matrix]")
{
    const IntMatrix m = IntMatrix::from_rows({{6, 4, 2}, {3, 9, 5}, {0, 7, 7}});
    const SmithDecomposition a = smith_normal_form(m);
    const SmithDecomposition b = smith_normal_form(m);
    CHECK(a.S == b.S);
    CHECK(a.U == b.U);
    CHECK(a.V == b.V);
}

TEST_CASE("from_presentation reads the group off the relation matrix", "[matrix]")
{
    CHECK(from_presentation(IntMatrix::from_rows({{4}})) == FgAbGroup::cyclic(4));
    CHECK(from_presentation(IntMatrix::from_rows({{2, 0}, {0, 3}})) ==
          FgAbGroup::cyclic(6));
    CHECK(from_presentation(IntMatrix(0, 2)) == FgAbGroup::free_abelian(2));
}

TEST_CASE("presentations of diagonal matrices match the cyclic constructor", "[matrix]")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> diag(0, 9);
    for (int round = 0; round < 40; ++round) {
        const std::size_t r = 1 + rng() % 4, extra = rng() % 3;
        IntMatrix m(r, r + extra);
        std::vector<Integer> orders;
        for (std::size_t i = 0; i < r; ++i) {
            const int d = diag(rng);
            m(i, i) = d;
            orders.emplace_back(d);
        }
        for (std::size_t i = 0; i < extra; ++i) orders.emplace_back(0);
        CHECK(from_presentation(m) == from_cyclic_orders(orders));
    }
}

TEST_CASE("row space invariance: G(M) == G(U*M) for unimodular U", "[matrix]")
{
    const IntMatrix m = IntMatrix::from_rows({{2, 4, 0}, {0, 6, 3}});
    const IntMatrix u = IntMatrix::from_rows({{1, 1}, {2, 3}});  // det 1
    REQUIRE(u.determinant() == 1);
    CHECK(from_presentation(m) == from_presentation(u * m));
}

TEST_CASE("determinant agrees with cofactor expansion on small cases", "[matrix]")
{
    CHECK(IntMatrix::identity(4).determinant() == 1);
    CHECK(IntMatrix(0, 0).determinant() == 1);
    CHECK(IntMatrix::from_rows({{3, 8}, {4, 6}}).determinant() == -14);
    CHECK(IntMatrix::from_rows({{6, 1, 1}, {4, -2, 5}, {2, 8, 7}}).determinant() == -306);
    CHECK(IntMatrix::from_rows({{1, 2}, {2, 4}}).determinant() == 0);
}
