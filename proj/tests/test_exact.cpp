#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "freefusion/exact_matrix.hpp"
#include "freefusion/gaussian_rational.hpp"

using namespace freefusion;

namespace {

GaussianRational gr(int re_n, int re_d, int im_n, int im_d) {
    return {Rational(re_n, re_d), Rational(im_n, im_d)};
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = gr(num(rng), den(rng), num(rng), den(rng));
    return m;
}

} // namespace

TEST_CASE("gaussian rational field arithmetic") {
    GaussianRational i(Rational(0), Rational(1));
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z = gr(1, 2, -3, 4);
    CHECK(z * z.conj() == GaussianRational(z.norm2()));
    CHECK(z / z == GaussianRational(1));
    CHECK((z + (-z)).is_zero());
    CHECK_THROWS_AS(z / GaussianRational(), domain_error);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (int t = 0; t < 200; ++t) {
        GaussianRational a = gr(num(rng), den(rng), num(rng), den(rng));
        GaussianRational b = gr(num(rng), den(rng), num(rng), den(rng));
        if (b.is_zero()) continue;
        CHECK((a / b) * b == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}

TEST_CASE("rational parse and format round trip") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(format_rational(Rational(-3, 4)) == "-3/4");
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("x"), parse_error);
}

TEST_CASE("matrix algebra basics") {
    ExactMatrix id = ExactMatrix::identity(3);
    CHECK(id * id == id);
    CHECK(id.trace() == GaussianRational(3));

    ExactMatrix j(2, 2);
    j.at(0, 1) = 1;
    j.at(1, 0) = -1;
    CHECK(j.adjoint() == j.transpose());
    CHECK((j * j.adjoint()).as_scalar_matrix().value() == GaussianRational(1));

    ExactMatrix d(2, 2);
    d.at(0, 0) = 1;
    d.at(1, 1) = 2;
    CHECK_FALSE(d.as_scalar_matrix().has_value());
}

TEST_CASE("rank by fraction-free elimination") {
    ExactMatrix z(3, 4);
    CHECK(z.rank() == 0);
    CHECK(ExactMatrix::identity(4).rank() == 4);

    ExactMatrix m(3, 3);
    // rows 0 and 2 proportional
    m.at(0, 0) = 1;
    m.at(0, 1) = gr(1, 2, 0, 1);
    m.at(0, 2) = 3;
    m.at(1, 0) = gr(0, 1, 1, 1);
    m.at(1, 1) = 2;
    m.at(1, 2) = 0;
    m.at(2, 0) = 2;
    m.at(2, 1) = 1;
    m.at(2, 2) = 6;
    CHECK(m.rank() == 2);
}

TEST_CASE("inverse on random invertible matrices") {
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 20) {
        ExactMatrix m = random_matrix(rng, 3);
        if (m.rank() != 3) continue;
        ExactMatrix inv = m.inverse();
        CHECK(m * inv == ExactMatrix::identity(3));
        CHECK(inv * m == ExactMatrix::identity(3));
        ++done;
    }
    ExactMatrix sing(2, 2);
    sing.at(0, 0) = 1;
    sing.at(1, 0) = 1;
    CHECK_THROWS_AS(sing.inverse(), domain_error);
}

TEST_CASE("kron dimensions and values") {
    ExactMatrix a(1, 2), b(2, 1);
    a.at(0, 0) = 2;
    a.at(0, 1) = gr(0, 1, 1, 1);
    b.at(0, 0) = 3;
    b.at(1, 0) = 5;
    ExactMatrix k = kron(a, b);
    REQUIRE(k.rows() == 2);
    REQUIRE(k.cols() == 2);
    CHECK(k.at(0, 0) == GaussianRational(6));
    CHECK(k.at(1, 0) == GaussianRational(10));
    CHECK(k.at(0, 1) == gr(0, 1, 3, 1));
}

TEST_CASE("matrix file round trip is bit-exact") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 25; ++t) {
        ExactMatrix m = random_matrix(rng, 2 + t % 3);
        std::stringstream buf;
        write_square_matrix(buf, m);
        CHECK(read_square_matrix(buf) == m);
    }
    std::stringstream bad("2\n1/1 0/1\n");
    CHECK_THROWS_AS(read_square_matrix(bad), parse_error);
    std::stringstream none("");
    CHECK_THROWS_AS(read_square_matrix(none), parse_error);
}
