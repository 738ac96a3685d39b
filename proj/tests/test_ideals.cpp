#include <doctest.h>

#include "fixtures.hpp"

using namespace klreg;

namespace {

SparsePolynomial z(int i, int j) { return SparsePolynomial::variable({i, j}); }

template <class F>
void for_pairs(int n, F&& f) {
    const auto perms = fx::avoiding(n);
    for (const auto& v : perms)
        for (const auto& w : perms)
            if (bruhat_leq(w, v)) f(v, w);
}

}  // namespace

TEST_CASE("sparse polynomial arithmetic") {
    const auto p = z(1, 1) * z(2, 2) - z(1, 2) * z(2, 1);
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK(p.is_multilinear());
    CHECK((p - p).is_zero());
    CHECK(to_string(p) == "z_1_1*z_2_2 - z_1_2*z_2_1");
    CHECK((-p).sign_normalized() == p);
    CHECK_FALSE((z(1, 1) * z(1, 1)).is_multilinear());
    CHECK_FALSE((z(1, 1) + SparsePolynomial::constant(1)).is_homogeneous());
    CHECK(p.variables().size() == 4);
}

TEST_CASE("determinant of symbolic matrices") {
    const Entry one{Entry::Kind::One, {}};
    const Entry zero{};
    auto var = [](int i, int j) { return Entry{Entry::Kind::Var, {i, j}}; };
    CHECK(determinant({{var(1, 1), var(1, 2)}, {var(2, 1), var(2, 2)}}) == z(1, 1) * z(2, 2) - z(1, 2) * z(2, 1));
    CHECK(determinant({{one, zero}, {zero, one}}) == SparsePolynomial::constant(1));
    CHECK(determinant({{zero, one, zero}, {one, zero, zero}, {zero, zero, one}}) == SparsePolynomial::constant(-1));
    CHECK(determinant({}) == SparsePolynomial::constant(1));
}

TEST_CASE("kl_matrix layout") {
    const Permutation v{2, 3, 1};
    const auto M = kl_matrix(v);
    CHECK(M[0][1].kind == Entry::Kind::One);
    CHECK(M[0][0].kind == Entry::Kind::Var);
    CHECK(M[0][0].var == Cell{1, 1});
    CHECK(M[1][0].kind == Entry::Kind::Var);
    CHECK(M[2][0].kind == Entry::Kind::One);
    CHECK(M[2][2].kind == Entry::Kind::Zero);
}

TEST_CASE("kl_generators: small cases") {
    const Permutation v{2, 3, 1};
    const Permutation w{2, 1, 3};
    CHECK(kl_generators(v, w) == GeneratorSet{z(1, 1)});
    CHECK(kl_generators_raw(v, w) == GeneratorSet{z(1, 1)});
    CHECK(kl_generators(v, Permutation::identity(3)).empty());
    CHECK_THROWS_AS(kl_generators(Permutation{2, 1, 3}, Permutation{1, 3, 2}), IncomparableError);
    CHECK_THROWS_AS(kl_generators(v, Permutation{2, 1}), ValidationError);
}

TEST_CASE("kl_generators are homogeneous and multilinear") {
    for (int n = 2; n <= 5; ++n)
        for_pairs(n, [](const Permutation& v, const Permutation& w) {
            for (const auto& g : kl_generators(v, w)) {
                CHECK(g.is_homogeneous());
                CHECK(g.is_multilinear());
            }
        });
    for (const auto& g : kl_generators_raw(fx::running_v(), fx::running_w())) {
        CHECK(g.is_homogeneous());
        CHECK(g.is_multilinear());
    }
}

TEST_CASE("reduced and literal generators span the same ideal") {
    for (int n = 2; n <= 4; ++n)
        for_pairs(n, [](const Permutation& v, const Permutation& w) {
            CHECK(homogeneous_ideals_equal(kl_generators(v, w), kl_generators_raw(v, w)));
        });
    CHECK(homogeneous_ideals_equal(kl_generators(fx::running_v(), fx::running_w()), kl_generators_raw(fx::running_v(), fx::running_w())));
}

TEST_CASE("ideal membership") {
    const auto det = z(1, 1) * z(2, 2) - z(1, 2) * z(2, 1);
    const GeneratorSet gens{z(1, 1), z(1, 2)};
    CHECK(homogeneous_ideal_contains(gens, z(1, 1) * z(3, 3)));
    CHECK(homogeneous_ideal_contains(gens, det));
    CHECK_FALSE(homogeneous_ideal_contains(GeneratorSet{z(1, 1)}, det));
    CHECK(homogeneous_ideal_contains(gens, z(1, 1) * z(2, 2) - z(1, 2) * z(2, 1) + z(2, 1) * z(1, 2)));
    CHECK_FALSE(homogeneous_ideals_equal(gens, GeneratorSet{z(1, 1)}));
}

TEST_CASE("ladder generators of the small two-sided example") {
    const auto L = fx::two_sided();
    const auto lad = ladder_generators(L);
    const auto pp = perm_of(L);
    const auto kl = kl_generators_compressed(pp.v, pp.w);
    CHECK(lad.size() == 17);
    CHECK(kl == lad);

    // Literal minors of M^(v) generate the same ideal with redundant extras.
    const auto raw = kl_generators_raw(pp.v, pp.w, compress(pp.v).maps.forward);
    CHECK(raw.size() == 35);
    CHECK(homogeneous_ideals_equal(raw, lad));

    // Filling cutout cells with zeros yields minors outside the ideal.
    const auto zero_fill = ladder_generators(L, MinorConvention::ZeroFill);
    CHECK(zero_fill.size() == 61);
    for (const auto& g : lad) CHECK(homogeneous_ideal_contains(zero_fill, g));
    CHECK_FALSE(homogeneous_ideals_equal(zero_fill, lad));

    int cubic = 0;
    for (const auto& g : zero_fill)
        if (g.degree() == 3) ++cubic;
    CHECK(cubic <= 40);
    for (const auto& g : lad) CHECK(g.variables().size() >= 1);
}

TEST_CASE("ladder generators agree with Kazhdan-Lusztig generators") {
    for (const auto& L : {fx::small_a(), fx::small_b(), fx::small_c()}) {
        const auto pp = perm_of(L);
        CHECK(kl_generators_compressed(pp.v, pp.w) == ladder_generators(L));
    }
    CHECK(ladder_generators(Ladder({1}, {}, {{{1, 0}, 1}})) == GeneratorSet{z(1, 1)});
    CHECK_THROWS_AS(ladder_generators(Ladder({2, 2}, {1}, {})), ValidationError);
}

TEST_CASE("K-polynomial") {
    const Permutation s1{2, 1};
    const auto k = k_polynomial(s1, s1);
    CHECK(k.coeffs == std::vector<long long>{1, -1});
    CHECK(to_string(k) == "1 - t");
    CHECK(to_string(k_polynomial(s1, Permutation::identity(2))) == "1");

    const auto big = k_polynomial(fx::running_v(), fx::running_w());
    CHECK(big.degree() == 8);
    CHECK(big.at_zero() == 1);

    for (int n = 2; n <= 5; ++n)
        for_pairs(n, [](const Permutation& v, const Permutation& w) {
            const auto kp = k_polynomial(v, w);
            CHECK(kp.degree() == groth_degree(v, w));
            CHECK(kp.at_zero() == 1);
        });
}

TEST_CASE("generator export") {
    const GeneratorSet gens{z(1, 1), z(1, 2) * z(2, 1) - z(1, 1) * z(2, 2)};
    const auto plain = export_plain(gens);
    CHECK(plain.find("z_1_1\n") != std::string::npos);
    const auto m2 = export_macaulay2(gens, "J");
    CHECK(m2.rfind("R = QQ[z_1_1, z_1_2, z_2_1, z_2_2];", 0) == 0);
    CHECK(m2.find("J = ideal(") != std::string::npos);
}
