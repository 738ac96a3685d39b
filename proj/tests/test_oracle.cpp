#include <doctest.h>

#include <set>

#include "fixtures.hpp"

using namespace klreg;

namespace {

template <class F>
void for_pairs(int n, F&& f) {
    const auto perms = fx::avoiding(n);
    for (const auto& v : perms)
        for (const auto& w : perms)
            if (bruhat_leq(w, v)) f(v, w);
}

std::set<CellSet> as_set(const std::vector<CellSet>& xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("closure: running examples") {
    const auto cs = closure(fx::running_v(), fx::running_w());
    CHECK(cs.max_size == 8);
    CHECK(cs.min_size == 7);
    CHECK(cs.diagrams.front() == d_top(fx::running_v(), fx::running_w()).pluses);
    CHECK(closure(fx::running_v(), fx::running_w()).diagrams == cs.diagrams);

    const auto big = closure(fx::intro_v(), fx::intro_w());
    CHECK(big.max_size == 16);
    CHECK(big.min_size == 12);
    CHECK_THROWS_AS(closure(fx::intro_v(), fx::intro_w(), 5), ResourceError);

    const Permutation id = Permutation::identity(4);
    const auto triv = closure(Permutation{2, 3, 4, 1}, id);
    CHECK(triv.diagrams.size() == 1);
    CHECK(triv.diagrams.front().empty());
}

TEST_CASE("closure: the l(w) slice is the excited-only closure") {
    for (int n = 2; n <= 5; ++n)
        for_pairs(n, [](const Permutation& v, const Permutation& w) {
            const auto full = closure(v, w);
            const auto exc = closure(v, w, kDefaultBudget, false);
            CHECK(as_set(full.slice(static_cast<std::size_t>(w.length()))) == as_set(exc.diagrams));
            CHECK(full.min_size == static_cast<std::size_t>(w.length()));
        });
    const auto full = closure(fx::running_v(), fx::running_w());
    CHECK(as_set(full.slice(7)) == as_set(closure(fx::running_v(), fx::running_w(), kDefaultBudget, false).diagrams));
}

TEST_CASE("groth_support pulls back to pipe sets") {
    const auto v = fx::running_v();
    const auto w = fx::running_w();
    const auto sup = groth_support(v, w);
    const auto lw = w.length();
    for (const auto& [P, sign] : sup) {
        CHECK(delta(v, P) == w);
        CHECK(P.subset_of(rothe_diagram(v)));
        CHECK(sign == ((static_cast<int>(P.size()) - lw) % 2 == 0 ? 1 : -1));
    }
    CHECK(sup.size() == closure(v, w).diagrams.size());
}

TEST_CASE("closure and pipe enumeration are in bijection") {
    for (int n = 2; n <= 5; ++n)
        for_pairs(n, [](const Permutation& v, const Permutation& w) {
            std::set<CellSet> pulled;
            for (const auto& [P, sign] : groth_support(v, w)) pulled.insert(P);
            const auto pipes = enumerate_pipes(v, w, false);
            CHECK(pulled == as_set(pipes));
            CHECK(pipes.size() == closure(v, w).diagrams.size());
            const auto reduced = enumerate_pipes(v, w, true);
            CHECK(reduced.size() == closure(v, w, kDefaultBudget, false).diagrams.size());
            for (const auto& P : reduced) CHECK(static_cast<int>(P.size()) == w.length());
        });
}

TEST_CASE("enumerate_pipes: edge cases") {
    const Permutation s1{2, 1};
    CHECK(enumerate_pipes(s1, s1, false) == std::vector<CellSet>{CellSet{{1, 1}}});
    CHECK(enumerate_pipes(s1, Permutation::identity(2), false) == std::vector<CellSet>{CellSet{}});
    CHECK_THROWS_AS(enumerate_pipes(s1, Permutation::identity(3), false), ValidationError);
    CHECK_THROWS_AS(enumerate_pipes(fx::intro_v(), fx::intro_w(), false, 10), ResourceError);
}

TEST_CASE("brute_earliest_subword matches d_ne") {
    for (int n = 2; n <= 5; ++n)
        for_pairs(n, [](const Permutation& v, const Permutation& w) { CHECK(brute_earliest_subword(v, w) == d_ne(v, w)); });
    CHECK(brute_earliest_subword(fx::running_v(), fx::running_w()) == d_ne(fx::running_v(), fx::running_w()));
    CHECK(brute_earliest_subword(Permutation{3, 1, 2}, Permutation::identity(3)).empty());
}

TEST_CASE("brute_minimal_w") {
    CHECK(brute_minimal_w(4, {}) == Permutation::identity(4));
    CHECK(brute_minimal_w(2, {{1, 1, 0}}) == Permutation{2, 1});
    CHECK_THROWS_AS(brute_minimal_w(3, {{1, 1, 0}, {1, 1, 1}}), ConstraintError);
}

TEST_CASE("enumerate_nilp is in bijection with excited diagrams") {
    for (const auto& L : {fx::two_sided(), fx::small_a(), fx::small_b(), fx::small_c()}) {
        const auto pp = perm_of(L);
        const auto fams = enumerate_nilp(L);
        const auto exc = closure(pp.v, pp.w, kDefaultBudget, false);
        CHECK(fams.size() == exc.diagrams.size());
        std::set<CellSet> images;
        for (const auto& P : fams) images.insert(blanks(L, P));
        CHECK(images == as_set(exc.diagrams));
    }
    const Ladder flat({2, 2}, {}, {{{2, 0}, 1}});
    CHECK(enumerate_nilp(flat).size() == 1);
    CHECK_THROWS_AS(enumerate_nilp(fx::two_sided(), 3), ResourceError);
}

TEST_CASE("enumerate_nilp on the large example keeps twenty blanks") {
    const auto L = fx::large_ladder();
    const auto fams = enumerate_nilp(L, 50000000);
    CHECK(!fams.empty());
    for (const auto& P : fams) CHECK(blanks(L, P).size() == 20);
    const auto pp = perm_of(L);
    CHECK(fams.size() == closure(pp.v, pp.w, kDefaultBudget, false).diagrams.size());
}
