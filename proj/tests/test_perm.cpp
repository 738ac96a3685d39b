#include <map>
#include <queue>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace klreg;

TEST_CASE("rank counts entries in the northwest rectangle") {
    CHECK(rank(Permutation::identity(4), 2, 3) == 2);
    CHECK(rank(Permutation{2, 1}, 1, 1) == 0);
    const Permutation v{4, 6, 8, 9, 1, 2, 3, 10, 11, 5, 7};
    CHECK(rank(v, 4, 3) == 0);
    CHECK_THROWS_AS(rank(v, 0, 3), RangeError);
    CHECK_THROWS_AS(rank(v, 3, 12), RangeError);
}

TEST_CASE("Rothe diagram") {
    CHECK(rothe_diagram(Permutation::identity(5)).empty());
    CHECK(rothe_diagram(Permutation{2, 1}) == CellSet{{1, 1}});
    const auto D = rothe_diagram(fx::running_v());
    CHECK(D.size() == 14);
    CHECK(fx::running_v().length() == 14);
    CHECK(fx::running_w().length() == 7);
}

TEST_CASE("diagram size equals Coxeter length on S_n, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& u : fx::all_perms(n)) REQUIRE(static_cast<int>(rothe_diagram(u).size()) == coxeter_length(u));
}

TEST_CASE("Lehmer code") {
    CHECK(lehmer_code(fx::running_v()) == std::vector<int>{3, 4, 0, 0, 3, 3, 0, 0, 1, 0});
    CHECK(lehmer_code(Permutation::identity(6)) == std::vector<int>(6, 0));
    CHECK(from_lehmer_code({3, 4, 5, 5, 0, 0, 0, 2, 2, 0, 0}) == Permutation{4, 6, 8, 9, 1, 2, 3, 10, 11, 5, 7});
    CHECK_THROWS_AS(from_lehmer_code({0, 2}), ValidationError);
    // The row counts of D(v) are the code.
    const auto v = fx::s16_v();
    const auto c = lehmer_code(v);
    std::vector<int> rows(static_cast<std::size_t>(v.n()), 0);
    for (const auto& cell : rothe_diagram(v)) ++rows[static_cast<std::size_t>(cell.row - 1)];
    CHECK(rows == c);
}

TEST_CASE("code round trip on S_n, n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& u : fx::all_perms(n)) REQUIRE(from_lehmer_code(lehmer_code(u)) == u);
}

TEST_CASE("321 avoidance and Grassmannian permutations") {
    CHECK_FALSE(is_321_avoiding(Permutation{1, 7, 2, 5, 8, 3, 4, 6}));
    CHECK(is_321_avoiding(Permutation::identity(5)));
    CHECK(is_grassmannian(Permutation::identity(5)));
    CHECK(is_321_avoiding(Permutation{5, 8, 9, 10, 1, 2, 11, 3, 4, 6, 7}));
    for (const auto& u : fx::all_perms(6)) {
        bool brute = true;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                for (int k = j + 1; k <= 6; ++k)
                    if (u(i) > u(j) && u(j) > u(k)) brute = false;
        REQUIRE(is_321_avoiding(u) == brute);
        if (is_grassmannian(u)) REQUIRE(is_321_avoiding(u));
    }
}

TEST_CASE("Demazure products") {
    CHECK(demazure_product(2, {1, 1}) == Permutation{2, 1});
    CHECK(demazure_product(10, {3, 2, 1, 5, 7, 6, 8}) == fx::running_w());
    CHECK(demazure_product(4, {}) == Permutation::identity(4));
    CHECK_THROWS_AS(demazure_product(3, {3}), RangeError);
    CHECK_THROWS_AS(demazure_step(Permutation::identity(3), 0), RangeError);
    CHECK(demazure_step(Permutation{2, 1}, 1) == Permutation{2, 1});
}

TEST_CASE("Demazure product of a reduced word, with repeated letters absorbed") {
    for (const auto& u : fx::all_perms(5)) {
        // A reduced word from bubble sorting.
        std::vector<int> word;
        auto x = u.word();
        for (bool moved = true; moved;) {
            moved = false;
            for (std::size_t i = 0; i + 1 < x.size(); ++i)
                if (x[i] > x[i + 1]) {
                    std::swap(x[i], x[i + 1]);
                    word.insert(word.begin(), static_cast<int>(i) + 1);
                    moved = true;
                }
        }
        REQUIRE(static_cast<int>(word.size()) == u.length());
        REQUIRE(demazure_product(5, word) == u);
        if (!word.empty()) {
            auto doubled = word;
            doubled.push_back(word.back());
            REQUIRE(demazure_product(5, doubled) == u);
        }
    }
}

TEST_CASE("Bruhat order by rank dominance") {
    const auto w = fx::running_w();
    CHECK(bruhat_leq(Permutation::identity(10), w));
    CHECK(bruhat_leq(w, fx::running_v()));
    CHECK_FALSE(bruhat_leq(Permutation{2, 1}, Permutation::identity(2)));
    CHECK_THROWS_AS(bruhat_leq(Permutation{2, 1}, Permutation::identity(3)), ValidationError);
}

TEST_CASE("Bruhat order agrees with the transposition cover graph on S_n, n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        const auto perms = fx::all_perms(n);
        std::map<Permutation, int> idx;
        for (std::size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> up(perms.size());
        for (std::size_t i = 0; i < perms.size(); ++i)
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    auto x = perms[i].word();
                    std::swap(x[static_cast<std::size_t>(a)], x[static_cast<std::size_t>(b)]);
                    Permutation t(x);
                    if (t.length() == perms[i].length() + 1) up[i].push_back(idx[t]);
                }
        for (std::size_t i = 0; i < perms.size(); ++i) {
            std::vector<char> reach(perms.size(), 0);
            std::queue<int> q;
            q.push(static_cast<int>(i));
            reach[i] = 1;
            while (!q.empty()) {
                const int x = q.front();
                q.pop();
                for (int y : up[static_cast<std::size_t>(x)])
                    if (!reach[static_cast<std::size_t>(y)]) {
                        reach[static_cast<std::size_t>(y)] = 1;
                        q.push(y);
                    }
            }
            for (std::size_t j = 0; j < perms.size(); ++j) REQUIRE(bruhat_leq(perms[i], perms[j]) == static_cast<bool>(reach[j]));
        }
    }
}

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(Permutation({1, 1}), ValidationError);
    CHECK_THROWS_AS(Permutation({0, 1}), ValidationError);
    CHECK(Permutation{3, 1, 2}.inverse() == Permutation{2, 3, 1});
    CHECK(Permutation{2, 1, 3}.left_mul(2) == Permutation{3, 1, 2});
    CHECK(Permutation{2, 1, 3}.right_mul(2) == Permutation{2, 3, 1});
}

TEST_CASE("all_321_avoiding enumerates the Catalan family") {
    const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 0; n <= 8; ++n) CHECK(all_321_avoiding(n).size() == catalan[static_cast<std::size_t>(n)]);
    for (int n = 1; n <= 6; ++n) CHECK(all_321_avoiding(n) == fx::avoiding(n));
    CHECK_THROWS_AS(all_321_avoiding(-1), RangeError);
}
