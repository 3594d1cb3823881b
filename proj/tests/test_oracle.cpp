#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "giftcount/oracle.hpp"

using namespace giftcount;

namespace {

std::string seq_str(const std::vector<unsigned>& seq) {
    std::string s;
    for (unsigned v : seq) s += std::to_string(v);
    return s;
}

std::vector<std::string> all_sequences(unsigned sigma, unsigned n) {
    std::vector<std::string> out;
    enumerate_gamma_sequences(sigma, n,
                              [&](const std::vector<unsigned>& s) { out.push_back(seq_str(s)); });
    return out;
}

} // namespace

TEST_CASE("gamma sequences for sigma=1, n=2 are exactly the seven scenarios") {
    auto seqs = all_sequences(1, 2);
    std::vector<std::string> expected = {"123", "1213", "12123", "1223",
                                         "12213", "1123", "11223"};
    CHECK(seqs == expected);
    CHECK(count_gamma_sequences(1, 2) == Natural(7));
}

TEST_CASE("gamma sequence counts at known points") {
    for (unsigned n = 0; n <= 6; ++n) CHECK(count_gamma_sequences(0, n) == Natural(1));
    CHECK(count_gamma_sequences(2, 1) == Natural(3));
    CHECK(count_gamma_sequences(1, 0) == Natural(1));
    CHECK(count_gamma_sequences(1, 4) == Natural(266));
}

TEST_CASE("every enumerated gamma sequence satisfies its structural constraints") {
    for (unsigned sigma : {1u, 2u}) {
        for (unsigned n = 0; n <= 4; ++n) {
            enumerate_gamma_sequences(sigma, n, [&](const std::vector<unsigned>& seq) {
                REQUIRE(!seq.empty());
                // starts with 1 and ends with the single n+1
                CHECK(seq.front() == 1);
                CHECK(seq.back() == n + 1);
                std::map<unsigned, unsigned> times;
                std::map<unsigned, std::size_t> first_at;
                for (std::size_t pos = 0; pos < seq.size(); ++pos) {
                    unsigned v = seq[pos];
                    CHECK(v >= 1);
                    CHECK(v <= n + 1);
                    if (!first_at.count(v)) first_at[v] = pos;
                    ++times[v];
                }
                CHECK(times[n + 1] == 1);
                for (unsigned i = 1; i <= n; ++i) {
                    CHECK(times[i] >= 1);
                    CHECK(times[i] <= sigma + 1);
                }
                for (unsigned i = 2; i <= n + 1; ++i)
                    CHECK(first_at[i] > first_at[i - 1]);
                // length minus the final entry stays within the stated window
                CHECK(seq.size() - 1 >= n);
                CHECK(seq.size() - 1 <= static_cast<std::size_t>(sigma + 1) * n);
            });
        }
    }
}

TEST_CASE("restricted partition counts at known points") {
    CHECK(count_restricted_partitions(2, 4, 2) == Natural(3));
    for (unsigned n = 1; n <= 6; ++n) CHECK(count_restricted_partitions(n, n, 3) == Natural(1));
    CHECK(count_restricted_partitions(3, 9, 3) == Natural(280));
    CHECK(count_restricted_partitions(0, 0, 2) == Natural(1));
    CHECK(count_restricted_partitions(0, 3, 2) == Natural(0));
    CHECK(count_restricted_partitions(4, 3, 2) == Natural(0));
    CHECK(count_restricted_partitions(2, 7, 3) == Natural(0));  // 7 > 2*3
}

TEST_CASE("partition sums reproduce gamma counts (the bijection)") {
    for (unsigned sigma = 0; sigma <= 2; ++sigma) {
        for (unsigned n = 0; n <= 4; ++n) {
            Natural sum;
            for (unsigned k = n; k <= (sigma + 1) * n; ++k)
                sum += count_restricted_partitions(n, k, sigma + 1);
            CHECK(sum == count_gamma_sequences(sigma, n));
        }
    }
    // one larger spot check
    Natural sum;
    for (unsigned k = 3; k <= 12; ++k) sum += count_restricted_partitions(3, k, 4);
    CHECK(sum == count_gamma_sequences(3, 3));
}

TEST_CASE("full game playouts at known points") {
    CHECK(count_full_game_playouts({1, 3}) == Natural(42));
    CHECK(count_full_game_playouts({0, 3}) == Natural(6));
    CHECK(count_full_game_playouts({0, 4}) == Natural(24));
    CHECK(count_full_game_playouts({1, 2}) == Natural(4));
    CHECK(count_full_game_playouts({2, 2}) == Natural(6));
    CHECK(count_full_game_playouts({5, 1}) == Natural(1));
}

TEST_CASE("full game factorizes as n! times the gamma count") {
    for (unsigned sigma = 0; sigma <= 2; ++sigma) {
        for (unsigned gifts = 1; gifts <= 4; ++gifts) {
            Natural h = count_full_game_playouts({sigma, gifts});
            CHECK(h == factorial(gifts) * count_gamma_sequences(sigma, gifts - 1));
        }
    }
}

TEST_CASE("resource guards are hard errors") {
    GuardLimits tight;
    tight.max_partition_ground = 6;
    tight.max_gamma_depth = 6;
    tight.max_game_gifts = 3;
    CHECK_THROWS_AS(count_restricted_partitions(3, 7, 2, tight), guard_error);
    CHECK_THROWS_AS(count_gamma_sequences(1, 4, tight), guard_error);
    CHECK_THROWS_AS(count_full_game_playouts({1, 4}, tight), guard_error);
    CHECK_THROWS_AS(count_full_game_playouts({1, 0}, tight), precondition_error);
    // same calls succeed inside the guard
    CHECK(count_restricted_partitions(3, 6, 2, tight) == Natural(15));
    CHECK(count_gamma_sequences(1, 3, tight) == Natural(37));
}
