#pragma once

// Ground-truth brute-force enumerators: the full gift-exchange game, the
// gamma-sequence characterization of its normalized playouts, and exhaustive
// restricted set-partition enumeration. Everything here counts by exhaustion;
// resource guards refuse oversized inputs rather than truncating.

#include <string>
#include <vector>

#include "giftcount/errors.hpp"
#include "giftcount/guards.hpp"
#include "giftcount/integers.hpp"

namespace giftcount {

struct GameConfig {
    unsigned sigma = 1;  // max steals per gift
    unsigned gifts = 1;  // number of gifts = number of players
};

namespace detail {

// Gamma sequences over the alphabet 1..n+1: start with 1; each of 1..n occurs
// between 1 and sigma+1 times; n+1 occurs exactly once, at the end; the first
// occurrence of i comes after the first occurrence of i-1. Children are
// visited with the fresh pool gift first, then steals in ascending gift
// order, which reproduces the natural scenario listing order.
template <typename Fn>
struct GammaEnumerator {
    unsigned sigma;
    unsigned n;
    Fn& fn;
    std::vector<unsigned> seq;
    std::vector<unsigned> times_chosen;

    void run() {
        times_chosen.assign(n + 2, 0);
        dfs(0);
    }

    void dfs(unsigned max_seen) {
        if (max_seen == n) {  // taking gift n+1 ends the game
            seq.push_back(n + 1);
            fn(static_cast<const std::vector<unsigned>&>(seq));
            seq.pop_back();
        } else {
            seq.push_back(max_seen + 1);
            times_chosen[max_seen + 1] = 1;
            dfs(max_seen + 1);
            times_chosen[max_seen + 1] = 0;
            seq.pop_back();
        }
        for (unsigned g = 1; g <= max_seen; ++g) {
            if (times_chosen[g] > sigma) continue;  // chosen = 1 take + sigma steals
            seq.push_back(g);
            ++times_chosen[g];
            dfs(max_seen);
            --times_chosen[g];
            seq.pop_back();
        }
    }
};

} // namespace detail

// Enumerates every gamma sequence for (sigma, n), invoking fn on each
// complete sequence (final n+1 entry included).
template <typename Fn>
void enumerate_gamma_sequences(unsigned sigma, unsigned n, Fn&& fn,
                               const GuardLimits& guards = GuardLimits::from_env()) {
    if (static_cast<unsigned long long>(sigma + 1) * n > guards.max_gamma_depth)
        throw guard_error("gamma enumeration: (sigma+1)*n = " +
                          std::to_string((sigma + 1ull) * n) +
                          " exceeds guard max_gamma_depth = " +
                          std::to_string(guards.max_gamma_depth) +
                          " (set GIFTCOUNT_GUARD_MAX to raise)");
    detail::GammaEnumerator<Fn> e{sigma, n, fn, {}, {}};
    e.run();
}

// Number of gamma sequences for (sigma, n); equals the normalized playout
// count G_sigma(n).
inline Natural count_gamma_sequences(unsigned sigma, unsigned n,
                                     const GuardLimits& guards = GuardLimits::from_env()) {
    unsigned long long count = 0;
    auto bump = [&](const std::vector<unsigned>&) { ++count; };
    enumerate_gamma_sequences(sigma, n, bump, guards);
    return Natural(count);
}

namespace detail {

struct PartitionCounter {
    unsigned blocks;
    unsigned ground;
    unsigned max_part;
    unsigned long long count = 0;
    std::vector<unsigned> block_size;

    void place(unsigned element) {
        const unsigned remaining = ground + 1 - element;
        if (remaining == 0) {
            if (block_size.size() == blocks) ++count;
            return;
        }
        const unsigned open = static_cast<unsigned>(block_size.size());
        const unsigned still_to_open = blocks - open;
        if (still_to_open > remaining) return;  // cannot reach `blocks` blocks
        unsigned long long capacity = static_cast<unsigned long long>(still_to_open) * max_part;
        for (unsigned b = 0; b < open; ++b) capacity += max_part - block_size[b];
        if (capacity < remaining) return;  // cannot seat every element

        for (unsigned b = 0; b < open; ++b) {
            if (block_size[b] == max_part) continue;
            ++block_size[b];
            place(element + 1);
            --block_size[b];
        }
        if (open < blocks) {
            block_size.push_back(1);
            place(element + 1);
            block_size.pop_back();
        }
    }
};

} // namespace detail

// Partitions of {1..ground} into exactly `blocks` nonempty blocks of size at
// most max_part, counted by assigning each element in turn to an existing
// block with room or to a fresh block (blocks stay ordered by least element,
// so nothing is counted twice).
inline Natural count_restricted_partitions(unsigned blocks, unsigned ground,
                                           unsigned max_part,
                                           const GuardLimits& guards = GuardLimits::from_env()) {
    if (ground > guards.max_partition_ground)
        throw guard_error("partition enumeration: ground size " + std::to_string(ground) +
                          " exceeds guard max_partition_ground = " +
                          std::to_string(guards.max_partition_ground) +
                          " (set GIFTCOUNT_GUARD_MAX to raise)");
    if (ground == 0) return Natural(blocks == 0 ? 1 : 0);
    if (blocks == 0 || blocks > ground || max_part == 0) return Natural(0);
    if (static_cast<unsigned long long>(blocks) * max_part < ground) return Natural(0);

    detail::PartitionCounter pc{blocks, ground, max_part};
    pc.block_size.reserve(blocks);
    pc.place(1);
    return Natural(pc.count);
}

namespace detail {

struct GameCounter {
    unsigned n;
    unsigned sigma;
    unsigned long long playouts = 0;
    std::vector<bool> in_pool;
    std::vector<unsigned> steal_count;
    std::vector<int> holder;
    unsigned pool_left;

    // `actor` is the player about to act; `next_call` the next number called.
    void act(unsigned actor, unsigned next_call) {
        for (unsigned g = 0; g < n; ++g) {  // unwrap a pool gift
            if (!in_pool[g]) continue;
            if (pool_left == 1) {
                ++playouts;  // last gift taken: game over
                continue;
            }
            in_pool[g] = false;
            --pool_left;
            holder[g] = static_cast<int>(actor);
            act(next_call, next_call + 1);
            holder[g] = -1;
            in_pool[g] = true;
            ++pool_left;
        }
        for (unsigned g = 0; g < n; ++g) {  // steal an unwrapped gift
            if (in_pool[g] || steal_count[g] >= sigma) continue;
            const int robbed = holder[g];
            ++steal_count[g];
            holder[g] = static_cast<int>(actor);
            act(static_cast<unsigned>(robbed), next_call);
            holder[g] = robbed;
            --steal_count[g];
        }
    }
};

} // namespace detail

// Number of distinct complete playouts of the full game with distinguishable
// players and gifts: numbers 1..n are called in order; the acting player
// either unwraps any pool gift or steals any unwrapped gift whose steal count
// is below sigma; a robbed player immediately acts next; play ends the moment
// the last pool gift is taken. The only stealing restriction is the per-gift
// count, so stealing a gift straight back is legal while the count permits.
inline Natural count_full_game_playouts(const GameConfig& cfg,
                                        const GuardLimits& guards = GuardLimits::from_env()) {
    if (cfg.gifts < 1) throw precondition_error("full game: need at least one gift");
    if (cfg.gifts > guards.max_game_gifts)
        throw guard_error("full game: " + std::to_string(cfg.gifts) +
                          " gifts exceeds guard max_game_gifts = " +
                          std::to_string(guards.max_game_gifts) +
                          " (set GIFTCOUNT_GUARD_MAX to raise)");

    detail::GameCounter gc{cfg.gifts, cfg.sigma};
    gc.in_pool.assign(cfg.gifts, true);
    gc.steal_count.assign(cfg.gifts, 0);
    gc.holder.assign(cfg.gifts, -1);
    gc.pool_left = cfg.gifts;
    gc.act(0, 1);
    return Natural(gc.playouts);
}

} // namespace giftcount
