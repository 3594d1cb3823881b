#pragma once

#include <algorithm>
#include <cstdlib>

namespace giftcount {

// Hard ceilings for the exhaustive enumerators and dense tables.
// Exceeding one throws guard_error with a message naming the guard.
struct GuardLimits {
    unsigned max_partition_ground = 18;  // elements when enumerating set partitions
    unsigned max_gamma_depth = 18;       // (sigma+1)*n when enumerating gamma sequences
    unsigned max_game_gifts = 5;         // gifts in the full game simulator
    unsigned max_multinomial_n = 8;      // n in the direct multinomial sum for G
    unsigned long long max_table_cells = 20000000;  // dense E-table entries

    // GIFTCOUNT_GUARD_MAX=<v> raises every guard to at least v.
    static GuardLimits from_env() {
        GuardLimits g;
        if (const char* s = std::getenv("GIFTCOUNT_GUARD_MAX")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(s, &end, 10);
            if (end != s && v > 0) {
                auto raise = [v](unsigned& field) {
                    field = static_cast<unsigned>(
                        std::max<unsigned long long>(field, v));
                };
                raise(g.max_partition_ground);
                raise(g.max_gamma_depth);
                raise(g.max_game_gifts);
                raise(g.max_multinomial_n);
                g.max_table_cells = std::max(g.max_table_cells, v);
            }
        }
        return g;
    }
};

} // namespace giftcount
