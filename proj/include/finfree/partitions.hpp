// Set-partition enumeration with Moebius weights, used as the combinatorial
// oracle for cumulant computations. Enumeration is by restricted-growth
// strings; capped at n = 12 (Bell(12) = 4,213,597).

#ifndef FINFREE_PARTITIONS_HPP
#define FINFREE_PARTITIONS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace finfree::oracles {

inline constexpr int kPartitionCap = 12;

// Moebius function of the partition lattice from pi to the one-block
// partition: (-1)^{b-1} (b-1)! where b is the number of blocks.
inline std::int64_t mobius_to_top(int blocks) {
    std::int64_t f = 1;
    for (int i = 2; i < blocks; ++i) f *= i;
    return (blocks % 2 == 1) ? f : -f;
}

// Visits every set partition of {1..n}. The callback receives
// (block_sizes, block_count); block_sizes[0..block_count-1] are the sizes
// in order of first appearance.
template <typename Visit>
void for_each_set_partition(int n, Visit&& visit) {
    if (n < 1) throw std::invalid_argument("for_each_set_partition: n must be positive");
    if (n > kPartitionCap)
        throw std::invalid_argument("for_each_set_partition: n exceeds cap of " +
                                    std::to_string(kPartitionCap));

    std::array<int, kPartitionCap> label{};   // restricted-growth string
    std::array<int, kPartitionCap> maxl{};    // running max label
    std::array<int, kPartitionCap + 1> size{};

    int i = 0;
    label[0] = 0;
    maxl[0] = 0;
    size[0] = 1;
    while (true) {
        if (i == n - 1) {
            visit(size, maxl[i] + 1);
            // backtrack to an index whose label can still be bumped
            while (i > 0) {
                const int prev_max = maxl[i - 1];
                if (label[i] <= prev_max) {  // can bump up to prev_max + 1
                    --size[label[i]];
                    ++label[i];
                    ++size[label[i]];
                    maxl[i] = std::max(prev_max, label[i]);
                    break;
                }
                --size[label[i]];
                --i;
            }
            if (i == 0) return;
        } else {
            ++i;
            label[i] = 0;
            ++size[0];
            maxl[i] = maxl[i - 1];
        }
    }
}

inline std::int64_t bell_number(int n) {
    if (n < 0 || n > kPartitionCap + 3) throw std::invalid_argument("bell_number: out of range");
    // Bell triangle
    std::array<std::array<std::int64_t, 16>, 16> t{};
    t[0][0] = 1;
    for (int r = 1; r <= n; ++r) {
        t[r][0] = t[r - 1][r - 1];
        for (int c = 1; c <= r; ++c) t[r][c] = t[r][c - 1] + t[r - 1][c - 1];
    }
    return t[n][0];
}

}  // namespace finfree::oracles

#endif  // FINFREE_PARTITIONS_HPP
