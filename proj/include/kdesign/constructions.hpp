#pragma once

#include <cstdint>
#include <string_view>

#include "kdesign/design.hpp"
#include "kdesign/params.hpp"
#include "kdesign/verify.hpp"

namespace kdesign {

inline constexpr std::uint64_t kDefaultMaxBlocks = 100'000'000;

/// KP design: varieties are the edges of K_{2khat-1}, blocks the edge sets
/// of all paths with khat edges.
struct KPSpec {
    std::uint32_t khat;

    /// Throws std::domain_error for khat < 2.
    explicit KPSpec(std::uint32_t khat);
    std::uint32_t n() const noexcept { return 2 * khat - 1; }
};

/// KC design: varieties are the edges of K_{2khat-3}, blocks the edge sets
/// of all cycles on khat vertices.
struct KCSpec {
    std::uint32_t khat;

    /// Throws std::domain_error for khat < 3.
    explicit KCSpec(std::uint32_t khat);
    std::uint32_t n() const noexcept { return 2 * khat - 3; }
};

/// Closed-form parameters of the KP design:
///   v = C(2k-1, 2), b = (2k-1)! / (2 (k-2)!), r = k (2k-3)! / (k-2)!,
///   k = k, lambda = (k-1)(2k-4)! / (k-2)!
DesignParams kp_parameters(std::uint32_t khat);

/// Closed-form parameters of the KC design:
///   v = C(2k-3, 2), b = (2k-3)! / (2k (k-3)!), r = (2k-5)! / (k-3)!,
///   k = k, lambda = (2k-6)! / (k-3)!
DesignParams kc_parameters(std::uint32_t khat);

/// Builds the KP design. Throws CapacityError if it would have more than
/// `max_blocks` blocks.
Design build_kp(std::uint32_t khat, std::uint64_t max_blocks = kDefaultMaxBlocks);
Design build_kc(std::uint32_t khat, std::uint64_t max_blocks = kDefaultMaxBlocks);

/// The 30-block 3-(10,4,1) design on the edges of K_5 (fans, rectangles,
/// triangles with a disjoint edge).
Design build_k5_special();

enum class DesignFamily { kp, kc };

std::string_view to_string(DesignFamily family) noexcept;

/// Enumerates and verifies a KP/KC design without storing its blocks. The
/// enumeration is split by first vertex over `threads` workers; the report
/// is identical for every thread count.
BalanceReport verify_stream(DesignFamily family, std::uint32_t khat, unsigned threads = 1,
                            std::uint64_t max_blocks = kDefaultMaxBlocks);

/// Number of blocks of the path design on K_n (paths with khat edges)
/// containing a fixed adjacent pair of edges, and a fixed nonadjacent pair.
struct ImbalanceWitness {
    std::uint32_t n;
    std::uint32_t khat;
    BigInt lambda_adj;
    BigInt lambda_non;

    enum class Sign { balanced, adjacent_fewer, adjacent_more };
    Sign sign() const;
};

std::string_view to_string(ImbalanceWitness::Sign sign) noexcept;

/// lambda_adj = (khat-1) P(n-3, khat-2), lambda_non = 4 C(khat-1, 2) P(n-4, khat-3).
/// Requires khat >= 3, n >= khat + 1 and n >= 4 (std::domain_error otherwise).
ImbalanceWitness imbalance_witness(std::uint32_t n, std::uint32_t khat);

}  // namespace kdesign
