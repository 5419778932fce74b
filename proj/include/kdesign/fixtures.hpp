#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "kdesign/params.hpp"
#include "kdesign/verify.hpp"

namespace kdesign {

/// A reference design bundled with the library, with the outcome its
/// verification must produce. The same text ships under data/fixtures/.
/// `params` is recorded only where the source lists all five parameters.
struct Fixture {
    std::string_view name;
    std::string_view text;
    Verdict verdict;
    std::optional<DesignParams> params;
    bool symmetric;
    std::optional<TParams> t_params;
};

std::span<const Fixture> fixtures();

/// Throws std::out_of_range for an unknown name.
const Fixture& fixture(std::string_view name);

}  // namespace kdesign
