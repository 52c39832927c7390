#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pav/lattice_path.hpp"
#include "pav/words.hpp"

namespace pav {

enum class ConeVariant { CW, CWMinus, CWPlus, CWPlusPlus, SCWPlusPlus, SCWMinus };

std::string to_string(ConeVariant v);
ConeVariant cone_variant_from_string(const std::string& s);

// Base of the fractional-power thresholds in the windowed conditions of
// CWMinus: the paper leaves the exponent base ambiguous, default reads it as
// the window right end m, the alternative as the range end j.
enum class PetrovExponentBase { WindowEnd, RangeEnd };

struct ConeOptions {
    double scw_constant = 1.0;                          // C in the SCW++ distance bound
    PetrovExponentBase base = PetrovExponentBase::WindowEnd;
};

using LatticePoint = std::vector<std::int32_t>;

struct ConeReport {
    ConeVariant variant;
    int i = 0;
    int j = 0;
    bool holds = false;
    int first_violation_time = -1;
    std::string to_json() const;
};

// Endpoint arguments are optional: nullopt is the wildcard (union over values).
ConeReport cone_report(const LayeredWords& omega, ConeVariant variant, int i, int j,
                       const std::optional<LatticePoint>& v, const std::optional<LatticePoint>& w,
                       const ConeOptions& opts = {});

bool cone_class(const LayeredWords& omega, ConeVariant variant, int i, int j,
                const std::optional<LatticePoint>& v = std::nullopt,
                const std::optional<LatticePoint>& w = std::nullopt,
                const ConeOptions& opts = {});

} // namespace pav
