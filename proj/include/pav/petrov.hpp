#pragma once

#include "pav/words.hpp"

namespace pav {

struct PetrovOptions {
    bool pruned = true;   // dyadic envelope scan; set false for the quadratic reference scan
    bool parallel = false; // OpenMP over the 2d (word, letter) arrays
};

// Moderate-deviation window conditions with parameter m, checked for every
// letter in both words over all windows inside [0, m]:
//   window length w > m^.1  =>  |count(j)-count(i) - w/d| < (2d)^-2 w^.6
//   window length w < m^.4  =>  |count(j)-count(i) - w/d| < (2d)^-2 m^.25
// All threshold comparisons are exact integer power tests.
bool petrov(const LayeredWords& omega, int m, const PetrovOptions& opts = {});

// petrov applied to the time reversal of the first n letters
bool petrov_star(const LayeredWords& omega, int m, int n, const PetrovOptions& opts = {});

// The same inequality families with parameter `param`, restricted to windows
// [i', j'] inside [lo, hi]. Quadratic scan; meant for short ranges.
bool petrov_conditions_in_range(const LayeredWords& omega, int lo, int hi, int param);

} // namespace pav
