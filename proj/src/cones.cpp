#include "pav/cones.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pav/exact_pow.hpp"
#include "pav/petrov.hpp"

namespace pav {

std::string to_string(ConeVariant v) {
    switch (v) {
        case ConeVariant::CW: return "CW";
        case ConeVariant::CWMinus: return "CW-";
        case ConeVariant::CWPlus: return "CW+";
        case ConeVariant::CWPlusPlus: return "CW++";
        case ConeVariant::SCWPlusPlus: return "SCW++";
        case ConeVariant::SCWMinus: return "SCW-";
    }
    return "?";
}

ConeVariant cone_variant_from_string(const std::string& s) {
    if (s == "CW") return ConeVariant::CW;
    if (s == "CW-" || s == "CWminus") return ConeVariant::CWMinus;
    if (s == "CW+" || s == "CWplus") return ConeVariant::CWPlus;
    if (s == "CW++" || s == "CWplusplus") return ConeVariant::CWPlusPlus;
    if (s == "SCW++" || s == "SCWplusplus") return ConeVariant::SCWPlusPlus;
    if (s == "SCW-" || s == "SCWminus") return ConeVariant::SCWMinus;
    throw std::invalid_argument("unknown cone variant: " + s);
}

std::string ConeReport::to_json() const {
    std::ostringstream os;
    os << "{\"variant\":\"" << to_string(variant) << "\",\"window\":[" << i << "," << j
       << "],\"holds\":" << (holds ? "true" : "false")
       << ",\"first_violation_time\":" << first_violation_time << "}";
    return os.str();
}

namespace {

bool point_equals(std::span<const std::int32_t> p, const LatticePoint& q) {
    return std::equal(p.begin(), p.end(), q.begin(), q.end());
}

bool endpoints_ok(const LatticePath& path, int i, int j, const std::optional<LatticePoint>& v,
                  const std::optional<LatticePoint>& w, int& violation) {
    if (v && !point_equals(path.point(i), *v)) {
        violation = i;
        return false;
    }
    if (w && !point_equals(path.point(j), *w)) {
        violation = j;
        return false;
    }
    return true;
}

// distance <= C * base^{0.4}; exact when C == 1
bool distance_within(std::int64_t dist, std::int64_t base, double c) {
    if (c == 1.0) return exact::le_two_fifths(dist, base);
    return static_cast<double>(dist) <= c * std::pow(static_cast<double>(base), 0.4);
}

} // namespace

ConeReport cone_report(const LayeredWords& omega, ConeVariant variant, int i, int j,
                       const std::optional<LatticePoint>& v, const std::optional<LatticePoint>& w,
                       const ConeOptions& opts) {
    const int n = omega.n();
    if (i < 0 || j > n || i > j)
        throw std::invalid_argument("cone_class: malformed window [" + std::to_string(i) + "," +
                                    std::to_string(j) + "] for n=" + std::to_string(n));
    if (v && static_cast<int>(v->size()) != omega.d())
        throw std::invalid_argument("cone_class: endpoint dimension mismatch");
    if (w && static_cast<int>(w->size()) != omega.d())
        throw std::invalid_argument("cone_class: endpoint dimension mismatch");

    const LatticePath path = path_from_words(omega);
    ConeReport rep;
    rep.variant = variant;
    rep.i = i;
    rep.j = j;
    rep.holds = true;

    int violation = -1;
    if (variant != ConeVariant::SCWMinus && !endpoints_ok(path, i, j, v, w, violation)) {
        rep.holds = false;
        rep.first_violation_time = violation;
        return rep;
    }

    auto fail_at = [&rep](int t) {
        rep.holds = false;
        rep.first_violation_time = t;
    };

    switch (variant) {
        case ConeVariant::CW: {
            for (int m = i; m <= j; ++m)
                if (!in_weyl(path.point(m))) {
                    fail_at(m);
                    return rep;
                }
            break;
        }
        case ConeVariant::CWMinus: {
            for (int m = i; m <= j; ++m) {
                if (!in_weyl_shift_pos(path.point(m), m)) {
                    fail_at(m);
                    return rep;
                }
                const int param = (opts.base == PetrovExponentBase::WindowEnd) ? m : j;
                if (m >= i + 1 && !petrov_conditions_in_range(omega, i + 1, m, param)) {
                    fail_at(m);
                    return rep;
                }
            }
            break;
        }
        case ConeVariant::CWPlus: {
            for (int m = i; m <= j; ++m)
                if (!in_weyl_shift_neg(path.point(m), m)) {
                    fail_at(m);
                    return rep;
                }
            break;
        }
        case ConeVariant::CWPlusPlus: {
            for (int m = i; m <= j; ++m) {
                if (in_weyl_shift_neg(path.point(m), m)) continue;
                if (!petrov_conditions_in_range(omega, i, m, m)) continue; // escape allowed
                fail_at(m);
                return rep;
            }
            break;
        }
        case ConeVariant::SCWPlusPlus: {
            const int half = n / 2;
            for (int t = i; t <= std::min(j, half); ++t) {
                if (!petrov(omega, t)) continue;
                if (!distance_within(weyl_distance(path.point(t)), t, opts.scw_constant)) {
                    fail_at(t);
                    return rep;
                }
            }
            for (int t = std::max(i, half); t <= j; ++t) {
                if (!petrov_star(omega, t, n)) continue;
                if (!distance_within(weyl_distance(path.point(t)), n - t, opts.scw_constant)) {
                    fail_at(t);
                    return rep;
                }
            }
            break;
        }
        case ConeVariant::SCWMinus: {
            const int half = n / 2;
            if (i > half || j < half)
                throw std::invalid_argument("SCW-: window must straddle n/2");
            if (!endpoints_ok(path, i, j, v, w, violation)) {
                fail_at(violation);
                return rep;
            }
            const auto first = cone_report(omega, ConeVariant::CWMinus, i, half, v, std::nullopt, opts);
            if (!first.holds) {
                fail_at(first.first_violation_time);
                return rep;
            }
            // second half through the reversed words; reversed path r(m) = s(n-m) - s(n)
            const LayeredWords rev = reversed(omega);
            std::optional<LatticePoint> rv;
            if (w) {
                rv.emplace(*w);
                for (int l = 1; l <= omega.d(); ++l)
                    (*rv)[static_cast<std::size_t>(l - 1)] -= path.coord(n, l);
            }
            const auto second =
                cone_report(rev, ConeVariant::CWMinus, n - j, n - half, rv, std::nullopt, opts);
            if (!second.holds) {
                fail_at(n - second.first_violation_time);
                return rep;
            }
            break;
        }
    }
    return rep;
}

bool cone_class(const LayeredWords& omega, ConeVariant variant, int i, int j,
                const std::optional<LatticePoint>& v, const std::optional<LatticePoint>& w,
                const ConeOptions& opts) {
    return cone_report(omega, variant, i, j, v, w, opts).holds;
}

} // namespace pav
