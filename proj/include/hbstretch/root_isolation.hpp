#pragma once

#include "hbstretch/int_poly.hpp"
#include "hbstretch/interval.hpp"

namespace hbstretch {

/// Bisection refinement of a single root of p inside `region`. The caller
/// guarantees there is exactly one real root there; we certify our part of
/// the contract by requiring a sign change (or an exact root at an endpoint).
///
/// The returned enclosure has width <= 2^-precision_bits and its endpoints
/// either bracket a sign change or one of them evaluates to exactly zero.
inline RealInterval poly_root_isolate(const IntPoly& p, const RealInterval& region,
                                      unsigned precision_bits) {
    Dyadic lo = region.lower(), hi = region.upper();
    int slo = p.sign_at(lo), shi = p.sign_at(hi);
    if (slo == 0) {
        if (shi == 0 && !(lo == hi))
            throw NoSignChangeError("poly_root_isolate: both endpoints vanish");
        return RealInterval(lo, lo);
    }
    if (shi == 0) return RealInterval(hi, hi);
    if (slo == shi)
        throw NoSignChangeError("poly_root_isolate: p(" + lo.to_decimal(6, true) +
                                ") and p(" + hi.to_decimal(6, false) +
                                ") have equal sign");
    const Dyadic target = Dyadic::pow2(-static_cast<long>(precision_bits));
    while (hi - lo > target) {
        Dyadic mid = (lo + hi).half();
        int smid = p.sign_at(mid);
        if (smid == 0) return RealInterval(mid, mid);
        if (smid == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return RealInterval(lo, hi);
}

}  // namespace hbstretch
