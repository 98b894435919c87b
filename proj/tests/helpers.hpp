#pragma once

#include "minsurf/catalog.hpp"
#include "minsurf/report.hpp"

namespace testdata {

using namespace minsurf;

inline RationalFunction Z() { return RationalFunction::z(); }
inline RationalFunction C(long v) { return RationalFunction(v); }
inline SpherePoint P(long v) { return SpherePoint(Scalar(v)); }
inline SpherePoint Pq(long p, long q) { return SpherePoint(Scalar(mpq_class(p, q))); }
inline SpherePoint Inf() { return SpherePoint::infinity(); }

inline WData3 enneper() { return std::get<WData3>(*catalog_get("enneper").data); }
inline WData3 catenoid() { return std::get<WData3>(*catalog_get("catenoid").data); }

}  // namespace testdata

namespace testdata {
/// Exact equality for exact scalars, tight tolerance otherwise.
inline bool same(const minsurf::Scalar& a, const minsurf::Scalar& b) { return a.approx_equal(b, 1e-12); }
}  // namespace testdata
