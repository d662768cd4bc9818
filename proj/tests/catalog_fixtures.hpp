#pragma once

#include "segrekit/cr_manifold.hpp"

namespace segrekit::testing {

inline GaussianRational q(long a, long b = 1, long c = 0, long d = 1) { return {mpq_class(a, b), mpq_class(c, d)}; }

inline CRManifold sphere() { return CRManifold({"z1", "z2"}, {"z1*~z1 + z2*~z2 - 1"}); }
inline CRManifold quartic() { return CRManifold({"z1", "z2"}, {"z1^2*~z1^2 + z2^2*~z2^2 - 1"}); }
inline CRManifold hyperquadric() { return CRManifold({"z1", "z2", "z3"}, {"1 + z1*~z1 - z2*~z2 - z3*~z3"}); }
inline CRManifold tube() { return CRManifold({"z1", "z2"}, {"-i/2*z2 + i/2*~z2"}); }
inline CRManifold cylinder() { return CRManifold({"z1", "z2"}, {"z1*~z1 - 1"}); }

inline Point sphere_point() { return {q(3, 5), q(0, 1, 4, 5)}; }
inline Point quartic_point() { return {q(15, 41, 12, 41), q(14, 41, 38, 41)}; }
inline Point hyperquadric_point() { return {q(1), q(1), q(1)}; }
inline Point tube_point() { return {q(1, 2, 1, 3), q(2)}; }
inline Point cylinder_point() { return {q(3, 5, 4, 5), q(1, 2, -1)}; }

}  // namespace segrekit::testing
