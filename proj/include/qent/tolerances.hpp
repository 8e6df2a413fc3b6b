#pragma once

#include <cstdlib>
#include <string>

namespace qent {

// Central numerical tolerances. All of them scale with QENT_TOL_SCALE
// (environment variable, default 1.0) so borderline CI machines can loosen
// every gate uniformly instead of patching individual checks.
struct Tolerances {
    double herm = 1e-9;   // Hermiticity defect ||M - M^dag||_max
    double tr = 1e-9;     // trace-one defect
    double eig = 1e-9;    // eigenvalue negativity slack for PSD checks
    double rank = 1e-9;   // singular/eigenvalue cutoff for numerical rank
    double rec = 1e-8;    // reconstruction / round-trip error
    double det = 1e-12;   // det(rho^Gamma) separability threshold (2 qubits)
    double ent = 1e-8;    // entropic-criterion firing threshold
    double prob = 1e-12;  // smallest probability treated as nonzero
    double cls = 1e-8;    // SLOCC three-tangle classification threshold

    static const Tolerances& get();
};

inline double tol_scale() {
    static double s = [] {
        if (const char* e = std::getenv("QENT_TOL_SCALE")) {
            double v = std::atof(e);
            if (v > 0) return v;
        }
        return 1.0;
    }();
    return s;
}

inline const Tolerances& Tolerances::get() {
    static Tolerances t = [] {
        Tolerances base;
        double s = tol_scale();
        base.herm *= s;
        base.tr *= s;
        base.eig *= s;
        base.rank *= s;
        base.rec *= s;
        base.det *= s;
        base.ent *= s;
        base.prob *= s;
        base.cls *= s;
        return base;
    }();
    return t;
}

}  // namespace qent
