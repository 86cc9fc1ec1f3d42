#pragma once

#include <string>

#include "folsurf/germ.hpp"

namespace folsurf {

// An invariant branch through the origin: a coordinate axis, a smooth curve
// with nonzero linear part, or a cuspidal curve a*x^m - y^n (m, n coprime,
// both >= 2).
struct BranchSpec {
    enum Kind { AxisX0, AxisY0, Smooth, Cuspidal };
    Kind kind;
    Poly defining;  // Smooth only
    Rat a;          // Cuspidal coefficient
    int m = 0, n = 0;

    static BranchSpec axis_x0() { return {AxisX0, {}, Rat(0), 0, 0}; }
    static BranchSpec axis_y0() { return {AxisY0, {}, Rat(0), 0, 0}; }
    static BranchSpec smooth(Poly p);
    static BranchSpec cuspidal(const Rat& a, int m, int n);

    Poly equation() const;
    std::string to_string() const;
};

struct IndexRecord {
    Scalar cs;
    int z = 0;
    enum Source { ClosedForm, SeriesOracle } source = ClosedForm;
};

// True iff the branch is invariant for v (the equation divides its own Lie
// derivative; for smooth branches, checked after straightening up to the
// truncation order).
bool branch_invariant(const PlaneGerm& v, const BranchSpec& branch, int trunc = 32);

// Camacho-Sad index of v along the branch (closed-form dispatch, falling
// back to the series oracle outside the table). Throws if not invariant.
Scalar camacho_sad(const PlaneGerm& v, const BranchSpec& branch);

// Z index of v along the branch; same dispatch as camacho_sad.
int z_index(const PlaneGerm& v, const BranchSpec& branch);

IndexRecord closed_form_cs_z(const PlaneGerm& v, const BranchSpec& branch);

// Independent computation through the decomposition q*omega = h*dC + C*eta
// of the dual form omega = g dx - f dy, restricted to the branch.
IndexRecord series_oracle_cs_z(const PlaneGerm& v, const BranchSpec& branch, int trunc = 32);

// Intersection multiplicity of the curve with its own Lie derivative at the
// point: dim of the local ring modulo <curve, v(curve)>.
int tangency_order(const PlaneGerm& v, const Poly& curve, const Rat& x0, const Rat& y0);

}  // namespace folsurf
