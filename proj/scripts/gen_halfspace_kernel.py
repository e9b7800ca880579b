#!/usr/bin/env python3
"""Generate C++ for the half-space image correction of the elastic Green tensor.

The half-space Neumann tensor (traction-free surface at x3 = 0) splits as
N0 = Gamma + R, where Gamma is the Kelvin full-space tensor and R collects
the image-system terms of Mindlin's point-force solution (Mindlin, 1936).
The Kelvin part is hand-coded in kelvin.cpp; this script emits R and its
first derivatives in the source point y, first derivatives in the field
point x, and the mixed second derivatives, all as straight-line code with
common-subexpression elimination.

Sign convention: Gamma solves div(C grad_hat Gamma^(k)) = +delta e_k, i.e.
the negative of the classical positive Kelvin tensor. R is negated to match.

Run from the repository root:  python3 scripts/gen_halfspace_kernel.py
Output: src/halfspace_remainder_gen.cpp
"""

import sympy as sp

x1, x2, x3, y1, y2, y3 = sp.symbols("x1 x2 x3 y1 y2 y3", real=True)
mu, nu = sp.symbols("mu nu", real=True, positive=True)

# Mindlin frame: z measured downward, field point (x, y, z) with z >= 0,
# unit point force at (0, 0, c) with c > 0.
x, y, z, c = sp.symbols("x y z c", real=True)
R2 = sp.sqrt(x**2 + y**2 + (z + c) ** 2)
Kd = 1 / (16 * sp.pi * mu * (1 - nu))
a34 = 3 - 4 * nu
B = 4 * (1 - nu) * (1 - 2 * nu)

# Image-system terms only (the R1 terms are exactly the Kelvin tensor and
# are dropped here).
def horiz_rem(xx, yy):
    u1 = Kd * (1 / R2 + a34 * xx**2 / R2**3
               + 2 * c * z / R2**3 * (1 - 3 * xx**2 / R2**2)
               + B / (R2 + z + c) * (1 - xx**2 / (R2 * (R2 + z + c))))
    u2 = Kd * xx * yy * (a34 / R2**3 - 6 * c * z / R2**5
                         - B / (R2 * (R2 + z + c) ** 2))
    u3 = Kd * xx * (a34 * (z - c) / R2**3 - 6 * c * z * (z + c) / R2**5
                    + B / (R2 + z + c) / R2)
    return u1, u2, u3

fx_x, fx_y, fx_z = horiz_rem(x, y)
fy_y, fy_x, fy_z = horiz_rem(y, x)
fz_x = Kd * x * (a34 * (z - c) / R2**3 - B / (R2 * (R2 + z + c))
                 + 6 * c * z * (z + c) / R2**5)
fz_y = fz_x.subs({x: y, y: x}, simultaneous=True)
fz_z = Kd * ((8 * (1 - nu) ** 2 - a34) / R2
             + (a34 * (z + c) ** 2 - 2 * c * z) / R2**3
             + 6 * c * z * (z + c) ** 2 / R2**5)

# Mrem[i][j]: displacement component i due to unit force along j (z-down).
Mrem = sp.Matrix([[fx_x, fy_x, fz_x],
                  [fx_y, fy_y, fz_y],
                  [fx_z, fy_z, fz_z]])

# Map to the paper frame (x3 <= 0, surface at x3 = 0) and negate for the
# div(C grad_hat N) = +delta convention: N = -S M S with S = diag(1,1,-1).
S = sp.diag(1, 1, -1)
subs_map = {x: x1 - y1, y: x2 - y2, z: -x3, c: -y3}
Rmat = (-S * Mrem * S).subs(subs_map, simultaneous=True)

fields = [x1, x2, x3]
sources = [y1, y2, y3]

value = [Rmat[i, j] for i in range(3) for j in range(3)]
dy = [sp.diff(Rmat[i, j], sources[l])
      for i in range(3) for j in range(3) for l in range(3)]
dx = [sp.diff(Rmat[i, j], fields[m])
      for i in range(3) for j in range(3) for m in range(3)]
dydx = [sp.diff(Rmat[i, j], sources[l], fields[m])
        for i in range(3) for j in range(3) for l in range(3) for m in range(3)]


def emit(name, exprs, out_len):
    repl, red = sp.cse(exprs, optimizations="basic")
    lines = [f"void {name}(const double* xf, const double* ys, double mu, double nu, double* out) {{"]
    lines.append("  const double x1 = xf[0], x2 = xf[1], x3 = xf[2];")
    lines.append("  const double y1 = ys[0], y2 = ys[1], y3 = ys[2];")
    for sym, expr in repl:
        lines.append(f"  const double {sym} = {sp.ccode(expr)};")
    for idx, expr in enumerate(red):
        lines.append(f"  out[{idx}] = {sp.ccode(expr)};")
    lines.append("}")
    assert len(red) == out_len
    return "\n".join(lines)


header = """// Generated by scripts/gen_halfspace_kernel.py -- do not edit by hand.
//
// Half-space image correction R of the elastic Neumann tensor N0 = Gamma + R
// (Mindlin point-force image system, traction-free surface at x3 = 0).
// Index order: out[(i*3+j)*...] with i the displacement component, j the
// force direction, then the derivative indices as documented per function.

#include "dislo/halfspace_remainder_gen.hpp"

#include <cmath>

namespace dislo::gen {
"""

parts = [header]
parts.append(emit("halfspace_remainder_value", value, 9))
parts.append("\n// out[(i*3+j)*3+l] = d R_ij / d y_l")
parts.append(emit("halfspace_remainder_dy", dy, 27))
parts.append("\n// out[(i*3+j)*3+m] = d R_ij / d x_m")
parts.append(emit("halfspace_remainder_dx", dx, 27))
parts.append("\n// out[((i*3+j)*3+l)*3+m] = d^2 R_ij / (d y_l d x_m)")
parts.append(emit("halfspace_remainder_dydx", dydx, 81))
parts.append("\n}  // namespace dislo::gen\n")

with open("src/halfspace_remainder_gen.cpp", "w") as f:
    f.write("\n".join(parts))
print("wrote src/halfspace_remainder_gen.cpp")
