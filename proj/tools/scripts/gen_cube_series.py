"""Generates src/cube_series.inc: exact Taylor coefficients of the cube-volume
closed forms, used where the trigonometric expressions cancel catastrophically."""

import sympy as sp

a = sp.symbols("a")
ORDER = 31

FORMS = {
    "identity_swap": sp.Rational(3, 2) / sp.pi
    * (8 * a + a * sp.cos(3 * a) - 9 * a * sp.cos(a) - 3 * sp.sin(3 * a) + 12 * sp.sin(2 * a) - 15 * sp.sin(a)),
    "sqrt_swap": sp.Rational(3, 2) / sp.pi
    * (2 * a * sp.sin(3 * a) + 6 * a * sp.sin(a) + 3 * sp.cos(3 * a) - 3 * sp.cos(a)),
    "b_gate": 3 * a / sp.pi * (sp.cos(a) - sp.cos(3 * a)),
    "cnot_dcnot": 1 / (2 * sp.pi)
    * (8 * a + 7 * a * sp.cos(3 * a) - 15 * a * sp.cos(a) - 9 * sp.sin(3 * a) + 12 * sp.sin(2 * a) + 3 * sp.sin(a)),
    "edge_point": 1 / (2 * sp.pi) * (3 * sp.cos(a) - 3 * sp.cos(3 * a) - 4 * a * sp.sin(3 * a)),
    # c1-axis family: V = [f0 - f1 cos(2c) + f2 cos(4c)] / 2pi
    "axis_f0": 8 * a + a * sp.cos(3 * a) - 9 * a * sp.cos(a),
    "axis_f1": 3 * a * sp.cos(3 * a) - 3 * a * sp.cos(a) - 3 * sp.sin(3 * a) + 9 * sp.sin(a),
    "axis_f2": 3 * a * sp.cos(3 * a) - 3 * a * sp.cos(a) - 6 * sp.sin(3 * a) + 12 * sp.sin(2 * a) - 6 * sp.sin(a),
}


def main():
    out = ["// Generated by tools/scripts/gen_cube_series.py. Do not edit.", ""]
    for name, expr in FORMS.items():
        poly = sp.series(expr, a, 0, ORDER + 1).removeO()
        coeffs = [sp.nsimplify(poly.coeff(a, k)) for k in range(ORDER + 1)]
        vals = ", ".join("%.17g" % float(c) for c in coeffs)
        out.append("constexpr std::array<double, %d> k_%s{%s};" % (ORDER + 1, name, vals))
    with open("src/cube_series.inc", "w") as fh:
        fh.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
