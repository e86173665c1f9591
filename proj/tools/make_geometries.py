"""Writes the bundled geometry files.

initial_{a,b}.json  bicubic initial geometries as Bezier control grids
printed_{a,b}.json  biquintic bilinear-like geometries whose u^0, u^1, u^2
                    terms are the given ones; the remaining control
                    columns are a weighted least-squares fit to the initial
                    geometry

Usage: python3 make_geometries.py OUT_DIR [--variant-a-y {u1,u2,u3}]
"""
import argparse
import itertools
import json
import pathlib
from math import comb

import numpy as np
import sympy as sp

u, v = sp.symbols("u v")
R = sp.Rational


def initial_a(variant):
    lx = R(1, 150) * (75 * v * (2 - v - v**2)
                      + u * (-450 - 234 * v + 9 * v**2 + 175 * v**3)
                      + u**2 * v * (-63 + 261 * v - 148 * v**2)
                      + u**3 * v * (297 - 845 * v + 498 * v**2))
    t1 = -u * (75 + 72 * v - 477 * v**2 + 280 * v**3)
    t2 = u**2 * (-75 + 279 * v - 360 * v**2 + 206 * v**3)
    t3 = u**3 * (300 - 919 * v + 963 * v**2 - 544 * v**3)
    if variant == "u1":
        t1 *= 4
    elif variant == "u2":
        t2 *= 4
    elif variant == "u3":
        t3 *= R(1, 4)
    ly = R(1, 150) * (450 * v + t1 + t2 + t3)
    rx = R(1, 50) * (25 * v * (2 - v - v**2)
                     + u * (175 - 90 * v - 21 * v**2 + 86 * v**3)
                     - 6 * u**2 * v * (5 - 19 * v + 14 * v**2)
                     + u**3 * v * (-55 + 182 * v - 127 * v**2))
    ry = R(1, 200) * (600 * v
                      + 6 * u * (-25 + 33 * v + 21 * v**2 + 21 * v**3)
                      - 12 * u**2 * v * (-27 + 42 * v + 35 * v**2)
                      + u**3 * (100 - 297 * v + 228 * v**2 + 369 * v**3))
    return (lx, ly), (rx, ry)


def initial_b():
    lx = R(1, 1050) * (50 * (-21 + 81 * v - 50 * v**2 + 32 * v**3)
                       + u * (-1260 + 513 * v + 3342 * v**2 - 3645 * v**3)
                       + 15 * u**2 * (252 - 576 * v + 319 * v**2 + 75 * v**3)
                       + u**3 * (-2520 + 7227 * v - 6257 * v**2 + 1550 * v**3))
    ly = R(1, 350) * (-350 * v * (-1 - 5 * v + 3 * v**2)
                      + 6 * u * (315 + 266 * v - 1022 * v**2 + 566 * v**3)
                      + u**2 * (770 - 4158 * v + 8001 * v**2 - 4013 * v**3)
                      + u**3 * (-560 + 3262 * v - 6349 * v**2 + 3347 * v**3))
    rx = R(1, 1050) * (50 * (-21 + 81 * v - 50 * v**2 + 32 * v**3)
                       + u * (6300 - 6480 * v + 8256 * v**2 - 4926 * v**3)
                       + 3 * u**2 * (-350 + 1887 * v - 3235 * v**2 + 1698 * v**3)
                       + u**3 * (1050 - 4491 * v + 7099 * v**2 - 3658 * v**3))
    ry = R(1, 100) * (100 * v * (1 + 5 * v - 3 * v**2)
                      + 3 * u * (-80 + 392 * v - 716 * v**2 + 379 * v**3)
                      + u**2 * (630 - 2292 * v + 3264 * v**2 - 1552 * v**3)
                      + u**3 * (-390 + 1316 * v - 1556 * v**2 + 655 * v**3))
    return (lx, ly), (rx, ry)


def bezier_grid(expr, p=3):
    """Control values b_ij with expr = sum b_ij B_i(u) B_j(v)."""
    poly = sp.Poly(sp.expand(expr), u, v)
    a = [[poly.coeff_monomial(u**k * v**l) for l in range(p + 1)]
         for k in range(p + 1)]
    grid = []
    for i in range(p + 1):
        for j in range(p + 1):
            b = sum(sp.binomial(i, k) / sp.binomial(p, k)
                    * sp.binomial(j, l) / sp.binomial(p, l) * a[k][l]
                    for k in range(i + 1) for l in range(j + 1))
            grid.append(sp.nsimplify(b))
    return grid


def document(patches):
    doc = {"degree": 3, "regularity": 2, "knots_interior": [], "patches": {}}
    for name, (x, y) in zip(("L", "R"), patches):
        gx, gy = bezier_grid(x), bezier_grid(y)
        doc["patches"][name] = {
            "control_points": [[float(a), float(b)] for a, b in zip(gx, gy)]}
    return doc


# Given u^0, u^1, u^2 coefficient polynomials of the fitted biquintic
# patches, per (geometry, side): ((x0, y0), (x1, y1), (x2, y2)).
def reference_terms():
    t = {}
    u0x = R(1, 20) * v * (19 - 10 * v - 8 * v**2 - 2 * v**3 + v**4)
    u0y = R(1, 100) * (-1 + 300 * v - 10 * v**2 + 40 * v**3 - 45 * v**4 + 17 * v**5)
    t["a", "L"] = (
        (u0x, u0y),
        (R(1, 1800) * (-5469 - 449 * v + 760 * v**2 - 372 * v**3 - 761 * v**4 + 71 * v**5),
         R(1, 1800) * (-738 + 1578 * v - 460 * v**2 + 1140 * v**3 - 1641 * v**4 + 371 * v**5)),
        (R(1, 16200) * (7308 - 160224 * v - 29650 * v**2 + 171723 * v**3 + 31872 * v**4 + 2191 * v**5),
         R(1, 16200) * (-39411 - 8058 * v + 114472 * v**2 - 10452 * v**3 - 19209 * v**4 + 1018 * v**5)))
    t["a", "R"] = (
        (u0x, u0y),
        (R(1, 1200) * (3937 + 313 * v - 1008 * v**2 - 212 * v**3 + 233 * v**4 + 21 * v**5),
         R(1, 1200) * (-426 + 938 * v - 180 * v**2 + 540 * v**3 - 247 * v**4 + 201 * v**5)),
        (R(1, 7200) * (3692 - 94752 * v + 24918 * v**2 + 100483 * v**3 - 27528 * v**4 + 2007 * v**5),
         R(1, 7200) * (-23819 + 6894 * v + 70416 * v**2 - 47516 * v**3 + 10047 * v**4 - 126 * v**5)))
    u0x = R(1, 200) * (-200 + 610 * v + 540 * v**2 - 2080 * v**3 + 2420 * v**4 - 896 * v**5)
    u0y = R(1, 200) * (-2 + 260 * v + 640 * v**2 + 140 * v**3 - 680 * v**4 + 238 * v**5)
    t["b", "L"] = (
        (u0x, u0y),
        (R(1, 200) * (-128 + 1675 * v - 8220 * v**2 + 14780 * v**3 - 10940 * v**4 + 2780 * v**5),
         R(1, 200) * (1034 + 340 * v + 680 * v**2 - 4190 * v**3 + 3630 * v**4 - 973 * v**5)),
        (R(1, 200) * (-306 - 6420 * v + 21885 * v**2 - 6770 * v**3 - 30880 * v**4 + 21709 * v**5),
         R(1, 200) * (703 - 445 * v - 11810 * v**2 + 10525 * v**3 + 5240 * v**4 - 4562 * v**5)))
    t["b", "R"] = (
        (u0x, u0y),
        (R(1, 200) * (1348 - 125 * v - 5340 * v**2 + 10820 * v**3 - 7700 * v**4 + 1700 * v**5),
         -R(1, 200) * (514 - 1960 * v + 1120 * v**2 + 1670 * v**3 - 1470 * v**4 + 217 * v**5)),
        (R(1, 200) * (-1368 - 660 * v + 8565 * v**2 + 10150 * v**3 - 41140 * v**4 + 23869 * v**5),
         -R(1, 200) * (-1549 + 4045 * v + 3350 * v**2 + 635 * v**3 - 12260 * v**4 + 6074 * v**5)))
    return t


GLUING = {
    "a": {"alpha_L": [-9, -1], "alpha_R": [10.5, -1.5],
          "beta_L": [-1 / 6, 5 / 18], "beta_R": [-1 / 12, 1 / 4]},
    "b": {"alpha_L": [-18, 9], "alpha_R": [18, -9],
          "beta_L": [1, -0.5], "beta_R": [1, -0.5]},
}


def bernstein(n, i, t):
    return comb(n, i) * t**i * (1 - t)**(n - i)


def to_bernstein(poly, n):
    c = sp.Poly(sp.expand(poly), v).all_coeffs()[::-1]
    c = c + [0] * (n + 1 - len(c))
    return [sum(sp.binomial(j, k) / sp.binomial(n, k) * c[k]
                for k in range(j + 1)) for j in range(n + 1)]


def printed_document(name, initial, bilinear):
    """Columns i = 0, 1, 2 from the given terms, columns 3..5 from a
    least-squares fit to the initial patches weighted by |det| of the
    bilinear reference."""
    p = 5
    terms = reference_terms()
    nodes, weights = np.polynomial.legendre.leggauss(12)
    nodes, weights = (nodes + 1) / 2, weights / 2
    doc = {"degree": p, "regularity": 2, "knots_interior": [], "patches": {},
           "gluing": GLUING[name]}
    for side in ("L", "R"):
        init = initial["patches"][side]["control_points"]
        bil = np.array(bilinear["patches"][side]["control_points"])

        def initial_at(uu, ww, a):
            return sum(init[i * 4 + j][a] * bernstein(3, i, uu) * bernstein(3, j, ww)
                       for i in range(4) for j in range(4))

        def jacobian(uu, ww):
            xu = (bil[2] - bil[0]) * (1 - ww) + (bil[3] - bil[1]) * ww
            xv = (bil[1] - bil[0]) * (1 - uu) + (bil[3] - bil[2]) * uu
            return abs(xu[0] * xv[1] - xu[1] * xv[0])

        grid = np.zeros((p + 1, p + 1, 2))
        for a in (0, 1):
            t0, t1, t2 = (terms[name, side][m][a] for m in range(3))
            c0 = t0
            c1 = c0 + t1 / p
            c2 = t2 / comb(p, 2) + 2 * c1 - c0
            for i, c in enumerate((c0, c1, c2)):
                grid[i, :, a] = [float(x) for x in to_bernstein(c, p)]
            rows, rhs = [], []
            for (uu, wu), (ww, wv) in itertools.product(zip(nodes, weights),
                                                        zip(nodes, weights)):
                s = np.sqrt(wu * wv * jacobian(uu, ww))
                bu = [bernstein(p, i, uu) for i in range(p + 1)]
                bv = [bernstein(p, j, ww) for j in range(p + 1)]
                fixed = sum(grid[i, j, a] * bu[i] * bv[j]
                            for i in range(3) for j in range(p + 1))
                rows.append([s * bu[i] * bv[j]
                             for i in range(3, p + 1) for j in range(p + 1)])
                rhs.append(s * (initial_at(uu, ww, a) - fixed))
            sol = np.linalg.lstsq(np.array(rows), np.array(rhs), rcond=None)[0]
            grid[3:, :, a] = sol.reshape(p - 2, p + 1)
        doc["patches"][side] = {"control_points": [
            [float(grid[i, j, 0]), float(grid[i, j, 1])]
            for i in range(p + 1) for j in range(p + 1)]}
    return doc


def bilinear_document(initial):
    doc = {"degree": 1, "regularity": 0, "knots_interior": [], "patches": {}}
    for side in ("L", "R"):
        cp = initial["patches"][side]["control_points"]
        doc["patches"][side] = {"control_points": [cp[0], cp[3], cp[12], cp[15]]}
    return doc


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out_dir")
    ap.add_argument("--variant-a-y", default="u2", choices=["u1", "u2", "u3"])
    args = ap.parse_args()
    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    initial = {"a": document(initial_a(args.variant_a_y)),
               "b": document(initial_b())}
    for name, doc in initial.items():
        (out / f"initial_{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
        printed = printed_document(name, doc, bilinear_document(doc))
        (out / f"printed_{name}.json").write_text(
            json.dumps(printed, indent=1) + "\n")


if __name__ == "__main__":
    main()
