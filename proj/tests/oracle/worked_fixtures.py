#!/usr/bin/env python3
"""Recomputes the worked examples with plain Fraction arithmetic.

Independent of the C++ library: every formula is written out again here.
Writes tests/fixtures/worked_fixtures.json, or with --check compares the
freshly computed values against that file and exits 1 on any difference.
"""
import argparse
import json
import sys
from fractions import Fraction as F
from pathlib import Path

HERE = Path(__file__).resolve().parent
FIXTURE = HERE.parent / "fixtures" / "worked_fixtures.json"


def s(v):
    return str(F(v))


def mat(m):
    return [[s(v) for v in row] for row in m]


def vec(v):
    return [s(c) for c in v]


def mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def inv2(m):
    d = det2(m)
    return [[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]]


def matvec(m, v):
    return [sum(m[i][k] * v[k] for k in range(len(v))) for i in range(len(m))]


def projective(v):
    # first nonzero coordinate scaled to 1
    p = next(c for c in v if c != 0)
    return [c / p for c in v]


def charpoly2(m):
    return [F(1), -(m[0][0] + m[1][1]), det2(m)]


def invariant2(m):
    _, c1, c2 = charpoly2(m)
    return c1 * c1 / c2


# Adler: x~ = y - (l - m)/(x + y), y~ = x - (m - l)/(x + y); a is the
# coefficient replacing l - m in x~ (perturbed variant uses l - 2m).
def adler(l, m, x, y, perturbed=False):
    a = (l - 2 * m) if perturbed else (l - m)
    return y - a / (x + y), x - (m - l) / (x + y)


def adler_lax(x, l, z):
    return [[x, x * x + l - z], [F(1), x]]


def yb_chains(R, l, m, n, x, y, z):
    x2, y1 = R(l, m, x, y)
    x23, z1 = R(l, n, x2, z)
    y13, z12 = R(m, n, y1, z1)
    left = (x23, y13, z12)
    y3, z2 = R(m, n, y, z)
    x3, z12r = R(l, n, x, z2)
    x23r, y13r = R(l, m, x3, y3)
    right = (x23r, y13r, z12r)
    return left, right


def dot(a, b):
    return sum(p * q for p, q in zip(a, b))


def soliton(l1, l2, xi1, eta1, xi2, eta2):
    d1, d2 = dot(xi1, eta1), dot(xi2, eta2)
    x1e2, x2e1 = dot(xi1, eta2), dot(xi2, eta1)
    c_xi1 = 2 * l2 * x1e2 / ((l1 - l2) * d2)
    c_eta1 = 2 * l2 * x2e1 / ((l1 - l2) * d2)
    c_xi2 = 2 * l1 * x2e1 / ((l2 - l1) * d1)
    c_eta2 = 2 * l1 * x1e2 / ((l2 - l1) * d1)
    nxi1 = [a + c_xi1 * b for a, b in zip(xi1, xi2)]
    neta1 = [a + c_eta1 * b for a, b in zip(eta1, eta2)]
    nxi2 = [a + c_xi2 * b for a, b in zip(xi2, xi1)]
    neta2 = [a + c_eta2 * b for a, b in zip(eta2, eta1)]
    return nxi1, neta1, nxi2, neta2


def crystal_P(j, x, y):
    n = len(x)
    total = F(0)
    for a in range(1, n + 1):
        term = F(1)
        for k in range(1, a):
            term *= x[(j + k - 1) % n]
        for k in range(a + 1, n + 1):
            term *= y[(j + k - 1) % n]
        total += term
    return total


def crystal(x, y):
    n = len(x)
    P = [crystal_P(j, x, y) for j in range(1, n + 1)]
    xt = [x[i] * P[i] / P[i - 1] for i in range(n)]
    yt = [y[i] * P[i - 1] / P[i] for i in range(n)]
    return xt, yt


def build():
    out = {}

    out["mobius"] = {"m": mat([[0, 2], [1, 0]]), "y": "1", "image": s(F(0 * 1 + 2, 1 * 1 + 0))}
    b_inv = [[F(3), F(-1)], [F(-2), F(5)]]
    out["projective_apply"] = {
        "m": mat([[5, 1], [2, 3]]),
        "p": vec([1, 1]),
        "image": vec(projective(matvec([[F(5), F(1)], [F(2), F(3)]], [F(1), F(1)]))),
    }
    out["spectral_diag23"] = {"m": mat([[2, 0], [0, 3]]), "I1": s(invariant2([[F(2), F(0)], [F(0), F(3)]]))}
    out["spectral_identity2"] = {"I1": s(invariant2([[F(1), F(0)], [F(0), F(1)]]))}

    l, m, x, y = F(3), F(1), F(1), F(2)
    xt, yt = adler(l, m, x, y)
    r21 = adler(m, l, y, x)
    out["adler_apply"] = {"lambda": "3", "mu": "1", "x": "1", "y": "2", "xt": s(xt), "yt": s(yt)}
    out["adler_r21"] = {"lambda": "3", "mu": "1", "x": "1", "y": "2", "first": s(r21[1]), "second": s(r21[0])}
    out["adler_lax_x0"] = {"x": "0", "lambda": "3", "zeta": "1", "matrix": mat(adler_lax(F(0), F(3), F(1)))}
    L = adler_lax(F(1), F(3), F(1))
    out["adler_lax_mobius"] = {"image": s((L[0][0] * 2 + L[0][1]) / (L[1][0] * 2 + L[1][1]))}
    lhs = mul(adler_lax(x, l, F(0)), adler_lax(y, m, F(0)))
    rhs = mul(adler_lax(yt, m, F(0)), adler_lax(xt, l, F(0)))
    out["adler_lax_products"] = {"zeta": "0", "lhs": mat(lhs), "rhs": mat(rhs)}

    left, right = yb_chains(adler, F(2), F(5), F(7), F(1), F(2), F(3))
    out["adler_yb"] = {"left": vec(left), "right": vec(right)}
    pert = lambda a, b, u, v: adler(a, b, u, v, perturbed=True)
    pl, pr = yb_chains(pert, F(2), F(5), F(7), F(1), F(2), F(3))
    out["adler_perturbed_yb"] = {"left": vec(pl), "right": vec(pr)}

    nxi1, neta1, nxi2, neta2 = soliton(F(2), F(1), [F(1), F(0)], [F(1), F(0)], [F(1), F(1)], [F(0), F(1)])
    out["soliton_apply"] = {"xi1": vec(nxi1), "eta1": vec(neta1), "xi2": vec(nxi2), "eta2": vec(neta2)}
    coef = 2 * F(1) / (F(3) - F(1))
    out["soliton_lax"] = {"matrix": mat([[1 + coef, 0], [0, 1]]), "det": s((F(3) + 1) / (F(3) - 1))}

    cx, cy, cy2 = [F(1), F(2)], [F(3), F(5)], [F(3), F(4)]
    out["crystal_P"] = {
        "y35": vec([crystal_P(1, cx, cy), crystal_P(2, cx, cy)]),
        "y34": vec([crystal_P(1, cx, cy2), crystal_P(2, cx, cy2)]),
    }
    cxt, cyt = crystal(cx, cy)
    cxt2, cyt2 = crystal(cx, cy2)
    out["crystal_apply"] = {"xt": vec(cxt), "yt": vec(cyt), "xt_y34": vec(cxt2), "yt_y34": vec(cyt2)}
    z = [F(1), cx[0]]
    w = [cy[1], F(1)]
    out["crystal_embed"] = {"z": vec(z), "w": vec(w)}
    a_inv = [[F(1), F(-15)], [F(-1), F(2)]]
    out["crystal_lax_inv"] = {
        "B_inv": mat(b_inv),
        "B_det": s(det2(b_inv)),
        "A_inv": mat(a_inv),
        "A_det": s(det2(a_inv)),
    }
    lam, mu = cx[0] * cx[1], cy[0] * cy[1]
    z_img = projective(matvec(inv2([[cy[0], F(-1)], [-lam, cy[1]]]), z))
    w_img = matvec(inv2([[cx[0], -mu], [F(-1), cx[1]]]), w)
    w_img = [c / w_img[-1] for c in w_img]
    out["crystal_projective_form"] = {
        "z_image": vec(z_img),
        "z_of_xt": vec([F(1), cxt[0]]),
        "w_image": vec(w_img),
        "w_of_yt": vec([cyt[1], F(1)]),
    }

    sites = [(F(1), F(3)), (F(2), F(1))]
    mono = lambda st, zeta: mul(adler_lax(st[0][0], st[0][1], zeta), adler_lax(st[1][0], st[1][1], zeta))
    M = mono(sites, F(0))
    out["chain_monodromy"] = {"matrix": mat(M), "I1": s(invariant2(M))}
    (xa, la), (ya, ma) = sites
    xt_, yt_ = adler(la, ma, xa, ya)
    moved = [(yt_, ma), (xt_, la)]
    out["chain_apply_adjacent"] = {"monodromy_after": mat(mono(moved, F(0)))}
    stepped = moved[1:] + moved[:1]
    out["chain_transfer"] = {
        str(zeta): {"before": s(invariant2(mono(sites, F(zeta)))), "after": s(invariant2(mono(stepped, F(zeta))))}
        for zeta in (0, 4, 9)
    }
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare against the stored fixture file")
    ap.add_argument("--out", type=Path, default=FIXTURE)
    args = ap.parse_args()
    data = build()
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if args.check:
        stored = args.out.read_text()
        if stored != text:
            print(f"fixtures differ from {args.out}", file=sys.stderr)
            return 1
        print("fixtures reproduced")
        return 0
    args.out.write_text(text)
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
