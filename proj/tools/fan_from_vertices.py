#!/usr/bin/env python3
"""Build a fan file from the vertices of a smooth Fano polytope.

The fan is the face fan of the polytope: its maximal cones are spanned by the
facets. Facets are found by brute force over all dim-subsets of vertices, so
this is only meant for the small polytopes of the toric Fano classification.

    fan_from_vertices.py --id 63 --name V4 "1 0 0 0; 0 1 0 0; ..." > v4.fan
"""

import argparse
import itertools
import sys
from fractions import Fraction


def det(m):
    m = [list(map(Fraction, row)) for row in m]
    n = len(m)
    sign = 1
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    out = Fraction(sign)
    for i in range(n):
        out *= m[i][i]
    return out


def solve(rows, rhs):
    n = len(rows)
    a = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c] / a[c][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [a[i][n] / a[i][i] for i in range(n)]


def facets(vertices):
    dim = len(vertices[0])
    out = []
    for combo in itertools.combinations(range(len(vertices)), dim):
        pts = [vertices[i] for i in combo]
        if det(pts) == 0:
            continue
        normal = solve(pts, [1] * dim)
        others = [sum(n * x for n, x in zip(normal, vertices[j])) for j in range(len(vertices)) if j not in combo]
        if all(v < 1 for v in others):
            out.append((combo, abs(det(pts))))
        elif any(v == 1 for v in others) and all(v <= 1 for v in others):
            sys.exit("facet %s is not a simplex; polytope is not simplicial" % (combo,))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("vertices", help="semicolon-separated integer vectors")
    ap.add_argument("--id")
    ap.add_argument("--name")
    ap.add_argument("--expect", nargs=2, type=int, metavar=("CHI", "TAU"))
    ap.add_argument("--comment", action="append", default=[])
    args = ap.parse_args()

    verts = [tuple(int(x) for x in v.split()) for v in args.vertices.split(";") if v.strip()]
    cones = facets(verts)
    bad = [c for c, d in cones if d != 1]
    if bad:
        sys.exit("non-unimodular facets %s: polytope is not smooth" % bad)

    lines = ["# %s" % c for c in args.comment]
    if args.id:
        lines.append("id %s" % args.id)
    if args.name:
        lines.append("name %s" % args.name)
    lines.append("dim %d" % len(verts[0]))
    lines.append("rays %d" % len(verts))
    lines += [" ".join("%2d" % x for x in v) for v in verts]
    lines.append("cones %d" % len(cones))
    lines += [" ".join(map(str, c)) for c, _ in cones]
    if args.expect:
        lines.append("expect %d %d" % tuple(args.expect))
    print("\n".join(lines))


if __name__ == "__main__":
    main()
