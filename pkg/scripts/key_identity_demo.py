#!/usr/bin/env python3
"""Walk through the depth-four identity ({2}^a,1,{2}^b,1,{2}^c,3,{2}^d,1).

Prints the compiled pattern, its eight-term expansion, the classical limit
expansion, and a numeric confirmation of both the q-series identity and the
q -> 1 limit.
"""

import argparse
import sys
from fractions import Fraction

from qzeta import (
    classical_expand,
    compose,
    expand,
    verify_classical,
    verify_qmzsv,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-a", type=int, default=1)
    ap.add_argument("-b", type=int, default=0)
    ap.add_argument("-c", type=int, default=0)
    ap.add_argument("-d", type=int, default=0)
    ap.add_argument("--q", default="1/2")
    ap.add_argument("--eps", default="1e-20")
    ap.add_argument("--terms", type=int, default=10**6, help="classical truncation")
    args = ap.parse_args()
    if min(args.a, args.b, args.c, args.d) < 0:
        ap.error("parameters must be nonnegative")

    comp = (
        (2,) * args.a + (1,) + (2,) * args.b + (1,)
        + (2,) * args.c + (3,) + (2,) * args.d + (1,)
    )
    print(f"composition: {','.join(map(str, comp))}")

    d, pattern = compose(comp)
    print(f"sign {d:+d}, pattern {pattern}")
    print("\nexpansion:")
    for tri in expand(pattern):
        print(f"  {tri}")

    print("\nclassical limit:")
    line = ""
    for term in classical_expand(comp):
        sgn = "+" if term.sign > 0 else "-"
        body = ",".join(str(e) for e in term.index)
        line += f" {sgn}{term.coefficient}*z({body})"
    print(" " + line.strip())

    print("\nq-series check:")
    rep = verify_qmzsv(comp, q=Fraction(args.q), eps=Fraction(args.eps))
    print(f"  {rep.status}: |lhs - rhs| = {rep.discrepancy} <= {rep.tail_bound}")

    print("classical check:")
    rep = verify_classical(comp, K=args.terms, tol=1e-3)
    print(f"  {rep.status}: |lhs - rhs| = {rep.discrepancy} (allowance {rep.params['allowance']})")
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
