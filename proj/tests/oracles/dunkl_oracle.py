"""Independent sympy evaluation of Dunkl-operator expressions.

Writes tests/data/dunkl_oracle.json: exact values of several operator
applications at fixed rational points and couplings. Regenerate with
    python3 tests/oracles/dunkl_oracle.py
"""
import json
import pathlib

import sympy as sp


def swap(f, xs, i, j):
    return f.subs({xs[i]: xs[j], xs[j]: xs[i]}, simultaneous=True)


def dunkl(f, xs, c, k):
    out = sp.diff(f, xs[k])
    for i in range(len(xs)):
        if i != k:
            out -= c * swap(f, xs, i, k) / (xs[i] - xs[k])
    return out


def sum_sq(f, xs, c):
    return sum(dunkl(dunkl(f, xs, c, k), xs, c, k) for k in range(len(xs)))


def printed_rhs(f, xs, c):
    n = len(xs)
    out = sum(sp.diff(f, x, 2) for x in xs)
    for i in range(n):
        for j in range(n):
            if i != j:
                w = 1 / (xs[i] - xs[j]) ** 2
                out += c * w * swap(f, xs, i, j) + c**2 * w * f
    return out


def commutator(f, xs, c, j, k):
    return dunkl(dunkl(f, xs, c, k), xs, c, j) - dunkl(dunkl(f, xs, c, j), xs, c, k)


def main():
    c = sp.Symbol("c")
    cases = []
    points = {
        2: [(sp.Rational(0), sp.Rational(1)), (sp.Rational(-3, 2), sp.Rational(7, 5)), (sp.Rational(2), sp.Rational(9, 4))],
        3: [(sp.Rational(0), sp.Rational(1), sp.Rational(3)), (sp.Rational(-1, 2), sp.Rational(2, 3), sp.Rational(5, 2))],
    }
    couplings = [sp.Rational(2), sp.Rational(-1, 3), sp.Rational(5, 7)]

    def add(name, n, expr_fn, exps):
        xs = sp.symbols(f"x1:{n + 1}")
        f = sp.Mul(*[x**e for x, e in zip(xs, exps)])
        expr = expr_fn(f, xs)
        for pt in points[n]:
            for cv in couplings:
                val = sp.nsimplify(sp.simplify(expr.subs(c, cv).subs(dict(zip(xs, pt)))))
                cases.append({
                    "name": name,
                    "N": n,
                    "exponents": list(exps),
                    "point": [str(v) for v in pt],
                    "c": str(cv),
                    "value": str(sp.Rational(val)),
                })

    add("dunkl_1", 2, lambda f, xs: dunkl(f, xs, c, 0), (0, 0))
    add("dunkl_1", 2, lambda f, xs: dunkl(f, xs, c, 0), (1, 0))
    add("dunkl_2", 3, lambda f, xs: dunkl(f, xs, c, 1), (2, 1, 0))
    add("sum_of_squares", 2, lambda f, xs: sum_sq(f, xs, c), (0, 0))
    add("sum_of_squares", 2, lambda f, xs: sum_sq(f, xs, c), (3, 1))
    add("sum_of_squares", 3, lambda f, xs: sum_sq(f, xs, c), (1, 1, 1))
    add("sum_of_squares", 3, lambda f, xs: sum_sq(f, xs, c), (2, 0, 1))
    add("printed_rhs", 2, lambda f, xs: printed_rhs(f, xs, c), (0, 0))
    add("printed_rhs", 3, lambda f, xs: printed_rhs(f, xs, c), (1, 1, 1))
    add("commutator_12", 3, lambda f, xs: commutator(f, xs, c, 0, 1), (2, 1, 0))

    out = pathlib.Path(__file__).resolve().parents[1] / "data" / "dunkl_oracle.json"
    out.write_text(json.dumps({"cases": cases}, indent=1) + "\n")
    print(f"wrote {len(cases)} cases to {out}")


if __name__ == "__main__":
    main()
