#!/usr/bin/env python3
"""Writes the ring catalogue files under data/rings/.

P2 and P2xP2 are truncated polynomial rings. Gr(2,6) uses the Schubert basis
s(a,b), 4 >= a >= b >= 0, with products from the Pieri rule and the Giambelli
formula s(a,b) = s(a) s(b) - s(a+1) s(b-1). The Cayley plane file only records
Betti numbers.
"""
import itertools
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent / "data" / "rings"
SCHEMA = "hodge-limits/ring/1"


def dump(name, payload):
    ROOT.mkdir(parents=True, exist_ok=True)
    path = ROOT / f"{name}.json"
    path.write_text(json.dumps(payload, indent=1, sort_keys=False) + "\n")
    print("wrote", path)


def truncated_polynomial_ring(name, variables, cap, tangent):
    # Monomials x^e with 0 <= e_i <= cap, real degree 2 * sum(e).
    def sym(e):
        parts = []
        for v, k in zip(variables, e):
            if k == 1:
                parts.append(v)
            elif k > 1:
                parts.append(f"{v}^{k}")
        return "".join(parts) or "1"

    exps = sorted(itertools.product(range(cap + 1), repeat=len(variables)), key=lambda e: (sum(e), [-x for x in e]))
    basis = [{"symbol": sym(e), "degree": 2 * sum(e)} for e in exps]
    products = []
    for a in exps:
        for b in exps:
            c = tuple(x + y for x, y in zip(a, b))
            if max(c) <= cap:
                products.append([sym(a), sym(b), {sym(c): 1}])
            else:
                products.append([sym(a), sym(b), {}])
    top = tuple([cap] * len(variables))
    return {
        "schema": SCHEMA,
        "name": name,
        "top_degree": 2 * sum(top),
        "full": True,
        "basis": basis,
        "products": products,
        "integration": {sym(top): 1},
        "tangent_total_chern": tangent,
        "annotations": [],
    }


def gr26():
    k, nk = 2, 4  # Gr(2,6): partitions in a 2 x 4 box

    def sym(p):
        a, b = p
        if a == 0:
            return "1"
        return f"s{a}" if b == 0 else f"s{a},{b}"

    parts = [(a, b) for a in range(nk + 1) for b in range(a + 1)]
    parts.sort(key=lambda p: (p[0] + p[1], -p[0]))

    def pieri(r, elem):
        out = {}
        for (a, b), c in elem.items():
            for c1 in range(a, nk + 1):
                d1 = a + b + r - c1
                if b <= d1 <= a:
                    out[(c1, d1)] = out.get((c1, d1), 0) + c
        return {p: c for p, c in out.items() if c}

    def special(r):
        return {(r, 0): 1} if 0 <= r <= nk else {}

    def times_special_pair(elem, r, s):
        if r < 0 or s < 0 or r > nk or s > nk:
            return {}
        return pieri(s, pieri(r, elem))

    def mult(elem, p):
        a, b = p
        plus = times_special_pair(elem, a, b)
        minus = times_special_pair(elem, a + 1, b - 1) if b >= 1 else {}
        out = dict(plus)
        for q, c in minus.items():
            out[q] = out.get(q, 0) - c
        return {q: c for q, c in out.items() if c}

    products = []
    for p in parts:
        for q in parts:
            prod = mult({p: 1}, q)
            products.append([sym(p), sym(q), {sym(r): c for r, c in sorted(prod.items(), key=lambda t: parts.index(t[0]))}])
    # The degree-2 class is the hyperplane; c(T) is not recorded for Gr(2,6).
    return {
        "schema": SCHEMA,
        "name": "Gr26",
        "top_degree": 16,
        "full": True,
        "basis": [{"symbol": sym(p), "degree": 2 * (p[0] + p[1])} for p in parts],
        "products": products,
        "integration": {sym((4, 4)): 1},
        "tangent_total_chern": None,
        "annotations": ["products generated from the Pieri rule and the Giambelli formula"],
    }


def op2_shell():
    betti = [1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1]
    return {
        "schema": SCHEMA,
        "name": "OP2-shell",
        "top_degree": 32,
        "full": False,
        "betti": {str(2 * k): b for k, b in enumerate(betti)},
        "annotations": [
            "Betti numbers only; no structure constants are recorded",
            "unverified: the Schubert calculus in degrees 14 and 16 is said to follow the pattern of G(1,5)",
        ],
    }


def main():
    dump("P2", truncated_polynomial_ring("P2", ["H"], 2, {"1": 1, "H": 3, "H^2": 3}))
    dump(
        "P2xP2",
        truncated_polynomial_ring(
            "P2xP2",
            ["H1", "H2"],
            2,
            # (1 + H1)^3 (1 + H2)^3
            {
                "1": 1, "H1": 3, "H2": 3, "H1^2": 3, "H1H2": 9, "H2^2": 3,
                "H1^2H2": 9, "H1H2^2": 9, "H1^2H2^2": 9,
            },
        ),
    )
    dump("Gr26", gr26())
    dump("OP2-shell", op2_shell())


if __name__ == "__main__":
    main()
