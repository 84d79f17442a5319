"""Extend the blowup invariant table to every candidate needed by products
of points of height <= 2, reading structure constants off the ring
k[P]/I[x1..x4]/(x1 x3 - t^C2, x2 x4 - t^(C1+C3) - t^C1 x1), theta_r = prod x_i^r_i.

usage: gen_blowup_table.py CLI FIXTURE_DIR > blowup_N_full.json
"""
import itertools
import json
import subprocess
import sys

CLI, FIX = sys.argv[1], sys.argv[2]
PAIR = f"{FIX}/blowup.json"
BOUND = 3
CLASSES = ["C1", "C2", "C3"]


def run(*args):
    out = subprocess.run([CLI, *args, "--format", "json"], check=True, capture_output=True, text=True)
    return json.loads(out.stdout)


def add(poly, key, c):
    beta, mono = key
    if sum(beta) >= BOUND or c == 0:
        return
    poly[key] = poly.get(key, 0) + c
    if poly[key] == 0:
        del poly[key]


def reduce(poly):
    # rewrite x1 x3 and x2 x4 until every monomial lives on adjacent rays
    out = {}
    todo = list(poly.items())
    while todo:
        (beta, m), c = todo.pop()
        if m[0] and m[2]:
            m2 = (m[0] - 1, m[1], m[2] - 1, m[3])
            todo.append((((beta[0], beta[1] + 1, beta[2]), m2), c))
        elif m[1] and m[3]:
            m2 = (m[0], m[1] - 1, m[2], m[3] - 1)
            todo.append((((beta[0] + 1, beta[1], beta[2] + 1), m2), c))
            todo.append((((beta[0] + 1, beta[1], beta[2]), (m2[0] + 1,) + m2[1:]), c))
        else:
            add(out, (beta, m), c)
    return out


def product(p, q):
    m = tuple(a + b for a, b in zip(p, q))
    return reduce({((0, 0, 0), m): 1})


points = [tuple(e["point"]) for e in run("points", "--pair", PAIR, "--height", "2")["points"]]
entries = []
for p, q in itertools.combinations_with_replacement(points, 2):
    if sum(p) == 0 or sum(q) == 0:
        continue
    cands = run("candidates", "--pair", PAIR, "--bound", str(BOUND), ",".join(map(str, p)),
                ",".join(map(str, q)))["entries"]
    prod = product(p, q)
    seen = set()
    for cnd in cands:
        r = tuple(cnd["r"])
        beta = tuple(cnd["beta"].get(n, 0) for n in CLASSES)
        n = prod.get((beta, r), 0)
        seen.add((beta, r))
        if cnd["forced"]:
            assert n == 1, (p, q, r, beta, n)
            continue
        entries.append({"p": list(p), "q": list(q), "r": list(r),
                        "beta": {k: v for k, v in zip(CLASSES, beta) if v}, "N": n})
    stray = set(prod) - seen
    assert not stray, (p, q, stray)

print(json.dumps({"schema_version": 1, "kind": "invariant_table", "pair": "blowup",
                  "entries": entries}, indent=1))
