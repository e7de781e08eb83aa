#!/usr/bin/env python3
# Copyright 2026 The eaqecc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/catalog.json and the per-code files in data/fixtures/.

Symbols are written 0, 1, w, W with w = (1|0) and W = (0|1) under the
symplectic packing used by the library. Every code is checked here by
exhaustive enumeration, and the C++ tests check the claims again.

    python3 tools/gen_catalog.py data
"""
import json
import os
import random
import sys
from itertools import combinations, product

import numpy as np

SEED = 20261015

# Symbol <-> (a, b) bit pair.
SYM = {(0, 0): '0', (1, 0): 'w', (0, 1): 'W', (1, 1): '1'}
BITS = {v: k for k, v in SYM.items()}
LOG = {3: 0, 1: 1, 2: 2}  # 1 = w^0, w = w^1, W = w^2 as 2-bit ints a | b << 1
EXP = [3, 1, 2]
OMEGA = 1


def sym_int(ch):
    a, b = BITS[ch]
    return a | (b << 1)


def gf_mul(x, y):
    if x == 0 or y == 0:
        return 0
    return EXP[(LOG[x] + LOG[y]) % 3]


def gf_conj(x):
    return gf_mul(x, x)


# Vectors are pairs of n-bit masks (a, b); bit i is position i.

def parse(s):
    a = b = 0
    for i, ch in enumerate(s):
        x, y = BITS[ch]
        a |= x << i
        b |= y << i
    return (a, b)


def to_str(v, n):
    return ''.join(SYM[((v[0] >> i) & 1, (v[1] >> i) & 1)] for i in range(n))


def sp(u, v):
    return bin((u[0] & v[1]) ^ (u[1] & v[0])).count('1') & 1


def rank(vs, n):
    rows = [v[0] | (v[1] << n) for v in vs]
    r = 0
    for bit in range(2 * n):
        piv = next((i for i in range(r, len(rows)) if (rows[i] >> bit) & 1), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i] >> bit) & 1:
                rows[i] ^= rows[r]
        r += 1
    return r


def weights(gens, n):
    """Symbol weights of every codeword in span(gens), index 0 is the zero word."""
    arr = np.zeros(1, dtype=np.uint64)
    for a, b in gens:
        arr = np.concatenate([arr, arr ^ np.uint64(a | (b << n))])
    mask = np.uint64((1 << n) - 1)
    x = (arr & mask) | (arr >> np.uint64(n))
    w = np.zeros(len(x), dtype=np.int64)
    for i in range(n):
        w += ((x >> np.uint64(i)) & np.uint64(1)).astype(np.int64)
    return w


def min_distance(gens, n):
    return int(weights(gens, n)[1:].min())


def self_orthogonal(gens):
    return all(sp(g, h) == 0 for g in gens for h in gens)


def low_weight(n, w):
    for k in range(1, w + 1):
        for pos in combinations(range(n), k):
            for syms in product([(1, 0), (0, 1), (1, 1)], repeat=k):
                a = b = 0
                for p, (x, y) in zip(pos, syms):
                    a |= x << p
                    b |= y << p
                yield (a, b)


def qecc_distance_at_least_3(stab, n):
    """No weight 1-2 vector commutes with S without lying in S."""
    r = rank(stab, n)
    for e in low_weight(n, 2):
        if all(sp(e, g) == 0 for g in stab) and rank(stab + [e], n) > r:
            return False
    return True


def linear_as_additive(rows, n):
    """Rows b of a GF(4)-linear code contribute b and w*b."""
    out = []
    for s in rows:
        out.append(parse(s))
        out.append(parse(''.join(to_str_sym(gf_mul(OMEGA, sym_int(ch))) for ch in s)))
    return out


def to_str_sym(x):
    return SYM[(x & 1, x >> 1)]


def hermitian_self_orthogonal(rows):
    for r1 in rows:
        for r2 in rows:
            acc = 0
            for x, y in zip(r1, r2):
                acc ^= gf_mul(sym_int(x), gf_conj(sym_int(y)))
            if acc:
                return False
    return True


def projective_columns_distinct(rows):
    cols = list(zip(*[[sym_int(ch) for ch in r] for r in rows]))
    seen = set()
    for col in cols:
        lead = next(x for x in col if x)
        inv = EXP[(-LOG[lead]) % 3]
        norm = tuple(gf_mul(inv, x) for x in col)
        if norm in seen:
            return False
        seen.add(norm)
    return True


# Hermitian self-orthogonal [n, 3]_4 codes whose columns are distinct points
# of PG(2,4); their duals have distance >= 3, so they give [[n, n-6, 3]].
PG_PROTECTORS = {
    8: ['00001111', '011101wW', '101w0W1w'],
    10: ['0000111111', '01110001wW', '101w01w11W'],
    11: ['00000111111', '011110011ww', '101wW010w1w'],
    12: ['000011111111', '01110001wwwW', '101w01w001W1'],
    14: ['00001111111111', '0111000111wWWW', '101w01w01w01wW'],
    15: ['000001111111111', '01111000011wwWW', '101wW01wW010W0w'],
    16: ['0000111111111111', '0111000111wwwWWW', '101w01w1wW01W0wW'],
}


def random_protector(m, k, rng, tries=200000):
    r = m - k
    for _ in range(tries):
        gens = []
        while len(gens) < r:
            v = (rng.getrandbits(m), rng.getrandbits(m))
            if all(sp(v, g) == 0 for g in gens) and rank(gens + [v], m) == len(gens) + 1:
                gens.append(v)
        if qecc_distance_at_least_3(gens, m):
            return gens
    raise RuntimeError(f"no [[{m},{k},3]] found")


def random_acd(m, size_log2, dmin, rng, tries=200000):
    for _ in range(tries):
        gens = [(rng.getrandbits(m), rng.getrandbits(m)) for _ in range(size_log2)]
        if rank(gens, m) < size_log2:
            continue
        gram = [sum(sp(g, h) << j for j, h in enumerate(gens)) for g in gens]
        if rank([(x, 0) for x in gram], size_log2) < size_log2:
            continue
        if min_distance(gens, m) >= dmin:
            return gens
    raise RuntimeError(f"no ({m},2^{size_log2},{dmin}) ACD code found")


def graph_code(adj, n):
    """Generators w*e_i + sum_j adj[i][j] e_j, self-dual for symmetric adj."""
    gens = []
    for i in range(n):
        a = 1 << i
        b = 0
        for j in range(n):
            if adj[i][j]:
                a |= 1 << j
                b |= 1 << j
        gens.append((a, b))
    return gens


def circulant(v, offsets):
    return [[int(i != j and min((j - i) % v, (i - j) % v) in offsets) for j in range(v)] for i in range(v)]


def circulant_graph_code(n, d):
    """First circulant graph on n vertices, or else on n-1 vertices plus a
    vertex joined to all of them, whose graph code reaches distance d.
    Offset sets are tried in binary order."""
    for bordered in (False, True):
        v = n - 1 if bordered else n
        for mask in range(1, 1 << (v // 2)):
            offsets = {k + 1 for k in range(v // 2) if (mask >> k) & 1}
            adj = circulant(v, offsets)
            if bordered:
                adj = [row + [1] for row in adj] + [[1] * v + [0]]
            gens = graph_code(adj, n)
            if min_distance(gens, n) >= d:
                kind = "bordered circulant" if bordered else "circulant"
                return gens, f"{kind} graph code, offsets {sorted(offsets)}"
    raise RuntimeError(f"no circulant ({n},2^{n},{d}) graph code")


def code(name, n, rows, size, dist, note, kind='additive'):
    return {"name": name, "length": n, "kind": kind, "generators": rows,
            "claimed": {"size_log2": size, "min_distance": dist}, "provenance": note}


def strs(gens, n):
    return [to_str(g, n) for g in gens]


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else 'data'
    rng = random.Random(SEED)
    cat = []
    fixtures = {}

    five = [parse(s) for s in ['wWWw0', '0wWWw', 'w0wWW', 'Ww0wW']]
    assert self_orthogonal(five) and rank(five, 5) == 4 and qecc_distance_at_least_3(five, 5)
    cat.append(code("five_qubit", 5, strs(five, 5), 4, None,
                    "stabilizer of the [[5,1,3]] code: cyclic shifts of XZZXI"))

    dodeca = [parse(s) for s in ['wWW001W11w11', '1wWW001W11w1', '11wWW001W11w', 'w11wWW001W11',
                                 '1w11wWW001W1', '11w11wWW001W', 'W11w11wWW001', '1W11w11wWW00',
                                 '01W11w11wWW0', '001W11w11wWW', 'W001W11w11wW', 'WW001W11w11w']]
    assert self_orthogonal(dodeca) and rank(dodeca, 12) == 12 and min_distance(dodeca, 12) == 6
    cat.append(code("dodecacode", 12, strs(dodeca, 12), 12, 6,
                    "(12,2^12,6) trace self-dual cyclic additive code (the dodecacode)"))

    for n, d in [(14, 6), (18, 8)]:
        gens, how = circulant_graph_code(n, d)
        assert self_orthogonal(gens) and rank(gens, n) == n
        cat.append(code(f"self_dual_{n}", n, strs(gens, n), n, d,
                        f"({n},2^{n},{d}) trace self-dual {how}"))

    cat.append({"name": "self_dual_30", "kind": "code_params", "n": 30, "size_log2": 30, "d": 12,
                "provenance": "(30,2^30,12) trace self-dual code from the tables of self-dual codes over GF(4)"})
    cat.append({"name": "self_orthogonal_27", "kind": "code_params", "n": 27, "size_log2": 24, "d": 12,
                "provenance": "(27,2^24,12) self-orthogonal code derived from the (30,2^30,12) code"})
    cat.append({"name": "self_orthogonal_28", "kind": "code_params", "n": 28, "size_log2": 26, "d": 12,
                "provenance": "(28,2^26,12) self-orthogonal code derived from the (30,2^30,12) code"})

    cat.append({"name": "qecc_5_1_3", "kind": "qecc_params", "n": 5, "k": 1, "d": 3,
                "stabilizer": "five_qubit", "provenance": "five-qubit code"})
    p83 = random_protector(8, 3, rng)
    cat.append(code("stab_8_3_3", 8, strs(p83, 8), 5, None,
                    f"stabilizer of an [[8,3,3]] code, seeded random search (seed {SEED})"))
    cat.append({"name": "qecc_8_3_3", "kind": "qecc_params", "n": 8, "k": 3, "d": 3,
                "stabilizer": "stab_8_3_3", "provenance": "[[8,3,3]] protector"})
    for m, rows in PG_PROTECTORS.items():
        assert hermitian_self_orthogonal(rows) and projective_columns_distinct(rows)
        stab = linear_as_additive(rows, m)
        assert self_orthogonal(stab) and rank(stab, m) == 6 and qecc_distance_at_least_3(stab, m)
        k = m - 6
        cat.append(code(f"stab_{m}_{k}_3", m, rows, 6, None,
                        f"Hermitian self-orthogonal [{m},3] code on distinct points of PG(2,4); "
                        f"stabilizer of an [[{m},{k},3]] code", kind="linear"))
        cat.append({"name": f"qecc_{m}_{k}_3", "kind": "qecc_params", "n": m, "k": k, "d": 3,
                    "stabilizer": f"stab_{m}_{k}_3", "provenance": f"[[{m},{k},3]] protector"})

    for name, n, k, d in [("qecc_17_1_7", 17, 1, 7), ("qecc_25_4_7", 25, 4, 7), ("qecc_27_3_9", 27, 3, 9)]:
        cat.append({"name": name, "kind": "qecc_params", "n": n, "k": k, "d": d,
                    "provenance": "shortest known stabilizer code with this k and d; comparison reference"})

    for n, k, d, c in [(7, 2, 5, 5), (8, 2, 5, 4), (9, 2, 5, 3), (10, 2, 6, 4), (9, 3, 6, 6),
                       (13, 3, 9, 10), (12, 4, 7, 8), (12, 1, 7, 1)]:
        cat.append({"name": f"eaqecc_{n}_{k}_{d}_{c}", "kind": "eaqecc_params", "n": n, "k": k, "d": d, "c": c,
                    "provenance": "known EAQECC with maximal entanglement"})

    e1 = [parse(s) for s in ['w0', 'W0', '0w', '0W']]
    cat.append(code("E_2_4_1", 2, strs(e1, 2), 4, 1, "(2,2^4,1) full space, ACD"))
    e2 = random_acd(3, 4, 2, rng)
    cat.append(code("E_3_4_2", 3, strs(e2, 3), 4, 2, f"(3,2^4,2) ACD code, seeded random search (seed {SEED})"))
    e3 = [parse(s) for s in ['w00', 'W00', '0w0', '0W0', '00w', '00W']]
    cat.append(code("E_3_6_1", 3, strs(e3, 3), 6, 1, "(3,2^6,1) full space, ACD"))

    os.makedirs(os.path.join(outdir, 'fixtures'), exist_ok=True)
    with open(os.path.join(outdir, 'catalog.json'), 'w') as f:
        json.dump(cat, f, indent=2)
        f.write('\n')
    for entry in cat:
        if entry["kind"] in ("additive", "linear"):
            with open(os.path.join(outdir, 'fixtures', entry["name"] + '.json'), 'w') as f:
                json.dump(entry, f, indent=2)
                f.write('\n')


if __name__ == "__main__":
    main()
