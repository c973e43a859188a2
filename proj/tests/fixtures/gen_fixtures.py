#!/usr/bin/env python3
"""Regenerates tests/fixtures from scratch.

tables/ holds the k=3 reference triangles (n <= 6, 6, 7), typed in by hand.
oeis/ holds b-file prefixes computed here with pure-Python integer code that
shares nothing with the C++ library:

  * short chords and components: inclusion-exclusion over marked short
    blocks, with a transfer DP along the word once each marked block is
    collapsed to one symbol;
  * non-crossing: fixpoint of the root-block decomposition
    T = 1 + x (T^(k-1) - 1 + y) T;
  * Fuss-Catalan: math.comb.

Every generator is checked against the transcribed tables before writing.
"""

import math
import pathlib

HERE = pathlib.Path(__file__).resolve().parent

REFERENCE = {
    "d_k3": [
        [0, 1],
        [7, 2, 1],
        [219, 53, 7, 1],
        [12861, 2296, 226, 16, 1],
        [1215794, 171785, 13080, 710, 30, 1],
        [169509845, 19796274, 1228655, 53740, 1835, 50, 1],
    ],
    "c_k3": [
        [0, 1],
        [7, 3],
        [219, 56, 5],
        [12861, 2352, 183, 4],
        [1215794, 174137, 11145, 323, 1],
        [169509845, 19970411, 1078977, 30833, 334],
    ],
    # value l starts at 1 in this one
    "t_k3": [
        [1],
        [2, 1],
        [4, 7, 1],
        [8, 30, 16, 1],
        [16, 104, 122, 30, 1],
        [32, 320, 660, 365, 50, 1],
        [64, 912, 2920, 2875, 903, 77, 1],
    ],
}


def total(k, n):
    return math.factorial(k * n) // (math.factorial(k) ** n * math.factorial(n))


def poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def poly_scale(a, c):
    return [c * x for x in a]


def poly_shift(a):
    return [0] + a


def marked_weight(length, marked, counting_runs):
    """Sum over collapsed words with `marked` M symbols among `length`, of the
    product of per-M weights: an M kept in T contributes z (new run, or every
    kept M when counting blocks) or 1 (continuing a run); a dropped M gives -1.
    Returns a polynomial in z."""
    # state: (number of M used, previous symbol is a kept M)
    states = {(0, False): [1]}
    for _ in range(length):
        nxt = {}
        for (used, prev_kept), poly in states.items():
            key = (used, False)  # free vertex
            nxt[key] = poly_add(nxt.get(key, [0]), poly)
            if used < marked:
                key = (used + 1, False)  # dropped M
                nxt[key] = poly_add(nxt.get(key, [0]), poly_scale(poly, -1))
                key = (used + 1, True)  # kept M
                new_run = counting_runs is False or not prev_kept
                kept = poly_shift(poly) if new_run else poly
                nxt[key] = poly_add(nxt.get(key, [0]), kept)
        states = nxt
    out = [0]
    for (used, _), poly in states.items():
        if used == marked:
            out = poly_add(out, poly)
    return out


def block_row(k, n, counting_runs):
    row = [0]
    for j in range(n + 1):
        length = k * n - (k - 1) * j
        row = poly_add(row, poly_scale(marked_weight(length, j, counting_runs), total(k, n - j)))
    while len(row) > 1 and row[-1] == 0:
        row.pop()
    return row


def short_row(k, n):
    row = block_row(k, n, counting_runs=False)
    return row + [0] * (n + 1 - len(row))


def component_row(k, n):
    return block_row(k, n, counting_runs=True)


def noncrossing_rows(k, m_max):
    # T[m][l]; iterate T <- 1 + x (T^(k-1) - 1 + y) T, truncated at x^m_max
    def mul(a, b):
        out = [[0] * (m_max + 2) for _ in range(m_max + 1)]
        for i, ra in enumerate(a):
            for j, ca in enumerate(ra):
                if ca == 0:
                    continue
                for p in range(m_max + 1 - i):
                    for q, cb in enumerate(b[p]):
                        if cb and j + q <= m_max + 1:
                            out[i + p][j + q] += ca * cb
        return out

    one = [[0] * (m_max + 2) for _ in range(m_max + 1)]
    one[0][0] = 1
    t = [row[:] for row in one]
    for _ in range(m_max + 1):
        inner = one
        for _ in range(k - 1):
            inner = mul(inner, t)
        inner = [row[:] for row in inner]
        inner[0][0] -= 1
        inner[0][1] += 1
        prod = mul(inner, t)
        nxt = [row[:] for row in one]
        for i in range(m_max):
            for j in range(m_max + 2):
                nxt[i + 1][j] += prod[i][j]
        t = nxt
    return t


def fuss_catalan(k, m):
    return math.comb(k * m, m) // ((k - 1) * m + 1)


def check_reference():
    for n, row in enumerate(REFERENCE["d_k3"], start=1):
        assert short_row(3, n) == row, (n, short_row(3, n), row)
    for n, row in enumerate(REFERENCE["c_k3"], start=1):
        assert component_row(3, n) == row, (n, component_row(3, n), row)
    t = noncrossing_rows(3, 7)
    for m, row in enumerate(REFERENCE["t_k3"], start=1):
        assert t[m][1 : m + 1] == row, (m, t[m], row)
        assert sum(t[m]) == fuss_catalan(3, m)


def write_table(name, rows, first_value):
    lines = ["n,value,count"]
    for n, row in enumerate(rows, start=1):
        for v, c in enumerate(row, start=first_value):
            if c:
                lines.append(f"{n},{v},{c}")
    (HERE / "tables" / f"{name}.csv").write_text("\n".join(lines) + "\n")


def write_bfile(name, terms, offset):
    text = "".join(f"{offset + i} {t}\n" for i, t in enumerate(terms))
    (HERE / "oeis" / f"{name}.txt").write_text(text)


def linear(rows, count):
    return [c for row in rows for c in row][:count]


TERMS = 40


def main():
    check_reference()
    write_table("d_k3", REFERENCE["d_k3"], 0)
    write_table("c_k3", REFERENCE["c_k3"], 0)
    write_table("t_k3", REFERENCE["t_k3"], 1)

    for seq, k in (("A334056", 3), ("A334057", 4), ("A334058", 5)):
        write_bfile(seq, linear([short_row(k, n) for n in range(1, 10)], TERMS), 1)
    for seq, k in (("A334059", 2), ("A334060", 3), ("A334061", 4)):
        write_bfile(seq, linear([component_row(k, n) for n in range(1, 20)], TERMS), 1)
    for seq, k in (("A091320", 3), ("A334062", 4), ("A334063", 5)):
        t = noncrossing_rows(k, 9)
        write_bfile(seq, linear([t[m][1 : m + 1] for m in range(1, 10)], TERMS), 1)
    for k in (2, 3, 4, 5):
        write_bfile(f"A062993_k{k}", [fuss_catalan(k, m) for m in range(25)], 0)


if __name__ == "__main__":
    main()
