"""Brute-force reference implementations used only by the tests.

Everything here works from raw order matrices or explicit sets and shares
no code with the library beyond reading ``leq`` and ``labels``.
"""

from __future__ import annotations

import itertools

import numpy as np


def glb(leq, x, y):
    n = len(leq)
    lower = [z for z in range(n) if leq[z][x] and leq[z][y]]
    best = [z for z in lower if all(leq[w][z] for w in lower)]
    return best[0] if best else None


def lub(leq, x, y):
    n = len(leq)
    upper = [z for z in range(n) if leq[x][z] and leq[y][z]]
    best = [z for z in upper if all(leq[z][w] for w in upper)]
    return best[0] if best else None


def tables(leq):
    n = len(leq)
    return ([[glb(leq, x, y) for y in range(n)] for x in range(n)],
            [[lub(leq, x, y) for y in range(n)] for x in range(n)])


def labelled_posets(n):
    """Every partial order on {0..n-1}, as nested lists."""
    pairs = list(itertools.combinations(range(n), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        leq = [[x == y for y in range(n)] for x in range(n)]
        for (x, y), c in zip(pairs, choice):
            if c == 1:
                leq[x][y] = True
            elif c == 2:
                leq[y][x] = True
        if all(not (leq[x][y] and leq[y][z]) or leq[x][z]
               for x in range(n) for y in range(n) for z in range(n)):
            yield leq


def is_distributive_lattice(leq):
    meet, join = tables(leq)
    n = len(leq)
    if any(meet[x][y] is None or join[x][y] is None for x in range(n) for y in range(n)):
        return False
    return all(meet[x][join[y][z]] == join[meet[x][y]][meet[x][z]]
               for x in range(n) for y in range(n) for z in range(n))


def iso_key(leq):
    """Lexicographically least relabelled matrix over all permutations."""
    n = len(leq)
    return min(tuple(leq[p[x]][p[y]] for x in range(n) for y in range(n))
               for p in itertools.permutations(range(n)))


def count_distributive_lattices(max_n):
    keys = set()
    for n in range(1, max_n + 1):
        for leq in labelled_posets(n):
            if is_distributive_lattice(leq):
                keys.add((n, iso_key(leq)))
    return len(keys)


def all_derivations(l):
    """Every self-map satisfying both derivation axioms, checked on raw tables."""
    n = l.n
    meet, join = tables(l.leq.tolist())
    out = []
    for m in itertools.product(range(n), repeat=n):
        if all(m[meet[x][y]] == meet[m[x]][y] == meet[x][m[y]] and m[join[x][y]] == join[m[x]][m[y]]
               for x in range(n) for y in range(n)):
            out.append(m)
    return out


def all_ideals(l):
    n = l.n
    leq = l.leq.tolist()
    _, join = tables(leq)
    out = []
    for r in range(1, n + 1):
        for s in itertools.combinations(range(n), r):
            ss = set(s)
            if all(y in ss for x in s for y in range(n) if leq[y][x]) and \
                    all(join[x][y] in ss for x in s for y in s):
                out.append(frozenset(s))
    return out


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]
        yield [[first]] + part


def all_congruences(l):
    meet, join = tables(l.leq.tolist())
    n = l.n
    out = []
    for part in set_partitions(range(n)):
        cls = {x: k for k, block in enumerate(part) for x in block}
        if all(cls[meet[x][z]] == cls[meet[y][z]] and cls[join[x][z]] == cls[join[y][z]]
               for block in part for x in block for y in block for z in range(n)):
            out.append(frozenset(frozenset(b) for b in part))
    return out


def annihilator(l, d, ideal, a):
    meet, _ = tables(l.leq.tolist())
    return frozenset(x for x in range(l.n) if d[meet[a][x]] in ideal)


def theta_classes(l, d, ideal):
    groups = {}
    for a in range(l.n):
        groups.setdefault(annihilator(l, d, ideal, a), set()).add(a)
    return frozenset(frozenset(g) for g in groups.values())


def quotient_is_boolean(l, classes):
    """Classes ordered by x ~ y iff some representatives satisfy x <= y; check complements."""
    leq = l.leq.tolist()
    cls = list(classes)
    k = len(cls)
    order = np.array([[any(leq[x][y] for x in a for y in b) for b in cls] for a in cls])
    bot = [i for i in range(k) if order[i].all()]
    top = [j for j in range(k) if order[:, j].all()]
    if not bot or not top:
        return False
    meet, join = tables(order.tolist())
    return all(any(meet[i][j] == bot[0] and join[i][j] == top[0] for j in range(k)) for i in range(k))
