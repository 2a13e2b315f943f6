#!/usr/bin/env python3
"""Writes the generated part of the format corpus: canonical .gr, .td and .w files."""

import argparse
import pathlib
import random
from fractions import Fraction


def random_graph(rng, n, p):
    return sorted((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p)


def elimination_decomposition(rng, n, edges):
    """Bags from a random elimination ordering, joined into one tree."""
    adjacent = {v: set() for v in range(n)}
    for u, v in edges:
        adjacent[u].add(v)
        adjacent[v].add(u)
    order = list(range(n))
    rng.shuffle(order)
    position = {v: i for i, v in enumerate(order)}
    bags, parent_vertex = [], []
    for v in order:
        later = {u for u in adjacent[v] if position[u] > position[v]}
        bags.append(sorted({v} | later))
        parent_vertex.append(min(later, key=lambda u: position[u]) if later else None)
        for a in later:
            adjacent[a] |= later - {a}
    tree = []
    roots = []
    for i, p in enumerate(parent_vertex):
        if p is None:
            roots.append(i)
        else:
            tree.append(tuple(sorted((i, position[p]))))
    for a, b in zip(roots, roots[1:]):
        tree.append(tuple(sorted((a, b))))
    if not bags:
        bags, tree = [[]], []
    return bags, sorted(tree)


def weight_text(w):
    return str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}"


def write_instance(directory, name, rng, n, p):
    edges = random_graph(rng, n, p)
    bags, tree = elimination_decomposition(rng, n, edges)
    gr = [f"p tw {n} {len(edges)}"] + [f"{u + 1} {v + 1}" for u, v in edges]
    largest = max(len(b) for b in bags)
    td = [f"s td {len(bags)} {largest} {n}"]
    td += [" ".join(["b", str(i + 1)] + [str(v + 1) for v in b]) for i, b in enumerate(bags)]
    td += [f"{a + 1} {b + 1}" for a, b in tree]
    weights = []
    for v in range(n):
        q = rng.randint(1, 4)
        weights.append(f"{v + 1} {weight_text(Fraction(rng.randint(-5 * q, 5 * q), q))}")
    for suffix, lines in (("gr", gr), ("td", td), ("w", weights)):
        (directory / f"{name}.{suffix}").write_text("".join(line + "\n" for line in lines))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("directory", type=pathlib.Path)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--count", type=int, default=24)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    args.directory.mkdir(parents=True, exist_ok=True)
    for i in range(args.count):
        write_instance(args.directory, f"gen{i:02d}", rng, rng.randint(0, 12), rng.choice([0.2, 0.4, 0.6]))


if __name__ == "__main__":
    main()
