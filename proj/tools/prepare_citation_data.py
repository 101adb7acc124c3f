#!/usr/bin/env python3
"""Convert a citation graph from the pickled Planetoid distribution
(ind.<name>.{x,tx,allx,graph} plus optional ind.<name>.{y,ty,ally}) into
the text formats consumed by graphae:

  <out>/edges.txt     one "u v" pair per line; isolated nodes appear as a
                      self-pair "u u" so they still receive an index
  <out>/features.txt  sparse triplets "node feature value"
  <out>/labels.txt    "node label" pairs (written only when label pickles
                      are present)

Node tokens are the Planetoid integer ids, so dense indices match row
order of the feature matrix.
"""

import argparse
import os
import pickle
import sys

import numpy as np
import scipy.sparse as sp


def load_pickle(path):
    with open(path, "rb") as f:
        return pickle.load(f, encoding="latin1")


def parse_index_file(path):
    return [int(line.strip()) for line in open(path)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--input", required=True, help="directory with ind.<name>.* files")
    ap.add_argument("--name", required=True, help="dataset name, e.g. cora")
    ap.add_argument("--out", required=True, help="output directory")
    args = ap.parse_args()

    d = args.input
    name = args.name
    x = load_pickle(os.path.join(d, f"ind.{name}.x"))
    tx = load_pickle(os.path.join(d, f"ind.{name}.tx"))
    allx = load_pickle(os.path.join(d, f"ind.{name}.allx"))
    graph = load_pickle(os.path.join(d, f"ind.{name}.graph"))
    test_idx_reorder = parse_index_file(os.path.join(d, f"ind.{name}.test.index"))
    test_idx_range = np.sort(test_idx_reorder)

    if name == "citeseer":
        # Some test nodes are isolated and missing from tx; pad them with
        # zero rows at the proper positions.
        full = range(min(test_idx_reorder), max(test_idx_reorder) + 1)
        tx_ext = sp.lil_matrix((len(full), x.shape[1]))
        tx_ext[test_idx_range - min(test_idx_range), :] = tx
        tx = tx_ext

    features = sp.vstack((allx, tx)).tolil()
    features[test_idx_reorder, :] = features[test_idx_range, :]
    features = features.tocoo()

    n = features.shape[0]
    if len(graph) != n:
        sys.exit(f"node count mismatch: graph has {len(graph)}, features {n}")

    edges = set()
    for u, nbrs in graph.items():
        for v in nbrs:
            if u == v:
                continue
            edges.add((min(u, v), max(u, v)))

    degree = np.zeros(n, dtype=int)
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1

    os.makedirs(args.out, exist_ok=True)

    with open(os.path.join(args.out, "edges.txt"), "w") as f:
        for u, v in sorted(edges):
            f.write(f"{u} {v}\n")
        for u in range(n):
            if degree[u] == 0:
                f.write(f"{u} {u}\n")

    with open(os.path.join(args.out, "features.txt"), "w") as f:
        order = np.lexsort((features.col, features.row))
        for k in order:
            f.write(f"{features.row[k]} {features.col[k]} {features.data[k]:.9g}\n")

    label_files = [os.path.join(d, f"ind.{name}.{s}") for s in ("ty", "ally")]
    if all(os.path.exists(p) for p in label_files):
        ty = load_pickle(label_files[0])
        ally = load_pickle(label_files[1])
        if name == "citeseer":
            full = range(min(test_idx_reorder), max(test_idx_reorder) + 1)
            ty_ext = np.zeros((len(full), ty.shape[1]))
            ty_ext[test_idx_range - min(test_idx_range), :] = ty
            ty = ty_ext
        label = sp.vstack((ally, sp.csr_matrix(ty))).tolil()
        label[test_idx_reorder, :] = label[test_idx_range, :]
        label = np.argmax(label.toarray(), axis=1)
        with open(os.path.join(args.out, "labels.txt"), "w") as f:
            for i in range(n):
                f.write(f"{i} {label[i]}\n")

    iso = int((degree == 0).sum())
    print(f"{name}: n={n} m={len(edges)} f={features.shape[1]} isolated={iso}")


if __name__ == "__main__":
    main()
