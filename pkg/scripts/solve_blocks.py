#!/usr/bin/env python3
"""Solve the block ladder and keep a JSON cache of proven optima.

Each block size is solved exactly and appended to the cache file as soon as
it is proven, so an interrupted run resumes where it left off.  The large
sizes (upper thirties) take a while in total; everything below 30 is fast.

Usage:
    python scripts/solve_blocks.py --kmax 40 [--cache data/block_table.json]
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cubicpaths import blocks


def load_cache(path: Path) -> dict[int, dict]:
    if path.exists():
        raw = json.loads(path.read_text())
        return {int(k): v for k, v in raw.items()}
    return {}


def save_cache(path: Path, cache: dict[int, dict]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps({str(k): v for k, v in sorted(cache.items())}, indent=1) + "\n")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=40)
    ap.add_argument("--cache", type=Path, default=Path("data/block_table.json"))
    ap.add_argument("--budget", type=int, default=None, help="node budget per block")
    args = ap.parse_args()

    cache = load_cache(args.cache)
    for k, row in cache.items():
        if row.get("proven"):
            blocks._F_CACHE.setdefault(k, row["f"])

    for k in range(2, args.kmax + 1):
        if k in cache and cache[k].get("proven"):
            continue
        t0 = time.time()
        sol = blocks.solve_block(k, budget=args.budget)
        dt = time.time() - t0
        cache[k] = {
            "f": sol.f,
            "g2": round(blocks.growth_factor(sol.f, k), 6),
            "proven": sol.proven_optimal,
            "nodes": sol.nodes_explored,
            "seconds": round(dt, 2),
        }
        save_cache(args.cache, cache)
        print(
            f"k={k}: f={sol.f} g2={cache[k]['g2']} proven={sol.proven_optimal} "
            f"nodes={sol.nodes_explored} ({dt:.1f}s)",
            flush=True,
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
