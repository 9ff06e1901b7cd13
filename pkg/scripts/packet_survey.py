#!/usr/bin/env python3
"""Survey packet sizes over all small block multisets.

For every multiset of Jordan blocks (one label, sizes up to --max-size,
at most --max-blocks blocks) this counts the packet parameters on each
side of the sign condition and checks two structural facts:

  * the two counts sum to prod(min(a, b) + 1) over the blocks;
  * their difference factors as prod(excess(a, b)), where excess(a, b)
    is the sum of the signs of a single block's admissible pairs.

It then prints the per-block excess table and the most unbalanced
multisets found.
"""

import argparse
import itertools
from collections import Counter

from apackets.core_types import MINUS, PLUS
from apackets.jordan import JordanBlock
from apackets.packets import admissible_pairs, block_sign, enumerate_params


def sign_excess(a: int, b: int) -> int:
    return sum(block_sign(a, b, t, eta) for t, eta in admissible_pairs(a, b))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=6, help="largest a and b (default 6)")
    ap.add_argument("--max-blocks", type=int, default=3, help="largest multiset (default 3)")
    ap.add_argument("--top", type=int, default=8, help="how many unbalanced multisets to show")
    args = ap.parse_args()

    n = args.max_size
    print(f"per-block sign excess for a, b <= {n} (rows a, columns b):")
    header = "      " + "".join(f"{b:>4}" for b in range(1, n + 1))
    print(header)
    for a in range(1, n + 1):
        row = "".join(f"{sign_excess(a, b):>4}" for b in range(1, n + 1))
        print(f"  a={a:<2}{row}")

    shapes = list(
        itertools.chain.from_iterable(
            itertools.combinations_with_replacement(
                itertools.product(range(1, n + 1), repeat=2), k
            )
            for k in range(1, args.max_blocks + 1)
        )
    )
    print(f"\nsurveying {len(shapes)} multisets ...")

    diff_hist: Counter[int] = Counter()
    extremes: list[tuple[int, tuple[tuple[int, int], ...], int, int]] = []
    for shape in shapes:
        blocks = [JordanBlock(rho="r", a=a, b=b) for a, b in shape]
        plus = len(enumerate_params(blocks, PLUS))
        minus = len(enumerate_params(blocks, MINUS))
        total = 1
        for a, b in shape:
            total *= min(a, b) + 1
        assert plus + minus == total, shape
        predicted = 1
        for a, b in shape:
            predicted *= sign_excess(a, b)
        assert plus - minus == predicted, shape
        diff_hist[plus - minus] += 1
        extremes.append((abs(plus - minus), shape, plus, minus))

    print("count difference (plus minus minus) histogram:")
    for diff in sorted(diff_hist):
        print(f"  {diff:>3}: {diff_hist[diff]} multisets")

    extremes.sort(key=lambda e: (-e[0], e[1]))
    print(f"\nmost unbalanced {args.top} multisets:")
    for _, shape, plus, minus in extremes[: args.top]:
        desc = ", ".join(f"({a},{b})" for a, b in shape)
        print(f"  [{desc}]: plus={plus} minus={minus}")

    print("\nboth structural identities held on every multiset.")


if __name__ == "__main__":
    main()
