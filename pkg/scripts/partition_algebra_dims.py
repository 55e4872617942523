"""Irreducible dimensions of the partition and quasi-partition algebras, read off as
coefficients of (h-tilde_1)^r and (s-tilde_1)^r, with the Bell-number check."""
import argparse
from dataclasses import dataclass

from charbasis.oracles import partition_algebra_dims
from charbasis.partitions import bell, format_partition
from charbasis.stable import product_st_multi_st


@dataclass(frozen=True)
class Config:
    max_r: int = 4


def quasi_dims(r: int) -> dict:
    return {la: int(c) for la, c in product_st_multi_st((1,) * r, ()).terms.items()}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-r", type=int, default=Config.max_r)
    cfg = Config(max_r=parser.parse_args().max_r)
    status = 0
    for r in range(cfg.max_r + 1):
        full, quasi = partition_algebra_dims(r), quasi_dims(r)
        total = sum(d * d for d in full.values())
        ok = total == bell(2 * r)
        status |= not ok
        print(f"r = {r}: sum of squares {total}, Bell({2 * r}) = {bell(2 * r)} {'ok' if ok else 'MISMATCH'}")
        for la in sorted(full, key=lambda p: (-sum(p), tuple(-x for x in p))):
            print(f"    {format_partition(la):>12} {full[la]:>6} {quasi.get(la, 0):>6}")
    return status


if __name__ == "__main__":
    raise SystemExit(main())
