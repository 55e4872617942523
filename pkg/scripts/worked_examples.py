"""Recompute the worked examples: the four s-tilde_4 coefficients against s-tilde_(2,2),
the lattice tableaux behind them, and the first rows of the s-tilde to h table."""
import argparse
from dataclasses import dataclass

from charbasis.multiset_tableaux import FillProfile, enumerate_mct
from charbasis.partitions import format_partition, partitions_upto
from charbasis.stable import st_in_h


@dataclass(frozen=True)
class Config:
    gamma: tuple = (4,)
    barred: tuple = (2, 2)
    alpha: tuple = (2, 1)
    show_tableaux: bool = False
    table_size: int = 3


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--show-tableaux", action="store_true")
    parser.add_argument("--table-size", type=int, default=Config.table_size)
    args = parser.parse_args()
    cfg = Config(show_tableaux=args.show_tableaux, table_size=args.table_size)
    for profile in FillProfile:
        found = list(enumerate_mct(cfg.gamma, cfg.barred, cfg.alpha, profile))
        print(f"{profile.name:<24} {len(found)}")
        if cfg.show_tableaux:
            for t in found:
                print(t.render(), end="\n\n")
    print()
    for la in partitions_upto(cfg.table_size):
        f = st_in_h(la)
        order = sorted(f.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))
        terms = " ".join(f"{int(c):+}h{format_partition(mu)}" for mu, c in order)
        print(f"st{format_partition(la)} = {terms}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
