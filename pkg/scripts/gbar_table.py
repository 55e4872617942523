"""Print the stable Kronecker coefficients of s-tilde_la s-tilde_mu for all small pairs.

Each row is checked against the finite-n character sum at n = 2(|la| + |mu|).
"""
import argparse
from dataclasses import dataclass

from charbasis.oracles import finite_n_kronecker
from charbasis.partitions import format_partition, partitions_upto
from charbasis.stable import gbar


@dataclass(frozen=True)
class Config:
    max_size: int = 2
    check: bool = True


def rows(cfg: Config):
    seen = set()
    for la in partitions_upto(cfg.max_size):
        for mu in partitions_upto(cfg.max_size):
            if (mu, la) in seen:
                continue
            seen.add((la, mu))
            g = gbar(la, mu)
            n = max(2 * (sum(la) + sum(mu)), 1)
            for nu, c in sorted(g.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0]))):
                ok = not cfg.check or finite_n_kronecker(la, mu, nu, n) == c
                yield la, mu, nu, int(c), ok


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=Config.max_size)
    parser.add_argument("--no-check", action="store_true")
    args = parser.parse_args()
    cfg = Config(max_size=args.max_size, check=not args.no_check)
    bad = 0
    for la, mu, nu, c, ok in rows(cfg):
        bad += not ok
        mark = "" if ok else "  MISMATCH"
        print(f"{format_partition(la):>8} {format_partition(mu):>8} {format_partition(nu):>10} {c:>3}{mark}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
