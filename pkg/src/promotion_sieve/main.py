"""Main module that can be used to run the census sweeps directly."""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from promotion_sieve.census import CHECKPOINT_FILENAME, SWEEPS, SievingCensus
from promotion_sieve.config import SieveConfig


def main(argv: Optional[List[str]] = None) -> int:
    """Run the sweeps from the command line; returns the exit code."""
    parser = argparse.ArgumentParser(description="Run the cyclic sieving sweeps")
    parser.add_argument(
        "--only", action="append", choices=sorted(SWEEPS), help="Sweep to run"
    )
    parser.add_argument("--threads", type=int, default=1, help="Worker threads")
    parser.add_argument(
        "--checkpoint",
        type=Path,
        default=Path(CHECKPOINT_FILENAME),
        help="Checkpoint file",
    )
    parser.add_argument(
        "--no-checkpoint", action="store_true", help="Do not read or write a checkpoint"
    )
    parser.add_argument("--no-progress", action="store_true", help="Hide progress")
    parser.add_argument(
        "--cross-check", action="store_true", help="Cross-check every promotion"
    )

    args = parser.parse_args(argv)

    if args.threads < 1:
        print("Error: --threads must be at least 1", file=sys.stderr)
        return 2

    config = SieveConfig(
        threads=args.threads,
        progress=not args.no_progress,
        cross_check=args.cross_check,
        checkpoint=None if args.no_checkpoint else args.checkpoint,
    )

    results = SievingCensus(config).run(args.only)
    failed = [r for r in results if r.verdict in ("fail", "error")]
    for result in failed:
        print(f"{result.verdict}: {result.key} {result.detail}")
    print(f"{len(results)} checks, {len(failed)} failing")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
