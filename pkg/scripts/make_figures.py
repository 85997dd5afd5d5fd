#!/usr/bin/env python3
"""Regenerate the full figure-data bundle (twelve CSV files plus manifest)."""

import argparse
from pathlib import Path

from twinwalk.figures import write_figure_bundle


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out-dir", type=Path, default=Path("figure_data"), help="output directory"
    )
    parser.add_argument("--steps", type=int, default=1000)
    parser.add_argument(
        "--window", type=int, default=None, help="ratio window (default: last 10%%)"
    )
    args = parser.parse_args()

    manifest, failures = write_figure_bundle(
        args.out_dir, steps=args.steps, window=args.window
    )
    for name, message in failures:
        print(f"error writing {name}: {message}")
    if failures:
        return 1
    print(f"wrote {len(manifest['files'])} files + manifest to {args.out_dir}")
    for name, entry in sorted(manifest["files"].items()):
        ratio = entry["asymptotic_ratio"]
        print(f"  {name}: preset {entry['preset']}, outcome {entry['outcome']}, "
              f"window ratio {ratio}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
