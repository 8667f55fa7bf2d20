#!/usr/bin/env python3
"""Create a synthetic speaker corpus for trying out the mixing and experiment
commands without a speech dataset.

Example:
    python3 scripts/make_demo_corpus.py --out demo_corpus --speakers 8
    tfsep experiment --corpus demo_corpus --mixtures 10 --seed 7 \
        --grid default --out report.csv
"""
import argparse

from tfsep.synth import make_corpus


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", required=True, help="corpus directory to create")
    parser.add_argument("--speakers", type=int, default=8)
    parser.add_argument("--recordings", type=int, default=3)
    parser.add_argument("--duration", type=float, default=10.0,
                        help="seconds per recording")
    parser.add_argument("--rate", type=int, default=16000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    make_corpus(args.out, n_speakers=args.speakers, recordings=args.recordings,
                duration=args.duration, rate=args.rate, seed=args.seed)
    print(f"wrote {args.speakers} speakers x {args.recordings} recordings to {args.out}")


if __name__ == "__main__":
    main()
