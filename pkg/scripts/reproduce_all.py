"""Rebuild all five worked examples and print a one-line verdict for each."""
import sys

from bfwalsh.cli import reproduce


def main():
    failed = 0
    for i in range(1, 6):
        doc, diffs = reproduce(i)
        for case in doc["cases"]:
            m = case["measured"]
            print(f"example {i} {case['label']:6s} {m['class']:10s} degree={m['degree']} "
                  f"conditions={m['conditions']}")
        for d in diffs:
            print(f"  MISMATCH {d}")
        failed += bool(diffs)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
