#!/usr/bin/env python3
"""Round-trip experiment: how each output format inflates or shrinks a graph.

Generates seeded random graphs, pushes each through every target format,
reparses, and reports byte sizes plus isomorphism checks. Useful when
touching any serializer.

    python scripts/roundtrip_report.py [--seed 7] [--count 25]
"""

from __future__ import annotations

import argparse

from rdfshift import formats
from rdfshift.model import graph_isomorphic
from rdfshift.parsers import PARSERS
from rdfshift.serializers import SERIALIZERS
from rdfshift.testing import erase_literal_annotations, random_graphs

BASE = "http://report.example/"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--count", type=int, default=25)
    args = parser.parse_args()

    graphs = random_graphs(seed=args.seed, count=args.count)
    print(f"{'format':<16} {'bytes(avg)':>10} {'ok':>5}")
    for token in formats.TARGET_FORMATS:
        source = formats.BASE_FORMAT.get(token, token)
        sizes = []
        ok = 0
        for g in graphs:
            text = SERIALIZERS[token](g, None)
            sizes.append(len(text.encode("utf-8")))
            back = PARSERS[source](text, BASE)
            reference = erase_literal_annotations(g) if token == formats.MICRODATA else g
            ok += graph_isomorphic(back, reference)
        print(f"{token:<16} {sum(sizes) / len(sizes):>10.0f} {ok:>3}/{len(graphs)}")


if __name__ == "__main__":
    main()
