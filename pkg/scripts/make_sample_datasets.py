#!/usr/bin/env python3
"""Produce a sample dataset set: 5, 7 and 9 nodes in every class.

Writes, per combination, the scenario JSON, the flat R/F dataset and the
Mininet deployment script:

    python scripts/make_sample_datasets.py --out datasets --seed 1 --flows 10
"""

import argparse
from pathlib import Path

from sdnscen.attributes import DEFAULT_LINK_RANGES
from sdnscen.dataset import (
    export_emulator_script,
    export_flat_dataset,
    export_scenario_json,
)
from sdnscen.scenario import build_scenario
from sdnscen.topology import TopologyClass
from sdnscen.traffic import DEFAULT_FLOW_RANGES


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("datasets"))
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--flows", type=int, default=10)
    parser.add_argument("--nodes", type=int, nargs="+", default=[5, 7, 9])
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for kind in TopologyClass:
        for n in args.nodes:
            scenario = build_scenario(
                kind=kind,
                n=n,
                seed=args.seed,
                flow_count=args.flows,
                link_ranges=DEFAULT_LINK_RANGES,
                flow_ranges=DEFAULT_FLOW_RANGES,
            )
            stem = args.out / f"{kind.value}_n{n}_seed{args.seed}"
            stem.with_suffix(".json").write_text(export_scenario_json(scenario))
            stem.with_suffix(".txt").write_text(export_flat_dataset(scenario))
            stem.with_suffix(".mininet.py").write_text(export_emulator_script(scenario))
            print(f"wrote {stem}.{{json,txt,mininet.py}}")


if __name__ == "__main__":
    main()
