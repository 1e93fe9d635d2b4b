"""
Compute the cohomology ring of the dihedral group of order 8 and print the
certificate that stopped the computation.

Run from the repository root:
    python example/cohomod/01_basic_usage.py
"""

import logging
from pathlib import Path

from cohomod import Caps, compute_until_complete
from cohomod.formats import load_group

logging.basicConfig(level=logging.INFO, format="%(name)s - %(levelname)s - %(message)s")

HERE = Path(__file__).parent


def main():
    caps = Caps.from_env(max_degree=12)
    group = load_group(HERE / "groups" / "d8.json", caps)
    report = compute_until_complete(group, caps)

    print("=" * 60)
    print(f"Status: {report.status} ({report.message})")
    print(f"Ring:   {report.presentation.base.describe()}")
    print(f"Ranks:  {list(report.ranks)}")
    if report.params is not None:
        names = report.presentation.base.names
        print(f"Parameters: {[z.to_string(names) for z in report.params.elements]}")
    if report.verdict is not None:
        print(f"Verdict: {report.verdict.as_dict()}")
    print(f"Regularity checks: {report.reg_checks()}")
    print(f"Audit mismatches: {report.audit(extra=4, caps=caps)}")


if __name__ == "__main__":
    main()
