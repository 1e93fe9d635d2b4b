"""
Filter-regularity of y on F_2[x, y] / (x^2, xy): certified type, flags,
Betti numbers and regularity, then the Koszul table.

Run from the repository root:
    python example/cohomod/02_analyze_ring.py
"""

from pathlib import Path

from cohomod.formats import analysis_to_document, load_hsop, load_ring
from cohomod.regseq import analyze_ring, koszul_cohomology

HERE = Path(__file__).parent


def main():
    ring = load_ring(HERE / "rings" / "micro_ring.json")
    params = load_hsop(HERE / "rings" / "micro_hsop.json", ring)

    analysis = analyze_ring(ring, params)
    for key, value in analysis_to_document(analysis).items():
        print(f"{key:>22}: {value}")

    table = koszul_cohomology(ring, params, window=5)
    for s, row in enumerate(table.dims):
        print(f"s={s}: {' '.join(str(v) for v in row)}")


if __name__ == "__main__":
    main()
