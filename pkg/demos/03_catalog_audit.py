"""Audit of the family catalog.

Builds every registered family at random admissible parameters, compares the
Lie/Leibniz classification with the expectation, and lists the families whose
printed structure constants needed a correction.
Run with ``python demos/03_catalog_audit.py``.
"""

# %% Verify everything at two draws per family
import random
from collections import Counter

from pseudoalg import derived_series
from pseudoalg.catalog import CORRECTIONS, PaperFormulaFails, build, list_families, sample_params, verify_all

report = verify_all(draws=2, seed=1)
print(f"{len(list_families())} families, {len(report.rows)} builds")
print(Counter(r["class"] for r in report.rows))

# %% Families with no members
for r in report.failures():
    if r["draw"] == 0:
        print(f"empty: {r['family']}: {r['error'][:90]}...")

# %% Printed versus corrected coefficients
rng = random.Random(0)
for fid in ("thm27-11", "a3", "b16"):
    p = sample_params(fid, rng, corrected=False)
    try:
        build(fid, p, corrected=False)
    except PaperFormulaFails as exc:
        print(f"\n{fid} as printed: {exc.report.failures[0].describe()[:100]}")
    build(fid, sample_params(fid, rng))
    print(f"{fid} corrected ({CORRECTIONS[fid]['summary']}): ok")

# %% Solvable rank-two families have derived length two
A = build("lem22-ii", sample_params("lem22-ii", rng))
print("\nderived series of lem22-ii:", derived_series(A, 5))
