"""The fixture layer: relation files, dimension tables, basis lists.

Claimed identities and claimed dimensions live in plain-text files under
data/, and everything in them is recomputed on demand. This script parses
and checks a few of each kind.
"""
from pathlib import Path

from hitcalc import cohit, parse_relation, verify_basis, verify_relation
from hitcalc.verify import load_table, parse_relation_file

DATA = Path(__file__).resolve().parent.parent / "data"

# A relation is one line of text: left side, squares applied to bracketed
# sums, loose monomials, optionally a weight-sequence modulus.
rel = parse_relation(
    "(2,1,1,1) = Sq^1[(1,1,1,1)] + (1,2,1,1) + (1,1,2,1) + (1,1,1,2)")
print("parsed:", rel.lhs, "with", len(rel.plain), "plain terms")
print("verdict:", verify_relation(rel).status)

# Drop a term and the checker reports exactly what is left over.
broken = parse_relation("(2,1,1,1) = Sq^1[(1,1,1,1)] + (1,2,1,1)")
out = verify_relation(broken)
print("\nbroken variant:", out.status)
print("residual:", sorted(out.residual))

# Shipped relation files check in bulk.
results = [verify_relation(r)
           for r in parse_relation_file(DATA / "relations" / "deg22.rel")]
print(f"\ndeg22.rel: {sum(r.ok for r in results)}/{len(results)} hold,"
      f" statuses {sorted({r.status for r in results})}")

# Dimension tables recompute every row; here just the quick ones. The
# full run is `hitcalc verify-table data/dimensions.csv --tier all`.
rows = [r for r in load_table(DATA / "dimensions.csv") if r.degree <= 16]
good = sum(cohit(4, r.degree).cohit_dimension == r.expected_dim
           for r in rows)
print(f"\ntable rows with degree <= 16: {good}/{len(rows)} recomputed "
      "and match")

basis = verify_basis(DATA / "bases" / "deg09.json")
print(f"degree {basis.degree} basis fixture: {basis.status}, "
      f"{basis.report.cohit_dimension} classes")
