"""The maximal gradings of small diagonal algebras and their pull-backs.

The maximal connected gradings of the rank-n diagonal algebra are free
products of group algebras of abelian groups.  For ranks 4 and 5 the
inverse-limit computation reduces to pull-backs of small diagrams of
epimorphisms onto common quotients; the generators of those pull-backs and
the presentation data of the resulting central extensions are verified here
by explicit word computation.
"""

from gquot.pullbacks import (
    enumerate_admissible_rank4,
    enumerate_admissible_rank5,
    express_rank4,
    express_rank5,
    maximal_gradings_diagonal,
    pi1_report,
    rank4_pullback,
    rank5_pullback,
)

for n in (2, 3, 4, 5):
    labels = [c.label for c in maximal_gradings_diagonal(n)]
    print(f"rank {n}: {len(labels)} maximal classes: {', '.join(labels)}")

# Rank 4: the three classes over the common C2 quotient pull back to a group
# generated by three explicit tuples; every admissible triple is a word in
# them, produced by the rewriting procedure and verified by evaluation.
pb = rank4_pullback()
triples = enumerate_admissible_rank4(6)
print(f"\nrank-4 pull-back: {len(triples)} admissible triples at free length <= 6")
sample = triples[17]
print(f"  e.g. {sample} = {' '.join(express_rank4(sample, pb))}")

rep = pi1_report(4)
print(f"pi1 of the rank-4 diagonal: {rep.structure} (all checks pass: {rep.verified})")

# Rank 5 adds a second common quotient.  The expression procedure again
# covers all bounded admissible tuples, and the relation identities of the
# central extension hold; but the bounded free-product certificate for the
# red-diagram pull-back finds a genuine relation at syllable length 8, so
# that pull-back is NOT the free product C6 * C2 it is usually claimed to be.
pb5 = rank5_pullback()
quads = enumerate_admissible_rank5(4, 4)
for t in quads:
    express_rank5(t, pb5)
print(f"\nrank-5 pull-back: {len(quads)} admissible tuples at free lengths <= 4, all expressed")
print(f"  e.g. {quads[100]} = {' '.join(express_rank5(quads[100], pb5))}")
rep5 = pi1_report(5)
print(f"pi1 of the rank-5 diagonal: {rep5.structure} (all checks pass: {rep5.verified})")
for c in rep5.presentation.checks:
    mark = "ok " if c.passed else "XX "
    print(f"  {mark}{c.name}: {c.detail}")
