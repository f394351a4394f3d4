"""Rank-two extensions of the Virasoro pseudoalgebra.

Walks from the Virasoro bracket to its extensions by a rank-one module, then
uses the cohomology solver to see which module parameters admit a nontrivial
[e0, e0] component.  Run with ``python demos/01_rank_two_extensions.py``.
"""

# %% The Virasoro pseudoalgebra over k[s]
from fractions import Fraction

from pseudoalg import PseudoAlgebra, check, classify
from pseudoalg.io import dumps, format_tensor
from pseudoalg.lambda_form import pretty, to_lambda
from pseudoalg.solver import cohomology
from pseudoalg.tensor import ALPHA, beta, t2_swap

virasoro = PseudoAlgebra(1, {(0, 0): {0: ALPHA}}, name="virasoro")
print(dumps(virasoro))
print(pretty(to_lambda(virasoro)))
print("class:", classify(virasoro))

# %% Adding a module e1 with [e0, e1] = (lambda s(x)1 - 1(x)s + kappa) e1
# The skew partner [e1, e0] is fixed by the Lie condition.
lam = Fraction(-5)
b = beta(lam)
ext = PseudoAlgebra(2, {(0, 0): {0: ALPHA}, (0, 1): {1: b}, (1, 0): {1: -t2_swap(b)}}, name="ext")
print("\nsplit extension:", classify(ext))

# %% Which (lambda, kappa) admit a nonsplit [e0, e0] component?
print("\nnonzero second cohomology, kappa = 0:")
for n in range(-8, 3):
    rep = cohomology("lie", n, 0, degree_bound=12)
    if rep.h2_dim:
        reps = "; ".join(format_tensor(t) for t in rep.basis)
        print(f"  lambda = {n:>3}: dim {rep.h2_dim}  {reps}")

# %% The lambda = -5 class gives a genuinely new algebra
cocycle = cohomology("lie", -5, 0, 12).basis[0]
twisted = PseudoAlgebra(
    2, {(0, 0): {0: ALPHA, 1: cocycle}, (0, 1): {1: b}, (1, 0): {1: -t2_swap(b)}}, name="twisted"
)
print("\ntwisted extension:", classify(twisted), check(twisted).ok)

# Moving the module weight by one breaks it: Jacobi fails on (e0, e0, e0).
b4 = beta(-4)
broken = twisted.with_gamma(0, 1, 1, b4).with_gamma(1, 0, 1, -t2_swap(b4))
report = check(broken)
print("lambda = -4:", classify(broken, report), "-", report.failures[0].describe())
