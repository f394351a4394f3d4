"""Currents of the Schrodinger-Virasoro pseudoalgebra.

Builds the rank-three m-type family at its classical point, passes to Laurent
currents L_n, Y_p, M_k and compares the generic brackets with hand-written
closed forms.  Run with ``python demos/02_schrodinger_virasoro_currents.py``.
"""

# %% The rank-three algebra and its lambda-brackets
from fractions import Fraction

from pseudoalg.annihilation import RhoShift, closed_form_jacobi, compare, generic_bracket, window_jacobi
from pseudoalg.catalog import build
from pseudoalg.lambda_form import pretty, to_lambda

half = Fraction(1, 2)
sv = build("mtype-B", {"lambda1": half, "kappa1": 0, "w01": -1, "a": 0})
print(pretty(to_lambda(sv)))

# %% A few current brackets with rho = 1/2
shift = RhoShift(half)


def show(x, y):
    out = generic_bracket(sv, shift.to_current(*x), shift.to_current(*y))
    terms = " + ".join(f"{c} {shift.label(z)[0]}_{shift.label(z)[1]}" for z, c in out.items()) or "0"
    print(f"[{x[0]}_{x[1]}, {y[0]}_{y[1]}] = {terms}")


show(("L", 1), ("L", -1))
show(("L", 0), ("Y", half))
show(("Y", Fraction(3, 2)), ("Y", -half))
show(("L", 2), ("M", 1))

# %% Closed forms against the generic construction
for family, params in [
    ("mtype-B", {"lambda1": half, "kappa1": 0, "w01": -1, "a": 0}),
    ("mtype-C", {"w02": 1, "kappa1": Fraction(1, 3)}),
    ("mtype-E", {"w03": 1, "kappa1": 0}),
]:
    rep = compare(family, params, half, (-4, 4))
    print(f"\n{family}: {rep.pairs} pairs, {len(rep.mismatches)} mismatches")
    if rep.mismatches:
        print("  e.g.", rep.mismatches[0].describe())
        printed = closed_form_jacobi(family, params, half, (-2, 2))
        print(f"  the printed closed form alone fails Jacobi on {len(printed.jacobi_failures)} triples")

# %% The generic construction is always a Lie algebra
E = build("mtype-E", {"w03": 1, "kappa1": 0})
print("\nwindow Jacobi for mtype-E on [-4, 4]:", window_jacobi(E, half, (-4, 4)).ok)
