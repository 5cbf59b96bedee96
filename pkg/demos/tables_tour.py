"""Tour of the three multiplicity tables.

Builds one shared computation context and prints, for small degrees, the
three families of tensor-product multiplicity polynomials:

* generic   V  -- split form, three characters in general position
* unipotent U  -- split form, three unipotent characters
* unipotent U' -- twisted (unitary) form, three unipotent characters

Every polynomial is exact: integer coefficients, no floating point
anywhere.  Run as `python3 demos/tables_tour.py`.
"""

from itertools import combinations_with_replacement

from ennola.coeffs import poly_to_str
from ennola.multiplicities import U_poly, Uprime_poly, V_poly, build_context
from ennola.partitions import enumerate_partitions, partition_to_text


def heading(text: str) -> None:
    print()
    print(text)
    print("-" * len(text))


def show_table(ctx, fn, n: int) -> None:
    parts = sorted(enumerate_partitions(n), key=tuple)
    shown = 0
    for mu in combinations_with_replacement(parts, 3):
        p = fn(ctx, mu)
        if p.is_zero():
            continue
        label = ", ".join(f"({partition_to_text(c)})" for c in mu)
        print(f"  {label}  ->  {poly_to_str(p)}")
        shown += 1
    print(f"  ({shown} nonzero rows)")


def main() -> None:
    # degree <= 4 keeps the build near-instant; the same context serves
    # all three families because they share one master series
    ctx = build_context(k=3, N=4)

    heading("Generic multiplicities V at n = 3")
    show_table(ctx, V_poly, 3)
    print("""
Rows absent from the table are exactly zero -- for example three copies
of the trivial-type column:""")
    print("  V[(3),(3),(3)] =", poly_to_str(V_poly(ctx, ((3,), (3,), (3,)))))

    heading("Split unipotent multiplicities U at n = 3")
    show_table(ctx, U_poly, 3)

    heading("Twisted unipotent multiplicities U' at n = 4")
    show_table(ctx, Uprime_poly, 4)
    print("""
At this degree every displayed coefficient happens to be nonnegative;
from degree 5 on the twisted table contains rows with alternating
interior signs (always with a positive leading coefficient) -- see
demos/interpolation_story.py.  Absent rows again mean exactly zero.""")

    heading("Split vs twisted for the same column triple (n = 4)")
    mu = ((1, 1, 1, 1),) * 3
    print("  mu           =", ", ".join(f"({partition_to_text(c)})" for c in mu))
    print("  U  (split)   =", poly_to_str(U_poly(ctx, mu)))
    print("  U' (twisted) =", poly_to_str(Uprime_poly(ctx, mu)))
    print("""
The two values are different polynomials, yet neither is independent of
the other: both are specializations of one two-variable interpolation
polynomial, which the next demo walks through.""")


if __name__ == "__main__":
    main()
