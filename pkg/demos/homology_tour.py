"""A guided walk from a diagram to its stratified homology table.

Run with ``python3 demos/homology_tour.py``.  The script builds the
trefoil from a braid word, shows the state cube behind it, and reads
off the homology over the integers and over two small fields.
"""

from skeincat.homology import homology
from skeincat.states import state_complex
from skeincat.words import TRACE, generate_from_word


def main():
    print("Trefoil from the braid word x1-,x1-,x1- on two strands,")
    print("closed around the back (trace closure).")
    d = generate_from_word("x1-,x1-,x1-", 2, close=TRACE)
    print(f"  crossings: {d.n_crossings}, segments: {len(d.segments)}\n")

    cx = state_complex(d)
    print(f"Every crossing takes a +/- marker and every resulting loop")
    print(f"a +/- label; that gives {cx.total_dim()} states split across")
    print(f"{len(cx.strata)} strata.  Within a stratum the differential")
    print("flips one + marker and drops the grading i by two:\n")
    for key in cx.stratum_keys():
        st = cx.strata[key]
        dims = ", ".join(f"i={i}:{st.dim(i)}" for i in st.degrees())
        print(f"  stratum j={key[0]:3d}: {dims}")

    print("\nHomology over Z:")
    t = homology(d)
    print(t.pretty())
    print("\nThe lone Z/2 is invisible rationally and doubles mod 2:")
    print("\nover Q:")
    print(homology(d, coeff="q").pretty())
    print("\nover F2:")
    print(homology(d, coeff="p:2").pretty())


if __name__ == "__main__":
    main()
