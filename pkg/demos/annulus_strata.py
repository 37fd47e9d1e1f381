"""What the extra gradings see on an annulus.

Run with ``python3 demos/annulus_strata.py``.  On a disk every loop
bounds, so the table is graded by (i, j) alone.  On an annulus a loop
can wind around the hole; its class enters the s-grading and splits
the table into strata that plain Khovanov-style homology would merge.
"""

from skeincat.homology import homology
from skeincat.surfaces import ANNULUS, fold_abs
from skeincat.words import TRACE, generate_from_word


def table_for(word, strands, label):
    d = generate_from_word(word, strands, ANNULUS, TRACE)
    print(f"== {label} ==")
    t = homology(d)
    print(t.pretty())
    print()
    return t


def main():
    print("The core circle of the annulus, once around the hole.")
    print("No contractible loop ever appears, so j stays put and the")
    print("two strata record the two labels of one essential loop:\n")
    table_for("", 1, "one core circle")

    print("Two parallel cores. The s-grading adds: labels (+,+) give")
    print("s = 2 core, (+,-) and (-,+) land together at s = 0, and")
    print("(-,-) gives s = -2 core:\n")
    table_for("", 2, "two core circles")

    print("A braided closure. Smoothing a crossing can either keep a")
    print("strand winding or cut it loose into a contractible loop,")
    print("so winding and non-winding strata now coexist:\n")
    t = table_for("x1-,x1-", 2, "closure of the 2-braid x1-,x1-")

    print("Mirror symmetry of the annulus flips the sign of s; the")
    print("table cannot tell s from -s:")
    folded_pairs = sorted(
        {(i, j, s, b) for (i, j, s, b) in t.entries if s != fold_abs(s)},
        key=repr)
    for key in folded_pairs:
        i, j, s, b = key
        twin = (i, j, fold_abs(s), b)
        same = t.entries[key] == t.entries[twin]
        print(f"  {key} vs {twin}: {'equal' if same else 'DIFFER'}")


if __name__ == "__main__":
    main()
