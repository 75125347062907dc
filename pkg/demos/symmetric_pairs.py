"""Orbit graphs for symmetric pairs: labels, moves, canonical sequences.

Run as `python3 demos/symmetric_pairs.py`.
"""

from flagorbits import (
    build_root_datum,
    canonical_sequences,
    cayley,
    format_word,
    inverse_cayley,
    monoid_word,
    reduced_word,
    root_type,
    sl2_split,
    twisted_involutions,
    twisted_shadow,
    validate_kgb,
)


def describe(g, title):
    print(f"\n{title}: {len(g.nodes)} nodes")
    for v in g.nodes:
        labels = ",".join(
            root_type(g, a, v).value for a in range(1, g.datum.rank + 1)
        )
        print(f"  node {v}  length {g.length[v]}  tw {format_word(reduced_word(g.tw[v]))}  labels {labels}")


def main():
    g = sl2_split()
    describe(g, "split rank one, simply connected")
    print(f"  axiom violations: {validate_kgb(g)}")

    # the two closed orbits share a Cayley transform up to the open one,
    # and the inverse transform is double-valued there
    print(f"  cayley from 0 and 1: {cayley(g, 1, '0')}, {cayley(g, 1, '1')}")
    print(f"  inverse cayley at 2: {inverse_cayley(g, 1, '2')}")

    cs = canonical_sequences(g, "0")
    print(f"  canonical route for node 0: up {cs.up} from {cs.start}, "
          f"down {cs.down} from open node {cs.open_node}")

    datum = build_root_datum("A2", twist=(2, 1))
    shadow = twisted_shadow(datum)
    describe(shadow, "twisted involutions of A2 under the diagram flip")
    words = [format_word(reduced_word(w)) for w in twisted_involutions(datum)]
    print(f"  involution words: {words}")

    # a monoid word walks upward through the graph, first letter first
    target = monoid_word(shadow, (1, 2, 1), shadow.nodes[0])
    print(f"  m(1) m(2) m(1) from the closed node lands at {target}")


if __name__ == "__main__":
    main()
