"""From complete to partial flags: cosets, classes, and their shared order.

Run as `python3 demos/partial_flags.py`.
"""

from flagorbits import (
    build_root_datum,
    builtin_fixtures,
    class_hasse,
    enumerate_cosets,
    find_descent_counterexample,
    format_word,
    i_equivalence_classes,
    p_length,
    p_maximal_set,
    reduced_word,
)


def main():
    datum = build_root_datum("A2")
    levi = (1,)
    print(f"type {datum.name}, Levi set {levi}")

    print("\nparabolic cosets, with both distinguished representatives:")
    for coset in enumerate_cosets(datum, levi):
        print(
            f"  min {format_word(reduced_word(coset.min_rep)):8s}"
            f" max {format_word(reduced_word(coset.max_rep)):8s}"
            f" quotient length {p_length(coset)}"
        )

    g = builtin_fixtures()["group_case_a2"]
    print(f"\ndiagonal orbit graph on {len(g.nodes)} nodes, classes over {levi}:")
    for k, cls in enumerate(i_equivalence_classes(g, levi)):
        print(f"  class {k}: members {cls.members} dense {cls.top}")
    print(f"  fixed nodes: {p_maximal_set(g, levi)}")

    print("\ncover relations between dense members:")
    for a, b in class_hasse(g, levi):
        print(f"  {a} < {b}")

    # moving along a root outside the Levi set from a non-dense member can
    # leave the image class, so projections must go through dense members
    witness = find_descent_counterexample(g, levi)
    print(f"\nnon-dense member stepping outside its image class: {witness}")


if __name__ == "__main__":
    main()
