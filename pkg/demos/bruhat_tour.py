"""A walking tour of Weyl groups and Bruhat order.

Run as `python3 demos/bruhat_tour.py`.  Everything here is exact integer
arithmetic on root data; no numerics are involved.
"""

from flagorbits import (
    bruhat_leq,
    bruhat_leq_subword,
    build_root_datum,
    enumerate_elements,
    exchange,
    format_word,
    from_weyl,
    from_word,
    hasse,
    length,
    reduced_word,
)


def main():
    datum = build_root_datum("B2")
    print(f"type {datum.name}, Cartan matrix rows {datum.cartan}")

    elements = enumerate_elements(datum)
    print(f"\n{len(elements)} group elements, by canonical reduced word:")
    for w in elements:
        print(f"  {format_word(reduced_word(w)):10s} length {length(w)}")

    # two incomparable elements of the same length
    u = from_word(datum, (1, 2))
    v = from_word(datum, (2, 1))
    print("\ns1 s2 vs s2 s1:")
    print(f"  leq? {bruhat_leq(u, v)}   geq? {bruhat_leq(v, u)}")

    # the subword characterization gives the same order relation-by-relation
    agreements = sum(
        bruhat_leq(a, b) == bruhat_leq_subword(a, b)
        for a in elements
        for b in elements
    )
    print(f"\nsubword oracle agrees on {agreements}/{len(elements) ** 2} pairs")

    word = (2, 1, 2, 1)
    j = exchange(datum, word, 1)
    print(f"\nexchange on {format_word(word)} at alpha=1 deletes letter {j}:")
    print(f"  {format_word(word[: j - 1] + word[j:])}")

    print("\ncover relations of the closure order:")
    for a, b in hasse(from_weyl(datum)):
        print(f"  {a} < {b}")


if __name__ == "__main__":
    main()
