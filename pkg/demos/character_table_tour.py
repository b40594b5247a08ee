"""Exact character table of a quotient-index-2 group, with integrity checks."""

from gelfand import (
    character_table,
    enumerate_classes,
    class_size,
    delta1,
    inner_product,
)


def main():
    r, p, n = 4, 2, 2
    table = character_table(r, p, 1, n)
    classes = enumerate_classes(r, p, n)

    print("G(%d,%d,%d): %d classes, %d irreducibles" % (r, p, n, len(classes), len(table)))
    print()
    header = ["label"] + [str(c) for c in classes]
    print("\t".join(header))
    for label, row in table:
        print("\t".join([str(label)] + [str(row(c)) for c in classes]))

    print()
    print("class sizes:", [class_size(c) for c in classes])
    print("degrees:    ", [str(row.degree()) for _, row in table])

    # rows are orthonormal for the class-size weighted inner product
    first = table[0][1]
    print()
    print("<x0,x0> =", inner_product(first, first))
    print("<x0,x1> =", inner_product(first, table[1][1]))

    # the difference character of a split pair vanishes off the split classes
    split = [label for label, _ in table if label.orbit.m > 1]
    print()
    print("split labels:", ", ".join(str(l) for l in split))
    mu = split[0].orbit.canonical[: r // 2]
    for c in classes:
        print("  delta1(%s) at %-14s = %s" % (mu, c, delta1(mu, c)))


if __name__ == "__main__":
    main()
