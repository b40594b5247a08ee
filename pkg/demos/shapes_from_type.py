"""From an involution to its predicted constituents, with no module build.

The conjugation type of an absolute involution already determines which
irreducibles its block carries.  This works at any size; here a
14-letter example in the quotient with 6 colors and full scalar group.
"""

from gelfand import (
    ProjectiveElement,
    involution_type,
    parse_window,
    predicted_shapes,
    rs,
)
from gelfand.shapes import multitableau_str, odd_columns


def main():
    window = "[1^0,3^1,2^1,4^1,5^1,7^2,6^2,8^3,10^4,9^4,11^4,12^4,14^5,13^5]"
    v = ProjectiveElement(parse_window(window, 6), 6)
    ctype = involution_type(v)
    print("window =", window)
    print("type   =", ctype)

    orbits = sorted(predicted_shapes(ctype))
    print()
    print("%d predicted shape orbits:" % len(orbits))
    for orbit in orbits:
        member = orbit.members[0]
        stats = ", ".join(
            "%d boxes/%d odd cols" % (sum(comp), odd_columns(comp))
            for comp in member
        )
        print("  %-44s (%s)" % (orbit, stats))

    # the insertion tableau of the involution lands in one of those orbits
    p_tab, _ = rs(v.rep)
    print()
    print("insertion tableau of the stored lift:")
    print(multitableau_str(p_tab))


if __name__ == "__main__":
    main()
