"""Tour of the basic arithmetic: windows, cycles, products, involutions.

Run with  python3 demos/group_arithmetic_tour.py
"""

from gelfand import (
    ColoredPermutation,
    ProjectiveElement,
    absolute_conjugate,
    group_order,
    parse_window,
)


def main():
    # a colored permutation is a window of images with color exponents
    g = parse_window("[3^0,4^1,6^1,2^0,5^2,1^2]", 3)
    print("g          =", g)
    print("cycles     =", g.cycles_str())
    print("color sum  =", g.color_sum())

    # products compose the left factor first
    h = parse_window("[2^1,1^0,3^0,4^0,5^0,6^2]", 3)
    print("g * h      =", g * h)
    print("(g*h)(1)   =", (g * h).image(1), "because g:1->3 then h:3->3")

    # an absolute involution squares to the identity after color negation
    v = parse_window("[2^1,1^1,3^0,4^2]", 3)
    print()
    print("v          =", v)
    print("absolute involution:", v.is_absolute_involution())
    print("symmetry kind:      ", v.symmetry_kind())

    # conjugation twists the window but keeps the cycle structure
    s = parse_window("[2^0,1^0,3^0,4^0]", 3)
    print("conjugated =", absolute_conjugate(s, v).cycles_str())

    # scalar cosets: elements of the quotient by a cyclic scalar group
    coset = ProjectiveElement(v, 3)
    print()
    print("coset      =", coset)
    print("lifts      =", ", ".join(str(w) for w in coset.lifts()))
    print("|G(3,1,3,4)| =", group_order(3, 1, 3, 4))


if __name__ == "__main__":
    main()
