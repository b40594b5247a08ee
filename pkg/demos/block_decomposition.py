"""Decompose one block of the involution module.

The module for the even-signed permutation group on 6 letters is spanned
by absolute involutions of the quotient of the signed group by its
center.  One conjugation type has 90 members; its block splits into
three irreducibles, each appearing once.
"""

import json

from gelfand import (
    ProjectiveElement,
    involution_type,
    parse_window,
    predicted_labels,
    verify_class_decomposition,
)


def main():
    v = ProjectiveElement(parse_window("[6^1,4^0,3^0,2^0,5^1,1^1]", 2), 2)
    ctype = involution_type(v)
    print("involution   =", v)
    print("class type   =", ctype)
    print("predicted    =", ", ".join(str(l) for l in predicted_labels(ctype)))

    report = verify_class_decomposition(2, 2, 1, 6, only=ctype)
    (entry,) = report.entries
    print("class size   =", entry.size)
    print("computed     =")
    for label, mult in entry.computed:
        print("    %-28s x%d" % (label, mult))
    print("pass         =", report.passed)
    print()
    print(json.dumps(report.to_json(), indent=2))


if __name__ == "__main__":
    main()
