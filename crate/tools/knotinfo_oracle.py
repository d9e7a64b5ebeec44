"""Writes the KnotInfo reference fixture used by the invariant oracle tests.

KnotInfo lists PD slots clockwise; knotlab lists them counterclockwise, so
slots 1 and 3 are exchanged on export. Signatures are copied unchanged.
"""
import json
import sys

from database_knotinfo import link_list


def main(path, max_crossings=10):
    rows = []
    for k in link_list():
        n = k["crossing_number"]
        if not n.isdigit() or not 3 <= int(n) <= max_crossings:
            continue
        pd = json.loads(k["pd_notation"])
        pd = [[a, d, c, b] for a, b, c, d in pd]
        vec = json.loads(k["alexander_polynomial_vector"])
        coeffs = vec[2:]
        if coeffs[-1] < 0:
            coeffs = [-c for c in coeffs]
        rows.append(
            "|".join(
                [
                    k["name"],
                    k["alternating"],
                    " ".join(map(str, coeffs)),
                    k["determinant"],
                    k["signature"],
                    k["three_genus"],
                    ";".join(",".join(map(str, x)) for x in pd),
                ]
            )
        )
    with open(path, "w") as f:
        f.write("# name|alternating|alexander|determinant|signature|genus|pd\n")
        f.write("\n".join(rows) + "\n")


if __name__ == "__main__":
    main(sys.argv[1])
