"""Writes the bundled seed table from the KnotInfo fixture.

Every record is rechecked by knotlab when the table loads.
"""
import sys

SEED = "3_1 4_1 5_1 5_2 6_1 6_2 6_3 7_2 8_1 8_9 9_44 9_46 10_1 10_67 10_146".split()
TWIST = {"3_1", "4_1", "5_2", "6_1", "7_2", "8_1", "9_2", "10_1"}


def main(fixture, paper_list, out):
    listed = set(open(paper_list).read().split())
    rows = {}
    for line in open(fixture):
        if line.startswith("#"):
            continue
        name, alt, alex, det, sig, _genus, pd = line.strip().split("|")
        rows[name] = (alt, alex, det, sig, pd)
    blocks = []
    for name in SEED:
        alt, alex, det, sig, pd = rows[name]
        flags = []
        if alt == "Y":
            flags.append("alternating")
        if name in TWIST:
            flags.append("twist-knot")
        if name in listed:
            flags.append("persistently-laminar-paper-table")
        lines = [f"name {name}", f"flags {','.join(flags)}", f"alexander {alex}", f"det {det}", f"sig {sig}", "pd:"]
        lines += [f"X {x}" for x in pd.split(";")]
        blocks.append("\n".join(lines) + "\n")
    with open(out, "w") as f:
        f.write("\n".join(blocks))


if __name__ == "__main__":
    main(*sys.argv[1:4])
