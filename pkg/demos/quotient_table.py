"""Tabulate length-to-width ratios against crossing numbers.

Every family's ratio divided by its knot's crossing number lands in a
narrow band: the truncated odd wraps sink toward 4/pi, both even wrap
variants toward 2/pi, and the star polygons grow without bound.  The
four bound rows summarize what the families pin down.
"""

import argparse
import os

from ribbonfold import (
    bounds_table,
    quotient_table,
    ratio_reports,
    render_table_figure,
    significant,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--output", default=".", help="directory for CSV/SVG output")
    parser.add_argument("--q-max", type=int, default=12)
    parser.add_argument("--p-max", type=int, default=25)
    args = parser.parse_args()

    print(quotient_table(args.q_max, args.p_max, "markdown"))
    print("bounds:")
    for row in bounds_table():
        print("  %-13s %-10s %-16s %s"
              % (row.constant, significant(row.value), row.symbolic, row.witness))
        print("  %-13s note: %s" % ("", row.note))

    csv_path = os.path.join(args.output, "quotients.csv")
    with open(csv_path, "w", encoding="utf-8") as handle:
        handle.write(quotient_table(args.q_max, args.p_max, "csv"))
    chart_path = os.path.join(args.output, "quotients.svg")
    with open(chart_path, "w", encoding="utf-8") as handle:
        handle.write(render_table_figure(ratio_reports(args.q_max, args.p_max)))
    print("wrote", csv_path, "and", chart_path)


if __name__ == "__main__":
    main()
