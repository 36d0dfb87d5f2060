"""Emit the mollification figure data and summarize the attenuation.

Writes mollifier_figure.csv with columns t, X(t), X|eta|^2 (piecewise
weight) and X|eta_sel|^2 (selberg weight) over t in [100, 160] at step
0.05, then prints peak-to-mean statistics showing how the mollifier
flattens the excursions of X between its zeros without moving them.
"""

import numpy as np

from critline import mollifier as mo

OUT = "mollifier_figure.csv"


def main():
    cfg = mo.MollifierConfig(xi=50.0, theta=0.5)
    rows = mo.figure_data(100.0, 160.0, 0.05, cfg)

    with open(OUT, "w", encoding="utf-8") as fh:
        fh.write("t,x,x_mollified,x_mollified_selberg\n")
        for r in rows:
            fh.write(f"{r[0]:.10g},{r[1]:.10g},{r[2]:.10g},{r[3]:.10g}\n")
    print(f"wrote {rows.shape[0]} rows to {OUT}")

    labels = ("raw X", "piecewise mollified", "selberg mollified")
    print(f"\n{'trace':>20} {'max|.|':>8} {'mean|.|':>8} {'peak/mean':>10}")
    for col, label in zip((1, 2, 3), labels):
        c = np.abs(rows[:, col])
        print(f"{label:>20} {c.max():>8.3f} {c.mean():>8.3f} "
              f"{c.max() / c.mean():>10.3f}")

    def crossings(col):
        s = np.sign(rows[:, col])
        return int(np.count_nonzero(s[1:] != s[:-1]))

    print(f"\nsign changes on the grid: raw {crossings(1)}, "
          f"piecewise {crossings(2)}, selberg {crossings(3)}")
    print("the mollifier scales each value by |eta|^2 >= 0, so all three")
    print("traces cross zero together; only the peaks differ")


if __name__ == "__main__":
    main()
