"""Burst schedules along a three-user cascade of one-sided channels.

Receiver 2 hears user 1, receiver 3 hears user 2, and nobody else
interferes.  Users 1 and 3 open their windows at the start of the
frame; user 2 closes the frame.  The best joint-decoding schedule makes
users 2 and 3 partition the frame between them (their windows just
touch) while user 1, whose interference receiver 2 can decode away,
keeps its own solo burst length almost regardless of the gain.
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from icburst import CgzicChannel, SweepSpec, cgzic_scheme_iv, run_sweep

FIXED = {"a2": 0.5, "p1": 4.0, "p2": 3.5, "p3": 3.0,
         "eps1": 2.0, "eps2": 2.0, "eps3": 2.0}
SNAPSHOT_GAINS = (1.0, 2.0, 4.0, 6.0)   # a1 values for the schedule panels
OUT_DIR = os.path.join(os.path.dirname(__file__), "output")


def main():
    spec = SweepSpec("cgzic", "a1", 1.0, 6.0, 0.1, fixed=FIXED)
    rows = list(run_sweep(spec))
    a1 = [row.value("a1") for row in rows]

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10.5, 4.0))
    for name, style in (("R_I", "-"), ("R_II", "--"), ("R_III", "-."), ("R_IV", "-")):
        ax1.plot(a1, [row.value(name) for row in rows], style, label=name[2:])
    ax1.plot(a1, [row.value("R_ub") for row in rows], ":k", label="upper bound")
    ax1.set_xlabel("first cross gain a1  (a2 = 0.5)")
    ax1.set_ylabel("sum rate (bits/use)")
    ax1.set_title("Cascade schemes, P = (4, 3.5, 3), eps = 2")
    ax1.legend(fontsize=8)
    ax1.grid(alpha=0.3)

    for i, gain in enumerate(SNAPSHOT_GAINS):
        ch = CgzicChannel(gain, **FIXED)
        t1, t2, t3 = cgzic_scheme_iv(ch).profile
        y = len(SNAPSHOT_GAINS) - i
        for offset, (start, width) in enumerate(
                ((0.0, t1), (1.0 - t2, t2), (0.0, t3))):
            ax2.barh(y - 0.22 * (offset - 1), width, left=start, height=0.18,
                     color=f"C{offset}")
        ax2.text(1.02, y, f"a1 = {gain:g}", va="center", fontsize=8)
    ax2.set_xlim(0.0, 1.25)
    ax2.set_yticks([])
    ax2.set_xlabel("position in frame")
    ax2.set_title("Best joint-decoding windows (users 1, 2, 3)")
    fig.tight_layout()
    os.makedirs(OUT_DIR, exist_ok=True)
    path = os.path.join(OUT_DIR, "cascade_schedules.png")
    fig.savefig(path, dpi=120)

    print("=" * 56)
    for gain in SNAPSHOT_GAINS:
        ch = CgzicChannel(gain, **FIXED)
        res = cgzic_scheme_iv(ch)
        t1, t2, t3 = res.profile
        print(f"a1 = {gain:g}: rate = {res.rate:.4f}, "
              f"theta = ({t1:.3f}, {t2:.3f}, {t3:.3f}), "
              f"theta2+theta3 = {t2 + t3:.3f}")
    print("users 2 and 3 split the frame; user 1 rides on top")
    print(f"figure: {path}")
    print("=" * 56)


if __name__ == "__main__":
    main()
