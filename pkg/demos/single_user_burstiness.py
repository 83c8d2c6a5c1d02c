"""How processing cost turns always-on transmission into bursts.

A transmitter that pays a fixed energy toll whenever it is on can do
better than spending its whole power budget continuously: it compresses
transmission into a fraction theta of the time, boosts the signaling
power to P/theta - eps, and amortizes the toll.  This script sweeps the
toll for a fixed budget and compares the optimal burst schedule with
naive always-on operation.
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from icburst import UserBudget, capacity, interference_free_rate, optimal_burstiness

POWER = 3.5            # average power budget
COSTS = np.linspace(0.0, 3.4, 69)   # per-use processing cost
OUT_DIR = os.path.join(os.path.dirname(__file__), "output")


def main():
    thetas, nus, best, naive = [], [], [], []
    for eps in COSTS:
        budget = UserBudget(POWER, float(eps))
        point = optimal_burstiness(budget)
        thetas.append(point.theta_star)
        nus.append(point.nu_star)
        best.append(interference_free_rate(budget))
        naive.append(capacity(POWER - float(eps)))

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.5, 3.8))
    ax1.plot(COSTS, thetas, label="on-fraction theta*")
    ax1.set_xlabel("processing cost eps")
    ax1.set_ylabel("theta*")
    ax1.set_title(f"Optimal burstiness, P = {POWER}")
    ax1.grid(alpha=0.3)
    ax2.plot(COSTS, best, label="optimal bursts")
    ax2.plot(COSTS, naive, "--", label="always on")
    ax2.set_xlabel("processing cost eps")
    ax2.set_ylabel("rate (bits/use)")
    ax2.set_title("Rate: bursts vs always-on")
    ax2.legend()
    ax2.grid(alpha=0.3)
    fig.tight_layout()
    os.makedirs(OUT_DIR, exist_ok=True)
    path = os.path.join(OUT_DIR, "single_user_burstiness.png")
    fig.savefig(path, dpi=120)

    anchor = optimal_burstiness(POWER, 2.0)
    print("=" * 56)
    print(f"budget P = {POWER}, cost eps = 2.0")
    print(f"  theta* = {anchor.theta_star:.4f}   nu* = {anchor.nu_star:.4f}")
    print(f"  burst rate    = {interference_free_rate(UserBudget(POWER, 2.0)):.4f} bits/use")
    print(f"  always-on     = {capacity(POWER - 2.0):.4f} bits/use")
    print(f"figure: {path}")
    print("=" * 56)


if __name__ == "__main__":
    main()
