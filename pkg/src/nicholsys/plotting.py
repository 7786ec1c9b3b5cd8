"""Figures for the support hull: lattice points and the support vertices B."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402


def _hull_order(points):
    # counter-clockwise hull of planar points, for drawing the outline
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def plot_support(lattice_points, vertices, path, title=None):
    """Write a scatter plot of the hull lattice points with B highlighted.

    Handles theta = 1, 2 and 3; the file format follows the extension of `path`.
    """
    theta = len(vertices[0])
    fig = plt.figure(figsize=(5, 5))
    if theta == 3:
        ax = fig.add_subplot(projection="3d")
        xs, ys, zs = zip(*lattice_points)
        ax.scatter(xs, ys, zs, s=12, c="0.6", label="lattice points")
        bx, by, bz = zip(*vertices)
        ax.scatter(bx, by, bz, s=40, c="C3", label="B")
        ax.set_zlabel(r"$\alpha_3$")
    else:
        ax = fig.add_subplot()
        pad = [tuple(p) + (0,) * (2 - theta) for p in lattice_points]
        ver = [tuple(v) + (0,) * (2 - theta) for v in vertices]
        hull = _hull_order(ver)
        if len(hull) > 2:
            loop = hull + hull[:1]
            ax.plot([p[0] for p in loop], [p[1] for p in loop], c="C0", lw=1)
        ax.scatter([p[0] for p in pad], [p[1] for p in pad], s=18, c="0.6", label="lattice points")
        ax.scatter([p[0] for p in ver], [p[1] for p in ver], s=50, c="C3", label="B")
        ax.set_aspect("equal")
        ax.xaxis.set_major_locator(MaxNLocator(integer=True))
        ax.yaxis.set_major_locator(MaxNLocator(integer=True))
        ax.grid(True, lw=0.3)
    ax.set_xlabel(r"$\alpha_1$")
    ax.set_ylabel(r"$\alpha_2$")
    if title:
        ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None} if str(path).endswith(".png") else None)
    plt.close(fig)
    return path
