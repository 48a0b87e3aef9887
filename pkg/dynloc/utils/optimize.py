"""
    Bracketed one-dimensional searches used by the design solvers and the coupling fit
"""

import numpy as np
from scipy.optimize import minimize_scalar


def scan_minimum(func, low, high, points):
    """
        Evaluate func on a uniform grid, then refine the best grid cell
        with a bounded Brent search.

        :rtype: tuple
        :return: (x_min, f_min, scanned) where scanned lists (x, f(x))
    """
    grid = np.linspace(low, high, points)
    values = [func(value) for value in grid]
    best = int(np.argmin(values))
    left = grid[max(best - 1, 0)]
    right = grid[min(best + 1, points - 1)]
    scanned = [(float(x), float(f)) for x, f in zip(grid, values)]

    x_min, f_min = grid[best], values[best]
    if right > left:
        result = minimize_scalar(
            func,
            bounds=(left, right),
            method="bounded",
            options={"xatol": abs(high - low) * 1e-12},
        )
        # the grid point wins when the minimum sits on a bracket edge
        if result.fun < f_min:
            x_min, f_min = result.x, result.fun
    return float(x_min), float(f_min), scanned
