"""Sampling grids and sampled functions."""

from dataclasses import dataclass

import numpy as np

DEFAULT_WORKING_GRID = (-6.0, 6.0, 601)
DEFAULT_FIGURE_GRID = (-5.0, 5.0, 501)


@dataclass(frozen=True)
class GridSpec:
    xmin: float
    xmax: float
    n: int

    def __post_init__(self):
        if not self.xmin < self.xmax:
            raise ValueError(f"grid needs xmin < xmax, got [{self.xmin}, {self.xmax}]")
        if self.n < 2:
            raise ValueError(f"grid needs at least 2 points, got {self.n}")

    @property
    def xs(self):
        return np.linspace(self.xmin, self.xmax, self.n)


def working_grid():
    return GridSpec(*DEFAULT_WORKING_GRID)


class GridFunction:
    """Values sampled on a strictly increasing abscissa; NaN/Inf rejected."""

    __slots__ = ("xs", "values")

    def __init__(self, xs, values):
        xs = np.array(xs, dtype=float)
        values = np.array(values, dtype=float)
        if xs.ndim != 1 or values.ndim != 1:
            raise ValueError("xs and values must be 1-d")
        if len(xs) != len(values):
            raise ValueError(f"length mismatch: {len(xs)} abscissae vs {len(values)} values")
        if len(xs) > 1 and not np.all(np.diff(xs) > 0):
            raise ValueError("xs must be strictly increasing")
        if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(values))):
            raise ValueError("grid function contains NaN or Inf")
        xs.flags.writeable = False
        values.flags.writeable = False
        self.xs = xs
        self.values = values

    @classmethod
    def sample(cls, fn, xs):
        xs = np.asarray(xs, dtype=float)
        return cls(xs, [fn(x) for x in xs])

    def __len__(self):
        return len(self.xs)

    def __eq__(self, other):
        if not isinstance(other, GridFunction):
            return NotImplemented
        return (np.array_equal(self.xs, other.xs)
                and np.array_equal(self.values, other.values))

    __hash__ = None

    def __repr__(self):
        return f"GridFunction(n={len(self)}, x=[{self.xs[0]}, {self.xs[-1]}])"
