"""Curve data behind the potential / P_IV figures, one bundle per figure."""

from dataclasses import dataclass

from .grid import DEFAULT_FIGURE_GRID, GridFunction, GridSpec
from .hierarchies import RATIONAL_CATALOG, rational_hierarchy
from .seeds import SeedFamily, SeedParams
from .susy import sample_pain4, sample_potential

HYPERGEOMETRIC_EPS = (0.25, -0.75, -1.75)
ERF_EPS = (-0.5, -1.5, -2.5)
RATIONAL_EPS = (-2.5, -4.5, -6.5)

FIGURE_SETS = {
    "fig2": [SeedParams(e, 0.5, 1) for e in HYPERGEOMETRIC_EPS],
    "fig3": [SeedParams(e, 0.5, 2) for e in HYPERGEOMETRIC_EPS],
    "fig4": [SeedParams(e, 0.5, 3) for e in HYPERGEOMETRIC_EPS],
    "fig5": [SeedParams(e, 0.999, 1) for e in ERF_EPS],
    "fig6": [SeedParams(e, 0.0, 3) for e in RATIONAL_EPS],
}

BUNDLE_NAMES = ("fig2", "fig3", "fig4", "fig5", "fig6", "fig6_catalog")


@dataclass(frozen=True)
class Curve:
    name: str
    params: SeedParams
    data: object  # GridFunction


def curve_name(kind, params):
    return f"{kind}{params.k}_eps{params.eps1:g}_nu{params.nu1:g}"


def figure_grid():
    return GridSpec(*DEFAULT_FIGURE_GRID)


def figure_bundle(name, grid=None):
    """Curves of one bundle: V_k and g_k per parameter set, or the closed-form g_3."""
    xs = (grid or figure_grid()).xs
    if name == "fig6_catalog":
        # the catalog stops at g_3(x, -9/2)
        out = []
        for p in FIGURE_SETS["fig6"]:
            if (p.k, p.eps1) in RATIONAL_CATALOG:
                gf = GridFunction.sample(lambda x, p=p: rational_hierarchy(p.k, p.eps1, x), xs)
                out.append(Curve(curve_name("gcat", p), p, gf))
        return out
    try:
        sets = FIGURE_SETS[name]
    except KeyError:
        raise ValueError(f"unknown figure bundle {name!r}; expected one of {BUNDLE_NAMES}") from None
    out = []
    for p in sets:
        family = SeedFamily(p)
        out.append(Curve(curve_name("V", p), p, sample_potential(family, xs)))
        out.append(Curve(curve_name("g", p), p, sample_pain4(family, xs)))
    return out


def all_bundles(grid=None):
    return {name: figure_bundle(name, grid) for name in BUNDLE_NAMES}

