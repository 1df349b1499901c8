"""
Data behind the two worked examples: a space-like loxodrome on exp-profile
R1 and the three geodesic cases on cos-profile R2.
"""

import math
from pathlib import Path
from typing import Dict

from src.commands.common import CommandOutput, check_t_range, require, sample_curve, sample_grid
from src.commands.surface import build_surface_table
from src.geodesic import as_curve as geodesic_curve
from src.geodesic import make_closed_form, meridian_geodesic, parallel_curve
from src.loxodrome import as_curve as loxodrome_curve
from src.loxodrome import make_loxodrome
from src.profile_expr import parse
from src.sample_table import SampleTable, render
from src.surface import MeridianKind, RotationalSurface

SURFACE_GRID = (50, 50)


def figure_tables(samples: int) -> Dict[str, SampleTable]:
    r1_profile = parse("exp(u)")
    r2_profile = parse("cos(u)")
    tables: Dict[str, SampleTable] = {}

    r1 = RotationalSurface(MeridianKind.SPACELIKE_MERIDIAN, r1_profile)
    tables["figure1_surface"] = build_surface_table(r1, (1.0, 2.0), (-1.0, 1.0), SURFACE_GRID)
    lox = loxodrome_curve(make_loxodrome("ss", math.pi / 4, r1_profile, t_domain=(1.0, 2.0)))
    tables["figure1_loxodrome"] = sample_curve(lox, sample_grid(lox, samples))
    meridian = meridian_geodesic(1.0, 0.0, 0.0, MeridianKind.SPACELIKE_MERIDIAN, r1_profile, (1.0, 2.0))
    tables["figure1_meridian"] = sample_curve(meridian, sample_grid(meridian, samples))

    r2 = RotationalSurface(MeridianKind.TIMELIKE_MERIDIAN, r2_profile)
    tables["figure2_surface"] = build_surface_table(r2, (0.1, 4.0), (-1.0, 1.0), SURFACE_GRID)
    parallel = parallel_curve(2.0, 1.0, -1.0, MeridianKind.TIMELIKE_MERIDIAN, r2_profile, (0.0, 2.0))
    tables["figure2_parallel"] = sample_curve(parallel, sample_grid(parallel, samples))
    meridian = meridian_geodesic(2.0, 5.0, 0.0, MeridianKind.TIMELIKE_MERIDIAN, r2_profile, (0.0, 2.0))
    tables["figure2_meridian"] = sample_curve(meridian, sample_grid(meridian, samples))
    closed = geodesic_curve(make_closed_form(1.0, 4.0, 2.0, 0.0, profile=r2_profile, t_domain=(0.0, 2.0)))
    tables["figure2_geodesic"] = sample_curve(closed, sample_grid(closed, samples))
    return tables


def cmd_figures(args, logger) -> CommandOutput:
    require(check_t_range((0.0, 1.0), args.samples))
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, table in figure_tables(args.samples).items():
        path = out_dir / f"{name}.{args.format}"
        with path.open("w", encoding="utf-8", newline="") as fh:
            fh.write(render(table, args.format))
        logger.info("Wrote %s (%d rows)", path, len(table.rows))
    return CommandOutput()
