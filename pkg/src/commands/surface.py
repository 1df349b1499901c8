import numpy as np

from src.commands.common import (
    CommandOutput,
    check_u_range,
    parse_grid,
    parse_pair,
    require,
)
from src.errors import ConstructionError
from src.profile_expr import parse, to_text
from src.sample_table import SampleTable, build_meta
from src.surface import MeridianKind, RotationalSurface, surface_grid


def build_surface_table(s: RotationalSurface, u_range, v_range, grid) -> SampleTable:
    """Tensor-grid samples of the embedding; t is the flattened grid index (u major)."""
    nu, nv = grid
    us = np.linspace(u_range[0], u_range[1], nu)
    vs = np.linspace(v_range[0], v_range[1], nv)
    points = surface_grid(s, us, vs).reshape(-1, 3)
    uu, vv = np.meshgrid(us, vs, indexing="ij")
    rows = np.column_stack([np.arange(nu * nv, dtype=float), uu.ravel(), vv.ravel(), points])
    meta = build_meta(
        "surface",
        {"surface": s.kind.value, "profile": to_text(s.profile)},
        {"u_range": list(u_range), "v_range": list(v_range), "grid": [nu, nv], "samples": nu * nv},
    )
    return SampleTable(rows, meta)


def cmd_surface(args, logger) -> CommandOutput:
    kind = MeridianKind(args.kind)
    profile = parse(args.profile)
    u_range = parse_pair(args.u_range, "--u-range")
    v_range = parse_pair(args.v_range, "--v-range")
    if not v_range[0] <= v_range[1]:
        raise ConstructionError(f"v-range must satisfy lo <= hi, got {v_range}")
    require(check_u_range(u_range, args.allow_axis))
    if u_range[0] <= 0.0 <= u_range[1]:
        logger.warning("Sampling across the rotation axis u = 0 where the induced metric degenerates")
    grid = parse_grid(args.grid)

    s = RotationalSurface(kind, profile, u_range if u_range[0] < u_range[1] else None)
    logger.info("Sampling %s surface f(u) = %s on %s x %s with grid %s", kind.value, to_text(profile), u_range, v_range, grid)
    return CommandOutput(table=build_surface_table(s, u_range, v_range, grid))
