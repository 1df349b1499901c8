"""
Plot the output of `python main.py figures --out-dir DIR` (CSV format) as two
interactive HTML files, DIR/figure1.html and DIR/figure2.html.

    python docs/plot_figures.py DIR
"""

import argparse
import sys
from pathlib import Path

import pandas as pd
import plotly.graph_objects as go

SURFACE_GRID = (50, 50)

FIGURES = {
    "figure1": {
        "title": "Rotational surface with space-like meridian, f(u) = exp(u)",
        "curves": [("figure1_loxodrome", "space-like loxodrome", "green"), ("figure1_meridian", "meridian", "blue")],
    },
    "figure2": {
        "title": "Rotational surface with time-like meridian, f(u) = cos(u)",
        "curves": [
            ("figure2_parallel", "parallel", "blue"),
            ("figure2_meridian", "meridian geodesic", "green"),
            ("figure2_geodesic", "closed-form geodesic", "red"),
        ],
    },
}


def surface_trace(frame: pd.DataFrame) -> go.Surface:
    shape = SURFACE_GRID
    return go.Surface(
        x=frame["x"].to_numpy().reshape(shape),
        y=frame["y"].to_numpy().reshape(shape),
        z=frame["z"].to_numpy().reshape(shape),
        colorscale=[[0.0, "orange"], [1.0, "orange"]],
        opacity=0.6,
        showscale=False,
        name="surface",
    )


def curve_trace(frame: pd.DataFrame, name: str, color: str) -> go.Scatter3d:
    return go.Scatter3d(x=frame["x"], y=frame["y"], z=frame["z"], mode="lines", line={"color": color, "width": 6}, name=name)


def plot(data_dir: Path) -> None:
    for key, figure in FIGURES.items():
        fig = go.Figure()
        fig.add_trace(surface_trace(pd.read_csv(data_dir / f"{key}_surface.csv")))
        for stem, name, color in figure["curves"]:
            fig.add_trace(curve_trace(pd.read_csv(data_dir / f"{stem}.csv"), name, color))
        fig.update_layout(title=figure["title"], scene={"aspectmode": "data"})
        fig.write_html(data_dir / f"{key}.html")
        print(f"wrote {data_dir / f'{key}.html'}")


def main() -> int:
    parser = argparse.ArgumentParser(description="Plot the figures data written by `main.py figures`.")
    parser.add_argument("data_dir", type=Path)
    args = parser.parse_args()
    plot(args.data_dir)
    return 0


if __name__ == "__main__":
    sys.exit(main())
