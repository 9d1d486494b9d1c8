"""CSV tables (pandas) and SVG line plots (matplotlib, Agg backend)."""

from __future__ import annotations

from pathlib import Path

import pandas as pd

from .constants import CSV_FLOAT_FORMAT


def _prepare(path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def write_csv(frame: pd.DataFrame, path: Path, columns: list[str]) -> Path:
    """Write `columns` of frame with 12 significant digits, '.' decimals and '\\n' line endings."""
    path = _prepare(path)
    frame.to_csv(
        path,
        columns=columns,
        index=False,
        float_format=CSV_FLOAT_FORMAT,
        lineterminator="\n",
        encoding="utf-8",
    )
    return path


def write_svg(
    path: Path,
    series: dict[str, tuple],
    title: str,
    xlabel: str,
    ylabel: str,
    zero_line: bool = True,
) -> Path:
    """
    One polyline per entry of `series` ({label: (x, y)}) on shared axes.
    The hash salt and date metadata are pinned so reruns write the same file.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = _prepare(path)
    with matplotlib.rc_context({"svg.hashsalt": "epw-bell", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(7.0, 4.5))
        try:
            for label, (x, y) in series.items():
                ax.plot(x, y, lw=1.4, label=label)
            if zero_line:
                ax.axhline(0.0, color="0.4", lw=0.8, ls="--")
            ax.set_xlabel(xlabel)
            ax.set_ylabel(ylabel)
            ax.set_title(title)
            ax.grid(True, alpha=0.3, ls=":")
            if len(series) > 1:
                ax.legend()
            fig.tight_layout()
            fig.savefig(path, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)
    return path
