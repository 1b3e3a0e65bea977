from .data import FigureDataError, read_xy_csv
from .spec import FigureSpec
from .render import build_fig1, build_fig2, render_fig1, render_fig2

__all__ = [
    "FigureDataError",
    "FigureSpec",
    "build_fig1",
    "build_fig2",
    "read_xy_csv",
    "render_fig1",
    "render_fig2",
]
