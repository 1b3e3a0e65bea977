from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class FigureSpec:
    """What to draw: one input CSV per panel, panels ordered by theta."""

    input_csv: list[str]
    thetas: list[float]
    output: str
    point_size: float = 1.5
    xlim: tuple[float, float] = (0.0, 1.0)
    ylim: tuple[float, float] | None = (0.0, 1.0)

    def __post_init__(self):
        if len(self.input_csv) != len(self.thetas):
            raise ValueError("need exactly one input CSV per theta panel")
        if not self.input_csv:
            raise ValueError("need at least one panel")
        if sorted(self.thetas) != list(self.thetas):
            raise ValueError("panels must be ordered by theta")
        if self.point_size <= 0:
            raise ValueError("point_size must be positive")
