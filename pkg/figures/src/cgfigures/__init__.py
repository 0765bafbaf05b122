"""Figure rendering for cgmeas sweep CSVs."""

from .csvdata import CsvFormatError, SweepData, load_sweep
from .render import (
    FigureSpec,
    PanelSpec,
    coherence_figure,
    negativity_figure,
    probability_figure,
    render_figure,
)

__version__ = "0.1.0"

__all__ = [
    "CsvFormatError",
    "FigureSpec",
    "PanelSpec",
    "SweepData",
    "coherence_figure",
    "load_sweep",
    "negativity_figure",
    "probability_figure",
    "render_figure",
    "__version__",
]
