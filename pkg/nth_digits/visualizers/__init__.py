"""Optional plotting backends."""

try:
    from .bench_plot import MATPLOTLIB_AVAILABLE, BenchPlotter
except ImportError:
    BenchPlotter = None  # type: ignore
    MATPLOTLIB_AVAILABLE = False

__all__ = ['MATPLOTLIB_AVAILABLE', 'BenchPlotter']
