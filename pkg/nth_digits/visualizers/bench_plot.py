"""Matplotlib plot of benchmark samples on log-log axes."""

from typing import Optional, TYPE_CHECKING

# Optional matplotlib imports
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    MATPLOTLIB_AVAILABLE = True
except ImportError:
    plt = None
    MATPLOTLIB_AVAILABLE = False

if TYPE_CHECKING:
    from matplotlib.figure import Figure

from ..core.bench import ComplexityBench


class BenchPlotter:
    """Log-log plot of median extraction time against position."""

    def __init__(self, width: float = 8, height: float = 5):
        """
        Args:
            width: Figure width in inches
            height: Figure height in inches
        """
        if not MATPLOTLIB_AVAILABLE:
            raise ImportError("Matplotlib is not available. Install with: pip install matplotlib")
        self.width = width
        self.height = height

    def plot(self, bench: ComplexityBench) -> Optional['Figure']:
        """Figure with every raw sample, the medians and the fitted line."""
        samples = bench.get_samples()
        if not samples:
            return None

        fig, ax = plt.subplots(figsize=(self.width, self.height))
        for s in samples:
            ax.scatter([s.position] * len(s.times), s.times, color='lightblue', s=12)
        positions = [s.position for s in samples]
        medians = [s.median for s in samples]
        ax.plot(positions, medians, marker='o', color='tab:blue', label='median')

        exponent = bench.fitted_exponent()
        if exponent is not None:
            # line through the last median with the fitted slope
            anchor_d, anchor_t = positions[-1], medians[-1]
            fitted = [anchor_t * (d / anchor_d) ** exponent for d in positions]
            ax.plot(positions, fitted, linestyle='--', color='tab:red',
                    label=f'fit d^{exponent:.2f}')

        ax.set_xscale('log')
        ax.set_yscale('log')
        ax.set_xlabel('Position d')
        ax.set_ylabel('Time (s)')
        ax.set_title(f'{bench.constant}: extraction time (base {bench.base})')
        ax.legend()
        ax.grid(True, alpha=0.3, which='both')
        fig.tight_layout()
        return fig

    def save(self, bench: ComplexityBench, filename: str) -> bool:
        fig = self.plot(bench)
        if fig is None:
            return False
        fig.savefig(filename, dpi=120)
        plt.close(fig)
        return True
