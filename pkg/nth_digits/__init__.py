"""
nth_digits package

Digits of pi and other central binomial series constants at an arbitrary
position and base, computed without the preceding digits and with only
word-sized residue arithmetic on the extraction path.
"""

import sys

# Dependency checking
def _check_dependencies():
    """Check for optional dependencies and return availability status."""
    deps = {}

    try:
        import matplotlib
        deps['matplotlib'] = True
    except ImportError:
        deps['matplotlib'] = False

    try:
        import mpmath
        deps['mpmath'] = True
    except ImportError:
        deps['mpmath'] = False

    return deps

# Check dependencies once at import time
_DEPENDENCIES = _check_dependencies()

MATPLOTLIB_AVAILABLE = _DEPENDENCIES['matplotlib']
MPMATH_AVAILABLE = _DEPENDENCIES['mpmath']

def require_dependency(name: str):
    """Require a specific dependency and provide helpful error message."""
    if not _DEPENDENCIES.get(name, False):
        install_commands = {
            'matplotlib': 'pip install matplotlib',
            'mpmath': 'pip install mpmath',
        }
        cmd = install_commands.get(name, f'pip install {name}')
        raise ImportError(f"Missing optional dependency '{name}'. Install with: {cmd}")

from .core.base import DigitResult, PrimePower, SeriesDef, UnitFraction
from .core.errors import ConfigError, ModulusOverflow, NotCoprime, NthDigitsError, UnknownConstant
from .core.extractor import extract_digits
from .core.fracsplit import decompose, split_pair
from .series import get_available_constants, get_series_info, lookup

__version__ = "1.0.0"
__description__ = "Nth digit extraction for central binomial series constants"

__all__ = [
    'extract_digits',
    'decompose',
    'split_pair',
    'lookup',
    'get_available_constants',
    'get_series_info',
    'DigitResult',
    'PrimePower',
    'SeriesDef',
    'UnitFraction',
    'NthDigitsError',
    'NotCoprime',
    'ModulusOverflow',
    'UnknownConstant',
    'ConfigError',
    'MATPLOTLIB_AVAILABLE',
    'MPMATH_AVAILABLE',
    'require_dependency',
    '__version__',
    '__description__',
]

def print_system_info():
    """Print system and dependency information."""
    print(f"nth-digits v{__version__}")
    print(f"Python {sys.version}")
    print("\nOptional Dependencies:")
    for name, available in _DEPENDENCIES.items():
        status = "available" if available else "not installed"
        print(f"  {name}: {status}")
    print(f"\nConstants: {', '.join(get_available_constants())}")

__all__.append('print_system_info')
