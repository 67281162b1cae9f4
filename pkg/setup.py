"""Setup configuration for the nth-digits package."""

from setuptools import setup, find_packages

# Version
VERSION = "1.0.0"

# Required dependencies
REQUIRED = [
    'numpy>=1.21.0',
]

# Optional dependencies
EXTRAS = {
    'bench': [
        'matplotlib>=3.5.0',
    ],
    'oracle': [
        'mpmath>=1.2.0',
    ],
    'dev': [
        'pytest>=7.0.0',
        'pytest-cov>=4.0.0',
        'hypothesis>=6.0.0',
        'sympy>=1.10',
        'mpmath>=1.2.0',
        'black>=22.0.0',
        'flake8>=3.8.0',
        'mypy>=0.991',
    ],
    'full': [
        'matplotlib>=3.5.0',
        'mpmath>=1.2.0',
        'sympy>=1.10',
    ]
}

setup(
    name="nth-digits",
    version=VERSION,
    description="Digits of pi and related constants at any position, without the preceding digits",
    long_description="""
nth-digits
==========

Computes the d-th digit, in any base from 2 to 256, of pi, pi*sqrt(3),
pi^2, zeta(3) and (2/sqrt(5)) ln(phi) from series over central binomial
coefficients.

Features:
- Digit extraction with word-sized residue arithmetic only (numpy uint64 vectors, no big numbers)
- Certified confidence count from a fixed-point error bound
- Unit-fraction splitting of 1/C(2n, n) over its prime powers
- Exact big-integer oracle and a BBP hexadecimal baseline for verification
- Benchmark harness with a log-log growth fit
- Command-line interface with text and JSON output

Usage:
    from nth_digits import extract_digits

    result = extract_digits('pi', 10, base=10, count=5)
    print(result.digits, result.confidence)
""",
    long_description_content_type="text/plain",
    packages=find_packages(exclude=['tests', 'tests.*']),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Developers",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.10",
    install_requires=REQUIRED,
    extras_require=EXTRAS,
    package_data={
        'nth_digits': [
            'fixtures/*.txt',
        ],
    },
    entry_points={
        'console_scripts': [
            'nth-digits=nth_digits.ui.cli:main',
        ],
    },
    keywords=['pi', 'digit extraction', 'spigot', 'number theory', 'chinese remainder theorem'],
)
