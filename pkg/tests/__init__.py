"""
Test suite for nth-digits.

One file per module, plus tests/test_acceptance.py whose desk-scale
checks only run with NTH_DIGITS_SLOW=1.

Run tests using:
    python -m pytest tests/

Or run individual test files:
    python tests/test_modarith.py
    python tests/test_extractor.py
"""
