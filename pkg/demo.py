"""
Nth Digit Extraction Demo

Interactive demonstration of digit extraction, fraction splitting,
verification and benchmarking with text output.
"""

from nth_digits import extract_digits, get_available_constants
from nth_digits.core.bench import ComplexityBench
from nth_digits.core.binomfactor import factor_central_binomial
from nth_digits.core.errors import NthDigitsError
from nth_digits.core.fracsplit import decompose
from nth_digits.core.text_report import TextReport
from nth_digits.oracle import verify_range
from nth_digits.series import explain_exclusion


def main():
    """Main demonstration function."""
    print("🔍 Nth Digit Extraction Demo")
    print("=" * 60)

    while True:
        print("\n📋 Available Demos:")
        print("1. 🎯 Digits of pi at a few positions")
        print("2. 🧩 Splitting 1/C(100, 50) into unit fractions")
        print("3. 🎮 Interactive extraction")
        print("4. ✅ Verify a position range")
        print("5. 📈 Growth benchmark")
        print("6. 🚫 Why e is not in the class")
        print("0. ❌ Exit")

        choice = input("\nSelect demo (0-6): ").strip()

        if choice == "0":
            print("Goodbye! 👋")
            break
        elif choice == "1":
            quick_demo()
        elif choice == "2":
            split_demo()
        elif choice == "3":
            interactive_mode()
        elif choice == "4":
            verify_demo()
        elif choice == "5":
            benchmark_demo()
        elif choice == "6":
            exclusion_demo()
        else:
            print("❌ Invalid choice. Please try again.")


def quick_demo():
    """Digits of pi in bases 10 and 16, each computed on its own."""
    print("\n🎯 Quick Demo")
    print("-" * 30)
    report = TextReport()
    for position, base, count in [(1, 10, 10), (50, 10, 10), (1, 16, 8), (100, 16, 8)]:
        result = extract_digits("pi", position, base, count)
        print(report.digit_line(result, "pi"))


def split_demo():
    """The 18 prime powers of C(100, 50) and the residues of 1/C(100, 50)."""
    print("\n🧩 Fraction Splitting")
    print("-" * 30)
    report = TextReport()
    factors = factor_central_binomial(50)
    print(f"C(100, 50) = {report.factor_line(factors)}")
    print(f"1/C(100, 50) = {report.split_line(decompose(factors))}  (mod 1)")


def interactive_mode():
    """Ask for a constant, position and base."""
    print("\n🎮 Interactive Mode")
    print("-" * 30)
    print(f"Constants: {', '.join(get_available_constants())}")
    constant = input("Constant [pi]: ").strip() or "pi"
    try:
        position = int(input("Position [1000]: ").strip() or "1000")
        base = int(input("Base [10]: ").strip() or "10")
        count = int(input("Digits [8]: ").strip() or "8")
    except ValueError:
        print("❌ Please enter integers.")
        return

    try:
        result = extract_digits(constant, position, base, count)
    except (NthDigitsError, ValueError) as e:
        print(f"❌ {e}")
        return
    print(TextReport(show_diagnostics=True).digit_line(result, constant))


def verify_demo():
    """Check the first 200 digits of each constant against the oracle."""
    print("\n✅ Verification")
    print("-" * 30)
    report = TextReport()
    for constant in ("pi", "pi_sqrt3", "pi_squared", "zeta3", "golden_ln"):
        print(report.verify_summary(verify_range(constant, 1, 200)))


def benchmark_demo():
    """Time pi at doubling positions and fit the growth exponent."""
    print("\n📈 Growth Benchmark")
    print("-" * 30)
    bench = ComplexityBench("pi")
    bench.run([125, 250, 500, 1000], repeat=3)
    bench.print_table()


def exclusion_demo():
    print("\n🚫 Excluded Constants")
    print("-" * 30)
    info = explain_exclusion("e", 128)
    print(f"term {info['term']} of sum 1/n! has denominator factor "
          f"{info['largest_prime_power']} ({info['bits']} bits)")
    print(info['reason'])


if __name__ == "__main__":
    main()
