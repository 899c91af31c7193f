#!/usr/bin/env python
"""
Test Runner for gghecke

Usage:
    python run_tests.py                    # Run all tests
    python run_tests.py --integration      # Run only integration tests
    python run_tests.py --unit             # Run only unit tests
    python run_tests.py --cov              # Add a coverage report
"""

import sys
import argparse
from pathlib import Path

import pytest

project_root = Path(__file__).parent
sys.path.insert(0, str(project_root / "src"))


def run_pytest(paths, extra):
    """Run pytest on the given paths, True on success"""
    return pytest.main([*map(str, paths), *extra]) == 0


def main():
    parser = argparse.ArgumentParser(description="gghecke Test Runner")
    parser.add_argument(
        "--integration",
        action="store_true",
        help="Run only integration tests"
    )
    parser.add_argument(
        "--unit",
        action="store_true",
        help="Run only unit tests"
    )
    parser.add_argument(
        "--cov",
        action="store_true",
        help="Measure coverage of src/gghecke"
    )

    args = parser.parse_args()

    tests_dir = project_root / "tests"
    extra = ["-q"]
    if args.cov:
        extra += ["--cov=gghecke", "--cov-report=term-missing"]

    if args.integration:
        success = run_pytest([tests_dir / "integration"], extra)
    elif args.unit:
        success = run_pytest([tests_dir], extra + ["--ignore", str(tests_dir / "integration")])
    else:
        print("Running all tests...\n")
        success = run_pytest([tests_dir], extra)

    sys.exit(0 if success else 1)


if __name__ == "__main__":
    main()
