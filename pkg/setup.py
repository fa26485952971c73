import sys
from pathlib import Path

from setuptools import find_packages, setup

# Minimum Python version required
MIN_PYTHON_VERSION = (3, 8)

if sys.version_info[:2] < MIN_PYTHON_VERSION:
    sys.exit(f"Error: Python {MIN_PYTHON_VERSION[0]}.{MIN_PYTHON_VERSION[1]} or higher is required.")

def read_requirements():
    """Runtime requirements from requirements.txt, without the test tooling."""
    lines = Path(__file__).with_name("requirements.txt").read_text().splitlines()
    return [line.strip() for line in lines if line.strip() and not line.startswith(("#", "pytest"))]

setup(
    name="superk",
    version="1.0.0",
    description="Superstatistical entropies, coding theorems and algorithmic complexity on a toy machine",
    long_description=Path(__file__).with_name("README.md").read_text(encoding="utf-8"),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=("tests", "tests.*")),
    package_data={"app.data": ["*.txt"]},
    python_requires=">=3.8",
    install_requires=read_requirements(),
    extras_require={"test": ["pytest>=7.4,<9"]},
    entry_points={"console_scripts": ["superk=app.cli:main"]},
)
