import importlib.util
import sys

from dotenv import load_dotenv

# Verify critical dependencies before proceeding
def verify_module_installed(module_name):
    """Verify that a Python module is installed."""
    return importlib.util.find_spec(module_name) is not None

def get_module_version(module_name):
    """Get the version of an installed module."""
    try:
        module = __import__(module_name)
        return getattr(module, "__version__", "unknown")
    except ImportError:
        return None

def check_dependency_compatibility():
    """Check for known dependency compatibility issues."""
    issues = []

    # pydantic-settings 2.x needs pydantic 2.x
    pydantic_version = get_module_version("pydantic")
    if pydantic_version and pydantic_version.split(".", 1)[0] != "2":
        issues.append(f"pydantic-settings 2 requires pydantic 2, but {pydantic_version} is installed")

    numpy_version = get_module_version("numpy")
    if numpy_version and numpy_version != "unknown":
        major, minor = (int(part) for part in numpy_version.split(".")[:2])
        if (major, minor) < (1, 17):
            issues.append(f"numpy >= 1.17 is required for default_rng, but {numpy_version} is installed")

    return issues

critical_modules = ["numpy", "scipy", "pydantic", "pydantic_settings"]
missing_modules = [module for module in critical_modules if not verify_module_installed(module)]

if missing_modules:
    print("ERROR: The following required modules are missing:", file=sys.stderr)
    for module in missing_modules:
        print(f"  - {module}", file=sys.stderr)
    print("\nPlease install the missing dependencies with:", file=sys.stderr)
    print("  pip install -r requirements.txt", file=sys.stderr)
    sys.exit(1)

compatibility_issues = check_dependency_compatibility()
if compatibility_issues:
    print("WARNING: Dependency compatibility issues detected:", file=sys.stderr)
    for issue in compatibility_issues:
        print(f"  - {issue}", file=sys.stderr)

# Load environment variables from .env file (if present)
load_dotenv()

from app.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
